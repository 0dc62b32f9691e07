#include "coslice/json_io.hpp"

#include "json.hpp"

namespace coslice {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw parse_error("schema: " + what); }

long as_long(const json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        fail(where + " must be an integer");
    if (j.is_number_unsigned() && j.get<unsigned long long>() >
                                      static_cast<unsigned long long>(
                                          std::numeric_limits<long long>::max()))
        fail(where + " is out of range");
    return static_cast<long>(j.get<long long>());
}

// Row-major [[int]]; expected_rows = -1 means any count.
IntMatrix matrix_from(const json& j, const std::string& where, Index expected_rows,
                      Index expected_cols) {
    if (!j.is_array()) fail(where + " must be an array of rows");
    const Index rows = static_cast<Index>(j.size());
    if (expected_rows >= 0 && rows != expected_rows)
        fail(where + " must have " + std::to_string(expected_rows) + " rows");
    Index cols = expected_cols;
    if (cols < 0) cols = rows == 0 ? 0 : static_cast<Index>(j.at(0).size());
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            fail(where + " rows must all have length " + std::to_string(cols));
        for (Index c = 0; c < cols; ++c)
            m(i, c) = as_long(row.at(static_cast<size_t>(c)),
                              where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return m;
}

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const std::string& where) {
    if (!j.is_object()) fail(where + " must be an object");
    for (const char* k : keys)
        if (!j.contains(k)) fail(where + " is missing \"" + k + "\"");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || item.key() == k;
        if (!known) fail(where + " has unknown key \"" + item.key() + "\"");
    }
}

ordered_json rows_of(const IntMatrix& m) {
    ordered_json out = ordered_json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Index c = 0; c < m.cols(); ++c) {
            const mpz_class& x = m(i, c);
            if (!x.fits_slong_p()) throw std::overflow_error("json: entry exceeds 64 bits");
            row.push_back(static_cast<long long>(x.get_si()));
        }
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json mackey_json(const MackeyFunctor& m) {
    ordered_json out;
    out["p"] = m.spec.p;
    out["n"] = m.spec.n;
    ordered_json levels = ordered_json::array();
    for (const AbelianGroup& g : m.levels) {
        ordered_json level;
        level["relations"] = rows_of(g.relation_matrix());
        levels.push_back(std::move(level));
    }
    out["levels"] = std::move(levels);
    ordered_json act = ordered_json::array(), res = ordered_json::array(),
                 tr = ordered_json::array();
    for (const Hom& h : m.act) act.push_back(rows_of(h.matrix()));
    for (const Hom& h : m.res) res.push_back(rows_of(h.matrix()));
    for (const Hom& h : m.tr) tr.push_back(rows_of(h.matrix()));
    out["act"] = std::move(act);
    out["res"] = std::move(res);
    out["tr"] = std::move(tr);
    return out;
}

}  // namespace

MackeyFunctor mackey_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(e.what());
    }
    require_keys(root, {"p", "n", "levels", "act", "res", "tr"}, "top level");

    CyclicGroupSpec spec{as_long(root["p"], "p"), as_long(root["n"], "n")};
    try {
        check_spec(spec);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    const long n = spec.n;

    const json& levels = root["levels"];
    if (!levels.is_array() || static_cast<long>(levels.size()) != n + 1)
        fail("\"levels\" must be an array of length n+1");
    std::vector<Normalization> norm;
    std::vector<Index> raw_gens;
    for (long k = 0; k <= n; ++k) {
        const json& level = levels.at(static_cast<size_t>(k));
        require_keys(level, {"relations"}, "levels[" + std::to_string(k) + "]");
        IntMatrix rels =
            matrix_from(level["relations"], "levels[" + std::to_string(k) + "].relations", -1, -1);
        raw_gens.push_back(rels.rows());
        norm.push_back(normalize_presentation(rels.rows(), rels));
    }

    auto structure = [&](const json& arr, const std::string& name, long count) {
        if (!arr.is_array() || static_cast<long>(arr.size()) != count)
            fail("\"" + name + "\" must be an array of length " + std::to_string(count));
    };
    structure(root["act"], "act", n + 1);
    structure(root["res"], "res", n);
    structure(root["tr"], "tr", n);

    MackeyFunctor m;
    m.spec = spec;
    for (long k = 0; k <= n; ++k) m.levels.push_back(norm[k].group);
    for (long k = 0; k <= n; ++k) {
        IntMatrix raw = matrix_from(root["act"].at(static_cast<size_t>(k)),
                                    "act[" + std::to_string(k) + "]", raw_gens[k], raw_gens[k]);
        m.act.push_back(Hom(norm[k].group, norm[k].group,
                            norm[k].to_canonical * raw * norm[k].from_canonical));
    }
    for (long k = 0; k < n; ++k) {
        IntMatrix raw = matrix_from(root["res"].at(static_cast<size_t>(k)),
                                    "res[" + std::to_string(k) + "]", raw_gens[k],
                                    raw_gens[k + 1]);
        m.res.push_back(Hom(norm[k + 1].group, norm[k].group,
                            norm[k].to_canonical * raw * norm[k + 1].from_canonical));
        IntMatrix traw = matrix_from(root["tr"].at(static_cast<size_t>(k)),
                                     "tr[" + std::to_string(k) + "]", raw_gens[k + 1],
                                     raw_gens[k]);
        m.tr.push_back(Hom(norm[k].group, norm[k + 1].group,
                           norm[k + 1].to_canonical * traw * norm[k].from_canonical));
    }
    check_shapes(m);
    return m;
}

std::string mackey_to_json(const MackeyFunctor& m) {
    check_shapes(m);
    return mackey_json(m).dump();
}

std::string slice_tower_to_json(const SliceTower& tower) {
    ordered_json out = ordered_json::array();
    for (const SliceTowerEntry& e : tower.entries) {
        ordered_json entry;
        entry["dim"] = e.dim;
        entry["layer"] = mackey_json(e.layer);
        entry["section"] = mackey_json(e.section);
        out.push_back(std::move(entry));
    }
    return out.dump();
}

}  // namespace coslice
