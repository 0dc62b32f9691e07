#include "coslice/mackey.hpp"

#include <algorithm>
#include <set>

namespace coslice {

namespace {

constexpr long kMaxGroupOrder = 1L << 20;

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long ipow(long base, long exp) {
    long r = 1;
    for (long i = 0; i < exp; ++i) {
        if (r > kMaxGroupOrder / base) throw capacity_error("group order too large");
        r *= base;
    }
    return r;
}

}  // namespace

long CyclicGroupSpec::order() const { return ipow(p, n); }

long CyclicGroupSpec::subgroup_order(long k) const { return ipow(p, k); }

void check_spec(const CyclicGroupSpec& spec) {
    if (!is_prime(spec.p)) throw std::invalid_argument("spec: p must be prime");
    if (spec.n < 0) throw std::invalid_argument("spec: n must be nonnegative");
    ipow(spec.p, spec.n);
}

void check_shapes(const MackeyFunctor& m) {
    check_spec(m.spec);
    const size_t n = static_cast<size_t>(m.spec.n);
    if (m.levels.size() != n + 1 || m.act.size() != n + 1 || m.res.size() != n ||
        m.tr.size() != n)
        throw std::invalid_argument("mackey: wrong number of levels or structure maps");
    for (size_t k = 0; k <= n; ++k)
        if (!(m.act[k].dom() == m.levels[k]) || !(m.act[k].cod() == m.levels[k]))
            throw std::invalid_argument("mackey: act must be an endomorphism of its level");
    for (size_t k = 0; k < n; ++k) {
        if (!(m.res[k].dom() == m.levels[k + 1]) || !(m.res[k].cod() == m.levels[k]))
            throw std::invalid_argument("mackey: res[k] must map level k+1 to level k");
        if (!(m.tr[k].dom() == m.levels[k]) || !(m.tr[k].cod() == m.levels[k + 1]))
            throw std::invalid_argument("mackey: tr[k] must map level k to level k+1");
    }
}

namespace {

// First generator where two homs with equal endpoints disagree.
std::string witness_generator(const Hom& a, const Hom& b) {
    for (Index j = 0; j < a.matrix().cols(); ++j)
        for (Index i = 0; i < a.matrix().rows(); ++i)
            if (a.matrix()(i, j) != b.matrix()(i, j))
                return "generator " + std::to_string(j);
    return "generator ?";
}

}  // namespace

std::vector<AxiomViolation> validate(const MackeyFunctor& m) {
    check_shapes(m);
    std::vector<AxiomViolation> out;
    const long n = m.spec.n;
    const long p = m.spec.p;

    for (long k = 0; k <= n; ++k)
        if (!m.act[k].well_defined())
            out.push_back({"well-definedness", k, "act does not respect the relations"});
    for (long k = 0; k < n; ++k) {
        if (!m.res[k].well_defined())
            out.push_back({"well-definedness", k + 1, "res does not respect the relations"});
        if (!m.tr[k].well_defined())
            out.push_back({"well-definedness", k + 1, "tr does not respect the relations"});
    }
    if (!out.empty()) return out;

    for (long k = 0; k <= n; ++k) {
        Hom power = hom_power(m.act[k], static_cast<unsigned long>(ipow(p, n - k)));
        if (!power.is_identity())
            out.push_back({"action order", k,
                           witness_generator(power, Hom::identity(m.levels[k]))});
    }
    for (long k = 0; k < n; ++k) {
        Hom lhs = compose(m.res[k], m.act[k + 1]);
        Hom rhs = compose(m.act[k], m.res[k]);
        if (!(lhs == rhs))
            out.push_back({"restriction equivariance", k + 1, witness_generator(lhs, rhs)});

        Hom tl = compose(m.tr[k], m.act[k]);
        Hom tright = compose(m.act[k + 1], m.tr[k]);
        if (!(tl == tright))
            out.push_back({"transfer equivariance", k + 1, witness_generator(tl, tright)});

        Hom rt = compose(m.res[k], m.tr[k]);
        Hom sum = Hom::zero(m.levels[k], m.levels[k]);
        long step = ipow(p, n - (k + 1));
        for (long i = 0; i < p; ++i)
            sum = sum + hom_power(m.act[k], static_cast<unsigned long>(i * step));
        if (!(rt == sum))
            out.push_back({"double coset formula", k + 1, witness_generator(rt, sum)});
    }
    return out;
}

bool is_valid(const MackeyFunctor& m) { return validate(m).empty(); }

MackeyFunctor zero_functor(const CyclicGroupSpec& spec) {
    check_spec(spec);
    MackeyFunctor m;
    m.spec = spec;
    AbelianGroup trivial;
    for (long k = 0; k <= spec.n; ++k) {
        m.levels.push_back(trivial);
        m.act.push_back(Hom::identity(trivial));
    }
    for (long k = 0; k < spec.n; ++k) {
        m.res.push_back(Hom::zero(trivial, trivial));
        m.tr.push_back(Hom::zero(trivial, trivial));
    }
    return m;
}

MackeyFunctor burnside_functor(const CyclicGroupSpec& spec) {
    check_spec(spec);
    MackeyFunctor m;
    m.spec = spec;
    for (long k = 0; k <= spec.n; ++k) {
        AbelianGroup level = AbelianGroup::free(k + 1);
        m.levels.push_back(level);
        m.act.push_back(Hom::identity(level));
    }
    for (long k = 0; k < spec.n; ++k) {
        // Basis index i at level k is the orbit with stabilizer C_{p^(k-i)}.
        IntMatrix r = IntMatrix::Zero(k + 1, k + 2);
        r(0, 0) = 1;
        for (Index i = 1; i < k + 2; ++i) r(i - 1, i) = spec.p;
        m.res.push_back(Hom(m.levels[k + 1], m.levels[k], r));

        IntMatrix t = IntMatrix::Zero(k + 2, k + 1);
        for (Index i = 0; i < k + 1; ++i) t(i + 1, i) = 1;
        m.tr.push_back(Hom(m.levels[k], m.levels[k + 1], t));
    }
    return m;
}

namespace {

MackeyFunctor all_levels_z(const CyclicGroupSpec& spec, long res_scale, long tr_scale) {
    check_spec(spec);
    MackeyFunctor m;
    m.spec = spec;
    AbelianGroup z = AbelianGroup::free(1);
    for (long k = 0; k <= spec.n; ++k) {
        m.levels.push_back(z);
        m.act.push_back(Hom::identity(z));
    }
    for (long k = 0; k < spec.n; ++k) {
        m.res.push_back(Hom(z, z, make_matrix({{res_scale}})));
        m.tr.push_back(Hom(z, z, make_matrix({{tr_scale}})));
    }
    return m;
}

}  // namespace

MackeyFunctor constant_z(const CyclicGroupSpec& spec) { return all_levels_z(spec, 1, spec.p); }

MackeyFunctor dual_z(const CyclicGroupSpec& spec) { return all_levels_z(spec, spec.p, 1); }

MackeyMorphism burnside_augmentation(const CyclicGroupSpec& spec) {
    MackeyFunctor a = burnside_functor(spec);
    MackeyFunctor z = constant_z(spec);
    MackeyMorphism f;
    f.dom = a;
    f.cod = z;
    for (long k = 0; k <= spec.n; ++k) {
        IntMatrix row(1, k + 1);
        Int card = 1;
        for (Index i = 0; i < k + 1; ++i) {
            row(0, i) = card;
            card *= spec.p;
        }
        f.maps.push_back(Hom(a.levels[k], z.levels[k], row));
    }
    return f;
}

MackeyFunctor fixed_point_functor(const CyclicGroupSpec& spec, const AbelianGroup& module,
                                  const Hom& action) {
    check_spec(spec);
    if (!(action.dom() == module) || !(action.cod() == module))
        throw std::invalid_argument("fixed points: action must be an endomorphism of the module");
    if (!action.well_defined())
        throw std::invalid_argument("fixed points: action is not well defined");
    if (!hom_power(action, static_cast<unsigned long>(spec.order())).is_identity())
        throw std::invalid_argument("fixed points: action order must divide the group order");

    std::vector<Subgroup> fixed;
    for (long k = 0; k <= spec.n; ++k) {
        long e = ipow(spec.p, spec.n - k);
        Hom diff = hom_power(action, static_cast<unsigned long>(e)) +
                   Hom::identity(module).scaled(-1);
        fixed.push_back(hom_kernel(diff));
    }

    MackeyFunctor m;
    m.spec = spec;
    for (long k = 0; k <= spec.n; ++k) {
        m.levels.push_back(fixed[k].group);
        m.act.push_back(lift_through(compose(action, fixed[k].inclusion), fixed[k].inclusion));
    }
    for (long k = 0; k < spec.n; ++k) {
        m.res.push_back(lift_through(fixed[k + 1].inclusion, fixed[k].inclusion));
        Hom norm = Hom::zero(fixed[k].group, module);
        long step = ipow(spec.p, spec.n - (k + 1));
        for (long i = 0; i < spec.p; ++i)
            norm = norm + compose(hom_power(action, static_cast<unsigned long>(i * step)),
                                  fixed[k].inclusion);
        m.tr.push_back(lift_through(norm, fixed[k + 1].inclusion));
    }
    return m;
}

MackeyElement mackey_element(const MackeyFunctor& m, long level,
                             std::initializer_list<long> coords) {
    if (level < 0 || level > m.spec.n) throw std::invalid_argument("element level out of range");
    return MackeyElement{level, element(m.levels[level], coords)};
}

MackeyMorphism identity_morphism(const MackeyFunctor& m) {
    MackeyMorphism f{m, m, {}};
    for (const AbelianGroup& level : m.levels) f.maps.push_back(Hom::identity(level));
    return f;
}

MackeyMorphism zero_morphism(const MackeyFunctor& dom, const MackeyFunctor& cod) {
    if (!(dom.spec == cod.spec)) throw std::invalid_argument("morphism: spec mismatch");
    MackeyMorphism f{dom, cod, {}};
    for (long k = 0; k <= dom.spec.n; ++k)
        f.maps.push_back(Hom::zero(dom.levels[k], cod.levels[k]));
    return f;
}

bool morphism_commutes(const MackeyMorphism& f) {
    if (!(f.dom.spec == f.cod.spec)) return false;
    const long n = f.dom.spec.n;
    if (static_cast<long>(f.maps.size()) != n + 1) return false;
    for (long k = 0; k <= n; ++k) {
        if (!(f.maps[k].dom() == f.dom.levels[k]) || !(f.maps[k].cod() == f.cod.levels[k]))
            return false;
        if (!f.maps[k].well_defined()) return false;
        if (!(compose(f.maps[k], f.dom.act[k]) == compose(f.cod.act[k], f.maps[k])))
            return false;
    }
    for (long k = 0; k < n; ++k) {
        if (!(compose(f.maps[k], f.dom.res[k]) == compose(f.cod.res[k], f.maps[k + 1])))
            return false;
        if (!(compose(f.maps[k + 1], f.dom.tr[k]) == compose(f.cod.tr[k], f.maps[k])))
            return false;
    }
    return true;
}

bool morphism_is_isomorphism(const MackeyMorphism& f) {
    if (!morphism_commutes(f)) return false;
    for (const Hom& h : f.maps)
        if (!h.is_injective() || !h.is_surjective()) return false;
    return true;
}

SubFunctor sub_generated_cols(const MackeyFunctor& m, std::vector<IntMatrix> generators,
                              const std::array<char, 3>& sweep_order) {
    check_shapes(m);
    const long n = m.spec.n;
    if (static_cast<long>(generators.size()) != n + 1)
        throw std::invalid_argument("sub_generated: one generator matrix per level");

    std::vector<IntMatrix> lattice(static_cast<size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        if (generators[k].rows() != m.levels[k].ngens())
            throw std::invalid_argument("sub_generated: generator coordinates of wrong length");
        lattice[k] = subgroup_lattice(m.levels[k], generators[k]);
    }

    auto adjoin = [&](long k, const IntMatrix& extra) -> bool {
        IntMatrix joined(lattice[k].rows(), lattice[k].cols() + extra.cols());
        joined << lattice[k], extra;
        IntMatrix next = hermite_basis(joined);
        if (matrix_equal<Int>(next, lattice[k])) return false;
        lattice[k] = next;
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (char op : sweep_order) {
            if (op == 'a') {
                for (long k = 0; k <= n; ++k)
                    changed |= adjoin(k, m.act[k].matrix() * lattice[k]);
            } else if (op == 'r') {
                for (long k = n; k >= 1; --k)
                    changed |= adjoin(k - 1, m.res[k - 1].matrix() * lattice[k]);
            } else if (op == 't') {
                for (long k = 0; k < n; ++k)
                    changed |= adjoin(k + 1, m.tr[k].matrix() * lattice[k]);
            } else {
                throw std::invalid_argument("sub_generated: unknown sweep op");
            }
        }
    }

    std::vector<Subgroup> subs;
    for (long k = 0; k <= n; ++k) subs.push_back(subgroup_generated(m.levels[k], lattice[k]));

    SubFunctor s;
    s.functor.spec = m.spec;
    for (long k = 0; k <= n; ++k) {
        s.functor.levels.push_back(subs[k].group);
        s.functor.act.push_back(
            lift_through(compose(m.act[k], subs[k].inclusion), subs[k].inclusion));
    }
    for (long k = 0; k < n; ++k) {
        s.functor.res.push_back(
            lift_through(compose(m.res[k], subs[k + 1].inclusion), subs[k].inclusion));
        s.functor.tr.push_back(
            lift_through(compose(m.tr[k], subs[k].inclusion), subs[k + 1].inclusion));
    }
    s.inclusion.dom = s.functor;
    s.inclusion.cod = m;
    for (long k = 0; k <= n; ++k) s.inclusion.maps.push_back(subs[k].inclusion);
    return s;
}

SubFunctor sub_generated(const MackeyFunctor& m, const std::vector<MackeyElement>& elements,
                         const std::array<char, 3>& sweep_order) {
    std::vector<IntMatrix> generators;
    for (long k = 0; k <= m.spec.n; ++k)
        generators.push_back(IntMatrix::Zero(m.levels[k].ngens(), 0));
    for (const MackeyElement& e : elements) {
        if (e.level < 0 || e.level > m.spec.n)
            throw std::invalid_argument("sub_generated: element level out of range");
        if (!(e.value.group == m.levels[e.level]))
            throw std::invalid_argument("sub_generated: element from wrong group");
        IntMatrix& g = generators[e.level];
        IntMatrix wider(g.rows(), g.cols() + 1);
        wider << g, e.value.coords;
        g = wider;
    }
    return sub_generated_cols(m, std::move(generators), sweep_order);
}

MackeyQuotient quotient(const MackeyFunctor& m, const SubFunctor& s) {
    check_shapes(m);
    if (!(s.inclusion.cod == m))
        throw std::invalid_argument("quotient: sub-functor does not live in the given functor");
    if (!morphism_commutes(s.inclusion))
        throw std::invalid_argument("quotient: inclusion does not commute with structure maps");
    for (const Hom& h : s.inclusion.maps)
        if (!h.is_injective())
            throw std::invalid_argument("quotient: inclusion is not levelwise injective");

    const long n = m.spec.n;
    std::vector<Quotient> parts;
    for (long k = 0; k <= n; ++k)
        parts.push_back(quotient_by(m.levels[k], s.inclusion.maps[k].matrix()));

    MackeyQuotient q;
    q.functor.spec = m.spec;
    for (long k = 0; k <= n; ++k) {
        q.functor.levels.push_back(parts[k].group);
        q.functor.act.push_back(Hom(parts[k].group, parts[k].group,
                                    parts[k].projection.matrix() * m.act[k].matrix() *
                                        parts[k].section));
    }
    for (long k = 0; k < n; ++k) {
        q.functor.res.push_back(Hom(parts[k + 1].group, parts[k].group,
                                    parts[k].projection.matrix() * m.res[k].matrix() *
                                        parts[k + 1].section));
        q.functor.tr.push_back(Hom(parts[k].group, parts[k + 1].group,
                                   parts[k + 1].projection.matrix() * m.tr[k].matrix() *
                                       parts[k].section));
    }
    q.projection.dom = m;
    q.projection.cod = q.functor;
    for (long k = 0; k <= n; ++k) {
        q.projection.maps.push_back(parts[k].projection);
        q.sections.push_back(parts[k].section);
    }
    return q;
}

std::optional<MackeyMorphism> factor_through_quotient(const MackeyMorphism& f,
                                                      const MackeyQuotient& q) {
    if (!(f.dom == q.projection.dom))
        throw std::invalid_argument("factor: morphism domain differs from the quotient base");
    MackeyMorphism g;
    g.dom = q.functor;
    g.cod = f.cod;
    for (size_t k = 0; k < f.maps.size(); ++k)
        g.maps.push_back(Hom(q.functor.levels[k], f.cod.levels[k],
                             f.maps[k].matrix() * q.sections[k]));
    for (const Hom& h : g.maps)
        if (!h.well_defined()) return std::nullopt;
    if (!morphism_commutes(g)) return std::nullopt;
    for (size_t k = 0; k < f.maps.size(); ++k)
        if (!(compose(g.maps[k], q.projection.maps[k]) == f.maps[k])) return std::nullopt;
    return g;
}

MorphismKernelImage morphism_kernel_image(const MackeyMorphism& f) {
    if (!morphism_commutes(f))
        throw std::invalid_argument("kernel/image: morphism does not commute with structure");
    const long n = f.dom.spec.n;

    std::vector<Subgroup> kers, ims;
    for (long k = 0; k <= n; ++k) {
        kers.push_back(hom_kernel(f.maps[k]));
        ims.push_back(subgroup_generated(f.cod.levels[k], f.maps[k].matrix()));
    }

    auto assemble = [&](const MackeyFunctor& ambient,
                        const std::vector<Subgroup>& subs) -> SubFunctor {
        SubFunctor s;
        s.functor.spec = ambient.spec;
        for (long k = 0; k <= n; ++k) {
            s.functor.levels.push_back(subs[k].group);
            s.functor.act.push_back(
                lift_through(compose(ambient.act[k], subs[k].inclusion), subs[k].inclusion));
        }
        for (long k = 0; k < n; ++k) {
            s.functor.res.push_back(lift_through(compose(ambient.res[k], subs[k + 1].inclusion),
                                                 subs[k].inclusion));
            s.functor.tr.push_back(
                lift_through(compose(ambient.tr[k], subs[k].inclusion), subs[k + 1].inclusion));
        }
        s.inclusion.dom = s.functor;
        s.inclusion.cod = ambient;
        for (long k = 0; k <= n; ++k) s.inclusion.maps.push_back(subs[k].inclusion);
        return s;
    };

    return MorphismKernelImage{assemble(f.dom, kers), assemble(f.cod, ims)};
}

MackeySum direct_sum_mackey(const MackeyFunctor& a, const MackeyFunctor& b) {
    check_shapes(a);
    check_shapes(b);
    if (!(a.spec == b.spec)) throw std::invalid_argument("direct sum: spec mismatch");
    const long n = a.spec.n;

    std::vector<DirectSum> parts;
    for (long k = 0; k <= n; ++k) parts.push_back(direct_sum(a.levels[k], b.levels[k]));

    auto block = [&](long kd, long kc, const Hom& fa, const Hom& fb) -> Hom {
        IntMatrix raw = IntMatrix::Zero(a.levels[kc].ngens() + b.levels[kc].ngens(),
                                        a.levels[kd].ngens() + b.levels[kd].ngens());
        raw.block(0, 0, fa.matrix().rows(), fa.matrix().cols()) = fa.matrix();
        raw.block(fa.matrix().rows(), fa.matrix().cols(), fb.matrix().rows(),
                  fb.matrix().cols()) = fb.matrix();
        return Hom(parts[kd].group, parts[kc].group,
                   parts[kc].to_canonical * raw * parts[kd].from_canonical);
    };

    MackeySum sum;
    sum.functor.spec = a.spec;
    for (long k = 0; k <= n; ++k) {
        sum.functor.levels.push_back(parts[k].group);
        sum.functor.act.push_back(block(k, k, a.act[k], b.act[k]));
    }
    for (long k = 0; k < n; ++k) {
        sum.functor.res.push_back(block(k + 1, k, a.res[k], b.res[k]));
        sum.functor.tr.push_back(block(k, k + 1, a.tr[k], b.tr[k]));
    }
    sum.inject_left.dom = a;
    sum.inject_left.cod = sum.functor;
    sum.inject_right.dom = b;
    sum.inject_right.cod = sum.functor;
    for (long k = 0; k <= n; ++k) {
        sum.inject_left.maps.push_back(parts[k].inject_left);
        sum.inject_right.maps.push_back(parts[k].inject_right);
    }
    return sum;
}

namespace {

// All well-defined matrices dom -> cod between finite groups, in row-major
// lexicographic order of the entries.
struct HomEnumerator {
    const AbelianGroup& dom;
    const AbelianGroup& cod;
    std::vector<std::vector<Int>> choices;  // per entry, ascending
    std::vector<size_t> state;
    bool exhausted = false;

    HomEnumerator(const AbelianGroup& d, const AbelianGroup& c) : dom(d), cod(c) {
        for (Index i = 0; i < cod.ngens(); ++i)
            for (Index j = 0; j < dom.ngens(); ++j) {
                const Int& dj = dom.invariant_factors()[static_cast<size_t>(j)];
                const Int& ei = cod.invariant_factors()[static_cast<size_t>(i)];
                Int g = gcd(ei, dj);
                Int step = ei / g;
                std::vector<Int> vals;
                for (Int k = 0; k < g; ++k) vals.push_back(step * k);
                choices.push_back(std::move(vals));
            }
        state.assign(choices.size(), 0);
        for (const auto& c2 : choices)
            if (c2.empty()) exhausted = true;
    }

    std::optional<IntMatrix> next() {
        if (exhausted) return std::nullopt;
        IntMatrix m(cod.ngens(), dom.ngens());
        size_t idx = 0;
        for (Index i = 0; i < cod.ngens(); ++i)
            for (Index j = 0; j < dom.ngens(); ++j)
                m(i, j) = choices[idx][state[idx]], ++idx;
        // advance
        size_t pos = choices.size();
        while (pos > 0) {
            --pos;
            if (++state[pos] < choices[pos].size()) break;
            state[pos] = 0;
            if (pos == 0) exhausted = true;
        }
        if (choices.empty()) exhausted = true;
        return m;
    }
};

bool is_bijective_on(const std::vector<IntVector>& domain_elements, const Hom& f) {
    std::set<std::vector<std::string>> images;
    for (const IntVector& x : domain_elements) {
        IntVector y = f.apply(x);
        std::vector<std::string> key;
        key.reserve(static_cast<size_t>(y.size()));
        for (Index i = 0; i < y.size(); ++i) key.push_back(y(i).get_str());
        images.insert(std::move(key));
    }
    return images.size() == domain_elements.size();
}

struct IsoSearch {
    const MackeyFunctor& a;
    const MackeyFunctor& b;
    std::vector<std::vector<IntVector>> a_elements;
    std::vector<Hom> chosen;

    bool search(long k) {
        const long n = a.spec.n;
        if (k > n) return true;
        HomEnumerator gen(a.levels[k], b.levels[k]);
        while (auto mat = gen.next()) {
            Hom f(a.levels[k], b.levels[k], *mat);
            if (!(compose(f, a.act[k]) == compose(b.act[k], f))) continue;
            if (k > 0) {
                if (!(compose(chosen[k - 1], a.res[k - 1]) == compose(b.res[k - 1], f)))
                    continue;
                if (!(compose(f, a.tr[k - 1]) == compose(b.tr[k - 1], chosen[k - 1])))
                    continue;
            }
            if (!is_bijective_on(a_elements[k], f)) continue;
            chosen.push_back(f);
            if (search(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic_bruteforce(const MackeyFunctor& a, const MackeyFunctor& b,
                                   unsigned long long bound) {
    check_shapes(a);
    check_shapes(b);
    if (!(a.spec == b.spec)) throw std::invalid_argument("isomorphism: spec mismatch");
    for (const MackeyFunctor* m : {&a, &b})
        for (const AbelianGroup& level : m->levels) {
            if (!level.is_finite()) throw capacity_error("isomorphism: infinite level");
            if (level.order() > Int(static_cast<unsigned long>(bound)))
                throw capacity_error("isomorphism: level order exceeds bound");
        }

    for (long k = 0; k <= a.spec.n; ++k)
        if (!(a.levels[k] == b.levels[k])) return {false, std::nullopt};

    IsoSearch search{a, b, {}, {}};
    for (long k = 0; k <= a.spec.n; ++k)
        search.a_elements.push_back(enumerate_elements(a.levels[k], bound));
    if (!search.search(0)) return {false, std::nullopt};

    MackeyMorphism witness;
    witness.dom = a;
    witness.cod = b;
    witness.maps = search.chosen;
    return {true, witness};
}

}  // namespace coslice
