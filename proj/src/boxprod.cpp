#include "coslice/boxprod.hpp"

#include "coslice/slice.hpp"

namespace coslice {

namespace {

long ipow_small(long base, long exp) {
    long r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

// Raw symbol bookkeeping for one box level: symbols (j, x, y) with j <= m.
struct SymbolTable {
    std::vector<Index> offset;  // per j
    std::vector<Index> nx, ny;
    Index total = 0;

    SymbolTable(const MackeyFunctor& a, const MackeyFunctor& b, long m) {
        for (long j = 0; j <= m; ++j) {
            offset.push_back(total);
            nx.push_back(a.levels[j].ngens());
            ny.push_back(b.levels[j].ngens());
            total += nx.back() * ny.back();
        }
    }

    Index index(long j, Index x, Index y) const {
        return offset[j] + x * ny[j] + y;
    }

    // [j; u (x) v] expanded bilinearly into raw coordinates.
    IntVector pair(long j, const IntVector& u, const IntVector& v) const {
        IntVector raw = IntVector::Zero(total);
        for (Index x = 0; x < nx[j]; ++x)
            for (Index y = 0; y < ny[j]; ++y) raw(index(j, x, y)) = u(x) * v(y);
        return raw;
    }
};

}  // namespace

BoxProduct box_product(const MackeyFunctor& a, const MackeyFunctor& b) {
    check_shapes(a);
    check_shapes(b);
    if (!(a.spec == b.spec)) throw std::invalid_argument("box product: spec mismatch");
    const long n = a.spec.n;
    const long p = a.spec.p;

    std::vector<SymbolTable> tables;
    std::vector<Normalization> norms;
    for (long m = 0; m <= n; ++m) {
        SymbolTable symbols(a, b, m);
        std::vector<IntVector> relations;

        for (long j = 0; j <= m; ++j) {
            // Bilinearity against both factors' relations.
            IntMatrix ra = a.levels[j].relation_matrix();
            for (Index c = 0; c < ra.cols(); ++c)
                for (Index y = 0; y < symbols.ny[j]; ++y)
                    relations.push_back(symbols.pair(j, IntVector(ra.col(c)),
                                                     IntVector(IntVector::Unit(symbols.ny[j], y))));
            IntMatrix rb = b.levels[j].relation_matrix();
            for (Index c = 0; c < rb.cols(); ++c)
                for (Index x = 0; x < symbols.nx[j]; ++x)
                    relations.push_back(symbols.pair(j, IntVector(IntVector::Unit(symbols.nx[j], x)),
                                                     IntVector(rb.col(c))));

            // Weyl identification at the subgroup generator of C_{p^m}.
            unsigned long weyl = static_cast<unsigned long>(ipow_small(p, n - m));
            IntMatrix wa = hom_power(a.act[j], weyl).matrix();
            IntMatrix wb = hom_power(b.act[j], weyl).matrix();
            for (Index x = 0; x < symbols.nx[j]; ++x)
                for (Index y = 0; y < symbols.ny[j]; ++y) {
                    IntVector rel = symbols.pair(j, IntVector(wa.col(x)), IntVector(wb.col(y)));
                    rel(symbols.index(j, x, y)) -= 1;
                    relations.push_back(rel);
                }

            // Frobenius reciprocity across the step j-1 -> j.
            if (j >= 1) {
                for (Index x = 0; x < symbols.nx[j - 1]; ++x)
                    for (Index y = 0; y < symbols.ny[j]; ++y) {
                        IntVector rel =
                            symbols.pair(j, IntVector(a.tr[j - 1].matrix().col(x)),
                                         IntVector(IntVector::Unit(symbols.ny[j], y)));
                        rel -= symbols.pair(j - 1, IntVector(IntVector::Unit(symbols.nx[j - 1], x)),
                                            IntVector(b.res[j - 1].matrix().col(y)));
                        relations.push_back(rel);
                    }
                for (Index x = 0; x < symbols.nx[j]; ++x)
                    for (Index y = 0; y < symbols.ny[j - 1]; ++y) {
                        IntVector rel =
                            symbols.pair(j, IntVector(IntVector::Unit(symbols.nx[j], x)),
                                         IntVector(b.tr[j - 1].matrix().col(y)));
                        rel -= symbols.pair(j - 1, IntVector(a.res[j - 1].matrix().col(x)),
                                            IntVector(IntVector::Unit(symbols.ny[j - 1], y)));
                        relations.push_back(rel);
                    }
            }
        }

        IntMatrix rel_matrix(symbols.total, static_cast<Index>(relations.size()));
        for (Index c = 0; c < rel_matrix.cols(); ++c)
            rel_matrix.col(c) = relations[static_cast<size_t>(c)];
        norms.push_back(normalize_presentation(symbols.total, rel_matrix));
        tables.push_back(std::move(symbols));
    }

    BoxProduct box;
    box.functor.spec = a.spec;
    for (long m = 0; m <= n; ++m) {
        box.functor.levels.push_back(norms[m].group);
        box.to_canonical.push_back(norms[m].to_canonical);
        box.from_canonical.push_back(norms[m].from_canonical);
    }

    // Action: diagonal on every symbol.
    for (long m = 0; m <= n; ++m) {
        const SymbolTable& symbols = tables[m];
        IntMatrix raw = IntMatrix::Zero(symbols.total, symbols.total);
        for (long j = 0; j <= m; ++j)
            for (Index x = 0; x < symbols.nx[j]; ++x)
                for (Index y = 0; y < symbols.ny[j]; ++y)
                    raw.col(symbols.index(j, x, y)) =
                        symbols.pair(j, IntVector(a.act[j].matrix().col(x)),
                                     IntVector(b.act[j].matrix().col(y)));
        box.functor.act.push_back(Hom(norms[m].group, norms[m].group,
                                      norms[m].to_canonical * raw * norms[m].from_canonical));
    }

    for (long m = 0; m < n; ++m) {
        const SymbolTable& lo = tables[m];
        const SymbolTable& hi = tables[m + 1];

        // Transfer keeps every symbol.
        IntMatrix traw = IntMatrix::Zero(hi.total, lo.total);
        for (long j = 0; j <= m; ++j)
            for (Index x = 0; x < lo.nx[j]; ++x)
                for (Index y = 0; y < lo.ny[j]; ++y)
                    traw(hi.index(j, x, y), lo.index(j, x, y)) = 1;
        box.functor.tr.push_back(Hom(norms[m].group, norms[m + 1].group,
                                     norms[m + 1].to_canonical * traw * norms[m].from_canonical));

        // Restriction: the top summand restricts both coordinates, lower
        // summands pick up the Weyl orbit sum of level m+1.
        IntMatrix rraw = IntMatrix::Zero(lo.total, hi.total);
        for (Index x = 0; x < hi.nx[m + 1]; ++x)
            for (Index y = 0; y < hi.ny[m + 1]; ++y)
                rraw.col(hi.index(m + 1, x, y)) =
                    lo.pair(m + 1 - 1, IntVector(a.res[m].matrix().col(x)),
                            IntVector(b.res[m].matrix().col(y)));
        long step = ipow_small(p, n - (m + 1));
        for (long j = 0; j <= m; ++j)
            for (Index x = 0; x < hi.nx[j]; ++x)
                for (Index y = 0; y < hi.ny[j]; ++y) {
                    IntVector sum = IntVector::Zero(lo.total);
                    for (long i = 0; i < p; ++i) {
                        unsigned long e = static_cast<unsigned long>(i * step);
                        sum += lo.pair(j, IntVector(hom_power(a.act[j], e).matrix().col(x)),
                                       IntVector(hom_power(b.act[j], e).matrix().col(y)));
                    }
                    rraw.col(hi.index(j, x, y)) = sum;
                }
        box.functor.res.push_back(Hom(norms[m + 1].group, norms[m].group,
                                      norms[m].to_canonical * rraw * norms[m + 1].from_canonical));
    }

    auto report = validate(box.functor);
    if (!report.empty())
        throw std::logic_error("box product: construction violates '" + report.front().axiom +
                               "' at level " + std::to_string(report.front().level));
    return box;
}

ZeroSliceComparison comparison_to_zero_slice(const MackeyFunctor& m) {
    MackeyQuotient unit_zero = zero_slice_quotient(burnside_functor(m.spec));
    if (!(unit_zero.functor == constant_z(m.spec)))
        throw std::logic_error("zero-slice comparison: burnside zero slice is not constant Z");
    MackeyQuotient target = zero_slice_quotient(m);
    BoxProduct box = box_product(m, unit_zero.functor);
    const long n = m.spec.n;

    ZeroSliceComparison cmp;
    cmp.map.dom = box.functor;
    cmp.map.cod = target.functor;

    for (long level = 0; level <= n; ++level) {
        SymbolTable symbols(m, unit_zero.functor, level);
        IntMatrix raw(target.functor.levels[level].ngens(), symbols.total);
        for (long j = 0; j <= level; ++j) {
            // Transfer chain of the target from level j up to this level.
            IntMatrix chain =
                IntMatrix::Identity(target.functor.levels[level].ngens(),
                                    target.functor.levels[level].ngens());
            for (long s = level - 1; s >= j; --s) chain = chain * target.functor.tr[s].matrix();
            IntMatrix via = chain * target.projection.maps[j].matrix();
            for (Index x = 0; x < symbols.nx[j]; ++x)
                for (Index y = 0; y < symbols.ny[j]; ++y)
                    raw.col(symbols.index(j, x, y)) = via.col(x);
        }
        Hom h(box.functor.levels[level], target.functor.levels[level],
              raw * box.from_canonical[level]);
        // The symbolwise formula must factor through the box presentation.
        IntMatrix reconstructed = h.matrix() * box.to_canonical[level];
        for (Index c = 0; c < raw.cols(); ++c) {
            IntVector diff = target.functor.levels[level].reduce(raw.col(c) -
                                                                 reconstructed.col(c));
            if (!is_zero_matrix<Int>(IntMatrix(diff)))
                throw std::logic_error("zero-slice comparison: formula does not factor");
        }
        cmp.map.maps.push_back(std::move(h));
    }

    if (!morphism_commutes(cmp.map))
        throw std::logic_error("zero-slice comparison: map does not commute");

    cmp.surjective = true;
    cmp.injective = true;
    for (const Hom& h : cmp.map.maps) {
        cmp.surjective = cmp.surjective && h.is_surjective();
        cmp.injective = cmp.injective && h.is_injective();
    }
    return cmp;
}

}  // namespace coslice
