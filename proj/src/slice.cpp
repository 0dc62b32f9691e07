#include "coslice/slice.hpp"

namespace coslice {

namespace {

void require_valid(const MackeyFunctor& m, const char* who) {
    auto report = validate(m);
    if (!report.empty())
        throw std::invalid_argument(std::string(who) + ": functor violates '" +
                                    report.front().axiom + "' at level " +
                                    std::to_string(report.front().level));
}

// Composite restriction level j -> level t (t <= j).
Hom composite_res(const MackeyFunctor& m, long j, long t) {
    Hom comp = Hom::identity(m.levels[j]);
    for (long k = j; k > t; --k) comp = compose(m.res[k - 1], comp);
    return comp;
}

// Generators of the kernel of a hom, as coordinate columns in its domain.
IntMatrix kernel_columns(const Hom& f) {
    IntMatrix joined(f.cod().ngens(), f.dom().ngens() + f.cod().torsion_count());
    joined << f.matrix(), f.cod().relation_matrix();
    IntMatrix ker = kernel_basis(joined);
    return ker.topRows(f.dom().ngens());
}

SubFunctor whole_functor(const MackeyFunctor& m) {
    return SubFunctor{m, identity_morphism(m)};
}

bool is_zero_levels(const MackeyFunctor& m) {
    for (const AbelianGroup& g : m.levels)
        if (!g.is_trivial()) return false;
    return true;
}

// F^(p^k - 1) contains F^(p^k); express the inclusion as a sub-functor.
SubFunctor embed(const SubFunctor& inner, const SubFunctor& outer) {
    MackeyMorphism incl;
    incl.dom = inner.functor;
    incl.cod = outer.functor;
    for (size_t k = 0; k < inner.inclusion.maps.size(); ++k)
        incl.maps.push_back(
            lift_through(inner.inclusion.maps[k], outer.inclusion.maps[k]));
    return SubFunctor{inner.functor, std::move(incl)};
}

}  // namespace

CosliceFiltration coslice_filtration(const MackeyFunctor& m) {
    require_valid(m, "coslice_filtration");
    const long n = m.spec.n;
    const long order = m.spec.order();

    // F_t is generated by everything at levels above t that restricts to
    // zero at level t; it serves every k with p^t <= k < p^(t+1).
    std::vector<SubFunctor> by_exponent;
    for (long t = 0; t <= n; ++t) {
        std::vector<IntMatrix> gens;
        for (long j = 0; j <= n; ++j) {
            if (j <= t)
                gens.push_back(IntMatrix::Zero(m.levels[j].ngens(), 0));
            else
                gens.push_back(kernel_columns(composite_res(m, j, t)));
        }
        by_exponent.push_back(sub_generated_cols(m, std::move(gens)));
    }

    CosliceFiltration filt;
    filt.base = m;
    filt.stages.push_back(whole_functor(m));
    for (long k = 1; k <= order; ++k) {
        long t = 0;
        while (m.spec.subgroup_order(t + 1) <= k) ++t;
        filt.stages.push_back(by_exponent[t]);
    }
    return filt;
}

SliceTower slice_tower(const MackeyFunctor& m) {
    CosliceFiltration filt = coslice_filtration(m);
    const long n = m.spec.n;

    SliceTower tower;
    tower.spec = m.spec;
    for (long k = 0; k <= n; ++k) {
        const long r = m.spec.subgroup_order(k) - 1;
        const SubFunctor& outer = filt.stages[r];
        const SubFunctor& inner = filt.stages[r + 1];

        MackeyFunctor layer = quotient(outer.functor, embed(inner, outer)).functor;
        if (is_zero_levels(layer)) continue;
        if (!is_pullback_of_zero_slice(layer, k))
            throw std::logic_error("slice_tower: layer fails the zero-slice pullback shape");

        MackeyQuotient section = quotient(m, inner);
        tower.entries.push_back({r, std::move(layer), section.functor, section.projection});
    }
    return tower;
}

MackeyQuotient zero_slice_quotient(const MackeyFunctor& m) {
    require_valid(m, "zero_slice_quotient");
    const long n = m.spec.n;

    std::vector<IntMatrix> gens;
    gens.push_back(IntMatrix::Zero(m.levels[0].ngens(), 0));
    for (long j = 1; j <= n; ++j) gens.push_back(kernel_columns(composite_res(m, j, 0)));
    MackeyQuotient q = quotient(m, sub_generated_cols(m, std::move(gens)));

    // Independent formula: level k of the quotient is the image of the
    // composite restriction into level 0.
    for (long k = 0; k <= n; ++k) {
        AbelianGroup image =
            subgroup_generated(m.levels[0], composite_res(m, k, 0).matrix()).group;
        if (!(image == q.functor.levels[k]))
            throw std::logic_error("zero_slice_quotient: image formula disagrees at level " +
                                   std::to_string(k));
    }
    return q;
}

MackeyFunctor inflate(const MackeyFunctor& mq, long k, const CyclicGroupSpec& target) {
    check_spec(target);
    check_shapes(mq);
    if (k < 0 || mq.spec.p != target.p || mq.spec.n != target.n - k)
        throw std::invalid_argument("inflate: source must live on C_{p^(n-k)}");

    MackeyFunctor m;
    m.spec = target;
    AbelianGroup trivial;
    for (long j = 0; j < k; ++j) {
        m.levels.push_back(trivial);
        m.act.push_back(Hom::identity(trivial));
    }
    for (long j = 0; j <= mq.spec.n; ++j) {
        m.levels.push_back(mq.levels[j]);
        m.act.push_back(mq.act[j]);
    }
    for (long j = 0; j + 1 < k; ++j) {
        m.res.push_back(Hom::zero(trivial, trivial));
        m.tr.push_back(Hom::zero(trivial, trivial));
    }
    if (k >= 1) {
        m.res.push_back(Hom::zero(mq.levels[0], trivial));
        m.tr.push_back(Hom::zero(trivial, mq.levels[0]));
    }
    for (long j = 0; j < mq.spec.n; ++j) {
        m.res.push_back(mq.res[j]);
        m.tr.push_back(mq.tr[j]);
    }
    return m;
}

bool is_pulled_back(const MackeyFunctor& m, long k) {
    check_shapes(m);
    if (k < 0 || k > m.spec.n) throw std::invalid_argument("is_pulled_back: level out of range");
    for (long j = 0; j < k; ++j)
        if (!m.levels[j].is_trivial()) return false;
    return true;
}

MackeyFunctor deflate(const MackeyFunctor& m, long k) {
    if (!is_pulled_back(m, k))
        throw std::domain_error("deflate: functor is not pulled back from that level");
    MackeyFunctor mq;
    mq.spec = CyclicGroupSpec{m.spec.p, m.spec.n - k};
    for (long j = k; j <= m.spec.n; ++j) {
        mq.levels.push_back(m.levels[j]);
        mq.act.push_back(m.act[j]);
    }
    for (long j = k; j < m.spec.n; ++j) {
        mq.res.push_back(m.res[j]);
        mq.tr.push_back(m.tr[j]);
    }
    return mq;
}

bool all_restrictions_injective(const MackeyFunctor& m) {
    for (long k = 1; k <= m.spec.n; ++k)
        if (!composite_res(m, k, 0).is_injective()) return false;
    return true;
}

bool is_pullback_of_zero_slice(const MackeyFunctor& layer, long k) {
    if (!is_pulled_back(layer, k)) return false;
    return all_restrictions_injective(deflate(layer, k));
}

SubFunctor max_geometric_sub(const MackeyFunctor& m) {
    require_valid(m, "max_geometric_sub");
    const long n = m.spec.n;
    if (n == 0) return whole_functor(m);

    Subgroup top = hom_kernel(m.res[n - 1]);
    AbelianGroup trivial;

    SubFunctor s;
    s.functor.spec = m.spec;
    for (long k = 0; k < n; ++k) {
        s.functor.levels.push_back(trivial);
        s.functor.act.push_back(Hom::identity(trivial));
    }
    s.functor.levels.push_back(top.group);
    s.functor.act.push_back(lift_through(compose(m.act[n], top.inclusion), top.inclusion));
    for (long k = 0; k + 1 < n; ++k) {
        s.functor.res.push_back(Hom::zero(trivial, trivial));
        s.functor.tr.push_back(Hom::zero(trivial, trivial));
    }
    s.functor.res.push_back(Hom::zero(top.group, trivial));
    s.functor.tr.push_back(Hom::zero(trivial, top.group));

    s.inclusion.dom = s.functor;
    s.inclusion.cod = m;
    for (long k = 0; k < n; ++k)
        s.inclusion.maps.push_back(Hom(trivial, m.levels[k], IntMatrix::Zero(m.levels[k].ngens(), 0)));
    s.inclusion.maps.push_back(top.inclusion);
    return s;
}

MackeyQuotient pullback_quotient(const MackeyFunctor& m, long k) {
    require_valid(m, "pullback_quotient");
    if (k < 0 || k > m.spec.n)
        throw std::invalid_argument("pullback_quotient: level out of range");
    std::vector<IntMatrix> gens;
    for (long j = 0; j <= m.spec.n; ++j) {
        if (j < k)
            gens.push_back(IntMatrix::Identity(m.levels[j].ngens(), m.levels[j].ngens()));
        else
            gens.push_back(IntMatrix::Zero(m.levels[j].ngens(), 0));
    }
    return quotient(m, sub_generated_cols(m, std::move(gens)));
}

MackeyQuotient geometric_quotient(const MackeyFunctor& m) {
    return pullback_quotient(m, m.spec.n);
}

AugmentationDecomposition augmentation_decomposition(const CyclicGroupSpec& spec) {
    check_spec(spec);
    if (spec.n < 1) throw std::invalid_argument("augmentation: needs n >= 1");
    const long n = spec.n;

    MackeyFunctor a = burnside_functor(spec);
    MackeyMorphism aug = burnside_augmentation(spec);

    AugmentationDecomposition out;
    out.ideal = morphism_kernel_image(aug).kernel;

    for (long k = 1; k <= n; ++k) {
        // [C_{p^k}/C_{p^(k-1)}] - p [C_{p^k}/C_{p^k}]: basis index 1 minus p
        // times index 0 in the descending orbit basis.
        IntVector gen = IntVector::Zero(k + 1);
        gen(0) = -spec.p;
        gen(1) = 1;
        MackeyElement e{k, element(a.levels[k], gen)};
        SubFunctor sub = sub_generated(a, {e});

        MackeyFunctor target = inflate(dual_z({spec.p, n - k}), k, spec);

        // The transfer chain of the generator is the image of the canonical
        // basis of the inflated dual functor.
        MackeyMorphism witness;
        witness.dom = target;
        witness.cod = sub.functor;
        IntVector chain = gen;
        for (long j = 0; j <= n; ++j) {
            if (j < k) {
                witness.maps.push_back(
                    Hom(AbelianGroup(), sub.functor.levels[j],
                        IntMatrix::Zero(sub.functor.levels[j].ngens(), 0)));
                continue;
            }
            if (j > k) chain = a.tr[j - 1].matrix() * chain;
            auto coords = solve_columns(IntMatrix(sub.inclusion.maps[j].matrix()),
                                        IntMatrix(chain));
            if (!coords)
                throw std::logic_error("augmentation: chain element misses its summand");
            witness.maps.push_back(Hom(target.levels[j], sub.functor.levels[j], *coords));
        }
        if (!morphism_is_isomorphism(witness))
            throw std::logic_error("augmentation: witness is not an isomorphism");

        out.summands.push_back({e, std::move(sub), std::move(witness)});
    }

    // Internal directness and exhaustion, levelwise: the summand lattices
    // span the ideal and their ranks add up (everything here is free).
    for (long j = 0; j <= n; ++j) {
        Index total_rank = 0;
        IntMatrix combined(a.levels[j].ngens(), 0);
        for (const AugmentationSummand& s : out.summands) {
            const IntMatrix& cols = s.sub.inclusion.maps[j].matrix();
            total_rank += cols.cols();
            IntMatrix wider(combined.rows(), combined.cols() + cols.cols());
            wider << combined, cols;
            combined = wider;
        }
        IntMatrix span = hermite_basis(combined);
        IntMatrix ideal_lattice = hermite_basis(IntMatrix(out.ideal.inclusion.maps[j].matrix()));
        if (span.cols() != total_rank || !matrix_equal<Int>(span, ideal_lattice))
            throw std::logic_error("augmentation: summands do not decompose the ideal at level " +
                                   std::to_string(j));
    }
    return out;
}

}  // namespace coslice
