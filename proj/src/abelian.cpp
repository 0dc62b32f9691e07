#include "coslice/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace coslice {

AbelianGroup::AbelianGroup(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    bool seen_zero = false;
    Int prev = 0;
    for (const Int& d : factors_) {
        if (d < 0 || d == 1) throw std::invalid_argument("invariant factors must be 0 or >= 2");
        if (d == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) throw std::invalid_argument("zero invariant factors must come last");
        if (prev != 0 && d % prev != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
        prev = d;
    }
}

AbelianGroup AbelianGroup::free(Index rank) {
    return AbelianGroup(std::vector<Int>(static_cast<size_t>(rank), Int(0)));
}

AbelianGroup AbelianGroup::cyclic(const Int& n) {
    if (n == 1) return AbelianGroup();
    return AbelianGroup({n});
}

Index AbelianGroup::torsion_count() const {
    Index t = 0;
    for (const Int& d : factors_)
        if (d != 0) ++t;
    return t;
}

IntMatrix AbelianGroup::relation_matrix() const {
    IntMatrix r = IntMatrix::Zero(ngens(), torsion_count());
    for (Index i = 0; i < torsion_count(); ++i) r(i, i) = factors_[static_cast<size_t>(i)];
    return r;
}

Int AbelianGroup::order() const {
    if (!is_finite()) throw std::logic_error("order of an infinite group");
    Int n = 1;
    for (const Int& d : factors_) n *= d;
    return n;
}

IntVector AbelianGroup::reduce(IntVector x) const {
    if (x.size() != ngens()) throw std::invalid_argument("reduce: wrong coordinate length");
    for (Index i = 0; i < torsion_count(); ++i)
        x(i) = mod_into_range(x(i), factors_[static_cast<size_t>(i)]);
    return x;
}

Int AbelianGroup::element_order(const IntVector& x) const {
    IntVector r = reduce(x);
    Int ord = 1;
    for (Index i = 0; i < ngens(); ++i) {
        const Int& d = factors_[static_cast<size_t>(i)];
        if (d == 0) {
            if (r(i) != 0) return 0;
            continue;
        }
        Int g = gcd(d, r(i));
        Int oi = d / g;
        ord = lcm(ord, oi);
    }
    return ord;
}

std::string group_to_string(const AbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += "⊕";
        out += part;
    };
    if (g.free_rank() == 1) append("Z");
    if (g.free_rank() > 1) append("Z^" + std::to_string(g.free_rank()));
    for (Index i = 0; i < g.torsion_count(); ++i)
        append("Z/" + g.invariant_factors()[static_cast<size_t>(i)].get_str());
    return out;
}

GroupElement element(const AbelianGroup& g, IntVector coords) {
    return GroupElement{g, g.reduce(std::move(coords))};
}

GroupElement element(const AbelianGroup& g, std::initializer_list<long> coords) {
    IntVector v(static_cast<Index>(coords.size()));
    Index i = 0;
    for (long x : coords) v(i++) = x;
    return element(g, std::move(v));
}

Normalization normalize_presentation(Index ngens, const IntMatrix& relations) {
    if (relations.rows() != ngens)
        throw std::invalid_argument("presentation: relation matrix must have ngens rows");
    IntMatrix basis = hermite_basis(relations);
    SmithForm<Int> f = smith_normal_form(basis);

    // Orient free generators so the leading coefficient of each canonical
    // coordinate is positive; keeps induced maps sign-stable.
    for (Index i = f.rank; i < ngens; ++i) {
        for (Index j = 0; j < ngens; ++j) {
            if (f.u(i, j) == 0) continue;
            if (f.u(i, j) < 0) {
                f.u.row(i) = -f.u.row(i);
                f.u_inv.col(i) = -f.u_inv.col(i);
            }
            break;
        }
    }

    std::vector<Index> kept;
    std::vector<Int> factors;
    for (Index i = 0; i < f.rank; ++i) {
        if (f.s(i, i) != 1) {
            kept.push_back(i);
            factors.push_back(f.s(i, i));
        }
    }
    for (Index i = f.rank; i < ngens; ++i) {
        kept.push_back(i);
        factors.push_back(0);
    }

    Normalization n;
    n.group = AbelianGroup(std::move(factors));
    const Index c = static_cast<Index>(kept.size());
    n.to_canonical.resize(c, ngens);
    n.from_canonical.resize(ngens, c);
    for (Index k = 0; k < c; ++k) {
        n.to_canonical.row(k) = f.u.row(kept[static_cast<size_t>(k)]);
        n.from_canonical.col(k) = f.u_inv.col(kept[static_cast<size_t>(k)]);
    }
    return n;
}

Hom::Hom(AbelianGroup dom, AbelianGroup cod, IntMatrix matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(matrix)) {
    if (mat_.rows() != cod_.ngens() || mat_.cols() != dom_.ngens())
        throw std::invalid_argument("hom: matrix shape must be cod.ngens x dom.ngens");
    for (Index i = 0; i < cod_.torsion_count(); ++i) {
        const Int& d = cod_.invariant_factors()[static_cast<size_t>(i)];
        for (Index j = 0; j < mat_.cols(); ++j) mat_(i, j) = mod_into_range(mat_(i, j), d);
    }
}

Hom Hom::identity(const AbelianGroup& g) {
    return Hom(g, g, IntMatrix::Identity(g.ngens(), g.ngens()));
}

Hom Hom::zero(const AbelianGroup& dom, const AbelianGroup& cod) {
    return Hom(dom, cod, IntMatrix::Zero(cod.ngens(), dom.ngens()));
}

bool Hom::well_defined() const {
    for (Index j = 0; j < dom_.ngens(); ++j) {
        const Int& d = dom_.invariant_factors()[static_cast<size_t>(j)];
        if (d == 0) continue;
        for (Index i = 0; i < cod_.ngens(); ++i) {
            const Int& e = cod_.invariant_factors()[static_cast<size_t>(i)];
            Int image = d * mat_(i, j);
            if (e == 0 ? image != 0 : image % e != 0) return false;
        }
    }
    return true;
}

IntVector Hom::apply(const IntVector& x) const {
    if (x.size() != dom_.ngens()) throw std::invalid_argument("hom apply: wrong length");
    return cod_.reduce(mat_ * x);
}

GroupElement Hom::apply(const GroupElement& x) const {
    if (!(x.group == dom_)) throw std::invalid_argument("hom apply: element from wrong group");
    return GroupElement{cod_, apply(x.coords)};
}

bool Hom::is_identity() const {
    return dom_ == cod_ && *this == identity(dom_);
}

bool Hom::is_injective() const { return hom_kernel(*this).group.is_trivial(); }

bool Hom::is_surjective() const { return quotient_by(cod_, mat_).group.is_trivial(); }

Hom Hom::operator+(const Hom& o) const {
    if (!(dom_ == o.dom_) || !(cod_ == o.cod_))
        throw std::invalid_argument("hom sum: mismatched domains");
    return Hom(dom_, cod_, mat_ + o.mat_);
}

Hom Hom::scaled(const Int& c) const { return Hom(dom_, cod_, mat_ * c); }

Hom compose(const Hom& outer, const Hom& inner) {
    if (!(inner.cod() == outer.dom()))
        throw std::invalid_argument("compose: inner codomain differs from outer domain");
    return Hom(inner.dom(), outer.cod(), outer.matrix() * inner.matrix());
}

Hom hom_power(const Hom& endo, unsigned long exponent) {
    if (!(endo.dom() == endo.cod())) throw std::invalid_argument("hom_power: not an endomorphism");
    Hom acc = Hom::identity(endo.dom());
    Hom base = endo;
    while (exponent > 0) {
        if (exponent & 1UL) acc = compose(acc, base);
        exponent >>= 1UL;
        if (exponent > 0) base = compose(base, base);
    }
    return acc;
}

IntMatrix subgroup_lattice(const AbelianGroup& g, const IntMatrix& generators) {
    if (generators.rows() != g.ngens())
        throw std::invalid_argument("subgroup: generator coordinates have wrong length");
    IntMatrix joined(g.ngens(), generators.cols() + g.torsion_count());
    joined << generators, g.relation_matrix();
    return hermite_basis(joined);
}

Subgroup subgroup_generated(const AbelianGroup& g, const IntMatrix& generators) {
    IntMatrix basis = subgroup_lattice(g, generators);
    const Index r = basis.cols();

    // Relations of the subgroup: coefficient vectors carrying the basis into
    // the relation lattice of the ambient group.
    IntMatrix joined(g.ngens(), r + g.torsion_count());
    joined << basis, g.relation_matrix();
    IntMatrix ker = kernel_basis(joined);
    IntMatrix rels = ker.topRows(r);

    Normalization n = normalize_presentation(r, rels);
    Hom inclusion(n.group, g, basis * n.from_canonical);
    return Subgroup{n.group, std::move(inclusion)};
}

static IntMatrix columns_of(const AbelianGroup& g, const std::vector<GroupElement>& elements) {
    IntMatrix cols(g.ngens(), static_cast<Index>(elements.size()));
    for (Index j = 0; j < cols.cols(); ++j) {
        const GroupElement& e = elements[static_cast<size_t>(j)];
        if (!(e.group == g)) throw std::invalid_argument("element from wrong group");
        cols.col(j) = e.coords;
    }
    return cols;
}

Subgroup subgroup_generated(const AbelianGroup& g, const std::vector<GroupElement>& elements) {
    return subgroup_generated(g, columns_of(g, elements));
}

Quotient quotient_by(const AbelianGroup& g, const IntMatrix& generators) {
    if (generators.rows() != g.ngens())
        throw std::invalid_argument("quotient: generator coordinates have wrong length");
    IntMatrix joined(g.ngens(), g.torsion_count() + generators.cols());
    joined << g.relation_matrix(), generators;
    Normalization n = normalize_presentation(g.ngens(), joined);
    Hom projection(g, n.group, n.to_canonical);
    return Quotient{n.group, std::move(projection), n.from_canonical};
}

Quotient quotient_by(const AbelianGroup& g, const std::vector<GroupElement>& elements) {
    return quotient_by(g, columns_of(g, elements));
}

Subgroup hom_kernel(const Hom& f) {
    if (!f.well_defined()) throw std::invalid_argument("hom_kernel: map is not well defined");
    IntMatrix joined(f.cod().ngens(), f.dom().ngens() + f.cod().torsion_count());
    joined << f.matrix(), f.cod().relation_matrix();
    IntMatrix ker = kernel_basis(joined);
    return subgroup_generated(f.dom(), IntMatrix(ker.topRows(f.dom().ngens())));
}

ImageCokernel image_cokernel(const Hom& f) {
    if (!f.well_defined()) throw std::invalid_argument("image_cokernel: map is not well defined");
    ImageCokernel result;
    result.image = subgroup_generated(f.cod(), f.matrix());
    Quotient q = quotient_by(f.cod(), f.matrix());
    result.cokernel = q.group;
    result.projection = q.projection;
    result.section = q.section;
    return result;
}

DirectSum direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    const Index na = a.ngens(), nb = b.ngens();
    IntMatrix rels = IntMatrix::Zero(na + nb, a.torsion_count() + b.torsion_count());
    rels.block(0, 0, na, a.torsion_count()) = a.relation_matrix();
    rels.block(na, a.torsion_count(), nb, b.torsion_count()) = b.relation_matrix();
    Normalization n = normalize_presentation(na + nb, rels);
    DirectSum sum;
    sum.group = n.group;
    sum.to_canonical = n.to_canonical;
    sum.from_canonical = n.from_canonical;
    sum.inject_left = Hom(a, n.group, n.to_canonical.leftCols(na));
    sum.inject_right = Hom(b, n.group, n.to_canonical.rightCols(nb));
    return sum;
}

TensorProduct tensor(const AbelianGroup& a, const AbelianGroup& b) {
    const Index na = a.ngens(), nb = b.ngens();
    const Index raw = na * nb;
    IntMatrix rels = IntMatrix::Zero(raw, a.torsion_count() * nb + b.torsion_count() * na);
    Index col = 0;
    for (Index i = 0; i < a.torsion_count(); ++i)
        for (Index j = 0; j < nb; ++j)
            rels(i * nb + j, col++) = a.invariant_factors()[static_cast<size_t>(i)];
    for (Index j = 0; j < b.torsion_count(); ++j)
        for (Index i = 0; i < na; ++i)
            rels(i * nb + j, col++) = b.invariant_factors()[static_cast<size_t>(j)];
    Normalization n = normalize_presentation(raw, rels);
    TensorProduct t;
    t.group = n.group;
    t.left_ngens = na;
    t.right_ngens = nb;
    t.pair_to_canonical = n.to_canonical;
    return t;
}

IntVector TensorProduct::pair(const IntVector& x, const IntVector& y) const {
    if (x.size() != left_ngens || y.size() != right_ngens)
        throw std::invalid_argument("tensor pair: wrong coordinate lengths");
    IntVector raw = IntVector::Zero(left_ngens * right_ngens);
    for (Index i = 0; i < left_ngens; ++i)
        for (Index j = 0; j < right_ngens; ++j) raw(i * right_ngens + j) = x(i) * y(j);
    return group.reduce(pair_to_canonical * raw);
}

std::vector<IntVector> enumerate_elements(const AbelianGroup& g, unsigned long long bound) {
    if (bound < 1) throw std::invalid_argument("enumerate: bound must be at least 1");
    if (!g.is_finite()) throw capacity_error("enumerate: group is infinite");
    Int order = g.order();
    if (order > Int(static_cast<unsigned long>(bound)))
        throw capacity_error("enumerate: group order exceeds bound");

    std::vector<IntVector> out;
    out.reserve(order.get_ui());
    IntVector current = IntVector::Zero(g.ngens());
    while (true) {
        out.push_back(current);
        Index i = g.ngens() - 1;
        for (; i >= 0; --i) {
            current(i) += 1;
            if (current(i) < g.invariant_factors()[static_cast<size_t>(i)]) break;
            current(i) = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::optional<Hom> try_lift_through(const Hom& f, const Hom& inclusion) {
    if (!(f.cod() == inclusion.cod()))
        throw std::invalid_argument("lift: maps must share their codomain");
    const AbelianGroup& c = f.cod();
    IntMatrix joined(c.ngens(), inclusion.dom().ngens() + c.torsion_count());
    joined << inclusion.matrix(), c.relation_matrix();
    auto sol = solve_columns(joined, f.matrix());
    if (!sol) return std::nullopt;
    return Hom(f.dom(), inclusion.dom(), sol->topRows(inclusion.dom().ngens()));
}

Hom lift_through(const Hom& f, const Hom& inclusion) {
    auto lifted = try_lift_through(f, inclusion);
    if (!lifted) throw std::invalid_argument("lift: map does not factor through the inclusion");
    return *lifted;
}

}  // namespace coslice
