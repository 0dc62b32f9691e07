#pragma once

// Finitely generated abelian groups presented by integer relation matrices
// (relations are columns), kept in canonical invariant-factor form, plus the
// homomorphism calculus built on Smith/Hermite reduction.

#include "coslice/int_matrix.hpp"

#include <string>
#include <vector>

namespace coslice {

class AbelianGroup {
public:
    AbelianGroup() = default;  // trivial group
    explicit AbelianGroup(std::vector<Int> invariant_factors);

    static AbelianGroup free(Index rank);
    static AbelianGroup cyclic(const Int& n);  // n = 0 gives Z

    Index ngens() const { return static_cast<Index>(factors_.size()); }
    Index torsion_count() const;
    Index free_rank() const { return ngens() - torsion_count(); }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    IntMatrix relation_matrix() const;  // ngens x torsion_count, diagonal columns

    bool is_trivial() const { return factors_.empty(); }
    bool is_finite() const { return free_rank() == 0; }
    Int order() const;  // finite groups only

    IntVector reduce(IntVector x) const;
    Int element_order(const IntVector& x) const;  // 0 = infinite

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<Int> factors_;  // torsion (>= 2) in a divisibility chain, then zeros
};

std::string group_to_string(const AbelianGroup&);

struct GroupElement {
    AbelianGroup group;
    IntVector coords;  // reduced

    bool operator==(const GroupElement& o) const {
        return group == o.group && matrix_equal<Int>(coords, o.coords);
    }
};

GroupElement element(const AbelianGroup&, IntVector coords);
GroupElement element(const AbelianGroup&, std::initializer_list<long> coords);

// Canonicalization of a raw presentation Z^ngens / column-span(relations).
// to_canonical maps raw coordinates onto canonical ones; from_canonical is a
// section (to_canonical * from_canonical = identity). Both depend only on
// the relation lattice, not on the generating set handed in.
struct Normalization {
    AbelianGroup group;
    IntMatrix to_canonical;
    IntMatrix from_canonical;
};

Normalization normalize_presentation(Index ngens, const IntMatrix& relations);

class Hom {
public:
    Hom() = default;
    Hom(AbelianGroup dom, AbelianGroup cod, IntMatrix matrix);

    static Hom identity(const AbelianGroup&);
    static Hom zero(const AbelianGroup& dom, const AbelianGroup& cod);

    const AbelianGroup& dom() const { return dom_; }
    const AbelianGroup& cod() const { return cod_; }
    const IntMatrix& matrix() const { return mat_; }

    // matrix carries each dom relation into the cod relation lattice
    bool well_defined() const;

    IntVector apply(const IntVector& x) const;
    GroupElement apply(const GroupElement& x) const;

    bool is_zero() const { return is_zero_matrix(mat_); }
    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    Hom operator+(const Hom&) const;
    Hom scaled(const Int&) const;

    bool operator==(const Hom& o) const {
        return dom_ == o.dom_ && cod_ == o.cod_ && matrix_equal<Int>(mat_, o.mat_);
    }

private:
    AbelianGroup dom_, cod_;
    IntMatrix mat_;  // cod.ngens x dom.ngens, torsion rows reduced
};

Hom compose(const Hom& outer, const Hom& inner);
Hom hom_power(const Hom& endo, unsigned long exponent);

struct Subgroup {
    AbelianGroup group;
    Hom inclusion;  // group -> ambient, injective
};

struct Quotient {
    AbelianGroup group;
    Hom projection;     // ambient -> group, surjective
    IntMatrix section;  // ambient.ngens x group.ngens, projection * section = id
};

struct ImageCokernel {
    Subgroup image;
    AbelianGroup cokernel;
    Hom projection;
    IntMatrix section;
};

Subgroup subgroup_generated(const AbelianGroup&, const IntMatrix& generators);
Subgroup subgroup_generated(const AbelianGroup&, const std::vector<GroupElement>&);
Quotient quotient_by(const AbelianGroup&, const IntMatrix& generators);
Quotient quotient_by(const AbelianGroup&, const std::vector<GroupElement>&);
Subgroup hom_kernel(const Hom&);
ImageCokernel image_cokernel(const Hom&);

// Canonical basis of the lattice spanned by the generators together with the
// relation lattice; the coordinate-level picture of a subgroup.
IntMatrix subgroup_lattice(const AbelianGroup&, const IntMatrix& generators);

struct DirectSum {
    AbelianGroup group;
    IntMatrix to_canonical;    // from stacked (left; right) raw coordinates
    IntMatrix from_canonical;
    Hom inject_left, inject_right;
};

DirectSum direct_sum(const AbelianGroup&, const AbelianGroup&);

struct TensorProduct {
    AbelianGroup group;
    Index left_ngens = 0, right_ngens = 0;
    IntMatrix pair_to_canonical;  // group.ngens x (left_ngens * right_ngens)

    IntVector pair(const IntVector& x, const IntVector& y) const;
};

TensorProduct tensor(const AbelianGroup&, const AbelianGroup&);

// All elements in canonical coordinates, lexicographic order; capacity_error
// when the group is infinite or larger than the bound.
std::vector<IntVector> enumerate_elements(const AbelianGroup&, unsigned long long bound);

// h with inclusion o h = f; throws when f does not land in the image.
Hom lift_through(const Hom& f, const Hom& inclusion);
std::optional<Hom> try_lift_through(const Hom& f, const Hom& inclusion);

}  // namespace coslice
