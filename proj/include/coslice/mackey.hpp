#pragma once

// Mackey functors for cyclic p-groups: the tower of abelian groups linked by
// restriction, transfer and the Weyl action, the axioms validator, standard
// functors, and the sub/quotient/morphism calculus.

#include "coslice/abelian.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace coslice {

struct CyclicGroupSpec {
    long p = 2;  // prime
    long n = 0;  // group is C_{p^n}

    long order() const;             // p^n
    long subgroup_order(long k) const;  // p^k

    bool operator==(const CyclicGroupSpec&) const = default;
};

// Throws std::invalid_argument unless p is prime, n >= 0 and p^n is of desk size.
void check_spec(const CyclicGroupSpec&);

// Levels are indexed 0..n; level k is the value at C_{p^n}/C_{p^k}.
// res[k] maps level k+1 to level k, tr[k] maps level k to level k+1, and
// act[k] is the action of the chosen generator of the full group.
struct MackeyFunctor {
    CyclicGroupSpec spec;
    std::vector<AbelianGroup> levels;  // size n+1
    std::vector<Hom> act;              // size n+1
    std::vector<Hom> res;              // size n
    std::vector<Hom> tr;               // size n

    bool operator==(const MackeyFunctor&) const = default;
};

// Shape consistency (vector sizes, Hom endpoints); throws on mismatch.
void check_shapes(const MackeyFunctor&);

struct AxiomViolation {
    std::string axiom;  // "well-definedness", "action order",
                        // "restriction equivariance", "transfer equivariance",
                        // "double coset formula"
    long level = 0;
    std::string detail;
};

// Empty report = valid. Axioms are only evaluated once every structure map
// is well defined.
std::vector<AxiomViolation> validate(const MackeyFunctor&);
bool is_valid(const MackeyFunctor&);

MackeyFunctor zero_functor(const CyclicGroupSpec&);

// Burnside functor: level k is free on the orbits C_{p^k}/C_{p^j}, ordered
// with j descending, so basis index 0 is the point orbit [C_{p^k}/C_{p^k}].
MackeyFunctor burnside_functor(const CyclicGroupSpec&);
MackeyFunctor constant_z(const CyclicGroupSpec&);
MackeyFunctor dual_z(const CyclicGroupSpec&);

// Augmentation: counts cardinality of each orbit; burnside -> constant_z.
struct MackeyMorphism;
MackeyMorphism burnside_augmentation(const CyclicGroupSpec&);

// Fixed-point functor of a module with a generator action of order dividing p^n.
MackeyFunctor fixed_point_functor(const CyclicGroupSpec&, const AbelianGroup& module,
                                  const Hom& action);

struct MackeyElement {
    long level = 0;
    GroupElement value;
};

MackeyElement mackey_element(const MackeyFunctor&, long level,
                             std::initializer_list<long> coords);

struct MackeyMorphism {
    MackeyFunctor dom, cod;
    std::vector<Hom> maps;  // levelwise

    bool operator==(const MackeyMorphism&) const = default;
};

MackeyMorphism identity_morphism(const MackeyFunctor&);
MackeyMorphism zero_morphism(const MackeyFunctor& dom, const MackeyFunctor& cod);
bool morphism_commutes(const MackeyMorphism&);
bool morphism_is_isomorphism(const MackeyMorphism&);

struct SubFunctor {
    MackeyFunctor functor;
    MackeyMorphism inclusion;  // functor -> ambient, levelwise injective
};

// Smallest sub-Mackey-functor containing the elements: closes the generating
// lattices under the Weyl action, restriction and transfer. The sweep order
// is configurable only so tests can confirm the result does not depend on it.
SubFunctor sub_generated(const MackeyFunctor&, const std::vector<MackeyElement>&,
                         const std::array<char, 3>& sweep_order = {'a', 'r', 't'});
SubFunctor sub_generated_cols(const MackeyFunctor&, std::vector<IntMatrix> generators,
                              const std::array<char, 3>& sweep_order = {'a', 'r', 't'});

struct MackeyQuotient {
    MackeyFunctor functor;
    MackeyMorphism projection;
    std::vector<IntMatrix> sections;  // levelwise sections of the projections
};

MackeyQuotient quotient(const MackeyFunctor&, const SubFunctor&);

// Factor f through a quotient projection: g with g o proj = f, when f kills
// the quotiented sub-functor.
std::optional<MackeyMorphism> factor_through_quotient(const MackeyMorphism& f,
                                                      const MackeyQuotient& q);

struct MorphismKernelImage {
    SubFunctor kernel;  // sub of dom
    SubFunctor image;   // sub of cod
};

MorphismKernelImage morphism_kernel_image(const MackeyMorphism&);

struct MackeySum {
    MackeyFunctor functor;
    MackeyMorphism inject_left, inject_right;
};

MackeySum direct_sum_mackey(const MackeyFunctor&, const MackeyFunctor&);

struct IsoResult {
    bool isomorphic = false;
    std::optional<MackeyMorphism> witness;  // lexicographically least
};

// Exhaustive search over levelwise isomorphisms commuting with the structure
// maps. Both functors must have finite levels of order at most the bound.
IsoResult is_isomorphic_bruteforce(const MackeyFunctor&, const MackeyFunctor&,
                                   unsigned long long bound);

}  // namespace coslice
