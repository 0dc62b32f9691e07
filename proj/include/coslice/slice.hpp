#pragma once

// Slice-theoretic algorithms at the Mackey-functor level: the coslice
// filtration, slice towers of Eilenberg-Mac Lane type, zero-slice quotients,
// inflation from quotient groups, geometric subs/quotients, and the
// decomposition of the Burnside augmentation ideal.

#include "coslice/mackey.hpp"

namespace coslice {

// F^0 = base, decreasing, constant except at prime powers, F^(p^n) = 0.
struct CosliceFiltration {
    MackeyFunctor base;
    std::vector<SubFunctor> stages;  // index k = 0 .. p^n
};

CosliceFiltration coslice_filtration(const MackeyFunctor&);

struct SliceTowerEntry {
    long dim = 0;             // p^k - 1
    MackeyFunctor layer;      // F^dim / F^(dim+1)
    MackeyFunctor section;    // base / F^(dim+1)
    MackeyMorphism projection;  // base -> section
};

struct SliceTower {
    CyclicGroupSpec spec;
    std::vector<SliceTowerEntry> entries;  // increasing dim, zero layers omitted
};

SliceTower slice_tower(const MackeyFunctor&);

// base / F^1: the largest quotient with all restrictions injective. The
// result is cross-checked against the independent image-in-the-bottom-level
// formula levelwise.
MackeyQuotient zero_slice_quotient(const MackeyFunctor&);

// Extend a functor on C_{p^(n-k)} to C_{p^n} by zero below level k.
MackeyFunctor inflate(const MackeyFunctor&, long k, const CyclicGroupSpec& target);

// Pulled back from level k: levels 0..k-1 vanish.
bool is_pulled_back(const MackeyFunctor&, long k);
MackeyFunctor deflate(const MackeyFunctor&, long k);  // domain_error when not pulled back

// Composites of restrictions down to level 0 are all injective.
bool all_restrictions_injective(const MackeyFunctor&);

// Layer shape check: pulled back from level k and, after deflating, a
// zero-slice functor.
bool is_pullback_of_zero_slice(const MackeyFunctor& layer, long k);

// Largest sub-functor concentrated at the top level.
SubFunctor max_geometric_sub(const MackeyFunctor&);

// Largest quotient concentrated at the top level.
MackeyQuotient geometric_quotient(const MackeyFunctor&);

// Largest quotient pulled back from level k; k = 0 is the identity, k = n
// recovers the geometric quotient.
MackeyQuotient pullback_quotient(const MackeyFunctor&, long k);

struct AugmentationSummand {
    MackeyElement generator;  // [C_{p^k}/C_{p^(k-1)}] - p at level k
    SubFunctor sub;
    MackeyMorphism witness;   // iso from the inflated dual functor onto sub
};

struct AugmentationDecomposition {
    SubFunctor ideal;  // kernel of the augmentation, as a sub of burnside
    std::vector<AugmentationSummand> summands;
};

// Splits the augmentation ideal of the Burnside functor into inflated dual
// constant functors; internal directness is verified by rank bookkeeping.
AugmentationDecomposition augmentation_decomposition(const CyclicGroupSpec&);

}  // namespace coslice
