#pragma once

// Box product of Mackey functors by generators and relations: tensor symbols
// [j; x (x) y] for j at most the level, modulo bilinearity, the Weyl
// identification at the level's subgroup generator, and Frobenius reciprocity.

#include "coslice/mackey.hpp"

namespace coslice {

struct BoxProduct {
    MackeyFunctor functor;
    // Per level: the change of coordinates between the raw symbol basis
    // (j, x, y), flattened with j ascending, and the canonical presentation.
    std::vector<IntMatrix> to_canonical;
    std::vector<IntMatrix> from_canonical;
};

BoxProduct box_product(const MackeyFunctor&, const MackeyFunctor&);

struct ZeroSliceComparison {
    MackeyMorphism map;  // m (x) zero_slice_quotient(burnside) -> zero_slice_quotient(m)
    bool surjective = false;
    bool injective = false;
};

ZeroSliceComparison comparison_to_zero_slice(const MackeyFunctor&);

}  // namespace coslice
