#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coslice/boxprod.hpp"
#include "coslice/slice.hpp"
#include "mackey_support.hpp"

using namespace coslice;
using namespace coslice::testing;

namespace {

// The displayed answer for E (x) Z: Z/4 over Z/2 with res onto, tr by 2.
MackeyFunctor box_display() {
    MackeyFunctor f;
    f.spec = {2, 1};
    AbelianGroup z2({2}), z4({4});
    f.levels = {z2, z4};
    f.act = {Hom::identity(z2), Hom::identity(z4)};
    f.res = {Hom(z4, z2, make_matrix({{1}}))};
    f.tr = {Hom(z2, z4, make_matrix({{2}}))};
    return f;
}

}  // namespace

TEST_CASE("box product reproduces the E example") {
    MackeyFunctor e = make_E();
    BoxProduct box = box_product(e, constant_z({2, 1}));
    CHECK(box.functor.levels[0] == AbelianGroup({2}));
    CHECK(box.functor.levels[1] == AbelianGroup({4}));
    CHECK(box.functor.res[0].is_surjective());
    CHECK(matrix_equal<Int>(box.functor.tr[0].matrix(), make_matrix({{2}})));
    CHECK(validate(box.functor).empty());

    IsoResult iso = is_isomorphic_bruteforce(box.functor, box_display(), 16);
    CHECK(iso.isomorphic);
}

TEST_CASE("burnside is the box unit") {
    MackeyFunctor a = burnside_functor({2, 1});
    MackeyFunctor e = make_E();

    // Finite instance: compare by exhaustive search.
    MackeyFunctor fin = quotient(e, sub_generated(e, {mackey_element(e, 1, {0, 4})})).functor;
    BoxProduct bf = box_product(a, fin);
    CHECK(is_isomorphic_bruteforce(bf.functor, fin, 64).isomorphic);

    // Infinite instance: exhibit the unit map as an explicit isomorphism.
    BoxProduct aa = box_product(a, a);
    CHECK(aa.functor.levels[0] == AbelianGroup::free(1));
    CHECK(aa.functor.levels[1] == AbelianGroup::free(2));
    MackeyMorphism unit;
    unit.dom = a;
    unit.cod = aa.functor;
    {
        // Level 0 symbol [0; pt (x) pt]; level 1 symbols start with
        // [0; pt (x) pt] then the j = 1 block in row-major order.
        IntMatrix raw0 = IntMatrix::Zero(1, 1);
        raw0(0, 0) = 1;
        unit.maps.push_back(Hom(a.levels[0], aa.functor.levels[0], aa.to_canonical[0] * raw0));
        IntMatrix raw1 = IntMatrix::Zero(5, 2);
        raw1(1, 0) = 1;  // point orbit -> [1; pt (x) pt]
        raw1(0, 1) = 1;  // free orbit -> transferred bottom symbol
        unit.maps.push_back(Hom(a.levels[1], aa.functor.levels[1], aa.to_canonical[1] * raw1));
    }
    CHECK(morphism_is_isomorphism(unit));
}

TEST_CASE("box product symmetry on finite instances") {
    MackeyFunctor x = constant_mod({2, 1}, 4);
    MackeyFunctor y = dual_mod({2, 1}, 2);
    BoxProduct xy = box_product(x, y);
    BoxProduct yx = box_product(y, x);
    CHECK(is_isomorphic_bruteforce(xy.functor, yx.functor, 64).isomorphic);

    MackeyFunctor e = make_E();
    MackeyFunctor fin = quotient(e, sub_generated(e, {mackey_element(e, 1, {0, 4})})).functor;
    CHECK(is_isomorphic_bruteforce(box_product(fin, y).functor, box_product(y, fin).functor, 64)
              .isomorphic);
}

TEST_CASE("box level zero agrees with the tensor product") {
    Rng rng(31415);
    for (int iter = 0; iter < 12; ++iter) {
        MackeyFunctor x = random_valid_mackey(rng, {2, 1}, 32);
        MackeyFunctor y = random_valid_mackey(rng, {2, 1}, 32);
        BoxProduct box = box_product(x, y);
        CHECK(box.functor.levels[0] == tensor(x.levels[0], y.levels[0]).group);
        CHECK(validate(box.functor).empty());
    }
}

TEST_CASE("box products validate over odd primes and deeper towers") {
    BoxProduct b31 = box_product(constant_z({3, 1}), dual_z({3, 1}));
    CHECK(validate(b31.functor).empty());
    BoxProduct b22 = box_product(constant_z({2, 2}), inflate(make_E(), 1, {2, 2}));
    CHECK(validate(b22.functor).empty());
    BoxProduct b22b = box_product(burnside_functor({2, 2}), dual_mod({2, 2}, 4));
    CHECK(validate(b22b.functor).empty());
}

TEST_CASE("comparison to the zero slice") {
    ZeroSliceComparison of_e = comparison_to_zero_slice(make_E());
    CHECK(of_e.surjective);
    CHECK_FALSE(of_e.injective);
    CHECK(of_e.map.dom.levels[1] == AbelianGroup({4}));
    CHECK(of_e.map.cod.levels[1] == AbelianGroup({2}));

    ZeroSliceComparison of_a = comparison_to_zero_slice(burnside_functor({2, 1}));
    CHECK(of_a.surjective);
    CHECK(of_a.injective);

    ZeroSliceComparison of_z = comparison_to_zero_slice(constant_z({2, 1}));
    CHECK(of_z.surjective);
    CHECK(of_z.injective);
}
