#pragma once

// Real representations of C_{p^n} by irreducible multiplicities, permutation
// representations of finite G-sets, and slice-connectivity intervals for
// representation spheres.

#include "coslice/mackey.hpp"

#include <string>
#include <vector>

namespace coslice {

// Index 0 is the trivial character (dimension 1); for p = 2 and n >= 1 the
// top index p^n/2 is the sign character (dimension 1); every other index j
// is the two-dimensional rotation by 2*pi*j/p^n.
struct Rep {
    CyclicGroupSpec spec;
    std::vector<long> mult;  // size floor(p^n/2) + 1

    long dim() const;

    bool operator==(const Rep&) const = default;
};

long rep_index_count(const CyclicGroupSpec&);  // floor(p^n/2) + 1
long irreducible_dim(const CyclicGroupSpec&, long index);
Rep zero_rep(const CyclicGroupSpec&);
Rep regular_rep(const CyclicGroupSpec&);
Rep rep_sum(const Rep&, const Rep&);
void check_rep(const Rep&);

struct GSet {
    CyclicGroupSpec spec;
    std::vector<long> orbit_counts;  // counts[k] = orbits C_{p^n}/C_{p^k}, k = 0..n

    long size() const;
    long fixed_points(long level) const;
};

void check_gset(const GSet&);
Rep permutation_rep(const GSet&);

// Dimension of the subspace fixed by C_{p^level}.
long fixed_dim(const Rep&, long level);

// Restriction to C_{p^level}: characters fold modulo p^level.
Rep restrict_rep(const Rep&, long level);

// The sphere S^(v - desusp).
struct SphereSpec {
    Rep v;
    long desusp = 0;
};

struct SdimInterval {
    long lower = 0;
    long upper = 0;
    bool exact = false;
    std::vector<std::string> rules;  // provenance, in application order
};

// Slice-connectivity bounds. Throws std::invalid_argument on malformed input
// and std::domain_error on supported-syntax spheres whose shape falls outside
// the catalogued families (never a wrong answer).
SdimInterval sdim_bounds(const SphereSpec&);

// G_+ smash_H S^(-n) for H = C_{p^subgroup_level}; exact for n >= 1. These
// are not representation spheres of G, so they are catalogued separately.
SdimInterval induced_negative_sphere_sdim(const CyclicGroupSpec&, long subgroup_level, long n);

}  // namespace coslice
