#pragma once

// Shared test helpers: deterministic random generators and brute-force
// oracles kept independent of the code paths they check.

#include "coslice/abelian.hpp"

#include <random>
#include <vector>

namespace coslice::testing {

class Rng {
public:
    explicit Rng(unsigned long seed) : engine_(seed) {}

    long uniform(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(engine_);
    }

    IntMatrix matrix(Index rows, Index cols, long lo, long hi) {
        IntMatrix m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
        return m;
    }

    IntVector vector(Index n, long lo, long hi) {
        IntVector v(n);
        for (Index i = 0; i < n; ++i) v(i) = uniform(lo, hi);
        return v;
    }

    // Random canonical group with factors drawn from a small pool.
    AbelianGroup group(Index max_gens) {
        static const long pool[] = {2, 3, 4, 6, 8, 0};
        Index n = uniform(0, max_gens);
        std::vector<Int> torsion;
        Index free_rank = 0;
        for (Index i = 0; i < n; ++i) {
            long pick = pool[uniform(0, 5)];
            if (pick == 0)
                ++free_rank;
            else
                torsion.push_back(pick);
        }
        // Rebuild a valid divisibility chain from the multiset.
        IntMatrix diag = IntMatrix::Zero(n, static_cast<Index>(torsion.size()));
        for (Index j = 0; j < static_cast<Index>(torsion.size()); ++j)
            diag(j, j) = torsion[static_cast<size_t>(j)];
        return normalize_presentation(n, diag).group;
    }

    // Random well-defined hom between canonical groups.
    Hom hom(const AbelianGroup& dom, const AbelianGroup& cod) {
        IntMatrix m(cod.ngens(), dom.ngens());
        for (Index j = 0; j < dom.ngens(); ++j) {
            const Int& d = dom.invariant_factors()[static_cast<size_t>(j)];
            for (Index i = 0; i < cod.ngens(); ++i) {
                const Int& e = cod.invariant_factors()[static_cast<size_t>(i)];
                if (d == 0) {
                    m(i, j) = uniform(-4, 4);
                } else if (e == 0) {
                    m(i, j) = 0;
                } else {
                    Int step = e / gcd(e, d);
                    long k = uniform(0, 5);
                    m(i, j) = step * k;
                }
            }
        }
        return Hom(dom, cod, m);
    }

private:
    std::mt19937_64 engine_;
};

// All integer vectors of the given length with entries in [lo, hi].
inline std::vector<IntVector> vector_box(Index length, long lo, long hi) {
    std::vector<IntVector> out;
    IntVector current(length);
    for (Index i = 0; i < length; ++i) current(i) = lo;
    if (length == 0) return {current};
    while (true) {
        out.push_back(current);
        Index i = length - 1;
        for (; i >= 0; --i) {
            current(i) += 1;
            if (current(i) <= hi) break;
            current(i) = lo;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace coslice::testing
