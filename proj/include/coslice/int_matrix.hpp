#pragma once

// Exact integer linear algebra on Eigen dense types with GMP scalars:
// Smith/Hermite normal forms, integer kernels, lattice solves.

#include <gmpxx.h>

#include <Eigen/Core>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace coslice {

using Int = mpz_class;
using Index = Eigen::Index;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    IntMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c)
            throw std::invalid_argument("make_matrix: ragged rows");
        Index j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline IntVector make_vector(std::initializer_list<long> entries) {
    IntVector v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (long x : entries) v(i++) = x;
    return v;
}

template <class Scalar>
bool matrix_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <class Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& a) {
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != 0) return false;
    return true;
}

template <class Scalar>
Scalar abs_value(const Scalar& x) {
    return x < 0 ? Scalar(-x) : x;
}

// Quotient of floor division for b > 0, so a - q*b lies in [0, b).
template <class Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
    Scalar q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
}

template <class Scalar>
Scalar mod_into_range(const Scalar& a, const Scalar& b) {
    Scalar r = a % b;
    if (r < 0) r += b;
    return r;
}

// u * m * v = s with u, v unimodular, s diagonal, entries nonnegative and
// forming a divisibility chain d1 | d2 | ... (zeros last). u_inv and v_inv
// are the exact inverses, tracked alongside. Pivoting is deterministic:
// minimal absolute value, ties broken by smallest (row, col).
template <class Scalar>
struct SmithForm {
    DenseMatrix<Scalar> s, u, v, u_inv, v_inv;
    Index rank = 0;

    std::vector<Scalar> diagonal() const {
        const Index n = std::min(s.rows(), s.cols());
        std::vector<Scalar> d(static_cast<size_t>(n));
        for (Index i = 0; i < n; ++i) d[static_cast<size_t>(i)] = s(i, i);
        return d;
    }
};

namespace detail {

template <class Scalar>
struct SnfOps {
    DenseMatrix<Scalar>&s, &u, &v, &u_inv, &v_inv;

    void row_sub(Index i, Index t, const Scalar& q) {
        s.row(i) -= s.row(t) * q;
        u.row(i) -= u.row(t) * q;
        u_inv.col(t) += u_inv.col(i) * q;
    }
    void row_swap(Index i, Index t) {
        s.row(i).swap(s.row(t));
        u.row(i).swap(u.row(t));
        u_inv.col(i).swap(u_inv.col(t));
    }
    void row_negate(Index i) {
        s.row(i) = -s.row(i);
        u.row(i) = -u.row(i);
        u_inv.col(i) = -u_inv.col(i);
    }
    void col_sub(Index j, Index t, const Scalar& q) {
        s.col(j) -= s.col(t) * q;
        v.col(j) -= v.col(t) * q;
        v_inv.row(t) += v_inv.row(j) * q;
    }
    void col_swap(Index j, Index t) {
        s.col(j).swap(s.col(t));
        v.col(j).swap(v.col(t));
        v_inv.row(j).swap(v_inv.row(t));
    }
    void col_add(Index i, Index j) {  // col_i += col_j
        s.col(i) += s.col(j);
        v.col(i) += v.col(j);
        v_inv.row(j) -= v_inv.row(i);
    }

    // Diagonalize the trailing block starting at t. Returns the final rank.
    Index diagonalize(Index t) {
        const Index rows = s.rows(), cols = s.cols();
        while (t < rows && t < cols) {
            Index pi = -1, pj = -1;
            Scalar best = 0;
            for (Index i = t; i < rows; ++i)
                for (Index j = t; j < cols; ++j)
                    if (s(i, j) != 0) {
                        Scalar a = abs_value(s(i, j));
                        if (pi < 0 || a < best) {
                            pi = i;
                            pj = j;
                            best = a;
                        }
                    }
            if (pi < 0) break;
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);
            while (true) {
                bool restart = false;
                for (Index i = t + 1; i < rows; ++i) {
                    if (s(i, t) == 0) continue;
                    Scalar q = s(i, t) / s(t, t);
                    if (q != 0) row_sub(i, t, q);
                    if (s(i, t) != 0) {
                        row_swap(i, t);
                        restart = true;
                        break;
                    }
                }
                if (restart) continue;
                for (Index j = t + 1; j < cols; ++j) {
                    if (s(t, j) == 0) continue;
                    Scalar q = s(t, j) / s(t, t);
                    if (q != 0) col_sub(j, t, q);
                    if (s(t, j) != 0) {
                        col_swap(j, t);
                        restart = true;
                        break;
                    }
                }
                if (!restart) break;
            }
            ++t;
        }
        return t;
    }
};

}  // namespace detail

template <class Scalar>
SmithForm<Scalar> smith_normal_form(const DenseMatrix<Scalar>& m) {
    SmithForm<Scalar> f;
    const Index rows = m.rows(), cols = m.cols();
    f.s = m;
    f.u = DenseMatrix<Scalar>::Identity(rows, rows);
    f.u_inv = f.u;
    f.v = DenseMatrix<Scalar>::Identity(cols, cols);
    f.v_inv = f.v;
    detail::SnfOps<Scalar> ops{f.s, f.u, f.v, f.u_inv, f.v_inv};

    f.rank = ops.diagonalize(0);
    for (Index i = 0; i < f.rank; ++i)
        if (f.s(i, i) < 0) ops.row_negate(i);

    bool chain_ok = false;
    while (!chain_ok) {
        chain_ok = true;
        for (Index i = 0; i + 1 < f.rank; ++i) {
            if (f.s(i + 1, i + 1) % f.s(i, i) != 0) {
                ops.col_add(i, i + 1);
                ops.diagonalize(i);
                for (Index k = i; k < f.rank; ++k)
                    if (f.s(k, k) < 0) ops.row_negate(k);
                chain_ok = false;
                break;
            }
        }
    }
    return f;
}

// Canonical basis of the column lattice of m: unique column-style Hermite
// normal form with positive pivots on strictly increasing rows, entries to
// the left of each pivot reduced into [0, pivot). Zero columns are dropped.
template <class Scalar>
DenseMatrix<Scalar> hermite_basis(const DenseMatrix<Scalar>& m) {
    DenseMatrix<Scalar> h = m;
    const Index rows = h.rows();
    Index c = 0;
    for (Index r = 0; r < rows && c < h.cols(); ++r) {
        while (true) {
            Index best = -1;
            Scalar bestabs = 0;
            for (Index j = c; j < h.cols(); ++j)
                if (h(r, j) != 0) {
                    Scalar a = abs_value(h(r, j));
                    if (best < 0 || a < bestabs) {
                        best = j;
                        bestabs = a;
                    }
                }
            if (best < 0) break;
            if (best != c) h.col(best).swap(h.col(c));
            bool again = false;
            for (Index j = c + 1; j < h.cols(); ++j) {
                if (h(r, j) == 0) continue;
                Scalar q = h(r, j) / h(r, c);
                if (q != 0) h.col(j) -= h.col(c) * q;
                if (h(r, j) != 0) again = true;
            }
            if (!again) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) h.col(c) = -h.col(c);
        for (Index j = 0; j < c; ++j) {
            Scalar q = floor_div(h(r, j), h(r, c));
            if (q != 0) h.col(j) -= h.col(c) * q;
        }
        ++c;
    }
    return h.leftCols(c);
}

// Canonical basis of {x : m x = 0}.
template <class Scalar>
DenseMatrix<Scalar> kernel_basis(const DenseMatrix<Scalar>& m) {
    SmithForm<Scalar> f = smith_normal_form(m);
    DenseMatrix<Scalar> raw = f.v.rightCols(m.cols() - f.rank);
    return hermite_basis(raw);
}

template <class Scalar>
Index lattice_rank(const DenseMatrix<Scalar>& m) {
    return hermite_basis(m).cols();
}

// Integer solution of m x = b, if one exists.
template <class Scalar>
std::optional<DenseVector<Scalar>> solve(const SmithForm<Scalar>& f,
                                         const DenseVector<Scalar>& b) {
    if (b.size() != f.s.rows()) throw std::invalid_argument("solve: size mismatch");
    DenseVector<Scalar> y = f.u * b;
    DenseVector<Scalar> z = DenseVector<Scalar>::Zero(f.s.cols());
    for (Index i = 0; i < y.size(); ++i) {
        if (i < f.rank) {
            if (y(i) % f.s(i, i) != 0) return std::nullopt;
            z(i) = y(i) / f.s(i, i);
        } else if (y(i) != 0) {
            return std::nullopt;
        }
    }
    return f.v * z;
}

template <class Scalar>
std::optional<DenseVector<Scalar>> solve(const DenseMatrix<Scalar>& m,
                                         const DenseVector<Scalar>& b) {
    return solve(smith_normal_form(m), b);
}

// Column-wise solve m X = B.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> solve_columns(const DenseMatrix<Scalar>& m,
                                                 const DenseMatrix<Scalar>& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve_columns: size mismatch");
    SmithForm<Scalar> f = smith_normal_form(m);
    DenseMatrix<Scalar> x(m.cols(), b.cols());
    for (Index j = 0; j < b.cols(); ++j) {
        auto col = solve(f, DenseVector<Scalar>(b.col(j)));
        if (!col) return std::nullopt;
        x.col(j) = *col;
    }
    return x;
}

// Decides x in column-span(lattice) over the integers. On failure the
// certificate names the first coordinate of u*x not divisible by the
// corresponding diagonal entry of the Smith form.
struct Membership {
    bool member = false;
    IntVector witness;       // lattice * witness = x when member
    Index failing_index = -1;
    Int failing_value = 0;
    Int modulus = 0;  // 0 means the coordinate had to vanish exactly
};

inline Membership membership(const IntMatrix& lattice, const IntVector& x) {
    if (x.size() != lattice.rows())
        throw std::invalid_argument("membership: vector length must equal lattice row count");
    SmithForm<Int> f = smith_normal_form(lattice);
    IntVector y = f.u * x;
    Membership result;
    for (Index i = 0; i < y.size(); ++i) {
        const bool pivot = i < f.rank;
        if (pivot ? (y(i) % f.s(i, i) != 0) : (y(i) != 0)) {
            result.member = false;
            result.failing_index = i;
            result.failing_value = y(i);
            result.modulus = pivot ? f.s(i, i) : Int(0);
            return result;
        }
    }
    result.member = true;
    IntVector z = IntVector::Zero(lattice.cols());
    for (Index i = 0; i < f.rank; ++i) z(i) = y(i) / f.s(i, i);
    result.witness = f.v * z;
    return result;
}

// Exact determinant by fraction-free (Bareiss) elimination.
template <class Scalar>
Scalar determinant(DenseMatrix<Scalar> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar sign = 1, prev = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index swap_row = -1;
            for (Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Scalar(0);
            a.row(k).swap(a.row(swap_row));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace coslice
