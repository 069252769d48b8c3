#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace nakayama {

/// Exact integer type for all linear algebra. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major, 0-based.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 1 || cols < 1)
            throw Error("IntMatrix: dimensions must be positive");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("determinant: matrix is not square");
    const int n = m.rows();
    IntMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

/// Diagonal form of an integer matrix under unimodular row/column operations.
/// `invariant_factors` holds the nonzero diagonal entries d_1 | d_2 | ... (all positive);
/// `free_rank` is the free rank of the cokernel, rows - rank (for square input this is
/// the number of zero diagonal entries). Cok(M) = (+) Z/d_i (+) Z^free_rank.
struct SmithForm {
    std::vector<BigInt> invariant_factors;
    int free_rank = 0;

    int rank() const { return static_cast<int>(invariant_factors.size()); }

    /// Factors > 1 together with free_rank present the cokernel group.
    std::vector<BigInt> torsion() const {
        std::vector<BigInt> t;
        for (const auto& d : invariant_factors)
            if (d > 1) t.push_back(d);
        return t;
    }

    friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

inline SmithForm smith_normal_form(IntMatrix a) {
    const int m = a.rows();
    const int n = a.cols();
    const int steps = m < n ? m : n;

    auto abs_of = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };

    int s = 0;
    for (; s < steps; ++s) {
        // Bring the nonzero entry of least magnitude in the trailing block to (s, s).
        int pr = -1, pc = -1;
        BigInt best;
        for (int i = s; i < m; ++i)
            for (int j = s; j < n; ++j)
                if (a.at(i, j) != 0 && (pr < 0 || abs_of(a.at(i, j)) < best)) {
                    best = abs_of(a.at(i, j));
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break; // trailing block is zero
        a.swap_rows(s, pr);
        a.swap_cols(s, pc);

        for (;;) {
            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                if (a.at(i, s) == 0) continue;
                BigInt q = a.at(i, s) / a.at(s, s);
                for (int j = s; j < n; ++j) a.at(i, j) -= q * a.at(s, j);
                if (a.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                if (a.at(s, j) == 0) continue;
                BigInt q = a.at(s, j) / a.at(s, s);
                for (int i = s; i < m; ++i) a.at(i, j) -= q * a.at(i, s);
                if (a.at(s, j) != 0) clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot appeared; re-select it
                int rr = s, rc = s;
                BigInt rb = abs_of(a.at(s, s));
                for (int i = s; i < m; ++i)
                    for (int j = s; j < n; ++j)
                        if (a.at(i, j) != 0 && abs_of(a.at(i, j)) < rb) {
                            rb = abs_of(a.at(i, j));
                            rr = i;
                            rc = j;
                        }
                a.swap_rows(s, rr);
                a.swap_cols(s, rc);
                continue;
            }
            // pivot row/column clean; enforce d_s | every trailing entry
            bool divides = true;
            for (int i = s + 1; i < m && divides; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (a.at(i, j) % a.at(s, s) != 0) {
                        for (int jj = s; jj < n; ++jj) a.at(s, jj) += a.at(i, jj);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a.at(s, s) < 0)
            for (int j = s; j < n; ++j) a.at(s, j) = -a.at(s, j);
    }

    SmithForm out;
    for (int i = 0; i < s; ++i) out.invariant_factors.push_back(a.at(i, i));
    out.free_rank = m - s;
    return out;
}

} // namespace nakayama
