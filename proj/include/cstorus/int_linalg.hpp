#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cstorus/errors.hpp"
#include "cstorus/numeric.hpp"

namespace cstorus {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw std::domain_error("IntMatrix: entry count mismatch");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::domain_error("IntMatrix: shape mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        std::vector<Int> y(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ";" : "";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + at(i, j).str();
        }
        return s + "]";
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.str(); }

/// Fraction-free determinant (Bareiss).
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a.at(t, t) == 0) {
            std::size_t p = t + 1;
            while (p < n && a.at(p, t) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j)) / prev;
        prev = a.at(t, t);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

/// Smith normal form u * M * v = d, with u, v unimodular and the diagonal
/// divisibility chain d_1 | d_2 | ....
struct SNFDecomposition {
    IntMatrix u, d, v;
};

namespace detail {

struct SNFWork {
    IntMatrix d, u, v, u_inv, v_inv;
};

inline SNFWork snf_work(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("smith_normal_form: matrix not square");
    const std::size_t n = m.rows();
    SNFWork w{m, IntMatrix::identity(n), IntMatrix::identity(n), IntMatrix::identity(n),
              IntMatrix::identity(n)};
    auto& d = w.d;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(d.at(r1, j), d.at(r2, j));
            std::swap(w.u.at(r1, j), w.u.at(r2, j));
            std::swap(w.u_inv.at(j, r1), w.u_inv.at(j, r2));
        }
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(d.at(i, c1), d.at(i, c2));
            std::swap(w.v.at(i, c1), w.v.at(i, c2));
            std::swap(w.v_inv.at(c1, i), w.v_inv.at(c2, i));
        }
    };
    // row r1 += q * row r2 on d (and u); u_inv gets the inverse column op.
    auto add_row = [&](std::size_t r1, std::size_t r2, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) {
            d.at(r1, j) += q * d.at(r2, j);
            w.u.at(r1, j) += q * w.u.at(r2, j);
            w.u_inv.at(j, r2) -= q * w.u_inv.at(j, r1);
        }
    };
    auto add_col = [&](std::size_t c1, std::size_t c2, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < n; ++i) {
            d.at(i, c1) += q * d.at(i, c2);
            w.v.at(i, c1) += q * w.v.at(i, c2);
            w.v_inv.at(c2, i) -= q * w.v_inv.at(c1, i);
        }
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) {
            d.at(r, j) = -d.at(r, j);
            w.u.at(r, j) = -w.u.at(r, j);
            w.u_inv.at(j, r) = -w.u_inv.at(j, r);
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix becomes the pivot
            bool found = false;
            std::size_t pi = t, pj = t;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (!found || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                t = n;  // all remaining entries are zero
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (d.at(i, t) == 0) continue;
                add_row(i, t, -(d.at(i, t) / d.at(t, t)));
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                add_col(j, t, -(d.at(t, j) / d.at(t, t)));
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // force the pivot to divide every later entry (divisibility chain)
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (t == n) break;
    }
    for (std::size_t t = 0; t < n; ++t)
        if (d.at(t, t) < 0) negate_row(t);
    return w;
}

}  // namespace detail

inline SNFDecomposition smith_normal_form(const IntMatrix& m) {
    auto w = detail::snf_work(m);
    return {std::move(w.u), std::move(w.d), std::move(w.v)};
}

/// Inverse of a matrix with det = +-1; exact, integral.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    auto w = detail::snf_work(m);
    // m = u_inv * d * v_inv with d = +-identity entries only if m unimodular
    const std::size_t n = m.rows();
    for (std::size_t t = 0; t < n; ++t)
        if (w.d.at(t, t) != 1)
            throw std::domain_error("unimodular_inverse: matrix is not unimodular");
    return w.v * w.u;  // (u_inv d v_inv)^{-1} = v d^{-1} u
}

/// Exact rational solve B x = rhs by Gaussian elimination.
/// Throws SingularLattice when det B = 0.
inline std::vector<Rat> solve_rational(const IntMatrix& B, const std::vector<Rat>& rhs) {
    if (B.rows() != B.cols() || rhs.size() != B.rows())
        throw std::domain_error("solve_rational: shape mismatch");
    const std::size_t n = B.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(B.at(i, j));
        a[i][n] = rhs[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw SingularLattice("solve_rational: singular matrix " + B.str());
        std::swap(a[col], a[p]);
        const Rat pivot = a[col][col];
        for (std::size_t j = col; j <= n; ++j) a[col][j] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

/// True iff v lies in the sublattice B * Z^n.
inline bool in_lattice(const IntMatrix& B, const std::vector<Int>& v) {
    std::vector<Rat> rhs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = Rat(v[i]);
    const auto x = solve_rational(B, rhs);
    for (const auto& xi : x)
        if (!is_integer(xi)) return false;
    return true;
}

namespace detail {

/// Walk the box [0,d_1) x ... x [0,d_n) lexicographically (last coordinate
/// fastest), mapping each point through `map` (or copying it when null).
inline std::vector<std::vector<Int>> box_points(const std::vector<Int>& diag,
                                                const IntMatrix* map) {
    const std::size_t n = diag.size();
    Int count(1);
    for (const auto& d : diag) count *= d;
    std::vector<std::vector<Int>> reps;
    reps.reserve(count.convert_to<std::size_t>());
    std::vector<Int> x(n, Int(0));
    for (;;) {
        reps.push_back(map ? map->apply(x) : x);
        std::size_t j = n;
        for (;;) {
            if (j == 0) return reps;
            --j;
            if (++x[j] < diag[j]) break;
            x[j] = 0;
        }
    }
}

}  // namespace detail

/// The |det B| coset representatives of Z^n / B Z^n, in deterministic order.
/// Diagonal B yields the plain box [0,|d_1|) x ... x [0,|d_n|); otherwise the
/// SNF box is mapped through u^{-1} (B = u^{-1} d v^{-1}, so Z^n/BZ^n is
/// u^{-1} of Z^n/dZ^n).
inline std::vector<std::vector<Int>> coset_representatives(const IntMatrix& B) {
    const std::size_t n = B.rows();
    bool diagonal = true;
    for (std::size_t i = 0; i < n && diagonal; ++i)
        for (std::size_t j = 0; j < n && diagonal; ++j)
            if (i != j && B.at(i, j) != 0) diagonal = false;
    if (diagonal) {
        std::vector<Int> diag(n);
        for (std::size_t t = 0; t < n; ++t) {
            diag[t] = abs(B.at(t, t));
            if (diag[t] == 0)
                throw SingularLattice("coset_representatives: singular lattice map " + B.str());
        }
        return detail::box_points(diag, nullptr);
    }
    auto w = detail::snf_work(B);
    std::vector<Int> diag(n);
    for (std::size_t t = 0; t < n; ++t) {
        diag[t] = w.d.at(t, t);
        if (diag[t] == 0)
            throw SingularLattice("coset_representatives: singular lattice map " + B.str());
    }
    return detail::box_points(diag, &w.u_inv);
}

}  // namespace cstorus
