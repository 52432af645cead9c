#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstorus/int_linalg.hpp"
#include "cstorus/numeric.hpp"

namespace cstorus {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        default: return 'D';
    }
}

/// One Weyl group element as an integer matrix on the coroot basis.
struct WeylElement {
    IntMatrix mat;
    int det;  // +1 or -1
};

/// Classical root-system data in the coroot basis: Z^l is the coroot lattice,
/// the gram matrix carries the basic inner product (long roots of length^2 2),
/// roots live in t as rational coordinate vectors.
class RootSystem {
public:
    static RootSystem build(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

    const IntMatrix& cartan() const { return cartan_; }
    const IntMatrix& gram() const { return gram_; }
    int dual_coxeter() const { return h_; }
    int n_positive_roots() const { return n_pos_; }
    int dim_g() const { return rank_ + 2 * n_pos_; }

    /// Positive roots as vectors in t (coroot coordinates, possibly half-integral).
    const std::vector<std::vector<Rat>>& positive_roots() const { return positive_roots_; }
    /// Coroots h_alpha of the positive roots (integer coroot coordinates).
    const std::vector<std::vector<Int>>& positive_coroots() const { return positive_coroots_; }

    const std::vector<Rat>& rho() const { return rho_; }
    const std::vector<Rat>& highest_root() const { return highest_root_; }
    /// Coordinates of the highest root's coroot = the dual Kac labels.
    const std::vector<Int>& highest_root_coroot() const { return highest_root_coroot_; }

    /// Columns are the fundamental weights in coroot coordinates (= gram^{-1}).
    const std::vector<std::vector<Rat>>& weight_to_coroot() const { return weight_to_coroot_; }

    const std::vector<WeylElement>& weyl_elements() const { return weyl_; }
    std::size_t weyl_order() const { return weyl_.size(); }

    /// Basic inner product x^T gram y, exact.
    Rat pairing(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        Rat s(0);
        for (int i = 0; i < rank_; ++i) {
            Rat gx(0);
            for (int j = 0; j < rank_; ++j) gx += Rat(gram_.at(i, j)) * y[j];
            s += x[i] * gx;
        }
        return s;
    }

    /// [Lambda^W : Lambda^R], the index of the coroot lattice in its dual
    /// weight lattice; equals |det gram|.
    Int weight_lattice_index() const { return abs(det(gram_)); }

    /// Coroot coordinates of the weight with weight-basis coefficients n.
    std::vector<Rat> weight_from_coefficients(const std::vector<Int>& n) const {
        std::vector<Rat> x(rank_, Rat(0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) x[i] += weight_to_coroot_[i][j] * Rat(n[j]);
        return x;
    }

    /// True iff x (coroot coordinates) lies in the weight lattice, i.e. gram*x
    /// is integral.
    bool is_weight(const std::vector<Rat>& x) const {
        for (int i = 0; i < rank_; ++i) {
            Rat s(0);
            for (int j = 0; j < rank_; ++j) s += Rat(gram_.at(i, j)) * x[j];
            if (!is_integer(s)) return false;
        }
        return true;
    }

    std::vector<Rat> apply(const IntMatrix& m, const std::vector<Rat>& x) const {
        std::vector<Rat> y(rank_, Rat(0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) y[i] += Rat(m.at(i, j)) * x[j];
        return y;
    }

private:
    RootSystem() = default;

    Family family_{};
    int rank_ = 0;
    IntMatrix cartan_;  // C_ij = <alpha_i, h_j>
    IntMatrix gram_;    // <h_i, h_j>
    std::vector<Rat> root_half_lengths_;  // d_i = |alpha_i|^2 / 2 for simple roots
    std::vector<std::vector<Rat>> positive_roots_;
    std::vector<std::vector<Int>> positive_coroots_;
    std::vector<Rat> rho_;
    int h_ = 0;
    int n_pos_ = 0;
    std::vector<Rat> highest_root_;
    std::vector<Int> highest_root_coroot_;
    std::vector<std::vector<Rat>> weight_to_coroot_;
    std::vector<WeylElement> weyl_;
};

namespace detail {

inline std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw std::domain_error("rational_inverse: singular matrix");
        std::swap(a[col], a[p]);
        const Rat pivot = a[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

inline std::string matrix_key(const IntMatrix& m) { return m.str(); }

}  // namespace detail

inline RootSystem RootSystem::build(Family family, int rank) {
    const int l = rank;
    auto reject = [&](const char* why) {
        throw std::domain_error("RootSystem: unsupported " + std::string(1, family_letter(family)) +
                                std::to_string(rank) + " (" + why + ")");
    };
    switch (family) {
        case Family::A:
            if (l < 1) reject("rank must be >= 1");
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            if (l < 2) reject("rank must be >= 2");
            break;
    }
    std::size_t w_expected = 1;
    switch (family) {
        case Family::A:
            for (int i = 2; i <= l + 1; ++i) w_expected *= i;
            break;
        case Family::B:
        case Family::C:
            for (int i = 2; i <= l; ++i) w_expected *= i;
            w_expected <<= l;
            break;
        case Family::D:
            for (int i = 2; i <= l; ++i) w_expected *= i;
            w_expected <<= (l - 1);
            break;
    }
    if (l > 8 || w_expected > 100000) reject("rank too large for desk-scale Weyl enumeration");

    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = l;

    // Cartan matrix C_ij = <alpha_i, h_j> and simple root half-lengths d_i.
    IntMatrix C(l, l);
    std::vector<Rat> d(l, Rat(1));
    for (int i = 0; i < l; ++i) C.at(i, i) = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            C.at(i, i + 1) = -1;
            C.at(i + 1, i) = -1;
        }
    };
    switch (family) {
        case Family::A:
            chain(l);
            break;
        case Family::B:
            chain(l);
            C.at(l - 2, l - 1) = -2;
            d[l - 1] = Rat(1, 2);
            break;
        case Family::C:
            chain(l);
            C.at(l - 1, l - 2) = -2;
            for (int i = 0; i + 1 < l; ++i) d[i] = Rat(1, 2);
            break;
        case Family::D:
            chain(l - 1);
            if (l >= 3) {
                C.at(l - 3, l - 1) = -1;
                C.at(l - 1, l - 3) = -1;
            }
            break;
    }
    rs.cartan_ = C;
    rs.root_half_lengths_ = d;

    IntMatrix G(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const Rat g = Rat(C.at(i, j)) / d[i];
            if (!is_integer(g)) throw std::logic_error("RootSystem: non-integer gram entry");
            G.at(i, j) = numerator(g);
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (G.at(i, j) != G.at(j, i)) throw std::logic_error("RootSystem: gram not symmetric");
    for (int i = 0; i < l; ++i)
        if (G.at(i, i) % 2 != 0) throw std::logic_error("RootSystem: odd gram diagonal");
    rs.gram_ = G;

    // Simple reflections on coroot coordinates: s_j(h_i) = h_i - C_ji h_j.
    std::vector<IntMatrix> gens;
    for (int j = 0; j < l; ++j) {
        IntMatrix s = IntMatrix::identity(l);
        for (int i = 0; i < l; ++i) s.at(j, i) = (i == j ? Int(1) : Int(0)) - C.at(j, i);
        gens.push_back(s);
    }

    // Weyl group: breadth-first closure, deterministic order.
    std::map<std::string, std::size_t> seen;
    std::vector<WeylElement> elems;
    elems.push_back({IntMatrix::identity(l), 1});
    seen[detail::matrix_key(elems[0].mat)] = 0;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        const WeylElement cur = elems[head];
        for (const auto& s : gens) {
            IntMatrix next = s * cur.mat;
            auto key = detail::matrix_key(next);
            if (seen.emplace(key, elems.size()).second)
                elems.push_back({std::move(next), -cur.det});
        }
    }
    rs.weyl_ = std::move(elems);

    // Roots: closure of the simple roots (as vectors in t) under the simple
    // reflections; a root is positive iff all coroot coordinates are >= 0.
    std::vector<std::vector<Rat>> roots;
    {
        std::map<std::string, bool> seen_roots;
        auto key_of = [&](const std::vector<Rat>& v) {
            std::string k;
            for (const auto& x : v) k += rat_to_string(x) + ",";
            return k;
        };
        for (int i = 0; i < l; ++i) {
            std::vector<Rat> alpha(l, Rat(0));
            alpha[i] = d[i];  // alpha_i = d_i h_i in t
            if (seen_roots.emplace(key_of(alpha), true).second) roots.push_back(alpha);
        }
        for (std::size_t head = 0; head < roots.size(); ++head) {
            const auto cur = roots[head];
            for (const auto& s : gens) {
                auto next = rs.apply(s, cur);
                if (seen_roots.emplace(key_of(next), true).second) roots.push_back(next);
            }
        }
    }
    for (const auto& root : roots) {
        bool nonneg = true;
        for (const auto& x : root) nonneg = nonneg && x >= 0;
        if (!nonneg) continue;
        rs.positive_roots_.push_back(root);
        const Rat len2 = rs.pairing(root, root);
        std::vector<Int> coroot(l);
        for (int i = 0; i < l; ++i) {
            const Rat c = root[i] * 2 / len2;
            if (!is_integer(c)) throw std::logic_error("RootSystem: non-integral coroot");
            coroot[i] = numerator(c);
        }
        rs.positive_coroots_.push_back(std::move(coroot));
    }
    rs.n_pos_ = static_cast<int>(rs.positive_roots_.size());
    {
        int expected = 0;
        switch (family) {
            case Family::A: expected = l * (l + 1) / 2; break;
            case Family::B:
            case Family::C: expected = l * l; break;
            case Family::D: expected = l * (l - 1); break;
        }
        if (rs.n_pos_ != expected) throw std::logic_error("RootSystem: wrong positive root count");
    }

    // rho two ways: half-sum of positive roots, and gram^{-1} * (1,...,1).
    rs.weight_to_coroot_ = detail::rational_inverse(G);
    std::vector<Rat> half_sum(l, Rat(0));
    for (const auto& root : rs.positive_roots_)
        for (int i = 0; i < l; ++i) half_sum[i] += root[i] / 2;
    std::vector<Rat> fw_sum(l, Rat(0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) fw_sum[i] += rs.weight_to_coroot_[i][j];
    if (half_sum != fw_sum) throw std::logic_error("RootSystem: rho mismatch between constructions");
    rs.rho_ = half_sum;

    // Highest root: maximal height (height = sum of simple-root coefficients),
    // ties broken lexicographically for the reducible D2 case.
    {
        std::size_t best = 0;
        Rat best_height(-1);
        for (std::size_t r = 0; r < rs.positive_roots_.size(); ++r) {
            Rat height(0);
            for (int i = 0; i < l; ++i) height += rs.positive_roots_[r][i] / d[i];
            if (height > best_height ||
                (height == best_height && rs.positive_roots_[r] > rs.positive_roots_[best])) {
                best_height = height;
                best = r;
            }
        }
        rs.highest_root_ = rs.positive_roots_[best];
        rs.highest_root_coroot_ = rs.positive_coroots_[best];
        if (rs.pairing(rs.highest_root_, rs.highest_root_) != 2)
            throw std::logic_error("RootSystem: highest root is not long");
    }

    // Dual Coxeter number, cross-checked against 1 + <rho, theta>.
    switch (family) {
        case Family::A: rs.h_ = l + 1; break;
        case Family::B: rs.h_ = 2 * l - 1; break;
        case Family::C: rs.h_ = l + 1; break;
        case Family::D: rs.h_ = 2 * l - 2; break;
    }
    if (rs.pairing(rs.rho_, rs.highest_root_) != rs.h_ - 1)
        throw std::logic_error("RootSystem: <rho, theta> != h - 1");

    if (rs.weyl_.size() != w_expected) throw std::logic_error("RootSystem: wrong Weyl order");

    return rs;
}

}  // namespace cstorus
