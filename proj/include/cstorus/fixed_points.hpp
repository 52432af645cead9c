#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cstorus/errors.hpp"
#include "cstorus/int_linalg.hpp"
#include "cstorus/modular_group.hpp"
#include "cstorus/numeric.hpp"
#include "cstorus/root_systems.hpp"

namespace cstorus {

/// One flat connection on the mapping torus: the label lam in
/// Lambda/(wU-1)Lambda, the point A_lam on T x T it fixes, its Chern-Simons
/// value mod 1, theta sign, and |det(wU-1)|.
struct FixedPointDatum {
    std::size_t weyl_index = 0;
    int weyl_det = 1;
    std::vector<Int> lam;      // length 2l, (lam_1, lam_2)
    std::vector<Rat> a_point;  // A_lam = (wU-1)^{-1} lam
    Rat cs;                    // in [0,1)
    int eps = 1;               // theta characteristic of lam
    Int absdet;                // |det(wU-1)| on t + t
};

/// Theta characteristic eps(lam_1, lam_2) = (-1)^{<lam_1, lam_2>}; equals +1
/// on the basis vectors h_alpha^{(i)} and is W- and SL(2,Z)-equivariant.
inline int theta_char(const RootSystem& rs, const std::vector<Int>& lam) {
    const int l = rs.rank();
    if (static_cast<int>(lam.size()) != 2 * l)
        throw std::domain_error("theta_char: lambda must have length 2l");
    Int pair(0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) pair += lam[i] * rs.gram().at(i, j) * lam[l + j];
    return pair % 2 == 0 ? 1 : -1;
}

/// The block operator wU on t + t (coroot coordinates), as a 2l x 2l matrix:
/// U mixes the two t factors and w acts on each.
inline IntMatrix weyl_monodromy_block(const RootSystem& rs, const SL2Element& u,
                                      const WeylElement& w) {
    const int l = rs.rank();
    IntMatrix m(2 * l, 2 * l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const Int& wij = w.mat.at(i, j);
            m.at(i, j) = u.a() * wij;
            m.at(i, l + j) = u.b() * wij;
            m.at(l + i, j) = u.c() * wij;
            m.at(l + i, l + j) = u.d() * wij;
        }
    return m;
}

inline IntMatrix fixed_point_operator(const RootSystem& rs, const SL2Element& u,
                                      const WeylElement& w) {
    return weyl_monodromy_block(rs, u, w) - IntMatrix::identity(2 * rs.rank());
}

namespace detail {

inline Rat pairing_block(const RootSystem& rs, const std::vector<Rat>& x,
                         const std::vector<Rat>& y) {
    const int l = rs.rank();
    Rat s(0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const Rat g = Rat(rs.gram().at(i, j));
            s += x[i] * g * y[j];
            s += x[l + i] * g * y[l + j];
        }
    return s;
}

inline void require_nonsingular(const IntMatrix& op, const SL2Element& u, std::size_t w_index) {
    if (det(op) == 0)
        throw DegenerateFixedSet("fixed point set is not finite for U = " + u.str() +
                                 ", Weyl element index " + std::to_string(w_index));
}

}  // namespace detail

/// CS(A_lam) mod 1 for the flat connection labelled by lam:
///   -(1/2) <(wU-1)^{-1} lam, S lam>  (+ 1/2 when eps(lam) = -1),
/// with S(x1, x2) = (-x2, x1) on t + t.
inline Rat cs_invariant(const RootSystem& rs, const SL2Element& u, const WeylElement& w,
                        const std::vector<Int>& lam, std::size_t w_index = 0) {
    const int l = rs.rank();
    const IntMatrix op = fixed_point_operator(rs, u, w);
    detail::require_nonsingular(op, u, w_index);
    std::vector<Rat> rhs(2 * l);
    for (int i = 0; i < 2 * l; ++i) rhs[i] = Rat(lam[i]);
    const auto a_point = solve_rational(op, rhs);
    std::vector<Rat> s_lam(2 * l);
    for (int i = 0; i < l; ++i) {
        s_lam[i] = -Rat(lam[l + i]);
        s_lam[l + i] = Rat(lam[i]);
    }
    Rat q = -detail::pairing_block(rs, a_point, s_lam) / 2;
    if (theta_char(rs, lam) == -1) q += Rat(1, 2);
    return frac_mod1(q);
}

namespace detail {

/// Representatives with vanishing second component, (sigma, 0) for sigma in
/// Lambda^R/(Tr U - w - w^{-1}) Lambda^R. A complete set when |c| = 1; the
/// caller verifies distinctness and falls back to generic SNF representatives.
inline std::vector<std::vector<Int>> sigma_zero_candidates(const IntMatrix& small, int l) {
    std::vector<std::vector<Int>> out;
    for (const auto& sigma : coset_representatives(small)) {
        std::vector<Int> lam(2 * l, Int(0));
        for (int i = 0; i < l; ++i) lam[i] = sigma[i];
        out.push_back(std::move(lam));
    }
    return out;
}

inline bool all_distinct_mod(const IntMatrix& op, const std::vector<std::vector<Int>>& reps) {
    const auto w = cstorus::detail::snf_work(op);
    const std::size_t n = op.rows();
    std::vector<std::string> keys;
    for (const auto& x : reps) {
        const auto ux = w.u.apply(x);
        std::string key;
        for (std::size_t i = 0; i < n; ++i) {
            Int m = ux[i] - floor_div(ux[i], w.d.at(i, i)) * w.d.at(i, i);
            key += m.str() + ",";
        }
        keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace detail

/// All fixed points of wU on T x T: one datum per coset representative of
/// Lambda/(wU-1)Lambda. |det(wU-1)| is cross-checked against
/// |det(Tr U - w - w^{-1})| on t. For |c| = 1 the representatives are the
/// (sigma, 0) form; otherwise the generic SNF box.
inline std::vector<FixedPointDatum> fixed_points(const RootSystem& rs, const SL2Element& u,
                                                 const WeylElement& w, std::size_t w_index = 0) {
    const int l = rs.rank();
    const IntMatrix op = fixed_point_operator(rs, u, w);
    detail::require_nonsingular(op, u, w_index);
    const Int absdet = abs(det(op));

    IntMatrix small(l, l);
    const IntMatrix w_inv = unimodular_inverse(w.mat);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            small.at(i, j) = (i == j ? u.trace() : Int(0)) - w.mat.at(i, j) - w_inv.at(i, j);
    if (abs(det(small)) != absdet)
        throw std::logic_error("fixed_points: |det(wU-1)| != |det(TrU - w - w^{-1})| for U = " +
                               u.str());

    std::vector<std::vector<Int>> reps;
    if (abs(u.c()) == 1 && absdet <= 4096) {
        reps = detail::sigma_zero_candidates(small, l);
        if (!detail::all_distinct_mod(op, reps)) reps.clear();
    }
    if (reps.empty()) reps = coset_representatives(op);

    std::vector<FixedPointDatum> out;
    for (const auto& lam : reps) {
        FixedPointDatum fp;
        fp.weyl_index = w_index;
        fp.weyl_det = w.det;
        fp.lam = lam;
        std::vector<Rat> rhs(2 * l);
        for (int i = 0; i < 2 * l; ++i) rhs[i] = Rat(lam[i]);
        fp.a_point = solve_rational(op, rhs);
        fp.cs = cs_invariant(rs, u, w, lam, w_index);
        fp.eps = theta_char(rs, lam);
        fp.absdet = absdet;
        out.push_back(std::move(fp));
    }
    return out;
}

}  // namespace cstorus
