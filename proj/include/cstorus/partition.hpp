#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cstorus/errors.hpp"
#include "cstorus/gauss_sums.hpp"
#include "cstorus/int_linalg.hpp"
#include "cstorus/modular_group.hpp"
#include "cstorus/numeric.hpp"
#include "cstorus/root_systems.hpp"

namespace cstorus {

/// Level bookkeeping: r = k + h is the shifted level that appears in every
/// exponent.
struct LevelData {
    int k;
    int h;
    int r;
    LevelData(int k_, int h_) : k(k_), h(h_), r(k_ + h_) {
        if (k_ < 1) throw std::domain_error("LevelData: level k must be >= 1");
    }
};

enum class Formula { SQM, TRACE_SU2, RT_SU2, SQM_GENERAL, TRACE_WEIGHTS, TRACE_COSETS };

inline const char* to_string(Formula f) {
    switch (f) {
        case Formula::SQM: return "sqm";
        case Formula::TRACE_SU2: return "trace";
        case Formula::RT_SU2: return "rt";
        case Formula::SQM_GENERAL: return "sqm";
        case Formula::TRACE_WEIGHTS: return "weights";
        default: return "cosets";
    }
}

struct PartitionResult {
    Cplx value;
    Formula formula;
    std::string group;
    std::string monodromy;
    int k = 0;
    int r = 0;
    Int term_count;
};

// --------------------------------------------------------------------------
// SU(2), SQM fixed-point sum
// --------------------------------------------------------------------------

/// One w = +-1 branch of the SU(2) SQM sum: the coset phases of
/// exp{2 pi i r (-c l1^2 + b l2^2 + (a-d) l1 l2)/(a+d-2w)} over
/// Lambda/(wU-1)Lambda.
struct Su2SqmBranch {
    int w;
    Int absdet;
    std::vector<Rat> phases;
    Cplx gauss;
};

inline std::vector<Su2SqmBranch> z_sqm_su2_branches(const SL2Element& u, const LevelData& level) {
    if (classify(u) == SL2Class::Parabolic)
        throw ParabolicMonodromy("z_sqm_su2: parabolic monodromy " + u.str());
    const Int a = u.a(), b = u.b(), c = u.c(), d = u.d();
    std::vector<Su2SqmBranch> out;
    for (int w : {+1, -1}) {
        IntMatrix B(2, 2, {w * a - 1, w * b, w * c, w * d - 1});
        const Int den = a + d - 2 * w;
        auto q = [&](const std::vector<Int>& lam) {
            const Int quad = -c * lam[0] * lam[0] + b * lam[1] * lam[1] + (a - d) * lam[0] * lam[1];
            return make_rat(level.r * quad, den);
        };
        auto sum = lattice_gauss_sum_terms(B, q);
        out.push_back({w, abs(det(B)), std::move(sum.phases), sum.value});
    }
    return out;
}

/// The SU(2) fixed-point sum, h = 2, with the framing factor i^mu set to 1.
inline PartitionResult z_sqm_su2(const SL2Element& u, int k) {
    const LevelData level(k, 2);
    const auto branches = z_sqm_su2_branches(u, level);
    Cplx z = 0;
    Int terms = 0;
    for (const auto& br : branches) {
        z += static_cast<double>(br.w) / std::sqrt(br.absdet.convert_to<double>()) * br.gauss;
        terms += br.absdet;
    }
    z *= 0.5;
    check_finite(z, "z_sqm_su2");
    return {z, Formula::SQM, "SU(2)", u.str(), level.k, level.r, terms};
}

// --------------------------------------------------------------------------
// SU(2), Gauss-sum trace formula
// --------------------------------------------------------------------------

/// Inner double sum of the SU(2) trace formula for one +- branch, as exact phases:
/// beta mod c, gamma = 1..|d+a+-2|.
inline std::vector<Rat> z_trace_su2_inner_phases(const SL2Element& u, int k, int pm) {
    const LevelData level(k, 2);
    const Int a = u.a(), b = u.b(), c = u.c(), d = u.d();
    const Int den = d + a + 2 * pm;
    std::vector<Rat> phases;
    for (Int beta = 0; beta < abs(c); ++beta)
        for (Int gamma = 1; gamma <= abs(den); ++gamma)
            phases.push_back(frac_mod1(
                make_rat(level.r * (-c * gamma * gamma + (a - d) * gamma * beta + b * beta * beta), den)));
    return phases;
}

/// The extended-range sum of the fundamental-domain counting argument:
/// beta = 1..|c||d+a+-2|, gamma = 1..|d+a+-2|.
inline std::vector<Rat> z_trace_su2_extended_phases(const SL2Element& u, int k, int pm) {
    const LevelData level(k, 2);
    const Int a = u.a(), b = u.b(), c = u.c(), d = u.d();
    const Int den = d + a + 2 * pm;
    std::vector<Rat> phases;
    for (Int beta = 1; beta <= abs(c) * abs(den); ++beta)
        for (Int gamma = 1; gamma <= abs(den); ++gamma)
            phases.push_back(frac_mod1(
                make_rat(level.r * (-c * gamma * gamma + (a - d) * gamma * beta + b * beta * beta), den)));
    return phases;
}

/// SU(2) trace formula with zeta = e^{2 pi i/8} and K(U) = zeta^{-Phi(U)} sign(c)
/// unless K_override is supplied. phi_sign flips the Rademacher convention.
inline PartitionResult z_trace_su2(const SL2Element& u, int k,
                                   std::optional<Cplx> K_override = std::nullopt,
                                   int phi_sign = +1) {
    if (u.c() == 0) throw CUnsupported("z_trace_su2: formula requires c != 0, U = " + u.str());
    if (classify(u) == SL2Class::Parabolic)
        throw ParabolicMonodromy("z_trace_su2: parabolic monodromy " + u.str());
    const LevelData level(k, 2);
    const Int a = u.a(), c = u.c(), d = u.d();

    Cplx K;
    if (K_override) {
        K = *K_override;
    } else {
        Rat kq = Rat(-phi_sign * rademacher_phi(u), 8);
        if (c < 0) kq += Rat(1, 2);  // sign(c) as a half-turn
        K = unit_phase(kq);
    }

    Cplx z = 0;
    Int terms = 0;
    for (int pm : {+1, -1}) {
        const Int den = d + a + 2 * pm;
        const int s = sign_of(c * den);
        KahanSum inner;
        for (const auto& q : z_trace_su2_inner_phases(u, k, pm)) inner.add(PhaseExact(q).value());
        const Cplx coeff = Cplx(0, -1) * K * unit_phase(Rat(s, 8)) * static_cast<double>(pm) /
                           (2.0 * abs(c).convert_to<double>() * std::sqrt(abs(den).convert_to<double>()));
        z += coeff * inner.value();
        terms += abs(c) * abs(den);
    }
    check_finite(z, "z_trace_su2");
    return {z, Formula::TRACE_SU2, "SU(2)", u.str(), level.k, level.r, terms};
}

// --------------------------------------------------------------------------
// SU(2), modular representation trace (independent oracle)
// --------------------------------------------------------------------------

using CMatrix = std::vector<std::vector<Cplx>>;

inline CMatrix cmatrix_mul(const CMatrix& x, const CMatrix& y) {
    const std::size_t n = x.size();
    CMatrix z(n, std::vector<Cplx>(n, Cplx(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            const Cplx xv = x[i][t];
            if (xv == Cplx(0)) continue;
            for (std::size_t j = 0; j < n; ++j) z[i][j] += xv * y[t][j];
        }
    return z;
}

/// Level-k SU(2) modular data on the (r-1)-dimensional space, r = k+2:
/// S_ab = sqrt(2/r) sin(pi a b / r), T_ab = delta_ab e^{2 pi i (a^2/(4r) - 1/8)}.
inline std::pair<CMatrix, CMatrix> rt_modular_data_su2(int k) {
    const LevelData level(k, 2);
    const int r = level.r;
    const int dim = r - 1;
    CMatrix S(dim, std::vector<Cplx>(dim));
    CMatrix T(dim, std::vector<Cplx>(dim, Cplx(0)));
    const double norm = std::sqrt(2.0 / r);
    for (int p = 1; p < r; ++p) {
        for (int q = 1; q < r; ++q)
            S[p - 1][q - 1] = norm * std::sin(std::numbers::pi * p * q / r);
        T[p - 1][p - 1] = unit_phase(Rat(p * p, 4 * r) - Rat(1, 8));
    }
    return {S, T};
}

/// Tr R(U): decompose U into generators, map S and T to the modular data
/// (with NEG = S^2), multiply, and take the trace.
inline PartitionResult rt_trace_su2(const SL2Element& u, int k) {
    const LevelData level(k, 2);
    const int r = level.r;
    const int dim = r - 1;
    const auto [S, T] = rt_modular_data_su2(k);
    const CMatrix S2 = cmatrix_mul(S, S);

    auto t_power = [&](const Int& n) {
        CMatrix m(dim, std::vector<Cplx>(dim, Cplx(0)));
        for (int p = 1; p < r; ++p)
            m[p - 1][p - 1] = unit_phase(Rat(n) * (Rat(p * p, 4 * r) - Rat(1, 8)));
        return m;
    };

    CMatrix acc(dim, std::vector<Cplx>(dim, Cplx(0)));
    for (int i = 0; i < dim; ++i) acc[i][i] = 1;
    const auto word = word_decompose(u);
    for (const auto& tok : word.tokens) {
        switch (tok.kind) {
            case GeneratorWord::Token::Kind::S: acc = cmatrix_mul(acc, S); break;
            case GeneratorWord::Token::Kind::T: acc = cmatrix_mul(acc, t_power(tok.power)); break;
            case GeneratorWord::Token::Kind::Neg: acc = cmatrix_mul(acc, S2); break;
        }
    }
    Cplx tr = 0;
    for (int i = 0; i < dim; ++i) tr += acc[i][i];
    check_finite(tr, "rt_trace_su2");
    return {tr, Formula::RT_SU2, "SU(2)", u.str(), level.k, level.r, Int(dim)};
}

// --------------------------------------------------------------------------
// General classical G, U = T^p S
// --------------------------------------------------------------------------

/// Signature (n_+ - n_-) of the self-adjoint operator B on t, i.e. of the
/// symmetric bilinear form <x, B y>. Exact, via rational congruence
/// diagonalization of gram * B.
inline int operator_signature(const RootSystem& rs, const IntMatrix& B) {
    const int l = rs.rank();
    std::vector<std::vector<Rat>> f(l, std::vector<Rat>(l, Rat(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            Rat s(0);
            for (int t = 0; t < l; ++t) s += Rat(rs.gram().at(i, t)) * Rat(B.at(t, j));
            f[i][j] = s;
        }
    int sig = 0;
    for (int t = 0; t < l; ++t) {
        if (f[t][t] == 0) {
            int pivot = -1;
            for (int i = t + 1; i < l && pivot < 0; ++i)
                if (f[i][i] != 0) pivot = i;
            if (pivot >= 0) {
                std::swap(f[t], f[pivot]);
                for (int i = 0; i < l; ++i) std::swap(f[i][t], f[i][pivot]);
            } else {
                int j = -1;
                for (int i = t + 1; i < l && j < 0; ++i)
                    if (f[t][i] != 0) j = i;
                if (j < 0) continue;  // zero row/column, contributes nothing
                for (int i = 0; i < l; ++i) f[t][i] += f[j][i];
                for (int i = 0; i < l; ++i) f[i][t] += f[i][j];
            }
        }
        sig += sign_of(f[t][t]);
        for (int i = t + 1; i < l; ++i) {
            if (f[i][t] == 0) continue;
            const Rat factor = f[i][t] / f[t][t];
            for (int j = 0; j < l; ++j) f[i][j] -= factor * f[t][j];
            for (int j = 0; j < l; ++j) f[j][i] -= factor * f[j][t];
        }
    }
    return sig;
}

/// One Weyl-element branch of the general fixed-point / coset trace sums:
/// B_w = p - w - w^{-1} on the coroot lattice, its coset Gauss sum with
/// phases exp{-r pi i <B_w^{-1} s, s>}, determinant and signature.
struct GeneralBranch {
    std::size_t w_index;
    int det_w;
    Int det_B;
    int signature;
    std::vector<Rat> phases;
    Cplx gauss;
};

inline std::vector<GeneralBranch> general_branches(const RootSystem& rs, const Int& p,
                                                   const LevelData& level) {
    const int l = rs.rank();
    std::vector<GeneralBranch> out;
    for (std::size_t wi = 0; wi < rs.weyl_elements().size(); ++wi) {
        const auto& w = rs.weyl_elements()[wi];
        const IntMatrix w_inv = unimodular_inverse(w.mat);
        IntMatrix B(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                B.at(i, j) = (i == j ? p : Int(0)) - w.mat.at(i, j) - w_inv.at(i, j);
        const Int dB = det(B);
        if (dB == 0)
            throw DegenerateFixedSet("general partition sum: singular p - w - w^{-1} at Weyl index " +
                                     std::to_string(wi) + ", p = " + p.str());
        const auto b_inv = detail::rational_inverse(B);
        auto q = [&](const std::vector<Int>& sigma) {
            std::vector<Rat> y(l, Rat(0)), s(l);
            for (int i = 0; i < l; ++i) s[i] = Rat(sigma[i]);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j) y[i] += b_inv[i][j] * s[j];
            return Rat(-level.r) * rs.pairing(y, s) / 2;
        };
        auto sum = lattice_gauss_sum_terms(B, q);
        out.push_back({wi, w.det, dB, operator_signature(rs, B), std::move(sum.phases), sum.value});
    }
    return out;
}

inline void require_nonparabolic_p(const Int& p, const char* who) {
    if (abs(p) == 2) throw ParabolicMonodromy(std::string(who) + ": parabolic monodromy, p = " + p.str());
}

/// Fixed-point formula for U = T^p S and a classical group (i^mu = 1):
///   (1/|W|) sum_w det(w)/sqrt|det(p-w-w^{-1})| sum_s exp{-r pi i <(p-w-w^{-1})^{-1} s, s>}.
inline PartitionResult z_sqm_general(const RootSystem& rs, const Int& p, int k) {
    require_nonparabolic_p(p, "z_sqm_general");
    const LevelData level(k, rs.dual_coxeter());
    Cplx z = 0;
    Int terms = 0;
    for (const auto& br : general_branches(rs, p, level)) {
        z += static_cast<double>(br.det_w) / std::sqrt(abs(br.det_B).convert_to<double>()) * br.gauss;
        terms += abs(br.det_B);
    }
    z /= static_cast<double>(rs.weyl_order());
    check_finite(z, "z_sqm_general");
    return {z, Formula::SQM_GENERAL, rs.name(), "T^" + p.str() + " S", level.k, level.r, terms};
}

/// Coset form of the trace: per-w factor det(w) e^{i pi sig(B_w)/4}
/// |det B_w|^{-1/2} times the coset Gauss sum, with the global prefactor
/// exp{-p pi i <rho,rho>/h} i^{|D+|} / |W|.
inline PartitionResult z_trace_general_cosets(const RootSystem& rs, const Int& p, int k) {
    require_nonparabolic_p(p, "z_trace_general_cosets");
    const LevelData level(k, rs.dual_coxeter());
    const Rat rho2 = rs.pairing(rs.rho(), rs.rho());
    Cplx z = 0;
    Int terms = 0;
    for (const auto& br : general_branches(rs, p, level)) {
        const Cplx phase = unit_phase(Rat(br.signature, 8));
        z += static_cast<double>(br.det_w) * phase /
             std::sqrt(abs(br.det_B).convert_to<double>()) * br.gauss;
        terms += abs(br.det_B);
    }
    const Cplx pref = unit_phase(Rat(rs.n_positive_roots(), 4) - Rat(p) * rho2 / (2 * rs.dual_coxeter()));
    z *= pref / static_cast<double>(rs.weyl_order());
    check_finite(z, "z_trace_general_cosets");
    return {z, Formula::TRACE_COSETS, rs.name(), "T^" + p.str() + " S", level.k, level.r, terms};
}

/// g(lambda) = sum_w det(w) exp{pi i <(p-2w) lambda, lambda>/r} for a weight
/// lambda given in coroot coordinates.
inline Cplx g_lambda(const RootSystem& rs, const Int& p, int r, const std::vector<Rat>& lam) {
    if (static_cast<int>(lam.size()) != rs.rank())
        throw std::domain_error("g_lambda: wrong vector length");
    if (!rs.is_weight(lam)) throw std::domain_error("g_lambda: lambda is not a weight");
    if (r < 1) throw std::domain_error("g_lambda: r must be >= 1");
    const Rat lam2 = rs.pairing(lam, lam);
    KahanSum acc;
    for (const auto& w : rs.weyl_elements()) {
        const Rat cross = rs.pairing(rs.apply(w.mat, lam), lam);
        const Rat q = (Rat(p) * lam2 - 2 * cross) / (2 * r);
        acc.add(static_cast<double>(w.det) * unit_phase(q));
    }
    return acc.value();
}

/// The strictly dominant weights lambda with <lambda, alpha_m> < r, in
/// weight-basis coefficients, lexicographic order.
inline std::vector<std::vector<Int>> alcove_weights(const RootSystem& rs, int r) {
    const int l = rs.rank();
    const auto& kac = rs.highest_root_coroot();
    std::vector<Int> suffix(l + 1, Int(0));  // minimal pairing of the tail, all n_j = 1
    for (int i = l - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + kac[i];
    std::vector<std::vector<Int>> out;
    std::vector<Int> n(l);
    std::function<void(int, Int)> rec = [&](int pos, Int used) {
        if (pos == l) {
            out.push_back(n);
            return;
        }
        for (Int v = 1; used + v * kac[pos] + suffix[pos + 1] < r; ++v) {
            n[pos] = v;
            rec(pos + 1, used + v * kac[pos]);
        }
    };
    rec(0, Int(0));
    return out;
}

/// Weight-sum form of the trace:
///   i^{|D+|} (1/([L^W:L^R] r^l))^{1/2} exp{-p pi i <rho,rho>/h} sum_lambda g(lambda)
/// over the alcove weights.
inline PartitionResult z_trace_general_weights(const RootSystem& rs, const Int& p, int k) {
    require_nonparabolic_p(p, "z_trace_general_weights");
    const LevelData level(k, rs.dual_coxeter());
    const Rat rho2 = rs.pairing(rs.rho(), rs.rho());
    KahanSum acc;
    const auto domain = alcove_weights(rs, level.r);
    for (const auto& coeffs : domain) acc.add(g_lambda(rs, p, level.r, rs.weight_from_coefficients(coeffs)));
    const Cplx pref_phase =
        unit_phase(Rat(rs.n_positive_roots(), 4) - Rat(p) * rho2 / (2 * rs.dual_coxeter()));
    double vol = rs.weight_lattice_index().convert_to<double>();
    for (int i = 0; i < rs.rank(); ++i) vol *= level.r;
    const Cplx z = pref_phase / std::sqrt(vol) * acc.value();
    check_finite(z, "z_trace_general_weights");
    return {z,
            Formula::TRACE_WEIGHTS,
            rs.name(),
            "T^" + p.str() + " S",
            level.k,
            level.r,
            Int(domain.size()) * Int(rs.weyl_order())};
}

}  // namespace cstorus
