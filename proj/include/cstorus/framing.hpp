#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "cstorus/modular_group.hpp"
#include "cstorus/numeric.hpp"
#include "cstorus/partition.hpp"
#include "cstorus/root_systems.hpp"

namespace cstorus {

/// Framing correction psi(U) = Phi(U) - 3 sign(c (a+d)); sign(0) = 0 covers
/// the c = 0 case, where no framing comparison is made.
inline Int psi(const SL2Element& u, int phi_sign = +1) {
    return phi_sign * rademacher_phi(u) - 3 * sign_of(u.c() * (u.a() + u.d()));
}

/// Outcome of a phase comparison lhs ~ predicted * rhs, sign-insensitive
/// (the overall sign of the SQM sum is ambiguous).
struct PhaseComparison {
    Cplx lhs = 0;
    Cplx rhs = 0;
    Cplx ratio = 0;         // lhs / rhs when |rhs| > 0
    Cplx predicted = 0;
    bool match_up_to_sign = false;
    int matched_sign = 0;   // the s in {+1,-1} with |lhs - s predicted rhs| minimal
    double abs_residual = 0;
};

namespace detail {

inline PhaseComparison compare_phases(Cplx lhs, Cplx rhs, Cplx predicted, double tol) {
    PhaseComparison out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.predicted = predicted;
    const double res_plus = std::abs(lhs - predicted * rhs);
    const double res_minus = std::abs(lhs + predicted * rhs);
    out.matched_sign = res_plus <= res_minus ? +1 : -1;
    out.abs_residual = std::min(res_plus, res_minus);
    if (std::abs(rhs) > tol) {
        out.ratio = lhs / rhs;
        out.match_up_to_sign = std::min(std::abs(out.ratio - predicted),
                                        std::abs(out.ratio + predicted)) < tol;
    } else {
        // both sides vanish together or not at all
        out.ratio = 0;
        out.match_up_to_sign = std::abs(lhs) < tol;
    }
    return out;
}

}  // namespace detail

/// SU(2) framing relation Tr R(U) = zeta^{-psi(U)} sign(d+a) Z_SQM(U), checked up to one
/// overall sign. Requires hyperbolic U with c != 0.
inline PhaseComparison su2_phase_check(const SL2Element& u, int k, double tol = 1e-9,
                                       int phi_sign = +1) {
    if (classify(u) != SL2Class::Hyperbolic)
        throw std::domain_error("su2_phase_check: U must be hyperbolic, got " + u.str());
    if (u.c() == 0) throw std::domain_error("su2_phase_check: c must be nonzero");
    const Cplx lhs = rt_trace_su2(u, k).value;
    const Cplx rhs = z_sqm_su2(u, k).value;
    const Cplx predicted =
        unit_phase(Rat(-psi(u, phi_sign), 8)) * static_cast<double>(sign_of(u.a() + u.d()));
    return detail::compare_phases(lhs, rhs, predicted, tol);
}

struct GeneralPhasePrediction {
    Cplx calc;      // i^{|D+|} exp{-p pi i <rho,rho>/h} exp{i pi l sign(p)/4}
    Cplx expected;  // exp{-2 pi i psi(U) dim G / 24}, psi = p - 3 sign p
    int sign_p_pow_npos;
};

/// Both forms of the predicted framing phase for U = T^p S. The two must
/// differ exactly by (sign p)^{|D+|}; a violation means the root data broke
/// the strange formula and is reported loudly.
inline GeneralPhasePrediction general_phase_prediction_parts(const RootSystem& rs, const Int& p) {
    if (abs(p) <= 2) throw std::domain_error("general_phase_prediction: |p| must be > 2");
    const Rat rho2 = rs.pairing(rs.rho(), rs.rho());
    const int sp = sign_of(p);
    GeneralPhasePrediction out;
    out.calc = unit_phase(Rat(rs.n_positive_roots(), 4) - Rat(p) * rho2 / (2 * rs.dual_coxeter()) +
                          Rat(rs.rank() * sp, 8));
    const Int psi_val = p - 3 * sp;
    out.expected = unit_phase(Rat(-psi_val * rs.dim_g(), 24));
    out.sign_p_pow_npos = (sp < 0 && rs.n_positive_roots() % 2 == 1) ? -1 : 1;
    const double dev =
        std::abs(out.expected - static_cast<double>(out.sign_p_pow_npos) * out.calc);
    if (dev > 1e-12)
        throw std::logic_error("general_phase_prediction: framing factor != (sign p)^{|D+|} * root-data phase for " +
                               rs.name() + ", p = " + p.str());
    return out;
}

inline Cplx general_phase_prediction(const RootSystem& rs, const Int& p) {
    return general_phase_prediction_parts(rs, p).calc;
}

/// Trace-vs-SQM comparison for U = T^p S: lhs the weight-sum trace, rhs the
/// fixed-point sum, predicted the root-data framing phase.
inline PhaseComparison general_phase_check(const RootSystem& rs, const Int& p, int k,
                                           double tol = 1e-9) {
    if (abs(p) <= 2) throw std::domain_error("general_phase_check: |p| must be > 2");
    const Cplx lhs = z_trace_general_weights(rs, p, k).value;
    const Cplx rhs = z_sqm_general(rs, p, k).value;
    return detail::compare_phases(lhs, rhs, general_phase_prediction(rs, p), tol);
}

}  // namespace cstorus
