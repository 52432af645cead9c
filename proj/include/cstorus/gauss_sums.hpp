#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cstorus/errors.hpp"
#include "cstorus/int_linalg.hpp"
#include "cstorus/numeric.hpp"

namespace cstorus {

/// Phase function for a lattice Gauss sum: maps an integer vector to the
/// exact rational q with term e^{2 pi i q}. Must be constant on cosets mod B.
using PhaseFunction = std::function<Rat(const std::vector<Int>&)>;

struct LatticeGaussSum {
    Cplx value;
    std::vector<Rat> phases;  // one reduced phase per coset representative, in order
};

namespace detail {

/// Well-posedness probe: q must satisfy q(x + B m) = q(x) mod 1 on a sample
/// of representative/shift pairs. A failure means the quadratic form does not
/// descend to the quotient (wrong form or wrong level).
inline void check_coset_invariance(const IntMatrix& B, const PhaseFunction& q,
                                   const std::vector<std::vector<Int>>& reps) {
    const std::size_t n = B.rows();
    std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed seed, deterministic probe
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    const std::size_t sample = reps.size() < 4 ? reps.size() : 4;
    const std::size_t stride = reps.size() / sample > 0 ? reps.size() / sample : 1;
    for (std::size_t s = 0; s < sample; ++s) {
        const auto& x = reps[(s * stride) % reps.size()];
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<Int> m(n);
            for (auto& mi : m) mi = Int(next() % 7) - 3;
            std::vector<Int> shifted = x;
            const auto bm = B.apply(m);
            for (std::size_t i = 0; i < n; ++i) shifted[i] += bm[i];
            if (frac_mod1(q(shifted) - q(x)) != 0)
                throw IllPosedSum("lattice_gauss_sum: phase not constant on cosets of " + B.str());
        }
    }
}

}  // namespace detail

/// Sum of e^{2 pi i q(x)} over the coset representatives of Z^n / B Z^n,
/// each phase reduced mod 1 as an exact rational before the single
/// exponentiation, accumulated in representative order.
inline LatticeGaussSum lattice_gauss_sum_terms(const IntMatrix& B, const PhaseFunction& q) {
    const auto reps = coset_representatives(B);  // throws SingularLattice if det = 0
    detail::check_coset_invariance(B, q, reps);
    LatticeGaussSum out;
    out.phases.reserve(reps.size());
    KahanSum acc;
    for (const auto& x : reps) {
        const Rat phase = frac_mod1(q(x));
        out.phases.push_back(phase);
        acc.add(PhaseExact(phase).value());
    }
    out.value = acc.value();
    check_finite(out.value, "lattice_gauss_sum");
    return out;
}

inline Cplx lattice_gauss_sum(const IntMatrix& B, const PhaseFunction& q) {
    return lattice_gauss_sum_terms(B, q).value;
}

/// Landsberg-Schaar reciprocity data: both sides of
///   sum_{n=0}^{c-1} e^{pi i a n^2 / c}
///     = sqrt(c/a) e^{pi i / 4} sum_{n=0}^{a-1} e^{-pi i c n^2 / a}
/// for a, c > 0 with ac even. The caller asserts |lhs - rhs| < tol.
inline std::pair<Cplx, Cplx> reciprocity_1d(long a, long c) {
    if (a <= 0 || c <= 0) throw std::domain_error("reciprocity_1d: a, c must be positive");
    if ((a * c) % 2 != 0) throw std::domain_error("reciprocity_1d: a*c must be even");
    KahanSum lhs;
    for (long n = 0; n < c; ++n) lhs.add(unit_phase(Rat(Int(a) * n * n, Int(2) * c)));
    KahanSum rhs;
    for (long n = 0; n < a; ++n) rhs.add(unit_phase(Rat(-Int(c) * n * n, Int(2) * a)));
    const Cplx factor = std::sqrt(static_cast<double>(c) / a) * unit_phase(Rat(1, 8));
    return {lhs.value(), factor * rhs.value()};
}

}  // namespace cstorus
