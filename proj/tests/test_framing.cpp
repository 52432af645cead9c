#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <cstorus/framing.hpp>

using namespace cstorus;

namespace {

const SL2Element kT3S = SL2Element::T_pow(3) * SL2Element::S();
const SL2Element kT5S = SL2Element::T_pow(5) * SL2Element::S();

}  // namespace

TEST_CASE("psi values") {
    CHECK(psi(kT3S) == 0);
    CHECK(psi(kT5S) == 2);
    for (long p : {3L, 4L, 5L, 7L}) CHECK(psi(SL2Element::T_pow(p) * SL2Element::S()) == p - 3);
    for (long p : {-3L, -5L}) CHECK(psi(SL2Element::T_pow(p) * SL2Element::S()) == p + 3);
    CHECK(psi(kT3S.inverse()) == 0);  // [[0,1],[-1,3]]: Phi = -3, sign(c(a+d)) = -1
    // c = 0: the sign term is taken as 0
    CHECK(psi(SL2Element::T_pow(4)) == 4);
}

TEST_CASE("su2 phase check on T^p S") {
    for (int k = 1; k <= 8; ++k) {
        const auto cmp = su2_phase_check(kT3S, k);
        CHECK(cmp.match_up_to_sign);
        CHECK(std::abs(cmp.predicted - Cplx(1, 0)) < 1e-15);  // psi = 0, sign(d+a) = 1
        CHECK(cmp.abs_residual < 1e-12);
    }
    const auto cmp = su2_phase_check(kT5S, 2);
    CHECK(cmp.match_up_to_sign);
    CHECK(std::abs(cmp.predicted - Cplx(0, -1)) < 1e-15);  // zeta^{-2} = -i
}

TEST_CASE("su2 phase check rejects non-hyperbolic input") {
    CHECK_THROWS_AS(su2_phase_check(SL2Element::S(), 3), std::domain_error);
    CHECK_THROWS_AS(su2_phase_check(SL2Element::T(), 3), std::domain_error);
}

TEST_CASE("psi of a conjugate via the cocycle expansion") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> tpow(-4, 4);
    auto rand_el = [&] {
        SL2Element v = SL2Element::identity();
        for (int i = 0; i < 5; ++i)
            v = rng() % 2 ? v * SL2Element::S() : v * SL2Element::T_pow(tpow(rng));
        return v;
    };
    int done = 0;
    while (done < 200) {
        const auto u = rand_el();
        const auto v = rand_el();
        if (classify(u) != SL2Class::Hyperbolic) continue;
        const auto vu = v * u;
        const auto conj = vu * v.inverse();
        if (u.c() == 0 || v.c() == 0 || vu.c() == 0 || conj.c() == 0 || v.inverse().c() == 0)
            continue;
        // Phi(V U V^{-1}) assembled entirely from the cocycle, then the sign term
        const Int phi_vu_expanded = rademacher_phi(v) + rademacher_phi(u) -
                                    3 * sign_of(v.c() * u.c() * vu.c());
        const Int phi_expanded = phi_vu_expanded + rademacher_phi(v.inverse()) -
                                 3 * sign_of(vu.c() * v.inverse().c() * conj.c());
        const Int psi_via_cocycle =
            phi_expanded - 3 * sign_of(conj.c() * (conj.a() + conj.d()));
        CHECK(psi(conj) == psi_via_cocycle);
        ++done;
    }
}

TEST_CASE("general phase prediction for A1") {
    const auto a1 = RootSystem::build(Family::A, 1);
    // i^1 e^{-3 pi i <rho,rho>/h} e^{i pi/4} = i e^{-3 pi i/4} e^{i pi/4} = 1
    CHECK(std::abs(general_phase_prediction(a1, 3) - Cplx(1, 0)) < 1e-15);
    const auto parts = general_phase_prediction_parts(a1, 3);
    CHECK(std::abs(parts.expected - Cplx(1, 0)) < 1e-15);  // psi(T^3 S) = 0
    CHECK(parts.sign_p_pow_npos == 1);

    const auto neg = general_phase_prediction_parts(a1, -3);
    CHECK(neg.sign_p_pow_npos == -1);  // |D+| = 1 odd
    CHECK(std::abs(neg.expected + neg.calc) < 1e-15);

    CHECK_THROWS_AS(general_phase_prediction(a1, 2), std::domain_error);
}

TEST_CASE("framing factor and root-data phase differ by (sign p)^{|D+|}") {
    for (const auto& rs : {RootSystem::build(Family::A, 2), RootSystem::build(Family::A, 3),
                           RootSystem::build(Family::B, 2), RootSystem::build(Family::C, 2),
                           RootSystem::build(Family::D, 4)})
        for (const Int& p : {Int(-5), Int(-3), Int(3), Int(4), Int(7)}) {
            const auto parts = general_phase_prediction_parts(rs, p);  // asserts internally
            const int expected_sign = (p < 0 && rs.n_positive_roots() % 2 == 1) ? -1 : 1;
            CHECK(parts.sign_p_pow_npos == expected_sign);
        }
}

TEST_CASE("general phase check end to end") {
    const auto a1 = RootSystem::build(Family::A, 1);
    const auto a2 = RootSystem::build(Family::A, 2);
    CHECK(general_phase_check(a1, 3, 3).match_up_to_sign);
    CHECK(general_phase_check(a2, 3, 2).match_up_to_sign);
    const auto cmp = general_phase_check(a2, 3, 2);
    if (std::abs(cmp.rhs) > 1e-9) CHECK(std::abs(std::abs(cmp.ratio) - 1.0) < 1e-9);
}

TEST_CASE("phase comparisons handle vanishing values") {
    // S is elliptic so su2_phase_check refuses it; the comparison helper is
    // still exercised through a (T^4 S, k) pair whose sqm value is tiny-free.
    const auto u = SL2Element::T_pow(4) * SL2Element::S();
    for (int k = 1; k <= 6; ++k) {
        const auto cmp = su2_phase_check(u, k);
        CHECK(cmp.match_up_to_sign);
    }
}
