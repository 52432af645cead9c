#include <catch2/catch_amalgamated.hpp>

#include <cstorus/root_systems.hpp>

using namespace cstorus;

namespace {

const std::vector<std::pair<Family, int>> kSupported = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
    {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
    {Family::D, 3}, {Family::D, 4}};

std::size_t expected_weyl_order(Family f, int l) {
    std::size_t fact = 1;
    for (int i = 2; i <= l; ++i) fact *= i;
    switch (f) {
        case Family::A: return fact * (l + 1);
        case Family::B:
        case Family::C: return fact << l;
        default: return fact << (l - 1);
    }
}

}  // namespace

TEST_CASE("reference data for low ranks") {
    const auto a1 = RootSystem::build(Family::A, 1);
    CHECK(a1.gram() == IntMatrix(1, 1, {2}));
    CHECK(a1.rho() == std::vector<Rat>{Rat(1, 2)});
    CHECK(a1.dual_coxeter() == 2);
    CHECK(a1.n_positive_roots() == 1);
    CHECK(a1.pairing(a1.rho(), a1.rho()) == Rat(1, 2));
    CHECK(a1.weyl_order() == 2);
    CHECK(a1.weyl_elements()[0].det == 1);
    CHECK(a1.weyl_elements()[1].det == -1);

    const auto a2 = RootSystem::build(Family::A, 2);
    CHECK(a2.dual_coxeter() == 3);
    CHECK(a2.n_positive_roots() == 3);
    CHECK(a2.weyl_order() == 6);

    const auto c2 = RootSystem::build(Family::C, 2);
    CHECK(c2.dual_coxeter() == 3);
    CHECK(c2.n_positive_roots() == 4);
    CHECK(c2.weyl_order() == 8);

    const auto b2 = RootSystem::build(Family::B, 2);
    CHECK(b2.dual_coxeter() == 3);
    CHECK(b2.gram() == IntMatrix(2, 2, {2, -2, -2, 4}));
}

TEST_CASE("unsupported families are rejected") {
    CHECK_THROWS_AS(RootSystem::build(Family::A, 0), std::domain_error);
    CHECK_THROWS_AS(RootSystem::build(Family::B, 1), std::domain_error);
    CHECK_THROWS_AS(RootSystem::build(Family::D, 1), std::domain_error);
    CHECK_THROWS_AS(RootSystem::build(Family::B, 12), std::domain_error);
}

TEST_CASE("weyl group orders match the closed forms") {
    for (const auto& [f, l] : kSupported)
        CHECK(RootSystem::build(f, l).weyl_order() == expected_weyl_order(f, l));
}

TEST_CASE("weyl elements preserve the gram matrix and close under product") {
    for (const auto& [f, l] : kSupported) {
        const auto rs = RootSystem::build(f, l);
        const auto& g = rs.gram();
        std::map<std::string, int> index;
        for (const auto& w : rs.weyl_elements()) {
            CHECK(w.mat.transpose() * g * w.mat == g);
            CHECK(det(w.mat) == w.det);
            index[w.mat.str()] = 1;
        }
        const auto& ws = rs.weyl_elements();
        for (std::size_t i = 0; i < ws.size(); i += 7)
            for (std::size_t j = 0; j < ws.size(); j += 5)
                CHECK(index.count((ws[i].mat * ws[j].mat).str()) == 1);
    }
}

TEST_CASE("gram diagonal is even and pairing data is consistent") {
    for (const auto& [f, l] : kSupported) {
        const auto rs = RootSystem::build(f, l);
        for (int i = 0; i < l; ++i) CHECK(rs.gram().at(i, i) % 2 == 0);
        CHECK(rs.n_positive_roots() == (rs.dim_g() - l) / 2);
        CHECK(rs.pairing(rs.rho(), rs.highest_root()) == rs.dual_coxeter() - 1);
        // strange formula <rho,rho> = h dim G / 12, used by the framing phases
        CHECK(rs.pairing(rs.rho(), rs.rho()) == Rat(rs.dual_coxeter() * rs.dim_g(), 12));
        // highest root is long
        CHECK(rs.pairing(rs.highest_root(), rs.highest_root()) == 2);
    }
}

TEST_CASE("A1 pairing examples") {
    const auto a1 = RootSystem::build(Family::A, 1);
    const std::vector<Rat> h{Rat(1)};
    CHECK(a1.pairing(h, h) == 2);
    CHECK(a1.pairing(a1.rho(), a1.highest_root()) == 1);
}

TEST_CASE("weight lattice index") {
    CHECK(RootSystem::build(Family::A, 1).weight_lattice_index() == 2);
    CHECK(RootSystem::build(Family::A, 2).weight_lattice_index() == 3);
    CHECK(RootSystem::build(Family::D, 4).weight_lattice_index() == 4);
    // non-simply-laced: the index is det(gram), not det(cartan)
    CHECK(RootSystem::build(Family::B, 2).weight_lattice_index() == 4);
    CHECK(RootSystem::build(Family::C, 2).weight_lattice_index() == 4);
}

TEST_CASE("fundamental weights are dual to the coroots") {
    for (const auto& [f, l] : kSupported) {
        const auto rs = RootSystem::build(f, l);
        for (int i = 0; i < l; ++i) {
            std::vector<Int> n(l, Int(0));
            n[i] = 1;
            const auto w = rs.weight_from_coefficients(n);
            CHECK(rs.is_weight(w));
            for (int j = 0; j < l; ++j) {
                std::vector<Rat> hj(l, Rat(0));
                hj[j] = 1;
                CHECK(rs.pairing(w, hj) == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("positive coroots are integral and the cartan matrix is recovered") {
    for (const auto& [f, l] : kSupported) {
        const auto rs = RootSystem::build(f, l);
        REQUIRE(rs.positive_roots().size() == rs.positive_coroots().size());
        // cartan invariant: C_ij = <alpha_i, h_j> for the simple pairs
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                std::vector<Rat> hj(l, Rat(0));
                hj[j] = 1;
                // alpha_i = d_i h_i with d_i = |alpha_i|^2/2 = 2/<h_i,h_i>
                std::vector<Rat> alpha(l, Rat(0));
                alpha[i] = Rat(2) / Rat(rs.gram().at(i, i));
                CHECK(rs.pairing(alpha, hj) == Rat(rs.cartan().at(i, j)));
            }
    }
}
