#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cstorus/modular_group.hpp>

using namespace cstorus;

namespace {

SL2Element random_word_element(std::mt19937_64& rng, const Int& entry_bound, int max_steps = 40) {
    SL2Element u = SL2Element::identity();
    std::uniform_int_distribution<long> tpow(-9, 9);
    for (int i = 0; i < max_steps; ++i) {
        SL2Element next = rng() % 2 ? u * SL2Element::S() : u * SL2Element::T_pow(tpow(rng));
        if (abs(next.a()) > entry_bound || abs(next.b()) > entry_bound ||
            abs(next.c()) > entry_bound || abs(next.d()) > entry_bound)
            break;
        u = next;
    }
    return u;
}

}  // namespace

TEST_CASE("SL2Element construction enforces det 1") {
    CHECK_THROWS_AS(SL2Element(1, 1, 1, 1), std::domain_error);
    CHECK_NOTHROW(SL2Element(3, -1, 1, 0));
    CHECK(SL2Element::S() * SL2Element::S() == SL2Element::neg_identity());
}

TEST_CASE("classify by trace") {
    CHECK(classify(SL2Element::S()) == SL2Class::Elliptic);
    CHECK(classify(SL2Element::T()) == SL2Class::Parabolic);
    CHECK(classify(SL2Element(3, -1, 1, 0)) == SL2Class::Hyperbolic);
    CHECK(classify(SL2Element(-1, 1, -1, 0)) == SL2Class::Elliptic);  // trace -1
}

TEST_CASE("classify is conjugation invariant") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto u = random_word_element(rng, Int(1000000));
        const auto v = random_word_element(rng, Int(1000000));
        CHECK(classify(v * u * v.inverse()) == classify(u));
    }
}

TEST_CASE("dedekind sum values") {
    CHECK(dedekind_sum(0, 1) == 0);
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 3) == Rat(1, 18));
    CHECK_THROWS_AS(dedekind_sum(1, 0), std::domain_error);
    CHECK_THROWS_AS(dedekind_sum(1, -3), std::domain_error);
}

TEST_CASE("dedekind reciprocity") {
    for (long h = 1; h <= 24; ++h)
        for (long k = 1; k <= 24; ++k) {
            if (gcd(Int(h), Int(k)) != 1) continue;
            const Rat lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            const Rat rhs = Rat(-1, 4) + (Rat(h, k) + Rat(k, h) + Rat(1, Int(h) * k)) / 12;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("rademacher phi reference values") {
    for (long p : {-5L, -1L, 0L, 1L, 7L}) CHECK(rademacher_phi(SL2Element::T_pow(p)) == p);
    CHECK(rademacher_phi(SL2Element::S()) == 0);
    for (long p : {-7L, -3L, 1L, 3L, 5L})
        CHECK(rademacher_phi(SL2Element::T_pow(p) * SL2Element::S()) == p);
}

TEST_CASE("rademacher phi cocycle") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 1000) {
        const auto u1 = random_word_element(rng, Int(100000), 12);
        const auto u2 = random_word_element(rng, Int(100000), 12);
        const auto u12 = u1 * u2;
        if (u1.c() == 0 || u2.c() == 0 || u12.c() == 0) continue;
        const Int expected =
            rademacher_phi(u1) + rademacher_phi(u2) - 3 * sign_of(u1.c() * u2.c() * u12.c());
        CHECK(rademacher_phi(u12) == expected);
        ++done;
    }
}

TEST_CASE("rademacher phi antisymmetry for hyperbolic elements") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 300) {
        const auto u = random_word_element(rng, Int(100000), 12);
        if (classify(u) != SL2Class::Hyperbolic) continue;
        CHECK(rademacher_phi(u.inverse()) == -rademacher_phi(u));
        ++done;
    }
}

TEST_CASE("word evaluate basics") {
    GeneratorWord ss;
    ss.tokens = {GeneratorWord::s(), GeneratorWord::s()};
    CHECK(word_evaluate(ss) == SL2Element::neg_identity());

    GeneratorWord t3s;
    t3s.tokens = {GeneratorWord::t(3), GeneratorWord::s()};
    CHECK(word_evaluate(t3s) == SL2Element(3, -1, 1, 0));

    CHECK(word_evaluate(GeneratorWord{}) == SL2Element::identity());
}

TEST_CASE("word decompose round trips") {
    CHECK(word_decompose(SL2Element::identity()).tokens.empty());
    CHECK(word_evaluate(word_decompose(SL2Element::neg_identity())) == SL2Element::neg_identity());
    CHECK(word_evaluate(word_decompose(SL2Element(3, -1, 1, 0))) == SL2Element(3, -1, 1, 0));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 1000; ++t) {
        const auto u = random_word_element(rng, Int(1000000));
        CHECK(word_evaluate(word_decompose(u)) == u);
    }
}
