#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstorus/numeric.hpp"

namespace cstorus {

/// An element [[a,b],[c,d]] of SL(2,Z). Construction checks ad - bc = 1.
class SL2Element {
public:
    SL2Element(Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (a_ * d_ - b_ * c_ != 1)
            throw std::domain_error("SL2Element: determinant of " + str() + " is not 1");
    }

    static SL2Element identity() { return {1, 0, 0, 1}; }
    static SL2Element S() { return {0, -1, 1, 0}; }
    static SL2Element T() { return {1, 1, 0, 1}; }
    static SL2Element T_pow(const Int& n) { return {1, n, 0, 1}; }
    static SL2Element neg_identity() { return {-1, 0, 0, -1}; }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }
    Int trace() const { return a_ + d_; }

    SL2Element operator*(const SL2Element& o) const {
        return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
    }

    SL2Element inverse() const { return {d_, -b_, -c_, a_}; }

    bool operator==(const SL2Element& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }

    std::string str() const {
        return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
    }

private:
    Int a_, b_, c_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const SL2Element& u) { return os << u.str(); }

enum class SL2Class { Elliptic, Parabolic, Hyperbolic };

inline SL2Class classify(const SL2Element& u) {
    const Int t = abs(u.trace());
    if (t > 2) return SL2Class::Hyperbolic;
    if (t == 2) return SL2Class::Parabolic;
    return SL2Class::Elliptic;
}

inline const char* to_string(SL2Class c) {
    switch (c) {
        case SL2Class::Elliptic: return "elliptic";
        case SL2Class::Parabolic: return "parabolic";
        default: return "hyperbolic";
    }
}

/// Sawtooth ((x)): x - floor(x) - 1/2 for non-integer x, 0 at integers.
inline Rat sawtooth(const Rat& x) {
    if (is_integer(x)) return 0;
    return frac_mod1(x) - Rat(1, 2);
}

/// Dedekind sum s(h,k) = sum_{n=1}^{k-1} ((n/k)) ((hn/k)), exact.
inline Rat dedekind_sum(const Int& h, const Int& k) {
    if (k < 1) throw std::domain_error("dedekind_sum: k must be >= 1");
    if (k > 100000000) throw std::domain_error("dedekind_sum: k too large for direct summation");
    Rat s(0);
    for (Int n = 1; n < k; ++n) s += sawtooth(Rat(n, k)) * sawtooth(Rat(h * n, k));
    return s;
}

/// Rademacher Phi, normalized so that Phi(T^p) = p and Phi(T^p S) = p:
///   c = 0:  Phi = b/d,
///   c != 0: Phi = (a+d)/c - 12 sign(c) s(d, |c|).
/// The rational intermediate must be an integer; anything else means the
/// convention is broken and we fail loudly.
inline Int rademacher_phi(const SL2Element& u) {
    Rat val;
    if (u.c() == 0) {
        val = make_rat(u.b(), u.d());
    } else {
        val = make_rat(u.a() + u.d(), u.c()) -
              Rat(12 * sign_of(u.c())) * dedekind_sum(u.d(), abs(u.c()));
    }
    if (!is_integer(val))
        throw std::logic_error("rademacher_phi: non-integer value " + rat_to_string(val) +
                               " for U = " + u.str());
    return numerator(val);
}

/// A word in the generators: S, powers of T, and the central element -I.
struct GeneratorWord {
    struct Token {
        enum class Kind { S, T, Neg };
        Kind kind;
        Int power;  // only for Kind::T
    };
    std::vector<Token> tokens;

    static GeneratorWord::Token s() { return {Token::Kind::S, 0}; }
    static GeneratorWord::Token t(Int n) { return {Token::Kind::T, std::move(n)}; }
    static GeneratorWord::Token neg() { return {Token::Kind::Neg, 0}; }
};

inline SL2Element word_evaluate(const GeneratorWord& w) {
    SL2Element m = SL2Element::identity();
    for (const auto& tok : w.tokens) {
        switch (tok.kind) {
            case GeneratorWord::Token::Kind::S: m = m * SL2Element::S(); break;
            case GeneratorWord::Token::Kind::T: m = m * SL2Element::T_pow(tok.power); break;
            case GeneratorWord::Token::Kind::Neg: m = m * SL2Element::neg_identity(); break;
        }
    }
    return m;
}

/// Continued-fraction decomposition into S / T^n / NEG tokens.
/// Left-multiplying U by S T^{-q} replaces c by a mod c, so |c| strictly
/// shrinks; the leftover is +-T^m.
inline GeneratorWord word_decompose(const SL2Element& u) {
    GeneratorWord word;
    Int a = u.a(), b = u.b(), c = u.c(), d = u.d();
    std::vector<Int> quotients;
    while (c != 0) {
        const Int q = floor_div(a, c);
        const Int a2 = a - q * c, b2 = b - q * d;
        // S * T^{-q} * [[a,b],[c,d]] = [[-c,-d],[a2,b2]]
        Int na = -c, nb = -d;
        c = a2;
        d = b2;
        a = na;
        b = nb;
        quotients.push_back(q);
    }
    for (const Int& q : quotients) {
        if (q != 0) word.tokens.push_back(GeneratorWord::t(q));
        word.tokens.push_back(GeneratorWord::neg());  // S^{-1} = -S
        word.tokens.push_back(GeneratorWord::s());
    }
    Int m = b;
    if (a == -1) {
        word.tokens.push_back(GeneratorWord::neg());
        m = -b;
    }
    if (m != 0) word.tokens.push_back(GeneratorWord::t(m));
    return word;
}

}  // namespace cstorus
