#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cstorus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

template <typename T>
int sign_of(const T& x) {
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

/// Floor division for exact integers (rounds toward -infinity).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// num/den as an exact rational; accepts negative denominators (which the
/// underlying two-argument constructor rejects).
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline Int floor_rat(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

/// q - floor(q), the representative of q mod 1 in [0, 1).
inline Rat frac_mod1(const Rat& q) {
    return q - Rat(floor_rat(q));
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline std::string rat_to_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// A unit complex number e^{2 pi i q} stored as the exact rational q mod 1.
/// Phases that are equal compare exactly; one trig call happens per value().
class PhaseExact {
public:
    PhaseExact() : q_(0) {}
    explicit PhaseExact(Rat q) : q_(frac_mod1(q)) {}

    const Rat& q() const { return q_; }

    PhaseExact operator*(const PhaseExact& o) const { return PhaseExact(q_ + o.q_); }
    PhaseExact& operator*=(const PhaseExact& o) { q_ = frac_mod1(q_ + o.q_); return *this; }
    PhaseExact conj() const { return PhaseExact(-q_); }
    PhaseExact pow(const Int& n) const { return PhaseExact(q_ * Rat(n)); }

    bool operator==(const PhaseExact& o) const { return q_ == o.q_; }

    Cplx value() const {
        const double angle = 2.0 * std::numbers::pi * to_double(q_);
        return {std::cos(angle), std::sin(angle)};
    }

private:
    Rat q_;  // in [0, 1)
};

inline Cplx unit_phase(const Rat& q) { return PhaseExact(q).value(); }

/// Kahan-compensated accumulator for complex sums in a fixed term order.
class KahanSum {
public:
    void add(Cplx x) {
        add_part(x.real(), re_, re_c_);
        add_part(x.imag(), im_, im_c_);
    }
    Cplx value() const { return {re_, im_}; }

private:
    static void add_part(double x, double& s, double& c) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double re_ = 0, im_ = 0;
    double re_c_ = 0, im_c_ = 0;
};

inline void check_finite(Cplx z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::logic_error(std::string("non-finite value in ") + where);
}

}  // namespace cstorus
