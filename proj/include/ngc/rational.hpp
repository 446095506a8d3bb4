#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ngc {

using cplx = std::complex<double>;

/// Exact rational number, used throughout for phase exponents: a root of
/// unity is stored as r with value e(r) = exp(2*pi*i*r).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator-() const { return {-num, den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator*(std::int64_t k) const { return {num * k, den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    /// Reduce modulo 1 into [0, 1).
    Rational mod1() const {
        std::int64_t n = num % den;
        if (n < 0) n += den;
        Rational r; r.num = n; r.den = den; r.normalize();
        return r;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// e(r) = exp(2*pi*i*r)
inline cplx unit_phase(const Rational& r) {
    double t = 2.0 * M_PI * r.value();
    return {std::cos(t), std::sin(t)};
}

inline cplx unit_phase(double r) {
    double t = 2.0 * M_PI * r;
    return {std::cos(t), std::sin(t)};
}

/// Recognize x ~ e(p/q) with q <= max_den; returns true and sets out on success.
bool recognize_phase(cplx x, Rational& out, std::int64_t max_den = 240, double tol = 1e-9);

}  // namespace ngc
