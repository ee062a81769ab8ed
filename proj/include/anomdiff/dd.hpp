#pragma once

// Minimal double-double (~31 significant digits) arithmetic.
//
// The Mittag-Leffler and Kummer power series suffer catastrophic cancellation
// for arguments of moderate modulus: partial sums peak near exp(|z|^(1/beta))
// while the result is O(1). Accumulating in double-double keeps roughly 15
// digits after losing ~16 to cancellation, which is what lets the series
// regime extend far enough to meet the asymptotic regime.

#include <cmath>
#include <cstdint>

namespace anomdiff {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    return {s, (a - (s - v)) + (b - v)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator+(dd a, double b) {
    dd s = detail::two_sum(a.hi, b);
    s.lo += a.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator-(dd a, double b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) {
    dd p = detail::two_prod(a.hi, b);
    p.lo += a.lo * b;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + q3;
}

inline dd operator/(dd a, double b) { return a / dd(b); }

inline dd dd_mul_exact(double a, double b) { return detail::two_prod(a, b); }

inline bool operator<(dd a, double b) { return a.hi < b || (a.hi == b && a.lo < 0.0); }
inline bool operator>(dd a, double b) { return a.hi > b || (a.hi == b && a.lo > 0.0); }

inline double dd_abs(dd a) { return std::fabs(a.hi + a.lo); }

inline constexpr dd kDDLn2{6.931471805599453094e-01, 2.3190468138462995584e-17};
inline constexpr dd kDDPi{3.141592653589793116e+00, 1.2246467991473531772e-16};

// exp for |x| <~ 700; argument reduction x = m ln2 + r, Taylor on r.
inline dd dd_exp(dd x) {
    if (x.hi < -745.0) return dd(0.0);
    double m = std::round(x.hi / kDDLn2.hi);
    dd r = x - kDDLn2 * m;
    dd sum = dd(1.0) + r;
    dd term = r;
    for (int k = 2; k <= 30; ++k) {
        term = term * r / static_cast<double>(k);
        sum = sum + term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    int im = static_cast<int>(m);
    return {std::ldexp(sum.hi, im), std::ldexp(sum.lo, im)};
}

// log via one Newton step off the double-precision seed.
inline dd dd_log(dd a) {
    double y = std::log(a.hi);
    dd e = dd_exp(dd(-y));
    dd r = a * e - 1.0;           // a*exp(-y) - 1, tiny
    dd corr = r - r * r * 0.5;
    return dd(y) + corr;
}

namespace detail {

// Bernoulli coefficients B_{2n} / (2n (2n-1)) for the Stirling series.
inline const dd* stirling_coeffs() {
    static const dd coeffs[] = {
        dd(1.0) / dd(12.0),                          // B2/(2*1)
        dd(-1.0) / dd(360.0),                        // B4/(4*3)
        dd(1.0) / dd(1260.0),                        // B6/(6*5)
        dd(-1.0) / dd(1680.0),                       // B8/(8*7)
        dd(1.0) / dd(1188.0),                        // B10/(10*9)
        dd(-691.0) / dd(360360.0),                   // B12/(12*11)
        dd(1.0) / dd(156.0),                         // B14/(14*13)
        dd(-3617.0) / dd(122400.0),                  // B16/(16*15)
        dd(43867.0) / dd(244188.0),                  // B18/(18*17)
        dd(-174611.0) / dd(125400.0),                // B20/(20*19)
        dd(77683.0) / dd(5796.0),                    // B22/(22*21)
        dd(-236364091.0) / dd(1506960.0),            // B24/(24*23)
        dd(657931.0) / dd(300.0),                    // B26/(26*25)
        dd(-3392780147.0) / dd(93960.0),             // B28/(28*27)
        dd(1723168255201.0) / dd(2492028.0),         // B30/(30*29)
        dd(-7709321041217.0) / dd(505920.0),         // B32/(32*31)
    };
    return coeffs;
}

} // namespace detail

// lgamma for x >= 0.5: upward recurrence into the Stirling regime.
inline dd dd_lgamma(dd x) {
    static const dd half_log_two_pi = dd_log(kDDPi * 2.0) * 0.5;
    dd shift(0.0);
    while (x.hi < 20.0) {
        shift = shift + dd_log(x);
        x = x + 1.0;
    }
    dd inv = dd(1.0) / x;
    dd inv2 = inv * inv;
    const dd* c = detail::stirling_coeffs();
    dd series = c[15];
    for (int n = 14; n >= 0; --n) series = series * inv2 + c[n];
    series = series * inv;
    dd result = (x - 0.5) * dd_log(x) - x + half_log_two_pi + series;
    return result - shift;
}

} // namespace anomdiff
