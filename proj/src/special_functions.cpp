#include "anomdiff/special_functions.hpp"

#include "anomdiff/dd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anomdiff {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Cancellation budget of the double-double series path: partial sums peak
// near exp(m) with m = |z|^(1/beta); beyond m ~ 34 the asymptotic expansion
// is the more accurate of the two.
constexpr double kSeriesCancelBudget = 34.0;
constexpr double kSeriesCancelHard = 36.5;
// Below this peak the plain double series already meets ~1e-13.
constexpr double kPlainSeriesBudget = 4.0;

struct cdd {
    dd re, im;
};

cdd mul(const cdd& a, const cplx& b) {
    return {a.re * b.real() - a.im * b.imag(), a.re * b.imag() + a.im * b.real()};
}

// --- power series in double precision (Kahan-compensated) ------------------

cplx series_plain(double beta, cplx z, const EvalPolicy& policy) {
    cplx sum(1.0, 0.0);
    cplx comp(0.0, 0.0);
    cplx zpow(1.0, 0.0);
    double prev = 1e308;
    for (int k = 1; k <= policy.max_terms; ++k) {
        zpow *= z;
        double c = std::exp(-std::lgamma(beta * k + 1.0));
        cplx term = zpow * c;
        cplx y = term - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        double mag = std::abs(term);
        if (mag < 1e-4 * policy.abs_tol && mag <= prev) return sum;
        prev = mag;
    }
    throw std::runtime_error("mittag_leffler: series did not converge within max_terms");
}

// --- power series in double-double ------------------------------------------

cplx series_dd(double beta, cplx z, const EvalPolicy& policy) {
    cdd sum{dd(1.0), dd(0.0)};
    cdd zpow{dd(1.0), dd(0.0)};
    double prev = 1e308;
    for (int k = 1; k <= policy.max_terms; ++k) {
        zpow = mul(zpow, z);
        dd coef = dd_exp(-dd_lgamma(dd_mul_exact(beta, static_cast<double>(k)) + 1.0));
        cdd term{zpow.re * coef, zpow.im * coef};
        sum.re = sum.re + term.re;
        sum.im = sum.im + term.im;
        double mag = std::hypot(term.re.hi, term.im.hi);
        if (mag < 1e-5 * policy.abs_tol && mag <= prev) {
            return {static_cast<double>(sum.re), static_cast<double>(sum.im)};
        }
        prev = mag;
    }
    throw std::runtime_error("mittag_leffler: series did not converge within max_terms");
}

// --- algebraic large-|z| expansion ------------------------------------------
//
// E_beta(z) = -sum_{k>=1} z^-k / Gamma(1 - beta k) + O(z^-n), valid away from
// the sector |arg z| < pi beta where exp(z^(1/beta))/beta must be added.
// Terms are assembled in log space through the reflection formula
// 1/Gamma(1 - beta k) = Gamma(beta k) sin(pi beta k) / pi.

cplx asymptotic_branch(double beta, cplx z, const EvalPolicy& policy) {
    const cplx logz = std::log(z);
    cplx sum(0.0, 0.0);
    double prev = 1e308;
    for (int k = 1; k <= policy.asymptotic_terms; ++k) {
        double s = sin_pi(beta * k);
        cplx lt = std::lgamma(beta * k) - static_cast<double>(k) * logz;
        if (lt.real() > 700.0) break; // past the optimal truncation point
        cplx term = -(s / kPi) * std::exp(lt);
        double mag = std::abs(term);
        if (mag > prev) break;
        sum += term;
        prev = mag;
        if (mag < 1e-4 * policy.abs_tol) break;
    }
    if (std::abs(std::arg(z)) < kPi * beta) {
        cplx root = std::exp(logz / beta);
        if (root.real() > 700.0)
            throw std::range_error("mittag_leffler: exponential branch overflows");
        sum += std::exp(root) / beta;
    }
    return sum;
}

// --- 1F1 helpers -------------------------------------------------------------

cplx kummer_series_plain(double a, double b, cplx z, const EvalPolicy& policy) {
    cplx sum(1.0, 0.0);
    cplx term(1.0, 0.0);
    double prev = 1e308;
    for (int k = 0; k < policy.max_terms; ++k) {
        term *= z * ((a + k) / ((b + k) * (k + 1.0)));
        sum += term;
        double mag = std::abs(term);
        if (mag < 1e-4 * policy.abs_tol && mag <= prev) return sum;
        prev = mag;
    }
    throw std::runtime_error("kummer_1f1: series did not converge within max_terms");
}

cplx kummer_series_dd(double a, double b, cplx z, const EvalPolicy& policy) {
    cdd sum{dd(1.0), dd(0.0)};
    cdd term{dd(1.0), dd(0.0)};
    double prev = 1e308;
    for (int k = 0; k < policy.max_terms; ++k) {
        dd ratio = (dd(a) + static_cast<double>(k)) /
                   ((dd(b) + static_cast<double>(k)) * (k + 1.0));
        term = mul({term.re * ratio, term.im * ratio}, z);
        sum.re = sum.re + term.re;
        sum.im = sum.im + term.im;
        double mag = std::hypot(term.re.hi, term.im.hi);
        if (mag < 1e-5 * policy.abs_tol && mag <= prev) {
            return {static_cast<double>(sum.re), static_cast<double>(sum.im)};
        }
        prev = mag;
    }
    throw std::runtime_error("kummer_1f1: series did not converge within max_terms");
}

// Compound expansion for large |z| (DLMF 13.7.1-2 rearranged for w = -z with
// Re w > 0, so the algebraic part carries the plain principal power w^-a).
cplx kummer_asymptotic(double a, double b, cplx z, const EvalPolicy& policy) {
    const cplx w = -z;
    const cplx logw = std::log(w);

    cplx alg(0.0, 0.0);
    {
        cplx term = std::exp(-a * logw) * std::exp(std::lgamma(b) - std::lgamma(b - a));
        double prev = 1e308;
        for (int s = 0; s < policy.asymptotic_terms; ++s) {
            double mag = std::abs(term);
            if (mag > prev) break;
            alg += term;
            prev = mag;
            if (mag < 1e-4 * policy.abs_tol) break;
            term *= (a + s) * (a - b + 1.0 + s) / ((s + 1.0) * w);
        }
    }

    cplx expo(0.0, 0.0);
    if (z.real() > -700.0) {
        cplx prefac = std::exp(z + (a - b) * std::log(z) + std::lgamma(b) - std::lgamma(a));
        if (std::abs(prefac) > 1e-4 * policy.abs_tol) {
            cplx term = prefac;
            double prev = 1e308;
            for (int s = 0; s < policy.asymptotic_terms; ++s) {
                double mag = std::abs(term);
                if (mag > prev) break;
                expo += term;
                prev = mag;
                if (mag < 1e-4 * policy.abs_tol) break;
                term *= (b - a + s) * (1.0 - a + s) / ((s + 1.0) * z);
            }
        }
    }
    return alg + expo;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::fabs(x - std::round(x)) < 1e-12;
}

} // namespace

void EvalPolicy::validate() const {
    if (!(series_radius > 0.0)) throw std::invalid_argument("EvalPolicy: series_radius must be positive");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("EvalPolicy: abs_tol must be positive");
    if (asymptotic_terms < 1) throw std::invalid_argument("EvalPolicy: asymptotic_terms must be >= 1");
    if (max_terms < asymptotic_terms) throw std::invalid_argument("EvalPolicy: max_terms must be >= asymptotic_terms");
}

double sin_pi(double x) {
    double n = std::round(x);
    double r = x - n;
    if (r == 0.0) return 0.0;
    double s = std::sin(kPi * r);
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

double reciprocal_gamma(double x) {
    if (x >= 0.5) return std::exp(-std::lgamma(x));
    double s = sin_pi(x);
    if (s == 0.0) return 0.0;
    double lg = std::lgamma(1.0 - x);
    // 1/Gamma(x) = Gamma(1-x) sin(pi x)/pi; combine in log space against overflow
    double mag = lg + std::log(std::fabs(s) / kPi);
    if (mag > 709.0) throw std::range_error("reciprocal_gamma: overflow");
    return std::copysign(std::exp(mag), s);
}

std::complex<double> mittag_leffler(double beta, std::complex<double> z,
                                    const EvalPolicy& policy) {
    policy.validate();
    if (!(beta > 0.0) || beta > 1.0)
        throw std::invalid_argument("mittag_leffler: beta must lie in (0, 1]");
    if (beta == 1.0) return std::exp(z);
    double r = std::abs(z);
    if (r == 0.0) return {1.0, 0.0};

    double m = std::pow(r, 1.0 / beta); // scale of the series peak / expansion floor
    if (m <= kPlainSeriesBudget && r <= policy.series_radius)
        return series_plain(beta, z, policy);
    if (m <= kSeriesCancelBudget || (r <= policy.series_radius && m <= kSeriesCancelHard))
        return series_dd(beta, z, policy);
    return asymptotic_branch(beta, z, policy);
}

std::complex<double> kummer_1f1(double a, double b, std::complex<double> z,
                                const EvalPolicy& policy) {
    policy.validate();
    if (is_nonpositive_integer(b))
        throw std::invalid_argument("kummer_1f1: b must not be a non-positive integer");
    if (z == cplx(0.0, 0.0)) return {1.0, 0.0};
    if (a == b) return std::exp(z);
    if (a == 0.0) return {1.0, 0.0};

    if (z.real() > 0.0) {
        if (z.real() > 708.0) throw std::range_error("kummer_1f1: exp overflow for large positive Re z");
        return std::exp(z) * kummer_1f1(b - a, b, -z, policy);
    }

    double r = std::abs(z);
    if (r > kSeriesCancelBudget) return kummer_asymptotic(a, b, z, policy);
    if (b > a && a > 0.0) {
        // transformed series has non-negative coefficient ratios
        cplx s = (r <= kPlainSeriesBudget) ? kummer_series_plain(b - a, b, -z, policy)
                                           : kummer_series_dd(b - a, b, -z, policy);
        return std::exp(z) * s;
    }
    return (r <= kPlainSeriesBudget) ? kummer_series_plain(a, b, z, policy)
                                     : kummer_series_dd(a, b, z, policy);
}

std::complex<double> mittag_leffler_three(double a, double b, double c,
                                          std::complex<double> z,
                                          const EvalPolicy& policy) {
    policy.validate();
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw std::invalid_argument("mittag_leffler_three: parameters must be positive");
    if (a == 1.0 && b == 1.0 && c == 1.0) return std::exp(z);
    if (b == 1.0 && c == 1.0) return mittag_leffler(a, z, policy);
    if (a == 1.0 && b == 1.0) return kummer_1f1(c, 1.0, z, policy);

    double r = std::abs(z);
    if (std::pow(r, 1.0 / a) > kSeriesCancelHard)
        throw std::runtime_error("mittag_leffler_three: |z| too large for the series evaluation");

    cdd sum{dd(1.0), dd(0.0)};
    cdd zpow{dd(1.0), dd(0.0)};
    dd poch_over_fact(1.0); // (c)_k / k!
    dd rg0 = dd_exp(-dd_lgamma(dd(b)));
    sum = {rg0, dd(0.0)};
    double prev = 1e308;
    for (int k = 1; k <= policy.max_terms; ++k) {
        zpow = mul(zpow, z);
        poch_over_fact = poch_over_fact * ((dd(c) + static_cast<double>(k - 1.0)) / static_cast<double>(k));
        dd coef = poch_over_fact * dd_exp(-dd_lgamma(dd_mul_exact(a, static_cast<double>(k)) + b));
        cdd term{zpow.re * coef, zpow.im * coef};
        sum.re = sum.re + term.re;
        sum.im = sum.im + term.im;
        double mag = std::hypot(term.re.hi, term.im.hi);
        if (mag < 1e-5 * policy.abs_tol && mag <= prev) break;
        prev = mag;
        if (k == policy.max_terms)
            throw std::runtime_error("mittag_leffler_three: series did not converge within max_terms");
    }
    return {static_cast<double>(sum.re), static_cast<double>(sum.im)};
}

double lambert_w0(double x) {
    constexpr double kInvE = 0.36787944117144232160;
    if (x < -kInvE - 1e-14) throw std::domain_error("lambert_w0: x < -1/e");
    if (x < -kInvE) x = -kInvE;
    if (x == 0.0) return 0.0;

    double w;
    if (x < -0.25) {
        double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else if (x < 3.0) {
        w = x / (1.0 + x);
    } else {
        double lx = std::log(x);
        w = lx - std::log(lx);
    }
    for (int it = 0; it < 60; ++it) {
        double ew = std::exp(w);
        double f = w * ew - x;
        double wp1 = w + 1.0;
        double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        double dw = f / denom;
        w -= dw;
        if (std::fabs(dw) <= 1e-15 * (1.0 + std::fabs(w))) break;
    }
    return w;
}

std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

    std::vector<std::pair<double, double>> out(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const int half_n = (n + 1) / 2;
    for (int i = 0; i < half_n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double wgt = 2.0 / ((1.0 - x * x) * pp * pp);
        out[i] = {mid - half * x, half * wgt};
        out[n - 1 - i] = {mid + half * x, half * wgt};
    }
    if (n % 2 == 1) out[half_n - 1] = {mid, out[half_n - 1].second};
    return out;
}

} // namespace anomdiff
