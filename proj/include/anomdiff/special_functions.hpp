#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace anomdiff {

/// Controls for the series/asymptotic evaluation of E_beta and 1F1.
struct EvalPolicy {
    double series_radius = 5.0;   ///< |z| below which the power series is always preferred
    int asymptotic_terms = 60;    ///< cap on terms of the large-|z| expansion
    double abs_tol = 1e-12;       ///< absolute accuracy target
    int max_terms = 4000;         ///< series budget; exceeding it is an error

    void validate() const;
};

/// One-parameter Mittag-Leffler function E_beta(z), 0 < beta <= 1.
///
/// Power series (double-double accumulation) while |z|^(1/beta) is small
/// enough that cancellation stays below ~1e-13; the algebraic large-|z|
/// expansion -sum z^-k / Gamma(1-beta k) otherwise, plus the exponential
/// branch exp(z^(1/beta))/beta when |arg z| < pi*beta. The switch is taken
/// on |z|^(1/beta) rather than |z| alone: a fixed radius cannot serve both
/// small and large beta (the series peak and the expansion floor both scale
/// like exp(|z|^(1/beta))).
std::complex<double> mittag_leffler(double beta, std::complex<double> z,
                                    const EvalPolicy& policy = {});

/// Confluent hypergeometric 1F1(a, b; z) = M(a, b, z).
///
/// For Re z < 0 the Kummer transform e^z 1F1(b-a, b; -z) moves the series to
/// a non-alternating one; beyond |z| ~ 34 the standard compound asymptotic
/// expansion takes over.
std::complex<double> kummer_1f1(double a, double b, std::complex<double> z,
                                const EvalPolicy& policy = {});

/// Three-parameter Mittag-Leffler E_{a,b,c}(z) = sum (c)_k z^k / Gamma(a k + b).
/// E_{a,1,1} = E_a and E_{1,1,c}(z) = 1F1(c, 1; z).
std::complex<double> mittag_leffler_three(double a, double b, double c,
                                          std::complex<double> z,
                                          const EvalPolicy& policy = {});

/// Principal branch W0 of the Lambert function, x >= -1/e.
double lambert_w0(double x);

/// Entire reciprocal 1/Gamma(x); exactly zero at non-positive integers.
double reciprocal_gamma(double x);

/// sin(pi x) with exact zeros at integer x.
double sin_pi(double x);

/// Gauss-Legendre nodes and weights on [a, b], exact for degree <= 2n-1.
std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b);

} // namespace anomdiff
