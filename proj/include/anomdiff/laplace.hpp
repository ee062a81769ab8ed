#pragma once

#include <complex>
#include <functional>

namespace anomdiff {

/// Fixed-Talbot numerical inversion of a Laplace transform F(s) at time t > 0.
///
/// The deformed contour s(theta) = r theta (cot theta + i), r = 2N/(5t),
/// encloses the branch cut on the negative axis and any singularities with
/// |Im s| < pi r. Singularities outside that window contribute residue terms
/// of size exp(t Re s); callers keep those exponentially negligible by
/// choosing t and the transform arguments accordingly. Roundoff is amplified
/// by exp(2N/5), so N much beyond ~40 buys nothing in double precision.
double talbot_inverse(const std::function<std::complex<double>(std::complex<double>)>& transform,
                      double t, int n_terms = 32);

/// Complex-valued version (applies the real inversion to Re and Im parts).
std::complex<double> talbot_inverse_complex(
    const std::function<std::complex<double>(std::complex<double>)>& transform,
    double t, int n_terms = 32);

} // namespace anomdiff
