#include "anomdiff/laplace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anomdiff {

namespace {
using cplx = std::complex<double>;
}

double talbot_inverse(const std::function<cplx(cplx)>& transform, double t, int n_terms) {
    if (!(t > 0.0)) throw std::invalid_argument("talbot_inverse: t must be positive");
    if (n_terms < 8) throw std::invalid_argument("talbot_inverse: need at least 8 terms");

    const double r = 2.0 * n_terms / (5.0 * t);
    double sum = 0.5 * std::exp(r * t) * transform(cplx(r, 0.0)).real();
    for (int k = 1; k < n_terms; ++k) {
        const double theta = k * std::numbers::pi / n_terms;
        const double cot = std::cos(theta) / std::sin(theta);
        const cplx s(r * theta * cot, r * theta);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        const cplx val = std::exp(s * t) * transform(s) * cplx(1.0, sigma);
        sum += val.real();
    }
    return sum * r / n_terms;
}

cplx talbot_inverse_complex(const std::function<cplx(cplx)>& transform, double t, int n_terms) {
    // Split F into the transforms of Re f and Im f via Schwarz reflection.
    auto re_part = [&](cplx s) {
        return 0.5 * (transform(s) + std::conj(transform(std::conj(s))));
    };
    auto im_part = [&](cplx s) {
        return (transform(s) - std::conj(transform(std::conj(s)))) / cplx(0.0, 2.0);
    };
    return {talbot_inverse(re_part, t, n_terms), talbot_inverse(im_part, t, n_terms)};
}

} // namespace anomdiff
