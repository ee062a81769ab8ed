#include "anomdiff/levy_models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace anomdiff {

namespace {

using cplx = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr cplx kI{0.0, 1.0};

void validate_params(const LevyModel::Params& p) {
    if (const auto* bm = std::get_if<BrownianMotion>(&p)) {
        if (!(bm->sigma > 0.0)) throw std::invalid_argument("BrownianMotion: sigma must be positive");
    } else if (const auto* vg = std::get_if<VarianceGamma>(&p)) {
        if (!(vg->kappa > 0.0) || !(vg->sigma > 0.0))
            throw std::invalid_argument("VarianceGamma: kappa and sigma must be positive");
        // E[e^X] < infinity requires the gamma-exponent argument positive at z = i
        if (!(1.0 - vg->theta * vg->kappa - 0.5 * vg->sigma * vg->sigma * vg->kappa > 0.0))
            throw std::invalid_argument("VarianceGamma: exponential moment condition violated");
    } else if (const auto* nig = std::get_if<NormalInverseGaussian>(&p)) {
        if (!(nig->kappa > 0.0) || !(nig->sigma > 0.0))
            throw std::invalid_argument("NormalInverseGaussian: kappa and sigma must be positive");
        if (!(1.0 - 2.0 * nig->theta * nig->kappa - nig->sigma * nig->sigma * nig->kappa > 0.0))
            throw std::invalid_argument("NormalInverseGaussian: exponential moment condition violated");
    } else if (const auto* cg = std::get_if<Cgmy>(&p)) {
        if (!(cg->c > 0.0) || !(cg->g > 0.0))
            throw std::invalid_argument("CGMY: C and G must be positive");
        if (!(cg->m > 1.0)) throw std::invalid_argument("CGMY: M must exceed 1");
        if (!(cg->y > 0.0) || !(cg->y < 2.0) || std::fabs(cg->y - 1.0) < 1e-9)
            throw std::invalid_argument("CGMY: Y must lie in (0,2), Y != 1");
    }
}

// psi without the drift term.
cplx base_exponent(const LevyModel::Params& p, cplx z) {
    if (const auto* bm = std::get_if<BrownianMotion>(&p)) {
        return 0.5 * bm->sigma * bm->sigma * z * z;
    }
    if (const auto* vg = std::get_if<VarianceGamma>(&p)) {
        cplx arg = 1.0 + kI * z * vg->theta * vg->kappa +
                   0.5 * vg->sigma * vg->sigma * vg->kappa * z * z;
        return std::log(arg) / vg->kappa;
    }
    if (const auto* nig = std::get_if<NormalInverseGaussian>(&p)) {
        cplx arg = 1.0 + 2.0 * kI * z * nig->theta * nig->kappa +
                   nig->sigma * nig->sigma * nig->kappa * z * z;
        return (std::sqrt(arg) - 1.0) / nig->kappa;
    }
    const auto& cg = std::get<Cgmy>(p);
    double gam = std::tgamma(-cg.y);
    cplx mterm = std::pow(cplx(cg.m) + kI * z, cg.y) - std::pow(cg.m, cg.y);
    cplx gterm = std::pow(cplx(cg.g) - kI * z, cg.y) - std::pow(cg.g, cg.y);
    return -cg.c * gam * (mterm + gterm);
}

} // namespace

LevyModel::LevyModel(Params params, double drift_compensator)
    : params_(std::move(params)), drift_(drift_compensator) {
    validate_params(params_);
}

std::pair<double, double> LevyModel::regularity_strip() const {
    if (std::holds_alternative<BrownianMotion>(params_)) return {-kInf, kInf};
    if (const auto* vg = std::get_if<VarianceGamma>(&params_)) {
        // roots of 1 - theta kappa v - sigma^2 kappa v^2 / 2 = 0
        double disc = std::sqrt(vg->theta * vg->theta + 2.0 * vg->sigma * vg->sigma / vg->kappa);
        double s2 = vg->sigma * vg->sigma;
        return {(-vg->theta - disc) / s2, (-vg->theta + disc) / s2};
    }
    if (const auto* nig = std::get_if<NormalInverseGaussian>(&params_)) {
        double disc = std::sqrt(nig->theta * nig->theta + nig->sigma * nig->sigma / nig->kappa);
        double s2 = nig->sigma * nig->sigma;
        return {(-nig->theta - disc) / s2, (-nig->theta + disc) / s2};
    }
    const auto& cg = std::get<Cgmy>(params_);
    return {-cg.g, cg.m};
}

std::complex<double> LevyModel::char_exponent(cplx z) const {
    auto [lo, hi] = regularity_strip();
    double v = z.imag();
    if (!(v > lo && v < hi))
        throw std::domain_error("char_exponent: Im(z) outside the regularity strip");
    return kI * z * drift_ + base_exponent(params_, z);
}

LevyModel LevyModel::risk_neutral_compensate() const {
    // psi(i) = -b + base(i) = 0, and base(i) is real on the strip.
    cplx at_i = base_exponent(params_, kI);
    return LevyModel(params_, at_i.real());
}

bool LevyModel::is_compensated(double tol) const {
    return std::abs(char_exponent(kI)) <= tol;
}

Cumulants LevyModel::cumulants() const {
    if (const auto* bm = std::get_if<BrownianMotion>(&params_)) {
        double s2 = bm->sigma * bm->sigma;
        return {drift_, s2, 0.0, 0.0};
    }
    if (const auto* vg = std::get_if<VarianceGamma>(&params_)) {
        // subordinated BM over a gamma clock with cumulants (1, k, 2k^2, 6k^3)
        double k = vg->kappa, s2 = vg->sigma * vg->sigma, th = vg->theta;
        return {drift_ + th,
                s2 + th * th * k,
                3.0 * th * s2 * k + 2.0 * th * th * th * k * k,
                3.0 * s2 * s2 * k + 12.0 * th * th * s2 * k * k +
                    6.0 * th * th * th * th * k * k * k};
    }
    if (const auto* nig = std::get_if<NormalInverseGaussian>(&params_)) {
        // inverse-Gaussian clock cumulants (1, k, 3k^2, 15k^3)
        double k = nig->kappa, s2 = nig->sigma * nig->sigma, th = nig->theta;
        return {drift_ + th,
                s2 + th * th * k,
                3.0 * th * s2 * k + 3.0 * th * th * th * k * k,
                3.0 * s2 * s2 * k + 18.0 * th * th * s2 * k * k +
                    15.0 * th * th * th * th * k * k * k};
    }
    const auto& cg = std::get<Cgmy>(params_);
    double c = cg.c, g = cg.g, m = cg.m, y = cg.y;
    return {drift_ + c * std::tgamma(1.0 - y) * (std::pow(m, y - 1.0) - std::pow(g, y - 1.0)),
            c * std::tgamma(2.0 - y) * (std::pow(m, y - 2.0) + std::pow(g, y - 2.0)),
            c * std::tgamma(3.0 - y) * (std::pow(m, y - 3.0) - std::pow(g, y - 3.0)),
            c * std::tgamma(4.0 - y) * (std::pow(m, y - 4.0) + std::pow(g, y - 4.0))};
}

std::string LevyModel::variant_name() const {
    if (std::holds_alternative<BrownianMotion>(params_)) return "bm";
    if (std::holds_alternative<VarianceGamma>(params_)) return "vg";
    if (std::holds_alternative<NormalInverseGaussian>(params_)) return "nig";
    return "cgmy";
}

} // namespace anomdiff
