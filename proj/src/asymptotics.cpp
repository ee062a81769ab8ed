#include "anomdiff/asymptotics.hpp"

#include "anomdiff/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anomdiff {

namespace {
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

const MarketSetup& unit_market() {
    static const MarketSetup mkt(1.0, 0.0);
    return mkt;
}
} // namespace

double psi_second_imag(const LevyModel& model, double v) {
    // psi(i v) is real on the strip; psi''(i v) = -(d/dv)^2 psi(i v)
    auto f = [&](double y) { return model.char_exponent(cplx(0.0, y)).real(); };
    double h = 1e-3;
    double d2_h = (f(v + h) - 2.0 * f(v) + f(v - h)) / (h * h);
    double d2_h2 = (f(v + h / 2.0) - 2.0 * f(v) + f(v - h / 2.0)) / (h * h / 4.0);
    return -(4.0 * d2_h2 - d2_h) / 3.0; // Richardson
}

double expansion_constant(const LevyModel& model, double strike, double psi_power,
                          const QuadratureConfig& quad) {
    const double k = std::log(strike);
    auto nodes = gauss_legendre(quad.nodes * std::max(quad.panels, 1), -quad.truncation,
                                quad.truncation);
    cplx acc(0.0, 0.0);
    for (const auto& [u, w] : nodes) {
        cplx z(u, 0.5);
        cplx psi = model.char_exponent(z);
        cplx integrand = std::exp(cplx(0.5 * k, u * k)) /
                         ((u * u + 0.25) * std::pow(psi, psi_power));
        acc += w * integrand;
    }
    return acc.real() / (2.0 * kPi);
}

ExpansionResult call_expansion_drd(const AnomalousModel& model, double strike, double maturity,
                                   const QuadratureConfig& quad) {
    if (model.kind != TimeChangeKind::DRD)
        throw std::invalid_argument("call_expansion_drd: model kind must be DRD");
    const double beta = model.beta;
    double leading = 0.0;
    if (beta < 1.0) {
        double c1 = expansion_constant(model.levy, strike, beta, quad);
        leading = c1 / (std::tgamma(1.0 - beta) * std::pow(maturity, beta));
    }
    double psi_half = model.levy.char_exponent(cplx(0.0, 0.5)).real();
    double psi_dd = psi_second_imag(model.levy, 0.5);
    double c_beta = 4.0 * std::sqrt(strike) /
                    (std::pow(psi_half, 1.0 - beta) * std::sqrt(2.0 * kPi * psi_dd));
    double correction = c_beta / std::tgamma(beta) * std::exp(-maturity * psi_half) /
                        std::pow(maturity, 1.5 - beta);
    return {1.0 - leading - correction, leading, correction, ExpansionRegime::LargeT};
}

ExpansionResult call_expansion_sl(const AnomalousModel& model, double strike, double maturity,
                                  const QuadratureConfig& quad) {
    if (model.kind != TimeChangeKind::SL)
        throw std::invalid_argument("call_expansion_sl: model kind must be SL");
    if (!(model.beta < 1.0))
        throw std::invalid_argument("call_expansion_sl: the expansion needs beta < 1");
    double c2 = expansion_constant(model.levy, strike, 1.0, quad);
    double leading = c2 / (std::tgamma(1.0 - model.beta) * std::pow(maturity, model.beta));
    return {1.0 - leading, leading, 0.0, ExpansionRegime::LargeT};
}

IvAsymptote iv_longterm(const AnomalousModel& model, double strike, double maturity,
                        const QuadratureConfig& quad) {
    if (!(model.beta < 1.0))
        throw std::invalid_argument("iv_longterm: the expansion needs beta < 1");
    double c_beta = (model.kind == TimeChangeKind::DRD)
                        ? expansion_constant(model.levy, strike, model.beta, quad)
                        : expansion_constant(model.levy, strike, 1.0, quad);
    double g = std::tgamma(1.0 - model.beta);
    double t2b = std::pow(maturity, 2.0 * model.beta);
    double w_arg = 2.0 * strike * t2b * g * g / (kPi * c_beta * c_beta);
    double w_form = 2.0 * std::sqrt(lambert_w0(w_arg) / maturity);
    double m_const = std::sqrt(2.0 * strike) * g / (c_beta * std::sqrt(kPi));
    double log_form = 2.0 * std::sqrt(std::log(m_const * m_const * t2b) / maturity);
    return {w_form, log_form};
}

double skew_longterm(const AnomalousModel& model, double strike, double maturity,
                     const QuadratureConfig& quad) {
    double sigma = iv_longterm(model, strike, maturity, quad).w_form;
    double z = sigma * std::sqrt(maturity);
    double d = -std::log(strike) / z + 0.5 * z;
    OptionSpec dig(OptionKind::Digital, strike, maturity);
    double q = price_digital(model, dig, unit_market(), quad);
    double bracket = 2.0 / (maturity * sigma) *
                     (1.0 + (2.0 * std::log(strike) - 4.0) / (maturity * sigma * sigma));
    return bracket - q / (std::sqrt(maturity) * norm_pdf(d));
}

double skew_shortterm_atm(const AnomalousModel& model, double maturity,
                          const QuadratureConfig& quad) {
    OptionSpec call(OptionKind::Call, 1.0, maturity);
    double c = price_call(model, call, unit_market(), quad);
    double sigma = implied_vol(c, call, unit_market());
    OptionSpec dig(OptionKind::Digital, 1.0, maturity);
    double q = price_digital(model, dig, unit_market(), quad);
    double root_2pi = std::sqrt(2.0 * kPi);
    return std::sqrt(2.0 * kPi / maturity) *
           (0.5 - q - sigma * std::sqrt(maturity) / (2.0 * root_2pi));
}

double digital_shorttime_factor(double beta, double eps) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("digital_shorttime_factor: beta must lie in (0,1)");
    if (!(eps > 0.0) || eps > 0.5)
        throw std::invalid_argument("digital_shorttime_factor: eps must lie in (0, 1/2]");
    return std::exp(std::lgamma(beta + eps) - std::lgamma(beta) - std::lgamma(1.0 + eps));
}

} // namespace anomdiff
