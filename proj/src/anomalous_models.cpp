#include "anomdiff/anomalous_models.hpp"

#include <cmath>
#include <stdexcept>

namespace anomdiff {

namespace {
using cplx = std::complex<double>;
}

AnomalousModel::AnomalousModel(LevyModel levy_model, double beta_index, TimeChangeKind time_change)
    : levy(std::move(levy_model)), beta(beta_index), kind(time_change) {
    if (kind == TimeChangeKind::Levy) beta = 1.0;
    if (!(beta > 0.0) || beta > 1.0)
        throw std::invalid_argument("AnomalousModel: beta must lie in (0, 1]");
}

std::complex<double> char_function(const AnomalousModel& model, cplx z, double t,
                                   const EvalPolicy& policy) {
    if (t < 0.0) throw std::invalid_argument("char_function: negative time");
    if (t == 0.0) return {1.0, 0.0};
    cplx psi = model.levy.char_exponent(z);
    if (model.kind == TimeChangeKind::Levy || model.beta == 1.0) return std::exp(-t * psi);
    if (model.kind == TimeChangeKind::SL)
        return mittag_leffler(model.beta, -psi * std::pow(t, model.beta), policy);
    return kummer_1f1(model.beta, 1.0, -t * psi, policy);
}

std::complex<double> flt_value(const AnomalousModel& model, cplx z, cplx s) {
    if (!(s.real() > 0.0)) throw std::invalid_argument("flt_value: Re(s) must be positive");
    cplx psi = model.levy.char_exponent(z);
    if (model.kind == TimeChangeKind::Levy || model.beta == 1.0) return 1.0 / (s + psi);
    if (model.kind == TimeChangeKind::SL) {
        cplx sb = std::pow(s, model.beta);
        return sb / s / (sb + psi);
    }
    return std::pow(s, model.beta - 1.0) * std::pow(s + psi, -model.beta);
}

YCumulants timechanged_cumulants(const Cumulants& k, const TimeChangeCumulants& tau) {
    YCumulants y;
    y.k1 = tau.t1 * k.k1;
    y.k2 = tau.t1 * k.k2 + k.k1 * k.k1 * tau.t2;
    y.k3 = tau.t1 * k.k3 + 3.0 * k.k1 * k.k2 * tau.t2 + k.k1 * k.k1 * k.k1 * tau.t3;
    y.k4 = (3.0 * k.k2 * k.k2 + 4.0 * k.k1 * k.k3) * tau.t2 + 6.0 * k.k1 * k.k1 * k.k2 * tau.t3 +
           k.k4 * tau.t1 + std::pow(k.k1, 4) * tau.t4;
    if (y.k2 > 0.0) {
        y.skew = y.k3 / std::pow(y.k2, 1.5);
        y.kurt = y.k4 / (y.k2 * y.k2);
    }
    return y;
}

TimeChangeCumulants beta_clock_cumulants(double beta, double t) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("beta_clock_cumulants: beta must lie in (0, 1)");
    if (t < 0.0) throw std::invalid_argument("beta_clock_cumulants: negative time");
    double om = 1.0 - beta;
    TimeChangeCumulants tau;
    tau.t1 = beta * t;
    tau.t2 = 0.5 * om * beta * t * t;
    tau.t3 = -om * beta * (2.0 * beta - 1.0) * t * t * t / 3.0;
    // fourth cumulant of t Beta(beta, 1-beta); the fourth central moment is
    // tau4 + 3 tau2^2 = beta(1-beta)(5 beta^2 - 5 beta + 2) t^4 / 8
    tau.t4 = beta / 8.0 * om * (2.0 - 11.0 * om * beta) * std::pow(t, 4);
    return tau;
}

TimeChangeCumulants sl_clock_cumulants(double beta, double t) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("sl_clock_cumulants: beta must lie in (0, 1)");
    if (t < 0.0) throw std::invalid_argument("sl_clock_cumulants: negative time");
    // raw moments E[H_t^n] = t^(beta n) n! / Gamma(beta n + 1)
    double m1 = std::pow(t, beta) / std::tgamma(beta + 1.0);
    double m2 = 2.0 * std::pow(t, 2.0 * beta) / std::tgamma(2.0 * beta + 1.0);
    double m3 = 6.0 * std::pow(t, 3.0 * beta) / std::tgamma(3.0 * beta + 1.0);
    double m4 = 24.0 * std::pow(t, 4.0 * beta) / std::tgamma(4.0 * beta + 1.0);
    TimeChangeCumulants tau;
    tau.t1 = m1;
    tau.t2 = m2 - m1 * m1;
    tau.t3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
    tau.t4 = m4 - 4.0 * m1 * m3 - 3.0 * m2 * m2 + 12.0 * m1 * m1 * m2 - 6.0 * std::pow(m1, 4);
    return tau;
}

YCumulants drd_cumulants(const AnomalousModel& model, double t) {
    if (model.kind != TimeChangeKind::DRD)
        throw std::invalid_argument("drd_cumulants: model kind must be DRD");
    Cumulants k = model.levy.cumulants();
    double b = model.beta, om = 1.0 - b;
    double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    YCumulants y;
    y.k1 = b * k.k1 * t;
    y.k2 = b * k.k2 * t + 0.5 * k.k1 * k.k1 * om * b * t2;
    y.k3 = b * k.k3 * t + 1.5 * k.k1 * k.k2 * om * b * t2 -
           std::pow(k.k1, 3) / 3.0 * om * b * (2.0 * b - 1.0) * t3;
    y.k4 = b * k.k4 * t + 0.5 * (4.0 * k.k1 * k.k3 + 3.0 * k.k2 * k.k2) * b * om * t2 -
           2.0 * om * b * (2.0 * b - 1.0) * k.k1 * k.k1 * k.k2 * t3 +
           std::pow(k.k1, 4) / 8.0 * om * b * (2.0 - 11.0 * b * om) * t4;
    if (y.k2 > 0.0) {
        y.skew = y.k3 / std::pow(y.k2, 1.5);
        y.kurt = y.k4 / (y.k2 * y.k2);
    }
    return y;
}

DrdMomentLimits drd_moment_limits(double beta, const Cumulants& k) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("drd_moment_limits: beta must lie in (0, 1)");
    if (!(k.k2 > 0.0)) throw std::invalid_argument("drd_moment_limits: k2 must be positive");
    double om = 1.0 - beta;
    double sgn = (k.k1 > 0.0) - (k.k1 < 0.0);
    DrdMomentLimits lim;
    lim.skew_inf = 2.0 * std::sqrt(2.0) / 3.0 * (1.0 - 2.0 * beta) / std::sqrt(om * beta) * sgn;
    lim.kurt_inf = 1.0 / (beta * om) - 5.5;
    lim.skew_short_coeff = k.k3 / std::sqrt(beta * std::pow(k.k2, 3));
    lim.kurt_short_coeff = k.k4 / (beta * k.k2 * k.k2);
    return lim;
}

} // namespace anomdiff
