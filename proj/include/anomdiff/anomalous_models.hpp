#pragma once

#include "anomdiff/levy_models.hpp"
#include "anomdiff/special_functions.hpp"

#include <complex>

namespace anomdiff {

enum class TimeChangeKind { Levy, SL, DRD };

/// First four cumulants of the operational clock at a fixed horizon.
struct TimeChangeCumulants {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
    double t4 = 0.0;
};

/// Cumulants of the time-changed log return Y_t, with normalized shape stats.
struct YCumulants {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;
    double skew = 0.0; ///< k3 / k2^(3/2)
    double kurt = 0.0; ///< excess, k4 / k2^2
};

/// A Levy driver plus duration index beta and the kind of time change.
/// kind == Levy forces beta = 1 semantics (the clock degenerates to t).
struct AnomalousModel {
    LevyModel levy;
    double beta;
    TimeChangeKind kind;

    AnomalousModel(LevyModel levy_model, double beta_index, TimeChangeKind time_change);

    AnomalousModel compensated() const {
        return {levy.risk_neutral_compensate(), beta, kind};
    }
};

/// Characteristic function Phi_t(z) = E[exp(-i z Y_t)]:
///   SL  -> E_beta(-psi_X(z) t^beta)
///   DRD -> 1F1(beta, 1; -t psi_X(z))
///   Levy/beta=1 -> exp(-t psi_X(z))
/// Phi_0 is identically 1 (stochastic continuity).
std::complex<double> char_function(const AnomalousModel& model, std::complex<double> z,
                                   double t, const EvalPolicy& policy = {});

/// Laplace transform in t of Phi_t(z), used as the inversion oracle:
///   SL  -> s^(beta-1) / (s^beta + psi_X(z))
///   DRD -> s^(beta-1) / (s + psi_X(z))^beta
std::complex<double> flt_value(const AnomalousModel& model, std::complex<double> z,
                               std::complex<double> s);

/// Cumulants of X_T for an independent time change T (composition formulas).
YCumulants timechanged_cumulants(const Cumulants& k, const TimeChangeCumulants& tau);

/// Cumulants of the last-passage clock t Beta(beta, 1-beta).
TimeChangeCumulants beta_clock_cumulants(double beta, double t);

/// Cumulants of the inverse-stable clock H_t, from E[H_t^n] = t^(beta n) n!/Gamma(beta n + 1).
TimeChangeCumulants sl_clock_cumulants(double beta, double t);

/// Closed-form DRD cumulant polynomials in t; identical to
/// timechanged_cumulants(levy.cumulants(), beta_clock_cumulants(beta, t)).
YCumulants drd_cumulants(const AnomalousModel& model, double t);

struct DrdMomentLimits {
    double skew_inf;         ///< lim Skew(Y_t), t -> inf
    double kurt_inf;         ///< lim Kurt(Y_t), t -> inf
    double skew_short_coeff; ///< lim sqrt(t) Skew(Y_t), t -> 0
    double kurt_short_coeff; ///< lim t Kurt(Y_t), t -> 0
};

DrdMomentLimits drd_moment_limits(double beta, const Cumulants& k);

} // namespace anomdiff
