#pragma once

#include "anomdiff/anomalous_models.hpp"
#include "anomdiff/pricing.hpp"

namespace anomdiff {

// Large- and small-maturity expansions of normalized Call prices (S0 = 1,
// r = 0). The large-T price behaves like
//   C(K,T) = 1 - C_beta / (Gamma(1-beta) T^beta) - exponential correction,
// where C_beta is a contour integral against psi^(-beta) (DRD) or psi^(-1)
// (SL), and the correction carries exp(-T psi_X(i/2)) with a saddle-point
// constant c_beta = 4 sqrt(K) / (psi(i/2)^(1-beta) sqrt(2 pi psi''(i/2))).

enum class ExpansionRegime { LargeT, SmallT };

struct ExpansionResult {
    double value;        ///< assembled price approximation
    double leading_term; ///< the algebraic T^(-beta) deficit
    double correction;   ///< the exponentially small deficit (DRD only)
    ExpansionRegime regime;
};

/// Second derivative of psi along the imaginary axis, psi''(i v), which is
/// real and positive for compensated drivers with finite exponential moment.
double psi_second_imag(const LevyModel& model, double v);

/// The contour constant (1/2pi) integral of e^{(iu+1/2) log K} /
/// ((u^2+1/4) psi(u+i/2)^p) du; p = beta gives C_1^beta, p = 1 gives C_2^beta.
double expansion_constant(const LevyModel& model, double strike, double psi_power,
                          const QuadratureConfig& quad = QuadratureConfig::accurate());

ExpansionResult call_expansion_drd(const AnomalousModel& model, double strike, double maturity,
                                   const QuadratureConfig& quad = QuadratureConfig::accurate());

ExpansionResult call_expansion_sl(const AnomalousModel& model, double strike, double maturity,
                                  const QuadratureConfig& quad = QuadratureConfig::accurate());

struct IvAsymptote {
    double w_form;   ///< 2 sqrt(W0(2K T^(2 beta) Gamma(1-beta)^2 / (pi C_beta^2)) / T)
    double log_form; ///< 2 sqrt(log(M^2 T^(2 beta)) / T)
};

IvAsymptote iv_longterm(const AnomalousModel& model, double strike, double maturity,
                        const QuadratureConfig& quad = QuadratureConfig::accurate());

/// Large-T skew expansion evaluated with the Lambert-form implied vol and the
/// quadrature digital price.
double skew_longterm(const AnomalousModel& model, double strike, double maturity,
                     const QuadratureConfig& quad = QuadratureConfig::accurate());

/// Small-T ATM skew expansion sqrt(2pi/T) [1/2 - Q(S_T >= 1) - sigma sqrt(T) /
/// (2 sqrt(2pi))], with sigma the quadrature ATM implied vol.
double skew_shortterm_atm(const AnomalousModel& model, double maturity,
                          const QuadratureConfig& quad = QuadratureConfig::accurate());

/// Beta-moment transfer factor c_{beta,eps} = Gamma(beta+eps) /
/// (Gamma(beta) Gamma(1+eps)) = E[B^eps], B ~ Beta(beta, 1-beta).
double digital_shorttime_factor(double beta, double eps);

} // namespace anomdiff
