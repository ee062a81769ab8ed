#pragma once

#include <complex>
#include <string>
#include <variant>

namespace anomdiff {

// Parametric Levy drivers. Sign convention throughout:
//   E[exp(-i z X_t)] = exp(-t psi_X(z)),
// so a risk-neutral (compensated) model satisfies psi_X(i) = 0. VG and NIG
// use the (kappa, sigma, theta) subordinated-Brownian parametrization with
// unit-mean clocks:
//   psi_VG(z)  = i z b + (1/kappa) log(1 + i z theta kappa + z^2 sigma^2 kappa / 2)
//   psi_NIG(z) = i z b + (1/kappa) (sqrt(1 + 2 i z theta kappa + z^2 sigma^2 kappa) - 1)
//   psi_CGMY(z)= i z b - C Gamma(-Y) [(M+iz)^Y - M^Y + (G-iz)^Y - G^Y]
// with b the drift compensator.

struct BrownianMotion {
    double sigma;
};

struct VarianceGamma {
    double kappa;
    double sigma;
    double theta;
};

struct NormalInverseGaussian {
    double kappa;
    double sigma;
    double theta;
};

struct Cgmy {
    double c;
    double g;
    double m;
    double y;
};

/// First four cumulants of X_1.
struct Cumulants {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;
};

class LevyModel {
  public:
    using Params = std::variant<BrownianMotion, VarianceGamma, NormalInverseGaussian, Cgmy>;

    /// Validates parameter positivity and the exponential-moment condition
    /// that makes E[exp(X_1)] finite (M > 1 for CGMY and its VG/NIG analogues).
    explicit LevyModel(Params params, double drift_compensator = 0.0);

    /// psi_X(z); throws std::domain_error if Im(z) leaves the regularity strip.
    std::complex<double> char_exponent(std::complex<double> z) const;

    /// Same model with the drift solving psi_X(i) = 0 in closed form.
    LevyModel risk_neutral_compensate() const;

    /// Closed-form cumulants of X_1 (reflecting the current drift).
    Cumulants cumulants() const;

    /// Open interval of Im(z) on which psi_X is analytic.
    std::pair<double, double> regularity_strip() const;

    double drift_compensator() const { return drift_; }
    const Params& params() const { return params_; }
    bool is_compensated(double tol = 1e-10) const;

    /// Short tag used in JSON and CLI output: "bm", "vg", "nig" or "cgmy".
    std::string variant_name() const;

  private:
    Params params_;
    double drift_;
};

} // namespace anomdiff
