#pragma once

#include "anomdiff/anomalous_models.hpp"

#include <vector>

namespace anomdiff {

struct MarketSetup {
    double spot;
    double rate;

    MarketSetup(double s0, double r);
};

enum class OptionKind { Call, Put, Digital };

struct OptionSpec {
    OptionKind kind;
    double strike;
    double maturity;

    OptionSpec(OptionKind k, double strike_px, double expiry);
};

/// Controls for the Lewis contour quadrature.
struct QuadratureConfig {
    double truncation = 6000.0;  ///< half-width of the u integration range
    int nodes = 40;              ///< Gauss-Legendre nodes per panel
    double contour = 0.5;        ///< Im-level of the Call/Put contour, in (0,1)
    int panels = 20;             ///< geometric panels on the half line (1 = single global rule)
    double digital_contour = 0.25;
    bool refine_check = false;   ///< re-price with doubled nodes and compare
    double refine_tol = 1e-6;

    /// The coarse single-rule setting used for the table reproductions
    /// (global Gauss-Legendre on [-200, 200] with 50 nodes).
    static QuadratureConfig paper() { return {200.0, 50, 0.5, 1, 0.25, false, 1e-6}; }
    static QuadratureConfig accurate() { return {}; }

    void validate() const;
};

double price_call(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                  const QuadratureConfig& quad);
double price_put(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                 const QuadratureConfig& quad);
double price_digital(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                     const QuadratureConfig& quad);
double price(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
             const QuadratureConfig& quad);

/// Call prices for several strikes at one maturity, sharing the CF evaluations.
std::vector<double> price_call_grid(const AnomalousModel& model, const std::vector<double>& strikes,
                                    double maturity, const MarketSetup& mkt,
                                    const QuadratureConfig& quad);

double bs_price(double strike, double maturity, double sigma, const MarketSetup& mkt,
                OptionKind kind = OptionKind::Call);
double bs_vega(double strike, double maturity, double sigma, const MarketSetup& mkt);

/// Black-Scholes implied volatility of a Call or Put price (vega-Newton with
/// a bisection bracket). Prices at the no-arbitrage lower bound map to 0.
double implied_vol(double price, const OptionSpec& opt, const MarketSetup& mkt);

/// d sigma / d K by central differences (relative step 1e-4), cross-checked
/// against the analytic representation through the digital price; throws if
/// the two routes disagree beyond 1e-4 relative.
double skew(const AnomalousModel& model, double strike, double maturity, const MarketSetup& mkt,
            const QuadratureConfig& quad);

struct SurfacePoint {
    double strike;
    double maturity;
    double price;
    double iv;
};

/// Full grid, maturity-major with strikes ascending.
std::vector<SurfacePoint> surface(const AnomalousModel& model, const std::vector<double>& strikes,
                                  const std::vector<double>& maturities, const MarketSetup& mkt,
                                  const QuadratureConfig& quad);

double norm_cdf(double x);
double norm_pdf(double x);

} // namespace anomdiff
