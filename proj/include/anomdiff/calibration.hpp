#pragma once

#include "anomdiff/anomalous_models.hpp"
#include "anomdiff/pricing.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace anomdiff {

/// Complete m x n grid of Call quotes.
class QuoteSet {
  public:
    QuoteSet(std::vector<double> strikes, std::vector<double> maturities,
             std::vector<std::vector<double>> prices, MarketSetup market);

    const std::vector<double>& strikes() const { return strikes_; }
    const std::vector<double>& maturities() const { return maturities_; }
    const std::vector<std::vector<double>>& prices() const { return prices_; }
    const MarketSetup& market() const { return market_; }
    std::size_t size() const { return strikes_.size() * maturities_.size(); }

  private:
    std::vector<double> strikes_;
    std::vector<double> maturities_;
    std::vector<std::vector<double>> prices_; // prices_[j][i] at (maturities[j], strikes[i])
    MarketSetup market_;
};

struct DEConfig {
    int generations = 100;
    int population = 0; ///< 0 = 10 x dimension
    double mutation = 0.5;
    double crossover = 0.95;
    int polish_every = 10;
    int polish_iters = 100;
    double polish_tol = 1e-3; ///< step-size stop, relative to the bound range
    std::vector<std::pair<double, double>> bounds;
    std::uint64_t seed = 1;

    void validate() const;
};

struct CalibrationResult {
    std::string family;
    std::vector<double> params; ///< driver parameters (kappa, sigma, theta)
    double beta = 1.0;
    double rmse = 0.0;
    std::vector<double> history; ///< best objective after each generation
    std::uint64_t evaluations = 0;
};

enum class DriverFamily { VG, NIG };

struct ModelFamily {
    TimeChangeKind kind;
    DriverFamily driver;

    std::string name() const;
    int dimension() const { return kind == TimeChangeKind::Levy ? 3 : 4; }
    std::vector<std::pair<double, double>> default_bounds() const;
};

/// Builds the compensated model for a candidate vector (kappa, sigma, theta[, beta]).
AnomalousModel make_family_model(const ModelFamily& family, const std::vector<double>& params);

/// Root mean squared price error over the quote grid; +infinity outside the
/// feasible region (bounds or moment-condition violations), never a throw.
double rmse_objective(const ModelFamily& family, const std::vector<double>& params,
                      const QuoteSet& quotes, const QuadratureConfig& quad,
                      const std::vector<std::pair<double, double>>& bounds);

/// Classic DE/rand/1/bin with a coordinate pattern-search polish (two
/// searchers) every polish_every generations. The initial population counts
/// as generation 1, so DE evaluations total exactly generations x population.
CalibrationResult differential_evolution(
    const std::function<double(const std::vector<double>&)>& objective, const DEConfig& config);

enum class Scenario { Baseline, Shift12m, Shift18m };

struct ScenarioConfig {
    double short_leg = 1.0 / 12.0; ///< kept fixed across scenarios
    double long_leg = 0.5;         ///< smile that the shifted scenarios relabel
    double strike_lo = 80.0;
    double strike_step = 5.0;
    int n_strikes = 8;
};

/// Synthetic market quotes: the base Levy smile at the two legs; shifted
/// scenarios relabel the long-leg smile to 1.0 or 1.5 years.
QuoteSet synthetic_scenario(const LevyModel& base, Scenario scenario, const MarketSetup& market,
                            const ScenarioConfig& cfg = {},
                            const QuadratureConfig& quad = QuadratureConfig::paper());

CalibrationResult calibrate(const ModelFamily& family, const QuoteSet& quotes, DEConfig de,
                            const QuadratureConfig& quad = QuadratureConfig::paper());

} // namespace anomdiff
