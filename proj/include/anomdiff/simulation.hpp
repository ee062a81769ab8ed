#pragma once

#include "anomdiff/anomalous_models.hpp"
#include "anomdiff/pricing.hpp"
#include "anomdiff/rng.hpp"

#include <cstdint>
#include <vector>

namespace anomdiff {

/// Uniform calendar grid covering [0, horizon].
struct PathGrid {
    double dt;
    double horizon;

    PathGrid(double step, double t_end);
    std::vector<double> times() const;
};

struct MCConfig {
    int n_paths = 100000;
    std::uint64_t seed = 1;
    bool antithetic = false;
};

/// One simulated path on the calendar grid: the subordinator L, its inverse
/// H, the last-passage clock LH <= t, the backward renewal time V = t - LH,
/// and the log-return path Y.
struct PathSample {
    std::vector<double> times;
    std::vector<double> L;
    std::vector<double> H;
    std::vector<double> LH;
    std::vector<double> V;
    std::vector<double> Y;
};

/// Subordinator path on its own uniform grid of spacing ds.
struct SubordinatorPath {
    double ds;
    std::vector<double> values; // values[j] = L at s = j ds, non-decreasing
};

/// Stable subordinator with E[exp(-s L_t)] = exp(-t s^beta), simulated to
/// s = n_steps * ds by i.i.d. Kanter increments.
SubordinatorPath sample_stable_subordinator(double beta, double ds, int n_steps, Rng& rng);

/// H_t = inf{s : L_s > t} on the discrete path (overestimates by at most ds).
std::vector<double> invert_path(const SubordinatorPath& L, const std::vector<double>& times);

/// LH_t = L at the grid point just before the passage, so LH_t <= t always.
std::vector<double> last_passage(const SubordinatorPath& L, const std::vector<double>& H);

/// Exact single-time draw of H_t via H_t = (t / S)^beta with S unit stable.
double sample_h_marginal(double beta, double t, Rng& rng);
std::vector<double> sample_h_marginal(double beta, double t, int n, std::uint64_t seed);

/// Exact draw of the last-passage clock t Beta(beta, 1-beta).
double sample_drd_clock(double beta, double t, Rng& rng);
std::vector<double> sample_drd_clock(double beta, double t, int n, std::uint64_t seed);

/// Path-based draws of H_t (last_passage=false) or LH_t (true).
std::vector<double> sample_clock_path_draws(double beta, double t, double ds, int n,
                                            std::uint64_t seed, bool last_passage);

/// Joint path-based draws of the clock at two times, for covariance tests.
std::vector<std::pair<double, double>> sample_clock_pairs(double beta, double t1, double t2,
                                                          double ds, int n, std::uint64_t seed,
                                                          bool last_passage);

/// Exact driver increment over a duration h (BM, VG, NIG; CGMY unsupported).
double levy_increment(const LevyModel& model, double h, Rng& rng);

struct McPrice {
    double price;
    double std_error;
};

/// Exact-marginal Monte Carlo price: SL draws H_T, DRD draws T Beta(beta,1-beta),
/// then one driver increment of that duration.
McPrice mc_price(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                 const MCConfig& mc);

/// Full path set on the given grid (Y follows H for SL, LH for DRD).
std::vector<PathSample> simulate_paths(const AnomalousModel& model, const PathGrid& grid,
                                       const MCConfig& mc);

struct IncrementStats {
    double covariance;    ///< Cov(Y_{t+h} - Y_t, Y_t)
    double covariance_se;
    double mean_increment;
    double mean_se;
};

/// Joint statistics of (Y_t, Y_{t+h} - Y_t) from path-based clocks.
IncrementStats increment_statistics(const AnomalousModel& model, double t, double h,
                                    const MCConfig& mc, double ds = 5e-4);

enum class CtrwCoupling { Independent, Coupled };
enum class CtrwWaits { HeavyTail, Exponential };

/// Terminal values of the renewal random walk at the given scale. Heavy-tail
/// waits are Pareto with the slowly-varying constant chosen so the rescaled
/// renewal sums converge to the standard beta-stable subordinator; innovations
/// are exact driver increments over 1/c (independent case) or over the
/// preceding wait (coupled case).
std::vector<double> ctrw_terminal_samples(double beta, const LevyModel& driver, double scale_c,
                                          double horizon, int n, std::uint64_t seed,
                                          CtrwCoupling coupling,
                                          CtrwWaits waits = CtrwWaits::HeavyTail);

} // namespace anomdiff
