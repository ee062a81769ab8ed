#include "anomdiff/calibration.hpp"

#include "anomdiff/parallel.hpp"
#include "anomdiff/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace anomdiff {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

QuoteSet::QuoteSet(std::vector<double> strikes, std::vector<double> maturities,
                   std::vector<std::vector<double>> prices, MarketSetup market)
    : strikes_(std::move(strikes)), maturities_(std::move(maturities)),
      prices_(std::move(prices)), market_(market) {
    if (strikes_.empty() || maturities_.empty())
        throw std::invalid_argument("QuoteSet: empty grid");
    if (prices_.size() != maturities_.size())
        throw std::invalid_argument("QuoteSet: price rows must match maturities");
    for (std::size_t j = 0; j < maturities_.size(); ++j) {
        if (prices_[j].size() != strikes_.size())
            throw std::invalid_argument("QuoteSet: incomplete price grid");
        for (std::size_t i = 0; i < strikes_.size(); ++i) {
            double lb = std::max(0.0, market_.spot - strikes_[i] * std::exp(-market_.rate *
                                                                            maturities_[j]));
            if (prices_[j][i] < lb - 1e-9 || prices_[j][i] > market_.spot + 1e-9)
                throw std::invalid_argument("QuoteSet: price outside no-arbitrage bounds");
        }
    }
}

void DEConfig::validate() const {
    if (generations < 1) throw std::invalid_argument("DEConfig: generations must be >= 1");
    if (!(mutation > 0.0) || !(mutation < 2.0))
        throw std::invalid_argument("DEConfig: mutation must lie in (0, 2)");
    if (crossover < 0.0 || crossover > 1.0)
        throw std::invalid_argument("DEConfig: crossover must lie in [0, 1]");
    if (bounds.empty()) throw std::invalid_argument("DEConfig: bounds must be provided");
    int np = population > 0 ? population : 10 * static_cast<int>(bounds.size());
    if (np < 4) throw std::invalid_argument("DEConfig: population must be >= 4");
    for (const auto& [lo, hi] : bounds)
        if (!(lo < hi)) throw std::invalid_argument("DEConfig: invalid bound interval");
}

std::string ModelFamily::name() const {
    std::string k = kind == TimeChangeKind::Levy ? "levy" : (kind == TimeChangeKind::SL ? "sl" : "drd");
    return k + "-" + (driver == DriverFamily::VG ? "vg" : "nig");
}

std::vector<std::pair<double, double>> ModelFamily::default_bounds() const {
    std::vector<std::pair<double, double>> b = {{0.01, 100.0}, {0.01, 1.5}, {-1.5, 1.5}};
    if (kind != TimeChangeKind::Levy) b.push_back({0.05, 1.0});
    return b;
}

AnomalousModel make_family_model(const ModelFamily& family, const std::vector<double>& params) {
    if (params.size() != static_cast<std::size_t>(family.dimension()))
        throw std::invalid_argument("make_family_model: wrong parameter count");
    LevyModel::Params p = family.driver == DriverFamily::VG
                              ? LevyModel::Params(VarianceGamma{params[0], params[1], params[2]})
                              : LevyModel::Params(NormalInverseGaussian{params[0], params[1], params[2]});
    LevyModel levy = LevyModel(p).risk_neutral_compensate();
    double beta = family.kind == TimeChangeKind::Levy ? 1.0 : params[3];
    return AnomalousModel(levy, beta, family.kind);
}

double rmse_objective(const ModelFamily& family, const std::vector<double>& params,
                      const QuoteSet& quotes, const QuadratureConfig& quad,
                      const std::vector<std::pair<double, double>>& bounds) {
    for (std::size_t j = 0; j < params.size(); ++j) {
        if (j < bounds.size() && (params[j] < bounds[j].first || params[j] > bounds[j].second))
            return kInf;
        if (!std::isfinite(params[j])) return kInf;
    }
    try {
        AnomalousModel model = make_family_model(family, params);
        double sq = 0.0;
        for (std::size_t j = 0; j < quotes.maturities().size(); ++j) {
            auto prices = price_call_grid(model, quotes.strikes(), quotes.maturities()[j],
                                          quotes.market(), quad);
            for (std::size_t i = 0; i < prices.size(); ++i) {
                double d = prices[i] - quotes.prices()[j][i];
                sq += d * d;
            }
        }
        return std::sqrt(sq / quotes.size());
    } catch (const std::exception&) {
        return kInf; // infeasible parameter region
    }
}

namespace {

struct PolishOutcome {
    std::vector<double> x;
    double value;
    std::uint64_t evals;
};

PolishOutcome pattern_search(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> x, double fx,
                             const std::vector<std::pair<double, double>>& bounds, int max_iters,
                             double tol) {
    const std::size_t d = bounds.size();
    std::vector<double> step(d);
    for (std::size_t j = 0; j < d; ++j) step[j] = 0.05 * (bounds[j].second - bounds[j].first);
    std::uint64_t evals = 0;

    for (int it = 0; it < max_iters; ++it) {
        double rel = 0.0;
        for (std::size_t j = 0; j < d; ++j)
            rel = std::max(rel, step[j] / (bounds[j].second - bounds[j].first));
        if (rel < tol) break;

        std::vector<std::vector<double>> probes;
        for (std::size_t j = 0; j < d; ++j) {
            for (double sgn : {+1.0, -1.0}) {
                std::vector<double> p = x;
                p[j] = std::clamp(p[j] + sgn * step[j], bounds[j].first, bounds[j].second);
                probes.push_back(std::move(p));
            }
        }
        std::vector<double> vals(probes.size());
        parallel_for(probes.size(), [&](std::size_t i) { vals[i] = objective(probes[i]); });
        evals += probes.size();

        std::size_t best = probes.size();
        double best_val = fx;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            if (vals[i] < best_val) {
                best_val = vals[i];
                best = i;
            }
        }
        if (best == probes.size()) {
            for (auto& s : step) s *= 0.5;
        } else {
            x = probes[best];
            fx = best_val;
        }
    }
    return {std::move(x), fx, evals};
}

} // namespace

CalibrationResult differential_evolution(
    const std::function<double(const std::vector<double>&)>& objective, const DEConfig& config) {
    config.validate();
    const std::size_t d = config.bounds.size();
    const int np = config.population > 0 ? config.population : 10 * static_cast<int>(d);

    CalibrationResult result;
    std::vector<std::vector<double>> pop(np, std::vector<double>(d));
    std::vector<double> fitness(np);

    // generation 1: the uniformly sampled initial population
    for (int i = 0; i < np; ++i) {
        Rng rng = Rng::substream(config.seed, i);
        for (std::size_t j = 0; j < d; ++j) {
            auto [lo, hi] = config.bounds[j];
            pop[i][j] = lo + rng.uniform() * (hi - lo);
        }
    }
    parallel_for(np, [&](std::size_t i) { fitness[i] = objective(pop[i]); });
    result.evaluations = np;

    auto best_index = [&] {
        std::size_t b = 0;
        for (int i = 1; i < np; ++i)
            if (fitness[i] < fitness[b]) b = i;
        return b;
    };
    result.history.push_back(fitness[best_index()]);

    auto run_polish = [&](int gen) {
        std::size_t b = best_index();
        // two searchers: the incumbent and a perturbed copy
        Rng rng = Rng::substream(config.seed, 0xb0'0000 + gen);
        std::vector<double> alt = pop[b];
        for (std::size_t j = 0; j < d; ++j) {
            auto [lo, hi] = config.bounds[j];
            alt[j] = std::clamp(alt[j] + 0.1 * (hi - lo) * (2.0 * rng.uniform() - 1.0), lo, hi);
        }
        double alt_fx = objective(alt);
        result.evaluations += 1;
        PolishOutcome a = pattern_search(objective, pop[b], fitness[b], config.bounds,
                                         config.polish_iters, config.polish_tol);
        PolishOutcome c = pattern_search(objective, std::move(alt), alt_fx, config.bounds,
                                         config.polish_iters, config.polish_tol);
        result.evaluations += a.evals + c.evals;
        const PolishOutcome& winner = (a.value <= c.value) ? a : c;
        if (winner.value < fitness[b]) {
            pop[b] = winner.x;
            fitness[b] = winner.value;
        }
    };

    for (int gen = 2; gen <= config.generations; ++gen) {
        std::vector<std::vector<double>> trials(np, std::vector<double>(d));
        for (int i = 0; i < np; ++i) {
            Rng rng = Rng::substream(config.seed, 0x5e'0000ULL + 1000003ULL * gen + i);
            int r1, r2, r3;
            do { r1 = static_cast<int>(rng.uniform() * np); } while (r1 == i || r1 >= np);
            do { r2 = static_cast<int>(rng.uniform() * np); } while (r2 == i || r2 == r1 || r2 >= np);
            do { r3 = static_cast<int>(rng.uniform() * np); } while (r3 == i || r3 == r1 || r3 == r2 || r3 >= np);
            auto j_rand = static_cast<std::size_t>(rng.uniform() * d);
            for (std::size_t j = 0; j < d; ++j) {
                double mutant = pop[r1][j] + config.mutation * (pop[r2][j] - pop[r3][j]);
                trials[i][j] = (rng.uniform() < config.crossover || j == j_rand) ? mutant : pop[i][j];
            }
        }
        std::vector<double> trial_fit(np);
        parallel_for(np, [&](std::size_t i) { trial_fit[i] = objective(trials[i]); });
        result.evaluations += np;
        for (int i = 0; i < np; ++i) {
            if (trial_fit[i] <= fitness[i]) {
                pop[i] = std::move(trials[i]);
                fitness[i] = trial_fit[i];
            }
        }
        if (config.polish_every > 0 && gen % config.polish_every == 0) run_polish(gen);
        result.history.push_back(fitness[best_index()]);
    }

    std::size_t b = best_index();
    result.params = pop[b];
    result.rmse = fitness[b];
    return result;
}

QuoteSet synthetic_scenario(const LevyModel& base, Scenario scenario, const MarketSetup& market,
                            const ScenarioConfig& cfg, const QuadratureConfig& quad) {
    std::vector<double> strikes(cfg.n_strikes);
    for (int i = 0; i < cfg.n_strikes; ++i) strikes[i] = cfg.strike_lo + i * cfg.strike_step;

    AnomalousModel model(base.risk_neutral_compensate(), 1.0, TimeChangeKind::Levy);
    auto short_prices = price_call_grid(model, strikes, cfg.short_leg, market, quad);
    auto long_prices = price_call_grid(model, strikes, cfg.long_leg, market, quad);

    double relabel = cfg.long_leg;
    if (scenario == Scenario::Shift12m) relabel = 1.0;
    if (scenario == Scenario::Shift18m) relabel = 1.5;

    return QuoteSet(strikes, {cfg.short_leg, relabel}, {short_prices, long_prices}, market);
}

CalibrationResult calibrate(const ModelFamily& family, const QuoteSet& quotes, DEConfig de,
                            const QuadratureConfig& quad) {
    if (de.bounds.empty()) de.bounds = family.default_bounds();
    if (de.bounds.size() != static_cast<std::size_t>(family.dimension()))
        throw std::invalid_argument("calibrate: bounds dimension mismatch");
    auto objective = [&](const std::vector<double>& p) {
        return rmse_objective(family, p, quotes, quad, de.bounds);
    };
    CalibrationResult result = differential_evolution(objective, de);
    result.family = family.name();
    if (family.kind != TimeChangeKind::Levy) {
        result.beta = result.params[3];
        result.params.resize(3);
    } else {
        result.beta = 1.0;
    }
    return result;
}

} // namespace anomdiff
