#include "anomdiff/simulation.hpp"

#include "anomdiff/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anomdiff {

namespace {

// Location/scale decomposition of one driver increment over duration h:
// X = loc + scale * Z with Z standard normal, conditional on the inner clock.
struct IncrementParts {
    double loc;
    double scale;
};

IncrementParts increment_parts(const LevyModel& model, double h, Rng& rng) {
    const double b = model.drift_compensator();
    if (const auto* bm = std::get_if<BrownianMotion>(&model.params())) {
        return {b * h, bm->sigma * std::sqrt(h)};
    }
    if (const auto* vg = std::get_if<VarianceGamma>(&model.params())) {
        double g = rng.gamma(h / vg->kappa) * vg->kappa;
        return {b * h + vg->theta * g, vg->sigma * std::sqrt(g)};
    }
    if (const auto* nig = std::get_if<NormalInverseGaussian>(&model.params())) {
        double z = rng.inverse_gaussian(h, h * h / nig->kappa);
        return {b * h + nig->theta * z, nig->sigma * std::sqrt(z)};
    }
    throw std::invalid_argument("simulation: CGMY driver has no exact increment sampler");
}

double clock_draw(const AnomalousModel& model, double t, Rng& rng) {
    switch (model.kind) {
        case TimeChangeKind::Levy: return t;
        case TimeChangeKind::SL:
            return model.beta == 1.0 ? t : sample_h_marginal(model.beta, t, rng);
        case TimeChangeKind::DRD:
            return model.beta == 1.0 ? t : sample_drd_clock(model.beta, t, rng);
    }
    throw std::invalid_argument("simulation: unknown time change kind");
}

double payoff_value(const OptionSpec& opt, const MarketSetup& mkt, double x) {
    double st = mkt.spot * std::exp(mkt.rate * opt.maturity + x);
    switch (opt.kind) {
        case OptionKind::Call: return std::max(st - opt.strike, 0.0);
        case OptionKind::Put: return std::max(opt.strike - st, 0.0);
        case OptionKind::Digital: return st >= opt.strike ? 1.0 : 0.0;
    }
    throw std::invalid_argument("simulation: unknown option kind");
}

// Grows a subordinator path until it exceeds `level` (and covers s_min).
SubordinatorPath sample_until_passage(double beta, double ds, double level, double s_min,
                                      Rng& rng) {
    SubordinatorPath path{ds, {0.0}};
    const double inc_scale = std::pow(ds, 1.0 / beta);
    const std::size_t hard_cap = 400000000;
    while (path.values.back() <= level || ds * (path.values.size() - 1) < s_min) {
        path.values.push_back(path.values.back() + inc_scale * rng.stable_subordinator(beta));
        if (path.values.size() > hard_cap)
            throw std::runtime_error("sample_until_passage: path budget exceeded");
    }
    return path;
}

} // namespace

PathGrid::PathGrid(double step, double t_end) : dt(step), horizon(t_end) {
    if (!(dt > 0.0)) throw std::invalid_argument("PathGrid: dt must be positive");
    if (!(horizon >= dt)) throw std::invalid_argument("PathGrid: need dt <= horizon");
}

std::vector<double> PathGrid::times() const {
    auto n = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-12));
    std::vector<double> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = k * dt;
    return out;
}

SubordinatorPath sample_stable_subordinator(double beta, double ds, int n_steps, Rng& rng) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("sample_stable_subordinator: beta must lie in (0,1)");
    if (!(ds > 0.0) || n_steps < 1)
        throw std::invalid_argument("sample_stable_subordinator: bad grid");
    SubordinatorPath path{ds, {}};
    path.values.resize(n_steps + 1);
    path.values[0] = 0.0;
    const double inc_scale = std::pow(ds, 1.0 / beta);
    for (int j = 1; j <= n_steps; ++j)
        path.values[j] = path.values[j - 1] + inc_scale * rng.stable_subordinator(beta);
    return path;
}

std::vector<double> invert_path(const SubordinatorPath& L, const std::vector<double>& times) {
    std::vector<double> h(times.size());
    std::size_t j = 0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (k > 0 && times[k] < times[k - 1])
            throw std::invalid_argument("invert_path: times must be non-decreasing");
        while (j < L.values.size() && L.values[j] <= times[k]) ++j;
        if (j == L.values.size())
            throw std::invalid_argument("invert_path: subordinator path too short");
        h[k] = L.ds * j;
    }
    return h;
}

std::vector<double> last_passage(const SubordinatorPath& L, const std::vector<double>& H) {
    std::vector<double> lh(H.size());
    for (std::size_t k = 0; k < H.size(); ++k) {
        auto j = static_cast<std::size_t>(std::llround(H[k] / L.ds));
        lh[k] = (j == 0) ? 0.0 : L.values[j - 1];
    }
    return lh;
}

double sample_h_marginal(double beta, double t, Rng& rng) {
    return std::pow(t / rng.stable_subordinator(beta), beta);
}

std::vector<double> sample_h_marginal(double beta, double t, int n, std::uint64_t seed) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        out[i] = sample_h_marginal(beta, t, rng);
    }
    return out;
}

double sample_drd_clock(double beta, double t, Rng& rng) {
    return t * rng.beta(beta, 1.0 - beta);
}

std::vector<double> sample_drd_clock(double beta, double t, int n, std::uint64_t seed) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::substream(seed, i);
        out[i] = sample_drd_clock(beta, t, rng);
    }
    return out;
}

std::vector<double> sample_clock_path_draws(double beta, double t, double ds, int n,
                                            std::uint64_t seed, bool last_passage_clock) {
    std::vector<double> out(n);
    parallel_for(n, [&](std::size_t i) {
        Rng rng = Rng::substream(seed, i);
        SubordinatorPath path = sample_until_passage(beta, ds, t, 0.0, rng);
        std::size_t j = path.values.size() - 1; // first index with L > t
        out[i] = last_passage_clock ? path.values[j - 1] : ds * j;
    });
    return out;
}

std::vector<std::pair<double, double>> sample_clock_pairs(double beta, double t1, double t2,
                                                          double ds, int n, std::uint64_t seed,
                                                          bool last_passage_clock) {
    if (!(t1 <= t2)) throw std::invalid_argument("sample_clock_pairs: need t1 <= t2");
    std::vector<std::pair<double, double>> out(n);
    parallel_for(n, [&](std::size_t i) {
        Rng rng = Rng::substream(seed, i);
        SubordinatorPath path = sample_until_passage(beta, ds, t2, 0.0, rng);
        std::size_t j2 = path.values.size() - 1;
        std::size_t j1 = j2;
        while (j1 > 0 && path.values[j1 - 1] > t1) --j1;
        // j1 >= 1 always: the path starts at L_0 = 0 <= t1
        if (last_passage_clock)
            out[i] = {path.values[j1 - 1], path.values[j2 - 1]};
        else
            out[i] = {ds * j1, ds * j2};
    });
    return out;
}

double levy_increment(const LevyModel& model, double h, Rng& rng) {
    if (h <= 0.0) return 0.0;
    IncrementParts p = increment_parts(model, h, rng);
    return p.loc + p.scale * rng.normal();
}

McPrice mc_price(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                 const MCConfig& mc) {
    if (mc.n_paths < 1) throw std::invalid_argument("mc_price: n_paths must be >= 1");
    if (std::holds_alternative<Cgmy>(model.levy.params()))
        throw std::invalid_argument("mc_price: CGMY driver has no exact increment sampler");

    const double disc = std::exp(-mkt.rate * opt.maturity);
    const int n_units = mc.antithetic ? (mc.n_paths + 1) / 2 : mc.n_paths;

    std::vector<double> unit_payoff(n_units);
    parallel_for(n_units, [&](std::size_t i) {
        Rng rng = Rng::substream(mc.seed, i);
        double u = clock_draw(model, opt.maturity, rng);
        IncrementParts p = increment_parts(model.levy, u, rng);
        double z = rng.normal();
        if (mc.antithetic) {
            unit_payoff[i] = 0.5 * (payoff_value(opt, mkt, p.loc + p.scale * z) +
                                    payoff_value(opt, mkt, p.loc - p.scale * z));
        } else {
            unit_payoff[i] = payoff_value(opt, mkt, p.loc + p.scale * z);
        }
    });

    double mean = 0.0;
    for (double v : unit_payoff) mean += v;
    mean /= n_units;
    double var = 0.0;
    for (double v : unit_payoff) var += (v - mean) * (v - mean);
    var /= (n_units > 1 ? n_units - 1.0 : 1.0);
    return {disc * mean, disc * std::sqrt(var / n_units)};
}

std::vector<PathSample> simulate_paths(const AnomalousModel& model, const PathGrid& grid,
                                       const MCConfig& mc) {
    const auto times = grid.times();
    std::vector<PathSample> out(mc.n_paths);
    parallel_for(mc.n_paths, [&](std::size_t i) {
        Rng rng = Rng::substream(mc.seed, i);
        PathSample ps;
        ps.times = times;
        const std::size_t n = times.size();

        if (model.kind == TimeChangeKind::Levy || model.beta == 1.0) {
            ps.L = times;
            ps.H = times;
            ps.LH = times;
            ps.V.assign(n, 0.0);
            ps.Y.resize(n);
            ps.Y[0] = 0.0;
            for (std::size_t k = 1; k < n; ++k)
                ps.Y[k] = ps.Y[k - 1] + levy_increment(model.levy, times[k] - times[k - 1], rng);
            out[i] = std::move(ps);
            return;
        }

        SubordinatorPath lp =
            sample_until_passage(model.beta, grid.dt, times.back(), times.back(), rng);
        ps.H = invert_path(lp, times);
        ps.LH = last_passage(lp, ps.H);
        ps.L.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            auto j = static_cast<std::size_t>(std::llround(times[k] / grid.dt));
            ps.L[k] = lp.values[std::min(j, lp.values.size() - 1)];
        }
        ps.V.resize(n);
        for (std::size_t k = 0; k < n; ++k) ps.V[k] = times[k] - ps.LH[k];

        const auto& clock = (model.kind == TimeChangeKind::SL) ? ps.H : ps.LH;
        ps.Y.resize(n);
        ps.Y[0] = 0.0;
        for (std::size_t k = 1; k < n; ++k)
            ps.Y[k] = ps.Y[k - 1] + levy_increment(model.levy, clock[k] - clock[k - 1], rng);
        out[i] = std::move(ps);
    });
    return out;
}

IncrementStats increment_statistics(const AnomalousModel& model, double t, double h,
                                    const MCConfig& mc, double ds) {
    if (model.kind == TimeChangeKind::Levy)
        throw std::invalid_argument("increment_statistics: needs an SL or DRD model");
    const int n = mc.n_paths;
    std::vector<double> level(n), incr(n);
    const bool use_lh = model.kind == TimeChangeKind::DRD;
    parallel_for(n, [&](std::size_t i) {
        Rng rng = Rng::substream(mc.seed, i);
        SubordinatorPath lp = sample_until_passage(model.beta, ds, t + h, 0.0, rng);
        std::size_t j2 = lp.values.size() - 1;
        std::size_t j1 = j2;
        while (j1 > 0 && lp.values[j1 - 1] > t) --j1;
        double c1 = use_lh ? lp.values[j1 - 1] : ds * j1;
        double c2 = use_lh ? lp.values[j2 - 1] : ds * j2;
        level[i] = levy_increment(model.levy, c1, rng);
        incr[i] = levy_increment(model.levy, c2 - c1, rng);
    });

    // batch-means errors for the covariance
    const int n_batches = 64;
    const int per = n / n_batches;
    std::vector<double> batch_cov(n_batches);
    for (int b = 0; b < n_batches; ++b) {
        double my = 0.0, mi = 0.0;
        for (int i = b * per; i < (b + 1) * per; ++i) {
            my += level[i];
            mi += incr[i];
        }
        my /= per;
        mi /= per;
        double cv = 0.0;
        for (int i = b * per; i < (b + 1) * per; ++i)
            cv += (level[i] - my) * (incr[i] - mi);
        batch_cov[b] = cv / (per - 1.0);
    }
    double cov = 0.0;
    for (double c : batch_cov) cov += c;
    cov /= n_batches;
    double cov_var = 0.0;
    for (double c : batch_cov) cov_var += (c - cov) * (c - cov);
    cov_var /= (n_batches - 1.0);

    double mean_inc = 0.0;
    for (double v : incr) mean_inc += v;
    mean_inc /= n;
    double inc_var = 0.0;
    for (double v : incr) inc_var += (v - mean_inc) * (v - mean_inc);
    inc_var /= (n - 1.0);

    return {cov, std::sqrt(cov_var / n_batches), mean_inc, std::sqrt(inc_var / n)};
}

std::vector<double> ctrw_terminal_samples(double beta, const LevyModel& driver, double scale_c,
                                          double horizon, int n, std::uint64_t seed,
                                          CtrwCoupling coupling, CtrwWaits waits) {
    if (!(scale_c > 0.0)) throw std::invalid_argument("ctrw_terminal_samples: scale must be positive");
    if (waits == CtrwWaits::HeavyTail && (!(beta > 0.0) || !(beta < 1.0)))
        throw std::invalid_argument("ctrw_terminal_samples: beta must lie in (0,1)");
    // Pareto tail x^{-beta} rescaled so that the renewal sums converge to the
    // subordinator with Laplace exponent s^beta (constant Gamma(1-beta)
    // absorbed into the time scale).
    const double wait_norm =
        waits == CtrwWaits::HeavyTail ? std::pow(scale_c * std::tgamma(1.0 - beta), -1.0 / beta)
                                      : 1.0 / scale_c;
    std::vector<double> out(n);
    parallel_for(n, [&](std::size_t i) {
        Rng rng = Rng::substream(seed, i);
        double s = 0.0, x = 0.0;
        while (true) {
            double wait = waits == CtrwWaits::HeavyTail
                              ? wait_norm * std::pow(rng.uniform(), -1.0 / beta)
                              : wait_norm * rng.exponential();
            s += wait;
            if (s > horizon) break;
            double dur = (coupling == CtrwCoupling::Coupled) ? wait : 1.0 / scale_c;
            x += levy_increment(driver, dur, rng);
        }
        out[i] = x;
    });
    return out;
}

} // namespace anomdiff
