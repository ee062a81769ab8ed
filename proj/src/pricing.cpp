#include "anomdiff/pricing.hpp"

#include "anomdiff/parallel.hpp"
#include "anomdiff/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anomdiff {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// Panel edges on [0, truncation]: geometric growth from a unit-scale first
// panel, with widths capped so each Gauss rule resolves the e^{iuk} and CF
// phase oscillations.
std::vector<double> panel_edges(const QuadratureConfig& quad, double osc_freq) {
    double cap = 1.5 * quad.nodes / std::max(osc_freq, 0.02);
    std::vector<double> edges{0.0};
    const double growth = 1.6;
    double width = std::max(0.5, quad.truncation * (growth - 1.0) /
                                     (std::pow(growth, quad.panels) - 1.0));
    while (edges.back() < quad.truncation) {
        double w = std::min(width, cap);
        edges.push_back(std::min(edges.back() + w, quad.truncation));
        width *= growth;
    }
    return edges;
}

// Integrates f over [0, truncation] with early exit on negligible panels.
template <typename F>
double integrate_half_line(const F& f, const QuadratureConfig& quad, double osc_freq) {
    auto edges = panel_edges(quad, osc_freq);
    auto base = gauss_legendre(quad.nodes, 0.0, 1.0);
    double total = 0.0;
    int tiny_streak = 0;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double a = edges[p], w = edges[p + 1] - edges[p];
        double acc = 0.0;
        for (const auto& [x, wt] : base) acc += wt * f(a + w * x);
        acc *= w;
        total += acc;
        if (std::fabs(acc) < 1e-16 * (1.0 + std::fabs(total))) {
            if (++tiny_streak >= 2) break;
        } else {
            tiny_streak = 0;
        }
    }
    return total;
}

struct CallIntegrand {
    double k;      // log-moneyness vs forward
    double gamma;  // contour level
    // value of e^{(1+iz)k} / (z(z-i)) at z = u + i gamma
    cplx payoff_kernel(double u) const {
        cplx z(u, gamma);
        cplx num = std::exp(cplx((1.0 - gamma) * k, u * k));
        return num / (z * (z - kI));
    }
};

double call_price_normalized(const AnomalousModel& model, double k, double maturity,
                             const QuadratureConfig& quad) {
    const double gamma = quad.contour;
    const double osc = std::fabs(k) + maturity * std::fabs(model.levy.cumulants().k1);
    if (quad.panels == 1) {
        // single global rule over [-U, U], kept literal for table reproduction
        auto rule = gauss_legendre(quad.nodes, -quad.truncation, quad.truncation);
        cplx acc(0.0, 0.0);
        for (const auto& [u, w] : rule) {
            cplx z(u, gamma);
            CallIntegrand ci{k, gamma};
            acc += w * ci.payoff_kernel(u) * char_function(model, z, maturity);
        }
        return 1.0 - acc.real() / (2.0 * kPi);
    }
    CallIntegrand ci{k, gamma};
    auto f = [&](double u) {
        cplx z(u, gamma);
        return (ci.payoff_kernel(u) * char_function(model, z, maturity)).real();
    };
    return 1.0 - integrate_half_line(f, quad, osc) / kPi;
}

double clamp_call(double c_norm, double k) {
    double lb = std::max(0.0, 1.0 - std::exp(k));
    return std::clamp(c_norm, lb, 1.0);
}

} // namespace

MarketSetup::MarketSetup(double s0, double r) : spot(s0), rate(r) {
    if (!(s0 > 0.0)) throw std::invalid_argument("MarketSetup: spot must be positive");
    if (r < 0.0) throw std::invalid_argument("MarketSetup: rate must be non-negative");
}

OptionSpec::OptionSpec(OptionKind k, double strike_px, double expiry)
    : kind(k), strike(strike_px), maturity(expiry) {
    if (!(strike_px > 0.0)) throw std::invalid_argument("OptionSpec: strike must be positive");
    if (!(expiry > 0.0)) throw std::invalid_argument("OptionSpec: maturity must be positive");
}

void QuadratureConfig::validate() const {
    if (!(truncation > 0.0)) throw std::invalid_argument("QuadratureConfig: truncation must be positive");
    if (nodes < 1 || panels < 1) throw std::invalid_argument("QuadratureConfig: nodes and panels must be >= 1");
    if (!(contour > 0.0) || !(contour < 1.0))
        throw std::invalid_argument("QuadratureConfig: contour must lie in (0,1)");
    if (!(digital_contour > 0.0) || !(digital_contour < 1.0))
        throw std::invalid_argument("QuadratureConfig: digital contour must lie in (0,1)");
}

double price_call(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                  const QuadratureConfig& quad) {
    quad.validate();
    auto [lo, hi] = model.levy.regularity_strip();
    if (!(lo < 0.0 && hi > 1.0))
        throw std::domain_error("price_call: contour strip [0,1] not inside the regularity strip");
    const double fwd = mkt.spot * std::exp(mkt.rate * opt.maturity);
    const double k = std::log(opt.strike / fwd);
    double c = call_price_normalized(model, k, opt.maturity, quad);
    if (quad.refine_check) {
        QuadratureConfig fine = quad;
        fine.nodes *= 2;
        fine.refine_check = false;
        double c2 = call_price_normalized(model, k, opt.maturity, fine);
        if (std::fabs(c2 - c) > quad.refine_tol)
            throw std::runtime_error("price_call: quadrature refinement disagreement");
    }
    return mkt.spot * clamp_call(c, k);
}

double price_put(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                 const QuadratureConfig& quad) {
    OptionSpec call(OptionKind::Call, opt.strike, opt.maturity);
    double c = price_call(model, call, mkt, quad);
    double p = c - mkt.spot + opt.strike * std::exp(-mkt.rate * opt.maturity);
    return std::max(p, 0.0);
}

double price_digital(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
                     const QuadratureConfig& quad) {
    quad.validate();
    const double gamma = quad.digital_contour;
    const double fwd = mkt.spot * std::exp(mkt.rate * opt.maturity);
    const double k = std::log(opt.strike / fwd);
    const double osc = std::fabs(k) + opt.maturity * std::fabs(model.levy.cumulants().k1);
    auto f = [&](double u) {
        cplx z(u, gamma);
        cplx num = -std::exp(cplx(-gamma * k, u * k));
        return (num / (kI * z) * char_function(model, z, opt.maturity)).real();
    };
    double q = integrate_half_line(f, quad, osc) / kPi;
    double disc = std::exp(-mkt.rate * opt.maturity);
    return std::clamp(q, 0.0, 1.0) * disc;
}

double price(const AnomalousModel& model, const OptionSpec& opt, const MarketSetup& mkt,
             const QuadratureConfig& quad) {
    switch (opt.kind) {
        case OptionKind::Call: return price_call(model, opt, mkt, quad);
        case OptionKind::Put: return price_put(model, opt, mkt, quad);
        case OptionKind::Digital: return price_digital(model, opt, mkt, quad);
    }
    throw std::invalid_argument("price: unknown option kind");
}

std::vector<double> price_call_grid(const AnomalousModel& model, const std::vector<double>& strikes,
                                    double maturity, const MarketSetup& mkt,
                                    const QuadratureConfig& quad) {
    quad.validate();
    if (!(maturity > 0.0)) throw std::invalid_argument("price_call_grid: maturity must be positive");
    const double fwd = mkt.spot * std::exp(mkt.rate * maturity);
    const double gamma = quad.contour;

    double kmax = 0.0;
    std::vector<double> logk(strikes.size());
    for (std::size_t i = 0; i < strikes.size(); ++i) {
        logk[i] = std::log(strikes[i] / fwd);
        kmax = std::max(kmax, std::fabs(logk[i]));
    }
    const double osc = kmax + maturity * std::fabs(model.levy.cumulants().k1);

    // Shared CF values on the union quadrature grid
    struct Node {
        double u, w;
        cplx phi;
    };
    std::vector<Node> grid;
    if (quad.panels == 1) {
        for (const auto& [u, w] : gauss_legendre(quad.nodes, -quad.truncation, quad.truncation))
            grid.push_back({u, w, {}});
    } else {
        auto edges = panel_edges(quad, osc);
        auto base = gauss_legendre(quad.nodes, 0.0, 1.0);
        for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
            double a = edges[p], w = edges[p + 1] - edges[p];
            for (const auto& [x, wt] : base) grid.push_back({a + w * x, wt * w, {}});
        }
    }
    for (auto& n : grid) n.phi = char_function(model, cplx(n.u, gamma), maturity);

    std::vector<double> out(strikes.size());
    for (std::size_t i = 0; i < strikes.size(); ++i) {
        double k = logk[i];
        double integral = 0.0;
        CallIntegrand ci{k, gamma};
        for (const auto& n : grid) integral += n.w * (ci.payoff_kernel(n.u) * n.phi).real();
        double c = (quad.panels == 1) ? 1.0 - integral / (2.0 * kPi) : 1.0 - integral / kPi;
        out[i] = mkt.spot * clamp_call(c, k);
    }
    return out;
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }
double norm_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

double bs_price(double strike, double maturity, double sigma, const MarketSetup& mkt,
                OptionKind kind) {
    const double disc = std::exp(-mkt.rate * maturity);
    const double fwd = mkt.spot / disc;
    const double stdev = sigma * std::sqrt(maturity);
    double call;
    double nd2;
    if (stdev <= 0.0) {
        call = disc * std::max(fwd - strike, 0.0);
        nd2 = fwd >= strike ? 1.0 : 0.0;
    } else {
        double d1 = std::log(fwd / strike) / stdev + 0.5 * stdev;
        double d2 = d1 - stdev;
        call = disc * (fwd * norm_cdf(d1) - strike * norm_cdf(d2));
        nd2 = norm_cdf(d2);
    }
    switch (kind) {
        case OptionKind::Call: return call;
        case OptionKind::Put: return call - mkt.spot + strike * disc;
        case OptionKind::Digital: return disc * nd2;
    }
    throw std::invalid_argument("bs_price: unknown option kind");
}

double bs_vega(double strike, double maturity, double sigma, const MarketSetup& mkt) {
    if (sigma <= 0.0) return 0.0;
    const double fwd = mkt.spot * std::exp(mkt.rate * maturity);
    const double stdev = sigma * std::sqrt(maturity);
    double d1 = std::log(fwd / strike) / stdev + 0.5 * stdev;
    return mkt.spot * norm_pdf(d1) * std::sqrt(maturity);
}

double implied_vol(double price_value, const OptionSpec& opt, const MarketSetup& mkt) {
    if (opt.kind == OptionKind::Digital)
        throw std::invalid_argument("implied_vol: digital options not supported");
    const double disc = std::exp(-mkt.rate * opt.maturity);
    const double tol = 1e-10 * mkt.spot;

    double lb, ub;
    if (opt.kind == OptionKind::Call) {
        lb = std::max(0.0, mkt.spot - opt.strike * disc);
        ub = mkt.spot;
    } else {
        lb = std::max(0.0, opt.strike * disc - mkt.spot);
        ub = opt.strike * disc;
    }
    if (price_value < lb - tol || price_value > ub + tol)
        throw std::domain_error("implied_vol: price violates no-arbitrage bounds");
    if (price_value <= lb + tol) return 0.0;

    double sig_lo = 1e-8, sig_hi = 5.0;
    while (bs_price(opt.strike, opt.maturity, sig_hi, mkt, opt.kind) < price_value) {
        sig_hi *= 2.0;
        if (sig_hi > 1e4) throw std::domain_error("implied_vol: price above attainable range");
    }
    double sigma = 0.5 * (sig_lo + sig_hi);
    for (int it = 0; it < 200; ++it) {
        double val = bs_price(opt.strike, opt.maturity, sigma, mkt, opt.kind);
        double diff = val - price_value;
        if (std::fabs(diff) <= tol) return sigma;
        if (diff > 0.0)
            sig_hi = sigma;
        else
            sig_lo = sigma;
        double vega = bs_vega(opt.strike, opt.maturity, sigma, mkt);
        double next = (vega > 1e-12) ? sigma - diff / vega : 0.5 * (sig_lo + sig_hi);
        if (!(next > sig_lo && next < sig_hi)) next = 0.5 * (sig_lo + sig_hi);
        if (std::fabs(next - sigma) < 1e-16 * (1.0 + sigma) && std::fabs(diff) < 64.0 * tol)
            return next;
        sigma = next;
    }
    return sigma;
}

double skew(const AnomalousModel& model, double strike, double maturity, const MarketSetup& mkt,
            const QuadratureConfig& quad) {
    const double h = 1e-4 * strike;
    auto iv_at = [&](double k_strike) {
        OptionSpec o(OptionKind::Call, k_strike, maturity);
        return implied_vol(price_call(model, o, mkt, quad), o, mkt);
    };
    double fd = (iv_at(strike + h) - iv_at(strike - h)) / (2.0 * h);

    // analytic route: sigma'(K) = e^{-rT} (N(d2) - Q(S_T >= K)) / (S0 n(d1) sqrt(T))
    double sigma = iv_at(strike);
    double fwd = mkt.spot * std::exp(mkt.rate * maturity);
    double stdev = sigma * std::sqrt(maturity);
    double d1 = std::log(fwd / strike) / stdev + 0.5 * stdev;
    double d2 = d1 - stdev;
    OptionSpec dig(OptionKind::Digital, strike, maturity);
    double q = price_digital(model, dig, mkt, quad) * std::exp(mkt.rate * maturity);
    double analytic = std::exp(-mkt.rate * maturity) * (norm_cdf(d2) - q) /
                      (mkt.spot * norm_pdf(d1) * std::sqrt(maturity));

    double scale = std::max(std::fabs(fd), std::fabs(analytic));
    if (std::fabs(fd - analytic) > 1e-4 * scale + 1e-8)
        throw std::runtime_error("skew: finite-difference and analytic routes disagree");
    return fd;
}

std::vector<SurfacePoint> surface(const AnomalousModel& model, const std::vector<double>& strikes,
                                  const std::vector<double>& maturities, const MarketSetup& mkt,
                                  const QuadratureConfig& quad) {
    std::vector<SurfacePoint> out(strikes.size() * maturities.size());
    parallel_for(maturities.size(), [&](std::size_t j) {
        auto prices = price_call_grid(model, strikes, maturities[j], mkt, quad);
        for (std::size_t i = 0; i < strikes.size(); ++i) {
            OptionSpec o(OptionKind::Call, strikes[i], maturities[j]);
            double iv = implied_vol(prices[i], o, mkt);
            out[j * strikes.size() + i] = {strikes[i], maturities[j], prices[i], iv};
        }
    });
    return out;
}

} // namespace anomdiff
