#include "anomdiff/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anomdiff {

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, std::fabs(f - i / n));
        d = std::max(d, std::fabs((i + 1) / n - f));
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::fabs(i / na - j / nb));
    }
    return d;
}

double ks_pvalue(double statistic, std::size_t n) {
    double rn = std::sqrt(static_cast<double>(n));
    double lambda = (rn + 0.12 + 0.11 / rn) * statistic;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double term = 2.0 * std::pow(-1.0, k - 1) * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::fabs(term) < 1e-12) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

namespace {

void raw_cumulants(const double* x, std::size_t n, double out[4]) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x[i];
    mean /= static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = x[i] - mean;
        double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    out[0] = mean;
    out[1] = m2;
    out[2] = m3;
    out[3] = m4 - 3.0 * m2 * m2;
}

} // namespace

SampleCumulants sample_cumulants(const std::vector<double>& samples, int n_batches) {
    if (samples.size() < static_cast<std::size_t>(4 * n_batches))
        throw std::invalid_argument("sample_cumulants: too few samples for the batch count");
    double full[4];
    raw_cumulants(samples.data(), samples.size(), full);

    const std::size_t per = samples.size() / n_batches;
    double mean_b[4] = {0, 0, 0, 0};
    std::vector<double> batch(n_batches * 4);
    for (int b = 0; b < n_batches; ++b) {
        double c[4];
        raw_cumulants(samples.data() + b * per, per, c);
        for (int q = 0; q < 4; ++q) {
            batch[b * 4 + q] = c[q];
            mean_b[q] += c[q];
        }
    }
    for (double& m : mean_b) m /= n_batches;
    double se[4] = {0, 0, 0, 0};
    for (int b = 0; b < n_batches; ++b)
        for (int q = 0; q < 4; ++q) {
            double d = batch[b * 4 + q] - mean_b[q];
            se[q] += d * d;
        }
    for (int q = 0; q < 4; ++q) se[q] = std::sqrt(se[q] / (n_batches - 1.0) / n_batches);

    return {full[0], full[1], full[2], full[3], se[0], se[1], se[2], se[3]};
}

} // namespace anomdiff
