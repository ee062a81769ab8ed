#pragma once

#include <functional>
#include <vector>

namespace anomdiff {

/// Kolmogorov-Smirnov statistic of samples against a reference CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic p-value for a one-sample KS statistic at sample size n.
double ks_pvalue(double statistic, std::size_t n);

struct SampleCumulants {
    double k1, k2, k3, k4;
    double se1, se2, se3, se4; ///< batch-means standard errors
};

/// First four sample cumulants with batch-means errors (n_batches splits).
SampleCumulants sample_cumulants(const std::vector<double>& samples, int n_batches = 100);

} // namespace anomdiff
