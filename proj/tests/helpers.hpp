#ifndef MUSUM_TEST_HELPERS_HPP
#define MUSUM_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

// Shared statistical test utilities (Kolmogorov-Smirnov machinery and simple
// distributional oracles). Kept out of the library: they exist to check it.

namespace musum_test {

// Two-sample KS statistic: sup_x |F1(x) - F2(x)|.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i; else ++j;
        double fa = static_cast<double>(i) / a.size();
        double fb = static_cast<double>(j) / b.size();
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

// Critical value at level alpha=0.01: c * sqrt((n+m)/(n m)), c(0.01)=1.628.
inline double ks_two_sample_threshold_01(size_t n, size_t m) {
    return 1.628 * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
}

// One-sample KS against a cdf.
inline double ks_one_sample(std::vector<double> a, const std::function<double(double)>& cdf) {
    std::sort(a.begin(), a.end());
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double f = cdf(a[i]);
        double lo = static_cast<double>(i) / a.size();
        double hi = static_cast<double>(i + 1) / a.size();
        d = std::max(d, std::max(std::abs(f - lo), std::abs(hi - f)));
    }
    return d;
}

inline double ks_one_sample_threshold_01(size_t n) {
    return 1.628 / std::sqrt(static_cast<double>(n));
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double cauchy_cdf(double x) { return 0.5 + std::atan(x) / 3.14159265358979323846; }

// Mean and standard error of a sample.
struct MeanSe {
    double mean;
    double se;
};

inline MeanSe mean_se(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - m) * (x - m);
    var /= static_cast<double>(v.size() - 1);
    return {m, std::sqrt(var / static_cast<double>(v.size()))};
}

// Median-of-means point estimate plus a block-spread standard error, for
// checking sampler moments against c_{s,q} when the plain variance diverges.
inline MeanSe median_of_means_se(const std::vector<double>& v, int blocks) {
    size_t bs = v.size() / static_cast<size_t>(blocks);
    std::vector<double> bm(static_cast<size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
        double acc = 0.0;
        for (size_t i = 0; i < bs; ++i) acc += v[static_cast<size_t>(b) * bs + i];
        bm[static_cast<size_t>(b)] = acc / static_cast<double>(bs);
    }
    std::vector<double> sorted = bm;
    std::sort(sorted.begin(), sorted.end());
    double med = 0.5 * (sorted[sorted.size() / 2] + sorted[(sorted.size() - 1) / 2]);
    std::vector<double> dev(bm.size());
    for (size_t k = 0; k < bm.size(); ++k) dev[k] = std::abs(bm[k] - med);
    std::sort(dev.begin(), dev.end());
    double mad = 0.5 * (dev[dev.size() / 2] + dev[(dev.size() - 1) / 2]);
    double sigma = 1.4826 * mad;
    return {med, sigma * std::sqrt(3.14159265358979323846 / 2.0) / std::sqrt(double(blocks))};
}

} // namespace musum_test

#endif
