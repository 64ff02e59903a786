#pragma once

// Constructive desk-scale verification that the averaged almost-entropic
// region equals the averaged Shannon cone: builds the Reed-Solomon extreme-ray
// distributions, confirms their entropy functions, realizes integer conic
// combinations by independent products, and sweeps the cone by decomposition.

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aef/entropy_geometry.hpp"

namespace aef {

struct CheckLine {
    std::string name;
    bool passed = true;
    std::string detail;  // offending subset / slack on failure
};

struct Report {
    std::vector<CheckLine> lines;

    bool passed() const {
        for (const auto& l : lines)
            if (!l.passed) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = {}) {
        lines.push_back({std::move(name), ok, std::move(detail)});
    }
    std::string render() const {
        std::ostringstream os;
        for (const auto& l : lines) {
            os << (l.passed ? "PASS " : "FAIL ") << l.name;
            if (!l.detail.empty()) os << ": " << l.detail;
            os << '\n';
        }
        return os.str();
    }
};

// Smallest m with 2^m > n.
inline int minimal_field_exponent(int n) {
    int m = 1;
    while ((1 << m) <= n) ++m;
    return m;
}

struct ExtremeRay {
    JointDistribution dist;
    EntropyVector expected;  // H_alpha = min(|alpha|, k) * m bits
    int m = 0;
};

inline ExtremeRay extreme_ray_distribution(int n, int k,
                                           std::uint64_t guard = kDefaultGuard) {
    const int m = minimal_field_exponent(n);
    const RSCode code = rs_make(n, k, field_make(m));
    ExtremeRay ray;
    ray.m = m;
    ray.dist = dist_uniform_code(rs_enumerate(code, guard));
    ray.expected.n = n;
    ray.expected.values.resize((1u << n) - 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        ray.expected.values[mask - 1] =
            static_cast<double>(std::min(std::popcount(mask), k) * m);
    return ray;
}

inline Report verify_ray(int n, int k, double tol = kDefaultTol,
                         std::uint64_t guard = kDefaultGuard) {
    const ExtremeRay ray = extreme_ray_distribution(n, k, guard);
    const EntropyVector H = entropy_vector(ray.dist);
    const double exact_tol = 1e-12;
    Report report;

    bool values_ok = true;
    std::string bad;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (std::abs(H.at(mask) - ray.expected.at(mask)) > exact_tol) {
            values_ok = false;
            bad = "subset " + std::to_string(mask);
            break;
        }
    report.add("entropies equal min(|a|,k)*m", values_ok, bad);

    bool symmetric = true;
    bad.clear();
    for (unsigned mask = 1; mask < (1u << n) && symmetric; ++mask) {
        const unsigned ref = (1u << std::popcount(mask)) - 1;
        if (std::abs(H.at(mask) - H.at(ref)) > exact_tol) {
            symmetric = false;
            bad = "subset " + std::to_string(mask);
        }
    }
    report.add("level symmetry", symmetric, bad);

    const ShannonReport shannon = shannon_check_full(H, tol);
    report.add("shannon inequalities", shannon.passed,
               shannon.passed ? ""
                              : "violations: " + std::to_string(shannon.violations.size()));

    const AverageVector avg = average_map(H);
    const AverageVector expected_avg = [&] {
        AverageVector u = unit_ray(n, k);
        for (double& v : u.h) v *= ray.m;
        return u;
    }();
    bool avg_ok = true;
    for (int j = 0; j < n; ++j)
        if (std::abs(avg.h[j] - expected_avg.h[j]) > exact_tol) avg_ok = false;
    report.add("average equals m*unit_ray", avg_ok);

    const DiffVector g = second_diff(avg);
    bool diff_ok = true;
    for (int j = 1; j <= n; ++j) {
        const double want = (j == k) ? -static_cast<double>(ray.m) : 0.0;
        if (std::abs(g.g[j - 1] - want) > exact_tol) diff_ok = false;
    }
    report.add("second difference equals -m*e_k", diff_ok);
    return report;
}

struct AchieveResult {
    JointDistribution dist;
    AverageVector average;
    Report report;
};

// Realize the integer conic combination sum(c_k * m * unit_ray(n,k)) as the
// product of c_k independent copies of each ray distribution.
inline AchieveResult achieve(int n, const std::vector<int>& multiplicities,
                             std::uint64_t guard = kDefaultGuard) {
    if (static_cast<int>(multiplicities.size()) != n)
        throw std::invalid_argument("achieve: need n multiplicities");
    if (std::accumulate(multiplicities.begin(), multiplicities.end(), 0) < 1)
        throw std::invalid_argument("achieve: all-zero multiplicities");
    const int m = minimal_field_exponent(n);
    const double q = static_cast<double>(1 << m);
    double atoms = 1.0;
    for (int k = 1; k <= n; ++k)
        for (int c = 0; c < multiplicities[k - 1]; ++c) atoms *= std::pow(q, k);
    if (atoms > static_cast<double>(guard))
        throw std::length_error("achieve: support guard exceeded");

    // single deterministic atom: the identity for dist_product
    JointDistribution acc;
    acc.n = n;
    acc.alphabet_sizes.assign(n, 1);
    acc.support.push_back(Atom{std::vector<int>(n, 0), 1.0});
    for (int k = 1; k <= n; ++k)
        for (int c = 0; c < multiplicities[k - 1]; ++c)
            acc = dist_product(acc, extreme_ray_distribution(n, k, guard).dist, guard);

    AchieveResult result;
    result.average = average_map(entropy_vector(acc));
    AverageVector expected{n, std::vector<double>(n, 0.0)};
    for (int k = 1; k <= n; ++k) {
        const AverageVector u = unit_ray(n, k);
        for (int j = 0; j < n; ++j)
            expected.h[j] += multiplicities[k - 1] * m * u.h[j];
    }
    bool ok = true;
    std::string bad;
    for (int j = 0; j < n; ++j)
        if (std::abs(result.average.h[j] - expected.h[j]) > kDefaultTol) {
            ok = false;
            bad = "level " + std::to_string(j + 1);
        }
    result.report.add("average equals sum of scaled rays", ok, bad);
    result.dist = std::move(acc);
    return result;
}

// Three-stage sweep of Theorem 1. Stage (i): points of the averaged Shannon
// cone decompose nonnegatively into the rays; stage (ii): every ray is
// realized by a Reed-Solomon distribution; stage (iii): averaged entropy
// functions of random distributions land inside the cone.
inline Report verify_theorem(int n, int samples, std::uint64_t seed,
                             std::uint64_t guard = kDefaultGuard) {
    if (n < 1 || samples < 1)
        throw std::invalid_argument("verify_theorem: need n >= 1, samples >= 1");
    Report report;
    std::mt19937_64 rng(seed);

    bool inward_ok = true;
    std::string bad;
    for (int s = 0; s < samples && inward_ok; ++s) {
        DiffVector g{n, std::vector<double>(n)};
        for (double& v : g.g) v = -uniform01(rng);
        const AverageVector h = second_diff_inv(g);
        const std::vector<double> lambda = decompose(h);
        AverageVector recon{n, std::vector<double>(n, 0.0)};
        for (int k = 1; k <= n; ++k) {
            const AverageVector u = unit_ray(n, k);
            for (int j = 0; j < n; ++j) recon.h[j] += lambda[k - 1] * u.h[j];
        }
        for (int k = 0; k < n; ++k)
            if (lambda[k] < -1e-12) {
                inward_ok = false;
                bad = "sample " + std::to_string(s) + ", negative lambda_" +
                      std::to_string(k + 1);
            }
        for (int j = 0; j < n; ++j)
            if (std::abs(recon.h[j] - h.h[j]) > 1e-9) {
                inward_ok = false;
                bad = "sample " + std::to_string(s) + ", reconstruction level " +
                      std::to_string(j + 1);
            }
    }
    report.add("stage i: cone points decompose into rays", inward_ok, bad);

    bool rays_ok = true;
    bad.clear();
    for (int k = 1; k <= n; ++k) {
        const Report r = verify_ray(n, k, kDefaultTol, guard);
        if (!r.passed()) {
            rays_ok = false;
            bad = "k = " + std::to_string(k);
        }
    }
    report.add("stage ii: rays realized by RS distributions", rays_ok, bad);

    bool outward_ok = true;
    bad.clear();
    for (int s = 0; s < samples && outward_ok; ++s) {
        const JointDistribution d = sample_distribution(n, 3, rng);
        const EntropyVector H = entropy_vector(d);
        if (!shannon_check_full(H).passed ||
            !phi_membership(average_map(H)).member) {
            outward_ok = false;
            bad = "sample " + std::to_string(s);
        }
    }
    report.add("stage iii: averaged entropy functions lie in the cone",
               outward_ok, bad);
    return report;
}

}  // namespace aef
