#pragma once

// Geometry of entropy vectors: the Shannon cone inequalities, the averaging
// map over equal-size subsets, the second-order difference transform and its
// inverse, cone membership, and conic decomposition into the unit rays
// h_j = min(j, k).

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "aef/dist.hpp"

namespace aef {

inline constexpr double kDefaultTol = 1e-9;

struct AverageVector {
    int n = 0;
    std::vector<double> h;  // h[k-1] is the mean of the k-subset entropies
};

struct DiffVector {
    int n = 0;
    std::vector<double> g;
};

enum class InequalityKind { Nonneg, Monotone, Submodular };

struct ShannonViolation {
    InequalityKind kind;
    unsigned alpha = 0;
    unsigned beta = 0;
    double slack = 0.0;
};

struct ShannonReport {
    bool passed = true;
    std::vector<ShannonViolation> violations;
};

// Full check of the defining system: H_a >= 0, H_a <= H_b for a subset of b,
// and submodularity over all subset pairs. O(4^n) pairs; the reference
// implementation the elemental check is validated against.
inline ShannonReport shannon_check_full(const EntropyVector& H,
                                        double tol = kDefaultTol) {
    ShannonReport report;
    const unsigned full = (1u << H.n) - 1;
    auto note = [&](InequalityKind kind, unsigned a, unsigned b, double slack) {
        if (slack < -tol) {
            report.passed = false;
            report.violations.push_back({kind, a, b, slack});
        }
    };
    for (unsigned a = 1; a <= full; ++a)
        note(InequalityKind::Nonneg, a, 0, H.at(a));
    for (unsigned a = 1; a <= full; ++a)
        for (unsigned b = a; b <= full; ++b)
            if ((a & b) == a && a != b)
                note(InequalityKind::Monotone, a, b, H.at(b) - H.at(a));
    for (unsigned a = 1; a <= full; ++a)
        for (unsigned b = a; b <= full; ++b)
            note(InequalityKind::Submodular, a, b,
                 H.at(a) + H.at(b) - H.at(a | b) - H.at(a & b));
    return report;
}

// Reduced system: n inequalities H_N - H_{N\i} >= 0 plus the elemental
// submodularities H_{iK} + H_{jK} - H_{ijK} - H_K >= 0 for i < j and K
// disjoint from {i,j}. Agrees with shannon_check_full on every vector.
inline bool shannon_check_elemental(const EntropyVector& H,
                                    double tol = kDefaultTol) {
    const unsigned full = (1u << H.n) - 1;
    for (int i = 0; i < H.n; ++i)
        if (H.at(full) - H.at(full & ~(1u << i)) < -tol) return false;
    for (int i = 0; i < H.n; ++i)
        for (int j = i + 1; j < H.n; ++j) {
            const unsigned ij = (1u << i) | (1u << j);
            const unsigned rest = full & ~ij;
            // iterate K over all subsets of rest
            unsigned K = 0;
            for (;;) {
                if (H.at(K | (1u << i)) + H.at(K | (1u << j)) - H.at(K | ij) -
                        H.at(K) < -tol)
                    return false;
                if (K == rest) break;
                K = (K - rest) & rest;  // next subset of rest
            }
        }
    return true;
}

inline AverageVector average_map(const EntropyVector& H) {
    AverageVector avg;
    avg.n = H.n;
    avg.h.assign(H.n, 0.0);
    std::vector<long> counts(H.n, 0);
    const unsigned full = (1u << H.n) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        const int k = std::popcount(mask);
        avg.h[k - 1] += H.at(mask);
        ++counts[k - 1];
    }
    for (int k = 0; k < H.n; ++k) avg.h[k] /= static_cast<double>(counts[k]);
    return avg;
}

// g_k = h_{k-1} - 2 h_k + h_{k+1}, with h_0 = 0 and h_{n+1} = h_n.
inline DiffVector second_diff(const AverageVector& h) {
    DiffVector g;
    g.n = h.n;
    g.g.resize(h.n);
    auto at = [&](int k) -> double {
        if (k == 0) return 0.0;
        if (k == h.n + 1) return h.h[h.n - 1];
        return h.h[k - 1];
    };
    for (int k = 1; k <= h.n; ++k)
        g.g[k - 1] = at(k - 1) - 2.0 * at(k) + at(k + 1);
    return g;
}

// Unique preimage under the second difference: recover first differences
// d_n = -g_n, d_j = d_{j+1} - g_j, then prefix-sum.
inline AverageVector second_diff_inv(const DiffVector& g) {
    const int n = g.n;
    std::vector<double> d(n);
    d[n - 1] = -g.g[n - 1];
    for (int j = n - 2; j >= 0; --j) d[j] = d[j + 1] - g.g[j];
    AverageVector h;
    h.n = n;
    h.h.resize(n);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        acc += d[k];
        h.h[k] = acc;
    }
    return h;
}

struct MembershipResult {
    bool member = true;
    std::vector<int> violating_indices;  // 1-based levels with g_k > tol
};

inline MembershipResult phi_membership(const AverageVector& h,
                                       double tol = kDefaultTol) {
    MembershipResult r;
    const DiffVector g = second_diff(h);
    for (int k = 1; k <= h.n; ++k)
        if (g.g[k - 1] > tol) {
            r.member = false;
            r.violating_indices.push_back(k);
        }
    return r;
}

inline bool lambda_membership(const DiffVector& g, double tol = kDefaultTol) {
    for (double gk : g.g)
        if (gk > tol) return false;
    return true;
}

// h_j = min(j, k): the averaged entropy function of an (n,k) MDS code with
// log q = 1.
inline AverageVector unit_ray(int n, int k) {
    if (k < 1 || k > n)
        throw std::out_of_range("unit_ray: need 1 <= k <= n");
    AverageVector h;
    h.n = n;
    h.h.resize(n);
    for (int j = 1; j <= n; ++j) h.h[j - 1] = static_cast<double>(std::min(j, k));
    return h;
}

// lambda_k = -g_k. Since the second difference maps unit_ray(n,k) to -e_k and
// is a bijection, the combination sum(lambda_k * unit_ray) always reconstructs
// h; the coefficients are nonnegative exactly when h is in the cone.
inline std::vector<double> decompose(const AverageVector& h) {
    const DiffVector g = second_diff(h);
    std::vector<double> lambda(h.n);
    for (int k = 0; k < h.n; ++k) lambda[k] = -g.g[k];
    return lambda;
}

}  // namespace aef
