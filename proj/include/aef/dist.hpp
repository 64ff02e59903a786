#pragma once

// Finite joint distributions over n discrete coordinates, stored sparsely
// (positive-probability atoms only), with exact joint-entropy computation in
// bits. The sparse form matters: a Reed-Solomon distribution has q^k atoms
// inside an alphabet of size q^n.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "aef/rs_code.hpp"

namespace aef {

inline constexpr double kProbSumTol = 1e-9;

struct Atom {
    std::vector<int> labels;
    double prob = 0.0;
};

struct JointDistribution {
    int n = 0;
    std::vector<int> alphabet_sizes;
    std::vector<Atom> support;
};

// Entropies of all nonempty subsets, indexed by bitmask (bit i-1 set means
// coordinate i is in the subset); H of the empty set is implicitly 0.
struct EntropyVector {
    int n = 0;
    std::vector<double> values;  // values[mask-1], mask in [1, 2^n)

    double at(unsigned mask) const { return mask == 0 ? 0.0 : values[mask - 1]; }
};

inline void dist_validate(const JointDistribution& d) {
    if (d.n < 1 || static_cast<int>(d.alphabet_sizes.size()) != d.n)
        throw std::invalid_argument("distribution: bad coordinate count");
    if (d.support.empty())
        throw std::invalid_argument("distribution: empty support");
    double sum = 0.0;
    std::map<std::vector<int>, bool> seen;
    for (const auto& atom : d.support) {
        if (static_cast<int>(atom.labels.size()) != d.n)
            throw std::invalid_argument("distribution: atom arity mismatch");
        for (int i = 0; i < d.n; ++i)
            if (atom.labels[i] < 0 || atom.labels[i] >= d.alphabet_sizes[i])
                throw std::invalid_argument("distribution: symbol label out of range");
        if (atom.prob <= 0.0)
            throw std::invalid_argument("distribution: probabilities must be positive");
        if (!seen.emplace(atom.labels, true).second)
            throw std::invalid_argument("distribution: duplicate atom");
        sum += atom.prob;
    }
    if (std::abs(sum - 1.0) > kProbSumTol)
        throw std::invalid_argument("distribution: probabilities do not sum to 1");
}

inline JointDistribution dist_uniform_code(const std::vector<Codeword>& codewords) {
    if (codewords.empty())
        throw std::invalid_argument("dist_uniform_code: empty codeword list");
    const int n = static_cast<int>(codewords.front().size());
    JointDistribution d;
    d.n = n;
    d.alphabet_sizes.assign(n, 1);
    const double p = 1.0 / static_cast<double>(codewords.size());
    std::map<std::vector<int>, bool> seen;
    for (const auto& cw : codewords) {
        if (static_cast<int>(cw.size()) != n)
            throw std::invalid_argument("dist_uniform_code: ragged codeword lengths");
        Atom atom;
        atom.labels.assign(cw.begin(), cw.end());
        atom.prob = p;
        for (int i = 0; i < n; ++i)
            d.alphabet_sizes[i] = std::max(d.alphabet_sizes[i], atom.labels[i] + 1);
        if (!seen.emplace(atom.labels, true).second)
            throw std::invalid_argument("dist_uniform_code: duplicate codeword");
        d.support.push_back(std::move(atom));
    }
    return d;
}

inline JointDistribution dist_marginal(const JointDistribution& d, unsigned mask) {
    if (mask == 0)
        throw std::invalid_argument("dist_marginal: empty subset");
    std::vector<int> coords;
    for (int i = 0; i < d.n; ++i)
        if ((mask >> i) & 1u) coords.push_back(i);
    std::map<std::vector<int>, double> acc;
    std::vector<int> key(coords.size());
    for (const auto& atom : d.support) {
        for (size_t j = 0; j < coords.size(); ++j) key[j] = atom.labels[coords[j]];
        acc[key] += atom.prob;
    }
    JointDistribution out;
    out.n = static_cast<int>(coords.size());
    out.alphabet_sizes.resize(coords.size());
    for (size_t j = 0; j < coords.size(); ++j)
        out.alphabet_sizes[j] = d.alphabet_sizes[coords[j]];
    for (auto& [labels, p] : acc)
        out.support.push_back(Atom{labels, p});
    return out;
}

inline double dist_entropy(const JointDistribution& d) {
    double h = 0.0;
    for (const auto& atom : d.support)
        h -= atom.prob * std::log2(atom.prob);
    return h;
}

inline EntropyVector entropy_vector(const JointDistribution& d) {
    EntropyVector H;
    H.n = d.n;
    const unsigned full = (1u << d.n) - 1;
    H.values.resize(full);
    for (unsigned mask = 1; mask <= full; ++mask)
        H.values[mask - 1] = dist_entropy(dist_marginal(d, mask));
    return H;
}

// Independent pairing: coordinate i of the result carries the pair of the two
// inputs' symbols, encoded as labels1[i]*a2[i] + labels2[i]. Entropy vectors
// add.
inline JointDistribution dist_product(const JointDistribution& d1,
                                      const JointDistribution& d2,
                                      std::uint64_t guard = kDefaultGuard) {
    if (d1.n != d2.n)
        throw std::invalid_argument("dist_product: coordinate counts differ");
    const std::uint64_t atoms =
        static_cast<std::uint64_t>(d1.support.size()) * d2.support.size();
    if (atoms > guard)
        throw std::length_error("dist_product: support guard exceeded");
    JointDistribution out;
    out.n = d1.n;
    out.alphabet_sizes.resize(d1.n);
    for (int i = 0; i < d1.n; ++i)
        out.alphabet_sizes[i] = d1.alphabet_sizes[i] * d2.alphabet_sizes[i];
    out.support.reserve(atoms);
    std::vector<int> labels(d1.n);
    for (const auto& a1 : d1.support)
        for (const auto& a2 : d2.support) {
            for (int i = 0; i < d1.n; ++i)
                labels[i] = a1.labels[i] * d2.alphabet_sizes[i] + a2.labels[i];
            out.support.push_back(Atom{labels, a1.prob * a2.prob});
        }
    return out;
}

// Seeded sampler used by the property suites and the theorem sweep: random
// alphabet sizes in [2, max_alphabet], a random nonempty subset of the full
// product as support, and a symmetric-uniform simplex point on it. Uniform
// deviates are drawn directly from the engine so runs are reproducible.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline JointDistribution sample_distribution(int n, int max_alphabet,
                                             std::mt19937_64& rng) {
    if (n < 1 || max_alphabet < 2)
        throw std::invalid_argument("sample_distribution: need n >= 1, max_alphabet >= 2");
    JointDistribution d;
    d.n = n;
    d.alphabet_sizes.resize(n);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        d.alphabet_sizes[i] = 2 + static_cast<int>(rng() % (max_alphabet - 1));
        total *= d.alphabet_sizes[i];
    }
    std::vector<std::uint64_t> chosen;
    while (chosen.empty()) {
        for (std::uint64_t t = 0; t < total; ++t)
            if (uniform01(rng) < 0.5) chosen.push_back(t);
    }
    double sum = 0.0;
    std::vector<double> weights(chosen.size());
    for (auto& w : weights) {
        w = -std::log(1.0 - uniform01(rng));  // Exp(1), normalized below
        sum += w;
    }
    for (size_t j = 0; j < chosen.size(); ++j) {
        Atom atom;
        atom.labels.resize(n);
        std::uint64_t rem = chosen[j];
        for (int i = n - 1; i >= 0; --i) {
            atom.labels[i] = static_cast<int>(rem % d.alphabet_sizes[i]);
            rem /= d.alphabet_sizes[i];
        }
        atom.prob = weights[j] / sum;
        d.support.push_back(std::move(atom));
    }
    return d;
}

}  // namespace aef
