#pragma once

// (n,k) Reed-Solomon evaluation codes over GF(2^m). Evaluation points are
// the field elements labelled 0..n-1; enumeration order is lexicographic in
// the message's integer labels, so codeword lists are reproducible.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "aef/gf2m.hpp"

namespace aef {

inline constexpr std::uint64_t kDefaultGuard = 1'000'000;

using Codeword = std::vector<FieldElement>;

struct RSCode {
    int n = 0;
    int k = 0;
    FieldSpec spec;
    std::vector<FieldElement> eval_points;
};

inline RSCode rs_make(int n, int k, FieldSpec spec) {
    if (k < 1 || k > n)
        throw std::invalid_argument("rs_make: need 1 <= k <= n");
    if (static_cast<unsigned>(n) > spec.q)
        throw std::invalid_argument("rs_make: need n <= q");
    RSCode code{n, k, std::move(spec), {}};
    code.eval_points.resize(n);
    for (int i = 0; i < n; ++i) code.eval_points[i] = static_cast<FieldElement>(i);
    return code;
}

inline std::uint64_t rs_codeword_count(const RSCode& code) {
    std::uint64_t c = 1;
    for (int j = 0; j < code.k; ++j) c *= code.spec.q;
    return c;
}

// Horner evaluation of the message polynomial at every point.
inline Codeword rs_encode(std::span<const FieldElement> message, const RSCode& code) {
    if (static_cast<int>(message.size()) != code.k)
        throw std::invalid_argument("rs_encode: message length must equal k");
    Codeword cw(code.n);
    for (int i = 0; i < code.n; ++i) {
        FieldElement acc = 0;
        for (int j = code.k - 1; j >= 0; --j)
            acc = f_add(f_mul(acc, code.eval_points[i], code.spec), message[j]);
        cw[i] = acc;
    }
    return cw;
}

inline std::vector<Codeword> rs_enumerate(const RSCode& code,
                                          std::uint64_t guard = kDefaultGuard) {
    const std::uint64_t total = rs_codeword_count(code);
    if (total > guard)
        throw std::length_error("rs_enumerate: q^k exceeds support guard");
    std::vector<Codeword> out;
    out.reserve(total);
    std::vector<FieldElement> message(code.k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rem = idx;
        for (int j = code.k - 1; j >= 0; --j) {
            message[j] = static_cast<FieldElement>(rem % code.spec.q);
            rem /= code.spec.q;
        }
        out.push_back(rs_encode(message, code));
    }
    return out;
}

// MDS uniqueness: for every k-subset of positions the projection of the
// codeword set is a bijection onto GF(q)^k. Counting gives q^k projections,
// so distinctness alone decides it.
inline bool rs_mds_check(const RSCode& code, std::uint64_t guard = kDefaultGuard) {
    const auto words = rs_enumerate(code, guard);
    std::vector<int> positions(code.k);
    for (int i = 0; i < code.k; ++i) positions[i] = i;
    for (;;) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(words.size() * 2);
        for (const auto& cw : words) {
            std::uint64_t key = 0;
            for (int p : positions) key = key * code.spec.q + cw[p];
            if (!seen.insert(key).second) return false;
        }
        // next k-combination of {0..n-1}
        int i = code.k - 1;
        while (i >= 0 && positions[i] == code.n - code.k + i) --i;
        if (i < 0) break;
        ++positions[i];
        for (int j = i + 1; j < code.k; ++j) positions[j] = positions[j - 1] + 1;
    }
    return true;
}

}  // namespace aef
