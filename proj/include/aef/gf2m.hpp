#pragma once

// Exact arithmetic in GF(2^m), 1 <= m <= 8. Elements are polynomial
// coefficient bitmasks in [0, 2^m). Multiplication goes through log/antilog
// tables built once per field from a searched generator, so it stays exact
// even when x itself is not primitive for the reduction polynomial.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace aef {

using FieldElement = unsigned;

struct FieldSpec {
    int m = 0;
    unsigned reduction_poly = 0;
    unsigned q = 0;
    std::vector<std::uint8_t> log_table;  // index: nonzero element -> discrete log
    std::vector<std::uint8_t> exp_table;  // index: exponent in [0, 2(q-1)) -> element
};

namespace detail {

// Carry-less multiply followed by reduction mod poly. Used only while
// building the tables.
inline unsigned gf_slow_mul(unsigned a, unsigned b, unsigned poly, int m) {
    unsigned r = 0;
    for (int i = 0; i < m; ++i)
        if ((b >> i) & 1u) r ^= a << i;
    for (int d = 2 * m - 2; d >= m; --d)
        if ((r >> d) & 1u) r ^= poly << (d - m);
    return r;
}

inline unsigned multiplicative_order(unsigned g, unsigned poly, int m) {
    unsigned x = g;
    unsigned ord = 1;
    while (x != 1) {
        x = gf_slow_mul(x, g, poly, m);
        ++ord;
    }
    return ord;
}

}  // namespace detail

// Fixed reduction polynomial per m; codeword enumeration stays deterministic.
inline unsigned gf2m_reduction_poly(int m) {
    static constexpr unsigned polys[9] = {
        0,           // unused
        0b11,        // x+1 (GF(2))
        0b111,       // x^2+x+1
        0b1011,      // x^3+x+1
        0b10011,     // x^4+x+1
        0b100101,    // x^5+x^2+1
        0b1000011,   // x^6+x+1
        0b10000011,  // x^7+x+1
        0b100011011  // x^8+x^4+x^3+x+1
    };
    return polys[m];
}

inline FieldSpec field_make(int m) {
    if (m < 1 || m > 8)
        throw std::out_of_range("field_make: m must be in [1,8]");
    FieldSpec spec;
    spec.m = m;
    spec.reduction_poly = gf2m_reduction_poly(m);
    spec.q = 1u << m;

    const unsigned order = spec.q - 1;
    spec.log_table.assign(spec.q, 0);
    spec.exp_table.assign(2 * order ? 2 * order : 1, 1);

    if (m == 1) return spec;  // multiplicative group is trivial

    unsigned gen = 0;
    for (unsigned g = 2; g < spec.q; ++g) {
        if (detail::multiplicative_order(g, spec.reduction_poly, m) == order) {
            gen = g;
            break;
        }
    }
    // every finite field has a primitive element
    unsigned x = 1;
    for (unsigned e = 0; e < order; ++e) {
        spec.exp_table[e] = static_cast<std::uint8_t>(x);
        spec.exp_table[e + order] = static_cast<std::uint8_t>(x);
        spec.log_table[x] = static_cast<std::uint8_t>(e);
        x = detail::gf_slow_mul(x, gen, spec.reduction_poly, m);
    }
    return spec;
}

inline FieldElement f_add(FieldElement a, FieldElement b) { return a ^ b; }

inline FieldElement f_mul(FieldElement a, FieldElement b, const FieldSpec& spec) {
    if (a == 0 || b == 0) return 0;
    return spec.exp_table[spec.log_table[a] + spec.log_table[b]];
}

inline FieldElement f_inv(FieldElement a, const FieldSpec& spec) {
    if (a == 0)
        throw std::domain_error("f_inv: division by zero");
    if (spec.m == 1) return 1;
    return spec.exp_table[(spec.q - 1) - spec.log_table[a]];
}

}  // namespace aef
