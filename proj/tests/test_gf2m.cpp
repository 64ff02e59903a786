#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>

#include "aef/gf2m.hpp"

using namespace aef;

namespace {

int poly_degree(unsigned p) { return static_cast<int>(std::bit_width(p)) - 1; }

// GF(2)[x] remainder, bitmask polynomials.
unsigned poly_mod(unsigned a, unsigned b) {
    const int db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db) {
        a ^= b << (poly_degree(a) - db);
    }
    return a;
}

// Oracle: trial division by every polynomial of degree 1..m-1.
bool irreducible(unsigned poly, int m) {
    for (unsigned d = 2u; d < (1u << m); ++d)
        if (poly_mod(poly, d) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("field_make fixes the table polynomial per m") {
    CHECK(field_make(2).q == 4);
    CHECK(field_make(2).reduction_poly == 0b111);
    CHECK(field_make(3).q == 8);
    CHECK(field_make(3).reduction_poly == 0b1011);
    CHECK_THROWS_AS(field_make(9), std::out_of_range);
    CHECK_THROWS_AS(field_make(0), std::out_of_range);
}

TEST_CASE("reduction polynomials are irreducible of degree m") {
    for (int m = 1; m <= 8; ++m) {
        const unsigned poly = gf2m_reduction_poly(m);
        CHECK(poly_degree(poly) == m);
        CHECK(irreducible(poly, m));
    }
}

TEST_CASE("f_add is XOR") {
    CHECK(f_add(3, 5) == 6);
    const FieldSpec gf8 = field_make(3);
    for (unsigned a = 0; a < gf8.q; ++a) {
        CHECK(f_add(a, 0) == a);
        CHECK(f_add(a, a) == 0);
    }
}

TEST_CASE("f_mul matches hand reductions") {
    const FieldSpec gf4 = field_make(2);
    CHECK(f_mul(2, 2, gf4) == 3);  // a*a = a+1 mod x^2+x+1
    const FieldSpec gf8 = field_make(3);
    CHECK(f_mul(2, 4, gf8) == 3);  // a*a^2 = a^3 = a+1 mod x^3+x+1
    for (unsigned a = 0; a < gf8.q; ++a) CHECK(f_mul(a, 1, gf8) == a);
}

TEST_CASE("f_mul agrees with carry-less multiply-and-reduce for all m") {
    for (int m = 1; m <= 8; ++m) {
        const FieldSpec spec = field_make(m);
        for (unsigned a = 0; a < spec.q; ++a)
            for (unsigned b = 0; b < spec.q; ++b)
                CHECK(f_mul(a, b, spec) ==
                      detail::gf_slow_mul(a, b, spec.reduction_poly, m));
    }
}

TEST_CASE("f_inv by exhaustive search oracle") {
    const FieldSpec gf4 = field_make(2);
    CHECK(f_inv(1, gf4) == 1);
    CHECK(f_inv(2, gf4) == 3);
    CHECK_THROWS_AS(f_inv(0, gf4), std::domain_error);
    for (int m = 1; m <= 8; ++m) {
        const FieldSpec spec = field_make(m);
        for (unsigned a = 1; a < spec.q; ++a)
            CHECK(f_mul(a, f_inv(a, spec), spec) == 1);
    }
}

TEST_CASE("ring axioms hold exhaustively") {
    for (int m = 1; m <= 5; ++m) {
        const FieldSpec spec = field_make(m);
        for (unsigned a = 0; a < spec.q; ++a)
            for (unsigned b = 0; b < spec.q; ++b) {
                CHECK(f_mul(a, b, spec) == f_mul(b, a, spec));
                for (unsigned c = 0; c < spec.q; ++c) {
                    CHECK(f_mul(f_mul(a, b, spec), c, spec) ==
                          f_mul(a, f_mul(b, c, spec), spec));
                    CHECK(f_mul(a, f_add(b, c), spec) ==
                          f_add(f_mul(a, b, spec), f_mul(a, c, spec)));
                }
            }
    }
    // spot-check the large fields on random triples
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] { state ^= state << 13; state ^= state >> 7; state ^= state << 17; return state; };
    for (int m = 6; m <= 8; ++m) {
        const FieldSpec spec = field_make(m);
        for (int t = 0; t < 20000; ++t) {
            const unsigned a = next() % spec.q, b = next() % spec.q, c = next() % spec.q;
            CHECK(f_mul(f_mul(a, b, spec), c, spec) == f_mul(a, f_mul(b, c, spec), spec));
            CHECK(f_mul(a, f_add(b, c), spec) ==
                  f_add(f_mul(a, b, spec), f_mul(a, c, spec)));
        }
    }
}

TEST_CASE("nonzero elements form a group of order q-1") {
    for (int m = 1; m <= 8; ++m) {
        const FieldSpec spec = field_make(m);
        for (unsigned a = 1; a < spec.q; ++a) {
            unsigned p = 1;
            for (unsigned e = 0; e + 1 < spec.q; ++e) p = f_mul(p, a, spec);
            CHECK(p == 1);
        }
    }
}
