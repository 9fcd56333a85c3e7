#include "doctest.h"
#include "irredlab/ffield.hpp"

#include <random>

using namespace irredlab;
using ffield::Field;
using ffield::FieldElem;

namespace {

// Independent oracle: naive coefficient-vector arithmetic written from the
// ring definition, with no shared code with Field. Used to cross-check every
// field of order <= 64.
struct NaiveField {
    uint32_t p;
    unsigned f;
    std::vector<uint32_t> mod;  // c0..c_{f-1} of monic modulus

    std::vector<uint32_t> decode(uint32_t a) const {
        std::vector<uint32_t> c(f);
        for (unsigned i = 0; i < f; ++i) { c[i] = a % p; a /= p; }
        return c;
    }
    uint32_t encode(const std::vector<uint32_t>& c) const {
        uint32_t idx = 0;
        for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
        return idx;
    }
    uint32_t add(uint32_t x, uint32_t y) const {
        auto a = decode(x), b = decode(y);
        for (unsigned i = 0; i < f; ++i) a[i] = (a[i] + b[i]) % p;
        return encode(a);
    }
    uint32_t mul(uint32_t x, uint32_t y) const {
        auto a = decode(x), b = decode(y);
        std::vector<uint32_t> c(2 * f, 0);
        for (unsigned i = 0; i < f; ++i)
            for (unsigned j = 0; j < f; ++j)
                c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        // reduce by x^f = -mod
        for (size_t k = 2 * f - 1; k >= f; --k) {
            uint32_t t = c[k];
            if (!t) continue;
            c[k] = 0;
            for (unsigned i = 0; i < f; ++i)
                c[k - f + i] = (c[k - f + i] + (p - mod[i] % p) * t) % p;
        }
        c.resize(f);
        return encode(c);
    }
};

}  // namespace

TEST_CASE("ffield: construction basics") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->generator() == 1);

    auto f4 = Field::make(2, 2);
    // only irreducible quadratic over F2 is x^2 + x + 1
    CHECK(f4->modulus() == std::vector<uint32_t>{1, 1});

    auto f16 = Field::make(2, 4);
    CHECK(f16->q() == 16);
    CHECK(f16->mult_order(f16->generator()) == 15);

    CHECK_THROWS_AS(Field::make(4, 2), Error);           // non-prime p
    CHECK_THROWS_AS(Field::make(2, 21), Error);          // exceeds default cap
    CHECK_THROWS_AS(Field::make(2, 25, 1 << 24), Error); // exceeds explicit cap
}

TEST_CASE("ffield: arithmetic examples") {
    auto f16 = Field::make(2, 4);
    for (uint32_t a = 0; a < 16; ++a) CHECK(f16->add(a, a) == 0);  // char 2
    for (uint32_t a = 1; a < 16; ++a) CHECK(f16->mul(a, f16->inv(a)) == 1);
    uint32_t g5 = f16->pow(f16->generator(), 5);
    CHECK(f16->mult_order(g5) == 3);  // (16-1)/gcd(5,15)
    CHECK_THROWS_AS(f16->inv(0), Error);
}

TEST_CASE("ffield: element wrapper errors") {
    auto f16 = Field::make(2, 4);
    auto f8 = Field::make(2, 3);
    FieldElem a{f16, 5}, b{f8, 5};
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    CHECK((a + a).v == 0);
    CHECK_THROWS_AS(FieldElem(f16, 0).inverse(), Error);
}

TEST_CASE("ffield: frobenius") {
    auto f4 = Field::make(2, 2);
    uint32_t g = f4->generator();
    CHECK(f4->frobenius(g, 0) == g);
    CHECK(f4->frobenius(g, 2) == g);
    // g^2 = g + 1 against modulus x^2 + x + 1
    CHECK(f4->frobenius(g, 1) == f4->add(g, 1));

    auto f16 = Field::make(2, 4);
    for (uint32_t a = 0; a < 16; ++a) CHECK(f16->frobenius(a, 4) == a);
}

TEST_CASE("ffield: frobenius is a field automorphism") {
    for (auto [p, f] : std::vector<std::pair<uint64_t, unsigned>>{{2, 4}, {3, 2}, {5, 2}}) {
        auto fld = Field::make(p, f);
        std::mt19937 rng(12345);
        for (int i = 0; i < 200; ++i) {
            uint32_t a = rng() % fld->q(), b = rng() % fld->q();
            CHECK(fld->frobenius(fld->add(a, b), 1) ==
                  fld->add(fld->frobenius(a, 1), fld->frobenius(b, 1)));
            CHECK(fld->frobenius(fld->mul(a, b), 1) ==
                  fld->mul(fld->frobenius(a, 1), fld->frobenius(b, 1)));
        }
    }
}

TEST_CASE("ffield: subfield primitive elements") {
    auto f16 = Field::make(2, 4);
    CHECK(f16->subfield_primitive(4) == f16->generator());
    uint32_t z2 = f16->subfield_primitive(2);
    CHECK(z2 == f16->pow(f16->generator(), 5));
    CHECK(f16->mult_order(z2) == 3);
    CHECK(f16->frobenius(z2, 2) == z2);   // fixed by x -> x^4
    CHECK(f16->frobenius(z2, 1) != z2);   // not by x -> x^2
    CHECK(f16->subfield_primitive(1) == 1);  // p = 2: order p-1 = 1
    CHECK_THROWS_AS(f16->subfield_primitive(3), Error);

    // order and degree are exact for every divisor of f
    for (auto [p, f] : std::vector<std::pair<uint64_t, unsigned>>{{2, 4}, {2, 6}, {3, 2}}) {
        auto fld = Field::make(p, f);
        for (uint64_t m : ffield::divisors(f)) {
            uint32_t z = fld->subfield_primitive(unsigned(m));
            uint64_t pm = 1;
            for (unsigned i = 0; i < m; ++i) pm *= p;
            CHECK(fld->mult_order(z) == pm - 1);
            if (pm > 2) CHECK(fld->element_degree(z) == unsigned(m));
        }
    }
}

TEST_CASE("ffield: element degrees") {
    auto f16 = Field::make(2, 4);
    CHECK(f16->element_degree(1) == 1);
    CHECK(f16->element_degree(f16->generator()) == 4);
    CHECK(f16->element_degree(f16->pow(f16->generator(), 5)) == 2);
}

TEST_CASE("ffield: subfield lattice respected") {
    auto f64 = Field::make(2, 6);
    for (uint64_t m : ffield::divisors(6)) {
        uint32_t z = f64->subfield_primitive(unsigned(m));
        uint32_t x = 1;
        for (uint64_t k = 0; k < 70; ++k) {
            CHECK(unsigned(m) % f64->element_degree(x) == 0);
            x = f64->mul(x, z);
        }
    }
}

TEST_CASE("ffield: matches naive oracle up to q = 64") {
    for (auto [p, f] : std::vector<std::pair<uint64_t, unsigned>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
             {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}, {61, 1}}) {
        auto fld = Field::make(p, f);
        NaiveField nf{fld->p(), fld->f(), fld->modulus()};
        for (uint32_t a = 0; a < fld->q(); ++a)
            for (uint32_t b = 0; b < fld->q(); ++b) {
                REQUIRE(fld->add(a, b) == nf.add(a, b));
                REQUIRE(fld->mul(a, b) == nf.mul(a, b));
            }
        // Fermat closure: x^{p^f} = x for every element
        for (uint32_t a = 0; a < fld->q(); ++a) REQUIRE(fld->pow(a, fld->q()) == a);
    }
}
