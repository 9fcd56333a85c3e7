#include "irredlab/liebounds.hpp"

#include <bit>
#include <cmath>

namespace irredlab {
namespace liebounds {

Family family_from_string(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "G2") return Family::G2;
    if (s == "F4") return Family::F4;
    if (s == "E6") return Family::E6;
    if (s == "E7") return Family::E7;
    if (s == "E8") return Family::E8;
    throw Error("unknown family: " + s);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

static mpz_class factorial(unsigned n) {
    mpz_class out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

LieDatum lie_data(Family f, unsigned r) {
    LieDatum d;
    d.family = f;
    d.rank = r;
    switch (f) {
        case Family::A:
            if (r < 1) throw Error("A_r needs r >= 1");
            d.d = r * r + 2 * r;
            d.pos_roots = r * (r + 1) / 2;
            d.weyl_order = factorial(r + 1);
            for (unsigned i = 2; i <= r + 1; ++i) d.degrees.push_back(i);
            break;
        case Family::B:
        case Family::C:
            if (r < 2) throw Error("B_r/C_r needs r >= 2");
            d.d = 2 * r * r + r;
            d.pos_roots = r * r;
            d.weyl_order = factorial(r);
            mpz_mul_2exp(d.weyl_order.get_mpz_t(), d.weyl_order.get_mpz_t(), r);
            for (unsigned i = 1; i <= r; ++i) d.degrees.push_back(2 * i);
            break;
        case Family::D:
            if (r < 3) throw Error("D_r needs r >= 3");
            d.d = 2 * r * r - r;
            d.pos_roots = r * r - r;
            d.weyl_order = factorial(r);
            mpz_mul_2exp(d.weyl_order.get_mpz_t(), d.weyl_order.get_mpz_t(), r - 1);
            for (unsigned i = 1; i + 1 <= r; ++i) d.degrees.push_back(2 * i);
            d.degrees.push_back(r);
            break;
        case Family::G2:
            if (r != 2) throw Error("G2 has rank 2");
            d.d = 14;
            d.pos_roots = 6;
            d.weyl_order = 12;
            d.degrees = {2, 6};
            break;
        case Family::F4:
            if (r != 4) throw Error("F4 has rank 4");
            d.d = 52;
            d.pos_roots = 24;
            d.weyl_order = 1152;
            d.degrees = {2, 6, 8, 12};
            break;
        case Family::E6:
            if (r != 6) throw Error("E6 has rank 6");
            d.d = 78;
            d.pos_roots = 36;
            d.weyl_order = 51840;
            d.degrees = {2, 5, 6, 8, 9, 12};
            break;
        case Family::E7:
            if (r != 7) throw Error("E7 has rank 7");
            d.d = 133;
            d.pos_roots = 63;
            d.weyl_order = 2903040;
            d.degrees = {2, 6, 8, 10, 12, 14, 18};
            break;
        case Family::E8:
            if (r != 8) throw Error("E8 has rank 8");
            d.d = 248;
            d.pos_roots = 120;
            d.weyl_order = 696729600;
            d.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
    }
    if (d.d != d.rank + 2 * d.pos_roots) throw Error("lie_data: d != r + 2|Phi+|");
    mpz_class prod = 1;
    for (unsigned deg : d.degrees) prod *= deg;
    if (prod != d.weyl_order) throw Error("lie_data: |W| != product of degrees");
    if (d.d > 4 * r * r) throw Error("lie_data: d > 4r^2");
    return d;
}

static double up(double x) { return std::nextafter(std::nextafter(x, HUGE_VAL), HUGE_VAL); }
static double dn(double x) { return std::nextafter(std::nextafter(x, -HUGE_VAL), -HUGE_VAL); }

double log2_upper(const mpz_class& z) {
    if (z <= 0) throw Error("log2 of non-positive value");
    size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    if (mpz_popcount(z.get_mpz_t()) == 1) return double(bits - 1);  // exact power of two
    if (bits <= 53) return up(std::log2(double(z.get_ui())));       // exact in a double
    // z < (top + 1) * 2^s with top on 48 bits, both ends exact in a double
    size_t s = bits - 48;
    mpz_class top = z >> s;
    return up(std::log2(double(top.get_ui() + 1)) + double(s));
}

double log2_lower(const mpz_class& z) {
    if (z <= 0) throw Error("log2 of non-positive value");
    size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    if (mpz_popcount(z.get_mpz_t()) == 1) return double(bits - 1);
    if (bits <= 53) return dn(std::log2(double(z.get_ui())));
    size_t s = bits - 48;
    mpz_class top = z >> s;
    return dn(std::log2(double(top.get_ui())) + double(s));
}

BoundValue weyl_degree_bound(const LieDatum& datum) {
    BoundValue b;
    b.exact = datum.weyl_order;
    mpz_mul_2exp(b.exact.get_mpz_t(), b.exact.get_mpz_t(), uint64_t(datum.d) * datum.d);
    b.integral = true;
    b.approx = mpz_sizeinbase(b.exact.get_mpz_t(), 2) > 1000 ? HUGE_VAL : up(b.exact.get_d());
    b.tag = "weyl_2_d2(" + std::string(family_name(datum.family)) + std::to_string(datum.rank) +
            ")";
    return b;
}

BoundValue leng_bound(unsigned d, const BoundValue& c) {
    if (c.exact < 1) throw Error("leng_bound: c must be >= 1");
    BoundValue b;
    b.tag = "leng(d=" + std::to_string(d) + ")";
    uint64_t half = uint64_t(d) * (d + 1) / 2;
    if (mpz_popcount(c.exact.get_mpz_t()) == 1) {
        // c = 2^k: the bound is the exact integer d + half * k
        uint64_t k = mpz_sizeinbase(c.exact.get_mpz_t(), 2) - 1;
        b.exact = mpz_class(half) * mpz_class((unsigned long)k) + d;
        b.approx = b.exact.get_d();
        b.integral = true;
        return b;
    }
    double l2 = log2_upper(c.exact);
    double v = up(double(d) + up(double(half) * l2));
    b.approx = v;
    b.exact = mpz_class(std::ceil(v));
    b.integral = false;
    return b;
}

static mpz_class pow_u(unsigned long base, unsigned exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

static mpz_class mpz_pow(const mpz_class& base, unsigned exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

TheoremBound theorem_bound(unsigned long r) {
    if (r < 1) throw Error("theorem_bound: r >= 1");
    mpz_class rr(r);
    mpz_class r2 = rr * rr;
    mpz_class r4 = r2 * r2;
    mpz_class r6 = r4 * r2;
    mpz_class r8 = r4 * r4;
    TheoremBound t;
    // 4r^2 + (1/2)(4r^2)(4r^2+1)(r^2+16r^4), expanded
    t.raw.exact = 128 * r8 + 40 * r6 + 2 * r4 + 4 * r2;
    {
        mpz_class direct = 4 * r2 + (4 * r2) * (4 * r2 + 1) * (r2 + 16 * r4) / 2;
        if (direct != t.raw.exact) throw Error("theorem_bound: expansion mismatch");
    }
    t.raw.approx = up(t.raw.exact.get_d());
    t.raw.tag = "raw(r=" + std::to_string(r) + ")";
    t.cr8.exact = 174 * r8;
    t.cr8.approx = up(t.cr8.exact.get_d());
    t.cr8.tag = "174r^8";
    if (t.raw.exact > t.cr8.exact) throw Error("theorem_bound: raw exceeds 174 r^8");
    return t;
}

unsigned prime_count_with_multiplicity(uint64_t n) {
    unsigned c = 0;
    for (auto [p, e] : ffield::factorize(n)) {
        (void)p;
        c += e;
    }
    return c;
}

unsigned distinct_prime_count(uint64_t n) {
    return unsigned(ffield::factorize(n).size());
}

CorBounds cor_bounds(unsigned long r, uint64_t f) {
    if (r < 1 || f < 1) throw Error("cor_bounds: r, f >= 1");
    CorBounds cb;
    mpz_class r8 = mpz_pow(mpz_class(r), 8);
    cb.pi = prime_count_with_multiplicity(f);
    cb.pi_d = distinct_prime_count(f);
    cb.simple.exact = 174 * r8;
    cb.simple.approx = up(cb.simple.exact.get_d());
    cb.simple.tag = "174r^8";
    cb.almost_simple.exact = 177 * r8 + cb.pi;
    cb.almost_simple.approx = up(cb.almost_simple.exact.get_d());
    cb.almost_simple.tag = "177r^8+pi(f)";
    // intermediate: 174r^8 + log2(6r) + pi(f) <= 177r^8 + pi(f)
    mpz_class six_r = 6 * mpz_class(r);
    mpz_class rhs = 177 * r8;
    double lhs = up(up(mpz_class(174 * r8).get_d()) + log2_upper(six_r));
    if (lhs > dn(rhs.get_d())) throw Error("cor_bounds: intermediate inequality failed");
    return cb;
}

BoundValue parabolic_bound(unsigned n) {
    if (n < 2) throw Error("parabolic_bound: n >= 2");
    BoundValue b;
    b.tag = "n^4_log2_n(n=" + std::to_string(n) + ")";
    mpz_class n4 = pow_u(n, 4);
    if ((n & (n - 1)) == 0) {
        unsigned k = unsigned(std::bit_width(uint64_t(n)) - 1);
        b.exact = n4 * k;
        b.approx = b.exact.get_d();
        b.integral = true;
        return b;
    }
    double v = up(n4.get_d() * log2_upper(mpz_class(n)));
    b.approx = v;
    b.exact = mpz_class(std::ceil(v));
    b.integral = false;
    return b;
}

LengthHeuristic length_heuristic(Family fam, unsigned r, uint64_t q) {
    auto fac = ffield::factorize(q);
    if (fac.size() != 1) throw Error("length_heuristic: q must be a prime power");
    unsigned e = fac[0].second;
    LieDatum datum = lie_data(fam, r);
    LengthHeuristic h;
    h.phi_log = double(datum.pos_roots) * double(e);  // log_p q = e exactly
    h.order = pow_u(q, datum.pos_roots);
    for (unsigned deg : datum.degrees) h.order *= (pow_u(q, deg) - 1);
    h.log2_order = log2_upper(h.order);
    h.ratio = double(datum.pos_roots) / (double(r) * r);
    if (!(h.phi_log < log2_lower(h.order)))
        throw Error("length_heuristic: |Phi+| log_p q >= log2 |G|");
    return h;
}

}  // namespace liebounds
}  // namespace irredlab
