#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "irredlab/ffield.hpp"

namespace irredlab {
namespace liebounds {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };
Family family_from_string(const std::string& s);
const char* family_name(Family f);

/// Structural constants of an untwisted type: rank, dimension of the
/// adjoint group, Weyl group order, positive-root count and the invariant
/// degrees. Internal consistency (d = r + 2|Phi+|, |W| = prod of degrees,
/// d <= 4r^2) is checked at construction.
struct LieDatum {
    Family family;
    unsigned rank = 0;
    unsigned d = 0;
    mpz_class weyl_order;
    unsigned pos_roots = 0;
    std::vector<unsigned> degrees;
};

LieDatum lie_data(Family f, unsigned r);

/// Certified floating bounds on log2 of a positive integer.
double log2_upper(const mpz_class& z);
double log2_lower(const mpz_class& z);

/// An exact bound value. `exact` is the integer value itself when the
/// formula is integral, and the ceiling of a certified upper estimate
/// otherwise; `approx` is the upward-rounded real value (infinity when the
/// value does not fit a double). log2() reports an upper bound on the
/// base-2 logarithm of the exact value.
struct BoundValue {
    mpz_class exact;
    double approx = 0;
    bool integral = true;
    std::string tag;

    double log2() const { return log2_upper(exact); }
};

/// c = |W| * 2^{d^2}, stored exactly (the E8 value has 61.5k bits).
BoundValue weyl_degree_bound(const LieDatum& datum);

/// d + (1/2) d (d+1) log2(c); exact when c is a power of two, otherwise an
/// upward-rounded value with its ceiling recorded.
BoundValue leng_bound(unsigned d, const BoundValue& c);

/// raw(r) = 4r^2 + (1/2)(4r^2)(4r^2+1)(r^2+16r^4) = 128r^8+40r^6+2r^4+4r^2
/// together with 174 r^8; construction asserts raw <= 174 r^8.
struct TheoremBound {
    BoundValue raw;
    BoundValue cr8;
};
TheoremBound theorem_bound(unsigned long r);

unsigned prime_count_with_multiplicity(uint64_t n);  // pi: with multiplicity
unsigned distinct_prime_count(uint64_t n);           // pi_d: distinct primes

/// simple = 174 r^8; almost_simple = 177 r^8 + pi(f). Also checks the
/// intermediate 174r^8 + log2(6r) + pi(f) <= 177r^8 + pi(f).
struct CorBounds {
    BoundValue simple;
    BoundValue almost_simple;
    unsigned pi = 0;
    unsigned pi_d = 0;
};
CorBounds cor_bounds(unsigned long r, uint64_t f);

/// n^4 log2(n) with upward rounding.
BoundValue parabolic_bound(unsigned n);

/// |Phi+| log_p q against log2 of the untwisted order
/// q^{|Phi+|} prod (q^{deg_i} - 1); asserts the strict inequality.
struct LengthHeuristic {
    double phi_log = 0;     // |Phi+| * log_p q, exact integer
    double log2_order = 0;  // upper bound on log2 |G(q)|
    mpz_class order;
    double ratio = 0;       // |Phi+| / r^2
};
LengthHeuristic length_heuristic(Family fam, unsigned r, uint64_t q);

}  // namespace liebounds
}  // namespace irredlab
