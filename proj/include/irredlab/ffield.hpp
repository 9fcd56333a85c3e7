#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace irredlab {

/// Error type used across the library for violated preconditions and
/// exceeded resource caps.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace ffield {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_{p^f} with a fixed irreducible modulus.
///
/// Elements are canonical indices in [0, q): the element with coefficient
/// vector (c_0, ..., c_{f-1}) over Z_p has index sum c_i * p^i. Index 0 is
/// zero, index 1 is one. All arithmetic is exact modular polynomial
/// arithmetic; for q <= 256 the tables are precomputed.
///
/// The modulus is the least monic irreducible polynomial of degree f in
/// coefficient-encoding order, and the cached generator is the least element
/// of full multiplicative order, so encodings are reproducible run to run.
class Field {
public:
    static constexpr uint64_t kDefaultSizeCap = uint64_t(1) << 20;

    /// Builds F_{p^f}. Throws on non-prime p or p^f above the cap.
    static FieldPtr make(uint64_t p, unsigned f, uint64_t size_cap = kDefaultSizeCap);

    uint32_t p() const { return p_; }
    unsigned f() const { return f_; }
    uint32_t q() const { return q_; }

    /// Low coefficients c_0..c_{f-1} of the monic modulus x^f + sum c_i x^i.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t coeff(uint32_t a, unsigned i) const;
    uint32_t from_coeffs(const std::vector<uint32_t>& cs) const;

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    /// Multiplicative inverse; throws on a = 0.
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// a^{p^r}; frobenius(a, f) = a.
    uint32_t frobenius(uint32_t a, unsigned r) const;

    /// Least element of multiplicative order exactly q - 1 (cached).
    uint32_t generator() const { return generator_; }

    /// Multiplicative order of a (a != 0).
    uint64_t mult_order(uint32_t a) const;

    /// g^{(q-1)/(p^m-1)}: generates the multiplicative group of the unique
    /// subfield of order p^m. Throws unless m divides f.
    uint32_t subfield_primitive(unsigned m) const;

    /// Least m dividing f with a^{p^m} = a.
    unsigned element_degree(uint32_t a) const;

    std::string str(uint32_t a) const;

private:
    Field() = default;

    uint32_t p_ = 0;
    unsigned f_ = 0;
    uint32_t q_ = 0;
    std::vector<uint32_t> modulus_;
    uint32_t generator_ = 0;

    bool tabled_ = false;
    std::vector<uint32_t> mul_table_;   // q*q when tabled
    std::vector<uint32_t> inv_table_;   // q when tabled
    std::vector<uint32_t> frob_table_;  // x -> x^p when tabled

    uint32_t mul_direct(uint32_t a, uint32_t b) const;
};

/// Checked element-with-field pair for the public arithmetic surface.
/// Group internals use raw indices; this wrapper enforces the field-mismatch
/// and zero-inversion error contracts.
struct FieldElem {
    FieldPtr field;
    uint32_t v = 0;

    FieldElem() = default;
    FieldElem(FieldPtr fld, uint32_t val) : field(std::move(fld)), v(val) {}

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(uint64_t e) const;
    FieldElem frobenius(unsigned r) const;
    bool operator==(const FieldElem& o) const;
};

/// All divisors of n in increasing order.
std::vector<uint64_t> divisors(uint64_t n);

/// Prime factorization as (prime, exponent) pairs.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

bool is_prime(uint64_t n);

}  // namespace ffield
}  // namespace irredlab
