#include "irredlab/ffield.hpp"

#include <algorithm>

namespace irredlab {
namespace ffield {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, unsigned>> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Dense polynomials over Z_p, low coefficient first, no trailing zeros.
using Poly = std::vector<uint32_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic-normalized on the fly (leading coefficient inverted mod p).
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    poly_trim(a);
    if (b.empty()) throw Error("poly_mod: division by zero polynomial");
    // inverse of leading coefficient of b mod p
    uint32_t lead = b.back();
    uint32_t lead_inv = 1;
    for (uint32_t x = 1; x < p; ++x)
        if (x * lead % p == 1) { lead_inv = x; break; }
    while (a.size() >= b.size()) {
        uint32_t c = uint32_t(uint64_t(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t t = uint64_t(c) * b[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - t) % p);
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    poly_trim(c);
    return c;
}

Poly index_to_poly(uint64_t idx, uint32_t p) {
    Poly c;
    while (idx) { c.push_back(uint32_t(idx % p)); idx /= p; }
    return c;
}

// Irreducibility over Z_p by trial division against every monic polynomial
// of degree 1..deg/2.
bool poly_irreducible(const Poly& monic, uint32_t p) {
    unsigned deg = unsigned(monic.size()) - 1;
    if (deg == 1) return true;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (uint64_t lo = 0; lo < count; ++lo) {
            Poly div = index_to_poly(lo, p);
            div.resize(d + 1, 0);
            div[d] = 1;
            if (poly_mod(monic, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::make(uint64_t p, unsigned f, uint64_t size_cap) {
    if (!is_prime(p)) throw Error("make_field: p = " + std::to_string(p) + " is not prime");
    if (f < 1) throw Error("make_field: f must be >= 1");
    uint64_t q = 1;
    for (unsigned i = 0; i < f; ++i) {
        q *= p;
        if (q > size_cap)
            throw Error("make_field: p^f exceeds size cap " + std::to_string(size_cap));
    }

    auto fld = std::shared_ptr<Field>(new Field());
    fld->p_ = uint32_t(p);
    fld->f_ = f;
    fld->q_ = uint32_t(q);

    // least monic irreducible of degree f in coefficient-encoding order
    Poly monic;
    for (uint64_t lo = 0;; ++lo) {
        if (lo >= q) throw Error("make_field: no irreducible modulus found");  // cannot happen
        monic = index_to_poly(lo, fld->p_);
        monic.resize(f + 1, 0);
        monic[f] = 1;
        if (poly_irreducible(monic, fld->p_)) break;
    }
    fld->modulus_.assign(monic.begin(), monic.end() - 1);

    if (q <= 256) {
        fld->tabled_ = true;
        fld->mul_table_.assign(size_t(q) * q, 0);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = a; b < q; ++b) {
                uint32_t m = fld->mul_direct(a, b);
                fld->mul_table_[size_t(a) * q + b] = m;
                fld->mul_table_[size_t(b) * q + a] = m;
            }
        fld->inv_table_.assign(q, 0);
        for (uint32_t a = 1; a < q; ++a)
            for (uint32_t b = 1; b < q; ++b)
                if (fld->mul_table_[size_t(a) * q + b] == 1) { fld->inv_table_[a] = b; break; }
        fld->frob_table_.assign(q, 0);
        for (uint32_t a = 0; a < q; ++a) fld->frob_table_[a] = fld->pow(a, p);
    }

    // least element of full multiplicative order
    auto fac = factorize(q - 1);
    for (uint32_t a = 1; a < q; ++a) {
        bool full = true;
        for (auto [ell, e] : fac) {
            (void)e;
            if (fld->pow(a, (q - 1) / ell) == 1) { full = false; break; }
        }
        if (full || q == 2) { fld->generator_ = a; break; }
    }

    return fld;
}

uint32_t Field::coeff(uint32_t a, unsigned i) const {
    for (unsigned k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

uint32_t Field::from_coeffs(const std::vector<uint32_t>& cs) const {
    if (cs.size() > f_) throw Error("from_coeffs: too many coefficients");
    uint64_t idx = 0;
    for (size_t i = cs.size(); i-- > 0;) {
        if (cs[i] >= p_) throw Error("from_coeffs: coefficient out of range");
        idx = idx * p_ + cs[i];
    }
    return uint32_t(idx);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < f_; ++i) {
        out += mult * uint32_t((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < f_; ++i) {
        out += mult * uint32_t((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_direct(uint32_t a, uint32_t b) const {
    Poly pa = index_to_poly(a, p_), pb = index_to_poly(b, p_);
    Poly monic(modulus_);
    monic.push_back(1);
    Poly r = poly_mod(poly_mul(pa, pb, p_), monic, p_);
    uint64_t idx = 0;
    for (size_t i = r.size(); i-- > 0;) idx = idx * p_ + r[i];
    return uint32_t(idx);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (tabled_) return mul_table_[size_t(a) * q_ + b];
    return mul_direct(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw Error("field inverse of zero");
    if (tabled_) return inv_table_[a];
    return pow(a, q_ - 2);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t out = 1, base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

uint32_t Field::frobenius(uint32_t a, unsigned r) const {
    r %= f_;
    for (unsigned i = 0; i < r; ++i)
        a = tabled_ ? frob_table_[a] : pow(a, p_);
    return a;
}

uint64_t Field::mult_order(uint32_t a) const {
    if (a == 0) throw Error("mult_order of zero");
    for (uint64_t d : divisors(q_ - 1))
        if (pow(a, d) == 1) return d;
    throw Error("mult_order: no divisor order found");  // unreachable, Lagrange
}

uint32_t Field::subfield_primitive(unsigned m) const {
    if (m == 0 || f_ % m != 0)
        throw Error("subfield_primitive: m = " + std::to_string(m) + " does not divide f = " +
                    std::to_string(f_));
    uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p_;
    return pow(generator_, (q_ - 1) / (pm - 1));
}

unsigned Field::element_degree(uint32_t a) const {
    for (uint64_t m : divisors(f_))
        if (frobenius(a, unsigned(m)) == a) return unsigned(m);
    return f_;
}

std::string Field::str(uint32_t a) const {
    if (f_ == 1 || a < p_) return std::to_string(a);
    std::string s = "[";
    for (unsigned i = 0; i < f_; ++i) {
        if (i) s += " ";
        s += std::to_string(coeff(a, i));
    }
    return s + "]";
}

static void check_same_field(const FieldElem& a, const FieldElem& b) {
    if (!a.field || !b.field) throw Error("field element without field");
    if (a.field == b.field) return;
    if (a.field->p() != b.field->p() || a.field->f() != b.field->f() ||
        a.field->modulus() != b.field->modulus())
        throw Error("field mismatch in element arithmetic");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(*this, o);
    return {field, field->add(v, o.v)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(*this, o);
    return {field, field->sub(v, o.v)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(*this, o);
    return {field, field->mul(v, o.v)};
}
FieldElem FieldElem::inverse() const { return {field, field->inv(v)}; }
FieldElem FieldElem::pow(uint64_t e) const { return {field, field->pow(v, e)}; }
FieldElem FieldElem::frobenius(unsigned r) const { return {field, field->frobenius(v, r)}; }
bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(*this, o);
    return v == o.v;
}

}  // namespace ffield
}  // namespace irredlab
