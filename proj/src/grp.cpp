#include "irredlab/grp.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <deque>
#include <fstream>
#include <random>

namespace irredlab {
namespace grp {

Mat Mat::identity(unsigned n) {
    Mat m;
    m.n = uint8_t(n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (unsigned i = 0; i < unsigned(n) * n; ++i)
        if (a[i] != o.a[i]) return false;
    return true;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    Mat z;
    z.n = x.n;
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j) {
            uint32_t s = 0;
            for (unsigned k = 0; k < x.n; ++k) s = F.add(s, F.mul(x.at(i, k), y.at(k, j)));
            z.at(i, j) = s;
        }
    return z;
}

uint32_t mat_det(const Field& F, const Mat& x) {
    Mat m = x;
    uint32_t det = 1;
    unsigned n = m.n;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(c, c));
        uint32_t inv = F.inv(m.at(c, c));
        for (unsigned r = c + 1; r < n; ++r) {
            uint32_t factor = F.mul(m.at(r, c), inv);
            if (!factor) continue;
            for (unsigned j = c; j < n; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, m.at(c, j)));
        }
    }
    return det;
}

Mat mat_inv(const Field& F, const Mat& x) {
    unsigned n = x.n;
    Mat m = x, inv = Mat::identity(n);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) throw Error("mat_inv: singular matrix");
        if (piv != c)
            for (unsigned j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        uint32_t d = F.inv(m.at(c, c));
        for (unsigned j = 0; j < n; ++j) {
            m.at(c, j) = F.mul(m.at(c, j), d);
            inv.at(c, j) = F.mul(inv.at(c, j), d);
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            uint32_t factor = m.at(r, c);
            for (unsigned j = 0; j < n; ++j) {
                m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, m.at(c, j)));
                inv.at(r, j) = F.sub(inv.at(r, j), F.mul(factor, inv.at(c, j)));
            }
        }
    }
    return inv;
}

Mat mat_frobenius(const Field& F, const Mat& x, unsigned r) {
    Mat m = x;
    for (unsigned i = 0; i < unsigned(m.n) * m.n; ++i) m.a[i] = F.frobenius(m.a[i], r);
    return m;
}

Mat mat_scale(const Field& F, const Mat& x, uint32_t lambda) {
    Mat m = x;
    for (unsigned i = 0; i < unsigned(m.n) * m.n; ++i) m.a[i] = F.mul(m.a[i], lambda);
    return m;
}

bool mat_is_scalar(const Mat& x) {
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j)
            if (i != j && x.at(i, j) != 0) return false;
    for (unsigned i = 1; i < x.n; ++i)
        if (x.at(i, i) != x.at(0, 0)) return false;
    return x.at(0, 0) != 0;
}

std::vector<uint32_t> vec_apply(const Field& F, const std::vector<uint32_t>& v, const Mat& m,
                                unsigned frobexp) {
    std::vector<uint32_t> out(m.n, 0);
    for (unsigned j = 0; j < m.n; ++j) {
        uint32_t s = 0;
        for (unsigned i = 0; i < m.n; ++i)
            s = F.add(s, F.mul(F.frobenius(v[i], frobexp), m.at(i, j)));
        out[j] = s;
    }
    return out;
}

GroupElem elem_mul(const Field& F, const GroupElem& x, const GroupElem& y) {
    GroupElem z;
    z.m = mat_mul(F, mat_frobenius(F, x.m, y.frobexp), y.m);
    z.frobexp = (x.frobexp + y.frobexp) % F.f();
    return z;
}

GroupElem elem_inv(const Field& F, const GroupElem& x) {
    GroupElem z;
    z.frobexp = (F.f() - x.frobexp) % F.f();
    z.m = mat_inv(F, mat_frobenius(F, x.m, z.frobexp));
    return z;
}

bool Subgroup::contains(uint32_t id) const {
    return std::binary_search(ids.begin(), ids.end(), id);
}

bool Subgroup::is_closed() const {
    if (!contains(parent->identity_id())) return false;
    for (uint32_t a : ids) {
        if (!contains(parent->inverse(a))) return false;
        for (uint32_t b : ids)
            if (!contains(parent->mul(a, b))) return false;
    }
    return true;
}

Subgroup Subgroup::intersect(const Subgroup& o) const {
    if (parent != o.parent) throw Error("subgroup intersect: different parents");
    Subgroup out{parent, {}};
    std::set_intersection(ids.begin(), ids.end(), o.ids.begin(), o.ids.end(),
                          std::back_inserter(out.ids));
    return out;
}

Subgroup Subgroup::conjugate(uint32_t g) const {
    Subgroup out{parent, {}};
    out.ids.reserve(ids.size());
    for (uint32_t s : ids) out.ids.push_back(parent->conj(s, g));
    std::sort(out.ids.begin(), out.ids.end());
    return out;
}

uint64_t Group::pack(const GroupElem& e) const {
    uint64_t code = 0;
    unsigned n = dim_;
    for (unsigned i = 0; i < n * n; ++i) code = (code << ebits_) | e.m.a[i];
    return (code << fbits_) | e.frobexp;
}

GroupElem Group::unpack(uint64_t code) const {
    GroupElem e;
    e.m.n = uint8_t(dim_);
    e.frobexp = fbits_ ? uint32_t(code & ((uint64_t(1) << fbits_) - 1)) : 0;
    code >>= fbits_;
    uint64_t emask = (uint64_t(1) << ebits_) - 1;
    for (unsigned i = dim_ * dim_; i-- > 0;) {
        e.m.a[i] = uint32_t(code & emask);
        code >>= ebits_;
    }
    return e;
}

uint64_t Group::canonical_code(const GroupElem& e) const {
    if (scalars_.size() <= 1) return pack(e);
    const Field& F = *field_;
    if (scalars_.size() == size_t(F.q()) - 1) {
        // full scalar group: scale the first nonzero entry to 1
        for (unsigned i = 0; i < dim_ * dim_; ++i)
            if (e.m.a[i]) {
                GroupElem s{mat_scale(F, e.m, F.inv(e.m.a[i])), e.frobexp};
                return pack(s);
            }
        throw Error("canonical_code: zero matrix");
    }
    uint64_t best = ~uint64_t(0);
    for (uint32_t lam : scalars_)
        best = std::min(best, pack(GroupElem{mat_scale(F, e.m, lam), e.frobexp}));
    return best;
}

void Group::finalize() {
    std::sort(codes_.begin(), codes_.end());
    index_.clear();
    index_.reserve(codes_.size() * 2);
    for (uint32_t i = 0; i < codes_.size(); ++i) index_[codes_[i]] = i;
    GroupElem id_elem{Mat::identity(dim_), 0};
    auto it = index_.find(canonical_code(id_elem));
    if (it == index_.end()) throw Error("group: identity not in element set");
    identity_id_ = it->second;
    inv_ids_.resize(codes_.size());
    for (uint32_t i = 0; i < codes_.size(); ++i) {
        auto jt = index_.find(canonical_code(elem_inv(*field_, unpack(codes_[i]))));
        if (jt == index_.end()) throw Error("group: not closed under inverse");
        inv_ids_[i] = jt->second;
    }
}

GroupPtr Group::closure(FieldPtr field, unsigned dim, const std::vector<GroupElem>& gens,
                        std::string name, uint64_t cap) {
    if (dim < 1 || dim > kMaxDim) throw Error("closure: dimension out of range");
    auto g = std::shared_ptr<Group>(new Group());
    g->field_ = std::move(field);
    g->dim_ = dim;
    g->name_ = std::move(name);
    const Field& F = *g->field_;
    g->ebits_ = std::max(1u, unsigned(std::bit_width(uint32_t(F.q() - 1))));
    g->fbits_ = F.f() > 1 ? unsigned(std::bit_width(uint32_t(F.f() - 1))) : 0;
    if (dim * dim * g->ebits_ + g->fbits_ > 64)
        throw Error("closure: element encoding exceeds 64 bits");

    for (const auto& e : gens) {
        if (e.m.n != dim) throw Error("closure: generator dimension mismatch");
        if (mat_det(F, e.m) == 0) throw Error("closure: singular generator");
        if (e.frobexp >= F.f()) throw Error("closure: frobexp out of range");
    }

    std::unordered_map<uint64_t, uint32_t> seen;
    std::vector<uint64_t> order;
    std::deque<uint64_t> queue;
    uint64_t idc = g->pack(GroupElem{Mat::identity(dim), 0});
    seen[idc] = 0;
    order.push_back(idc);
    queue.push_back(idc);
    std::vector<uint64_t> gen_codes;
    for (const auto& e : gens) gen_codes.push_back(g->pack(e));
    while (!queue.empty()) {
        uint64_t c = queue.front();
        queue.pop_front();
        GroupElem x = g->unpack(c);
        for (const auto& e : gens) {
            uint64_t pc = g->pack(elem_mul(F, x, e));
            if (seen.emplace(pc, 0).second) {
                order.push_back(pc);
                queue.push_back(pc);
                if (order.size() > cap)
                    throw Error("closure: group size cap " + std::to_string(cap) +
                                " exceeded (reached " + std::to_string(order.size()) + ")");
            }
        }
    }
    g->codes_ = std::move(order);
    g->finalize();
    for (uint64_t gc : gen_codes) g->gen_ids_.push_back(g->index_.at(gc));
    g->validate();
    return g;
}

GroupElem Group::elem(uint32_t id) const { return unpack(codes_.at(id)); }

uint32_t Group::mul(uint32_t x, uint32_t y) const {
    uint64_t c = canonical_code(elem_mul(*field_, unpack(codes_[x]), unpack(codes_[y])));
    auto it = index_.find(c);
    if (it == index_.end()) throw Error("group mul: product escaped element set");
    return it->second;
}

uint32_t Group::inverse(uint32_t x) const { return inv_ids_.at(x); }

std::optional<uint32_t> Group::find(const GroupElem& e) const {
    auto it = index_.find(canonical_code(e));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

uint32_t Group::id_of(const GroupElem& e) const {
    auto r = find(e);
    if (!r) throw Error("group: element not found");
    return *r;
}

uint64_t Group::elem_order(uint32_t id) const {
    uint64_t k = 1;
    uint32_t x = id;
    while (x != identity_id_) {
        x = mul(x, id);
        ++k;
        if (k > order()) throw Error("elem_order: runaway");
    }
    return k;
}

Subgroup Group::whole() const {
    Subgroup s{shared_from_this(), {}};
    s.ids.resize(order());
    for (uint32_t i = 0; i < order(); ++i) s.ids[i] = i;
    return s;
}

Subgroup Group::subgroup(std::vector<uint32_t> ids) const {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return Subgroup{shared_from_this(), std::move(ids)};
}

Subgroup Group::subgroup_closure(const std::vector<uint32_t>& gen_ids) const {
    std::vector<bool> in(order(), false);
    std::vector<uint32_t> members{identity_id_};
    in[identity_id_] = true;
    std::deque<uint32_t> queue{identity_id_};
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (uint32_t g : gen_ids) {
            uint32_t p = mul(x, g);
            if (!in[p]) {
                in[p] = true;
                members.push_back(p);
                queue.push_back(p);
            }
        }
    }
    return subgroup(std::move(members));
}

Subgroup Group::centralizer(const GroupElem& x) const { return centralizer_in(whole(), x); }

Subgroup Group::centralizer_in(const Subgroup& s, const GroupElem& x) const {
    const Field& F = *field_;
    Subgroup out{shared_from_this(), {}};
    for (uint32_t id : s.ids) {
        GroupElem g = elem(id);
        if (canonical_code(elem_mul(F, g, x)) == canonical_code(elem_mul(F, x, g)))
            out.ids.push_back(id);
    }
    return out;
}

bool Group::normalizes(const Subgroup& s, uint32_t g) const {
    for (uint32_t m : s.ids)
        if (!s.contains(conj(m, g))) return false;
    return true;
}

bool Group::is_normal(const Subgroup& s) const {
    for (uint32_t g : gen_ids_)
        if (!normalizes(s, g)) return false;
    return true;
}

void Group::validate(unsigned pairs) const {
    const Field& F = *field_;
    std::mt19937_64 rng(0x1e5f);
    size_t n = order();
    for (unsigned t = 0; t < pairs; ++t) {
        uint32_t a = uint32_t(rng() % n), b = uint32_t(rng() % n), c = uint32_t(rng() % n);
        // product-by-id agrees with raw (semi)linear multiplication
        GroupElem raw = elem_mul(F, elem(a), elem(b));
        uint32_t ab = mul(a, b);
        if (canonical_code(raw) != codes_[ab]) throw Error("validate: id-product mismatch");
        if (mul(ab, c) != mul(a, mul(b, c))) throw Error("validate: associativity failure");
        if (mul(a, inverse(a)) != identity_id_) throw Error("validate: inverse failure");
        if (inverse(inverse(a)) != a) throw Error("validate: inverse not involutive");
        if (mul(a, identity_id_) != a || mul(identity_id_, a) != a)
            throw Error("validate: identity failure");
    }
}

// --- constructions ------------------------------------------------------

static uint64_t sl_order(unsigned n, uint64_t q) {
    uint64_t o = 1;
    for (unsigned i = 0; i < n * (n - 1) / 2; ++i) o *= q;
    uint64_t qi = q;
    for (unsigned i = 2; i <= n; ++i) {
        qi *= q;
        o *= (qi - 1);
    }
    return o;
}

static uint64_t gl_order(unsigned n, uint64_t q) {
    uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    uint64_t o = 1, qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        o *= (qn - qi);
        qi *= q;
    }
    return o;
}

static std::vector<GroupElem> transvection_gens(const Field& F, unsigned n) {
    // x_ij(z^m) for a generator z: the powers z^0..z^{f-1} span F_q over F_p,
    // so these generate every root subgroup and hence SL_n(q).
    std::vector<GroupElem> gens;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            uint32_t t = 1;
            for (unsigned m = 0; m < F.f(); ++m) {
                Mat x = Mat::identity(n);
                x.at(i, j) = t;
                gens.push_back({x, 0});
                t = F.mul(t, F.generator());
            }
        }
    return gens;
}

GroupPtr special_linear(unsigned n, FieldPtr field, uint64_t cap) {
    if (n < 2) throw Error("special_linear: n must be >= 2");
    uint64_t expect = sl_order(n, field->q());
    if (expect > cap)
        throw Error("special_linear: |SL_" + std::to_string(n) + "(" + std::to_string(field->q()) +
                    ")| = " + std::to_string(expect) + " exceeds cap");
    std::string name = "SL(" + std::to_string(n) + "," + std::to_string(field->q()) + ")";
    auto g = Group::closure(field, n, transvection_gens(*field, n), name, cap);
    if (g->order() != expect) throw Error("special_linear: order mismatch");
    return g;
}

GroupPtr general_linear(unsigned n, FieldPtr field, uint64_t cap) {
    if (n < 1) throw Error("general_linear: n must be >= 1");
    uint64_t expect = gl_order(n, field->q());
    if (expect > cap) throw Error("general_linear: order exceeds cap");
    std::vector<GroupElem> gens;
    if (n >= 2) gens = transvection_gens(*field, n);
    Mat d = Mat::identity(n);
    d.at(0, 0) = field->generator();
    gens.push_back({d, 0});
    std::string name = "GL(" + std::to_string(n) + "," + std::to_string(field->q()) + ")";
    auto g = Group::closure(field, n, gens, name, cap);
    if (g->order() != expect) throw Error("general_linear: order mismatch");
    return g;
}

GroupPtr semilinear_extension(const GroupPtr& base, uint64_t cap) {
    const Field& F = base->field();
    if (F.f() == 1) return base;
    if (base->projective())
        throw Error("semilinear_extension: extend the matrix group before the quotient");
    uint64_t total = base->order() * uint64_t(F.f());
    if (total > cap) throw Error("semilinear_extension: extended size exceeds cap");
    // Frobenius-stability of the base group, needed for closure of the pairs
    for (uint32_t i = 0; i < base->order(); ++i) {
        GroupElem e = base->elem(i);
        if (!base->find(GroupElem{mat_frobenius(F, e.m, 1), 0}))
            throw Error("semilinear_extension: base group not Frobenius-stable");
    }
    auto g = std::shared_ptr<Group>(new Group());
    g->field_ = base->field_ptr();
    g->dim_ = base->dim();
    if (base->name().rfind("GL", 0) == 0)
        g->name_ = "GammaL" + base->name().substr(2);
    else if (base->name().rfind("SL", 0) == 0)
        g->name_ = "SigmaL" + base->name().substr(2);
    else
        g->name_ = "Gamma:" + base->name();
    g->ebits_ = std::max(1u, unsigned(std::bit_width(uint32_t(F.q() - 1))));
    g->fbits_ = unsigned(std::bit_width(uint32_t(F.f() - 1)));
    if (g->dim_ * g->dim_ * g->ebits_ + g->fbits_ > 64)
        throw Error("semilinear_extension: element encoding exceeds 64 bits");
    g->codes_.reserve(total);
    for (uint32_t i = 0; i < base->order(); ++i) {
        GroupElem e = base->elem(i);
        for (uint32_t r = 0; r < F.f(); ++r) g->codes_.push_back(g->pack(GroupElem{e.m, r}));
    }
    g->finalize();
    for (uint32_t gi : base->generator_ids())
        g->gen_ids_.push_back(g->index_.at(g->pack(GroupElem{base->elem(gi).m, 0})));
    g->gen_ids_.push_back(g->index_.at(g->pack(GroupElem{Mat::identity(g->dim_), 1})));
    g->validate();
    return g;
}

GroupPtr projective_quotient(const GroupPtr& base) {
    if (base->projective()) return base;
    const Field& F = base->field();
    auto g = std::shared_ptr<Group>(new Group());
    g->field_ = base->field_ptr();
    g->dim_ = base->dim();
    g->name_ = "P" + base->name();
    g->ebits_ = std::max(1u, unsigned(std::bit_width(uint32_t(F.q() - 1))));
    g->fbits_ = F.f() > 1 ? unsigned(std::bit_width(uint32_t(F.f() - 1))) : 0;
    // scalar matrices lying in the input group
    std::vector<uint32_t> scal;
    for (uint32_t lam = 1; lam < F.q(); ++lam) {
        Mat s = mat_scale(F, Mat::identity(g->dim_), lam);
        if (base->find(GroupElem{s, 0})) scal.push_back(lam);
    }
    g->scalars_ = scal;
    std::unordered_map<uint64_t, bool> seen;
    seen.reserve(base->order() * 2);
    for (uint32_t i = 0; i < base->order(); ++i) {
        uint64_t c = g->canonical_code(base->elem(i));
        if (seen.emplace(c, true).second) g->codes_.push_back(c);
    }
    if (g->codes_.size() * scal.size() != base->order())
        throw Error("projective_quotient: class count mismatch");
    g->finalize();
    for (uint32_t gi : base->generator_ids())
        g->gen_ids_.push_back(g->index_.at(g->canonical_code(base->elem(gi))));
    g->validate();
    return g;
}

SingerData singer_normalizer(unsigned r, uint64_t cap) {
    auto f2 = Field::make(2, 1);
    auto g = special_linear(r, f2, cap);
    auto fr = Field::make(2, r);
    uint64_t qr = uint64_t(1) << r;
    // The modulus of F_{2^r} is the least irreducible polynomial of degree r;
    // it is the wanted least primitive polynomial provided x generates the
    // multiplicative group, which we check explicitly.
    uint32_t x_elem = fr->from_coeffs({0, 1});
    if (fr->mult_order(x_elem) != qr - 1)
        throw Error("singer_normalizer: least irreducible not primitive at r = " +
                    std::to_string(r));
    const std::vector<uint32_t>& comp_poly = fr->modulus();
    // companion matrix: multiplication by x on F_{2^r} in basis 1, x, ..,
    // x^{r-1}; row i holds the image of basis element i (row-vector action)
    Mat comp;
    comp.n = uint8_t(r);
    for (unsigned i = 0; i + 1 < r; ++i) comp.at(i, i + 1) = 1;
    for (unsigned j = 0; j < r; ++j) comp.at(r - 1, j) = comp_poly[j];
    // Frobenius matrix: the squaring map of the F_{2^r}-structure
    Mat frob;
    frob.n = uint8_t(r);
    for (unsigned i = 0; i < r; ++i) {
        uint32_t basis_i = fr->pow(x_elem, i);
        uint32_t sq = fr->mul(basis_i, basis_i);
        for (unsigned j = 0; j < r; ++j) frob.at(i, j) = fr->coeff(sq, j);
    }
    uint32_t comp_id = g->id_of(GroupElem{comp, 0});
    uint32_t frob_id = g->id_of(GroupElem{frob, 0});
    SingerData out;
    out.cycle = g->subgroup_closure({comp_id});
    out.normalizer = g->subgroup_closure({comp_id, frob_id});
    if (out.cycle.order() != qr - 1) throw Error("singer_normalizer: cycle order mismatch");
    if (out.normalizer.order() != (qr - 1) * r)
        throw Error("singer_normalizer: normalizer order mismatch");
    out.group = g;
    return out;
}

SylowData sylow2_with_functional(unsigned c, uint32_t mask, uint64_t cap) {
    if (c < 1 || c > 6) throw Error("sylow2_and_index2: c out of supported range");
    if (mask == 0 || mask >= (uint32_t(1) << c)) throw Error("sylow2: bad functional mask");
    auto fq = Field::make(2, c);
    auto g = special_linear(2, fq, cap);
    SylowData out;
    out.group = g;
    std::vector<uint32_t> u_ids, h_ids;
    for (uint32_t t = 0; t < fq->q(); ++t) {
        Mat m = Mat::identity(2);
        m.at(0, 1) = t;
        uint32_t id = g->id_of(GroupElem{m, 0});
        u_ids.push_back(id);
        uint32_t dot = 0;
        for (unsigned i = 0; i < c; ++i)
            if (mask & (1u << i)) dot ^= fq->coeff(t, i);
        if (dot == 0) h_ids.push_back(id);
    }
    out.sylow = g->subgroup(std::move(u_ids));
    out.index2 = g->subgroup(std::move(h_ids));
    return out;
}

SylowData sylow2_and_index2(unsigned c, uint64_t cap) {
    // H = { u(t) : first coordinate of t is 0 }
    return sylow2_with_functional(c, 1, cap);
}

// --- binary cache -------------------------------------------------------

static constexpr uint32_t kCacheMagic = 0x494c4731;  // "ILG1"

void Group::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("group save: cannot open " + path);
    auto w32 = [&](uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    auto w64 = [&](uint64_t v) { out.write(reinterpret_cast<const char*>(&v), 8); };
    w32(kCacheMagic);
    w32(1);  // version
    w32(field_->p());
    w32(field_->f());
    w32(dim_);
    w32(uint32_t(name_.size()));
    out.write(name_.data(), std::streamsize(name_.size()));
    w32(uint32_t(scalars_.size()));
    for (uint32_t s : scalars_) w32(s);
    w32(uint32_t(gen_ids_.size()));
    for (uint32_t s : gen_ids_) w32(s);
    w64(codes_.size());
    for (uint64_t c : codes_) w64(c);
    if (!out) throw Error("group save: write failure");
}

GroupPtr Group::load(const std::string& path, FieldPtr field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("group load: cannot open " + path);
    auto r32 = [&]() {
        uint32_t v = 0;
        in.read(reinterpret_cast<char*>(&v), 4);
        return v;
    };
    auto r64 = [&]() {
        uint64_t v = 0;
        in.read(reinterpret_cast<char*>(&v), 8);
        return v;
    };
    if (r32() != kCacheMagic) throw Error("group load: bad magic");
    if (r32() != 1) throw Error("group load: unsupported version");
    uint32_t p = r32(), f = r32(), dim = r32();
    if (p != field->p() || f != field->f()) throw Error("group load: field mismatch");
    auto g = std::shared_ptr<Group>(new Group());
    g->field_ = std::move(field);
    g->dim_ = dim;
    uint32_t nlen = r32();
    g->name_.resize(nlen);
    in.read(g->name_.data(), nlen);
    g->ebits_ = std::max(1u, unsigned(std::bit_width(uint32_t(g->field_->q() - 1))));
    g->fbits_ = g->field_->f() > 1 ? unsigned(std::bit_width(uint32_t(g->field_->f() - 1))) : 0;
    uint32_t nscal = r32();
    g->scalars_.resize(nscal);
    for (auto& s : g->scalars_) s = r32();
    uint32_t ngen = r32();
    g->gen_ids_.resize(ngen);
    for (auto& s : g->gen_ids_) s = r32();
    uint64_t count = r64();
    g->codes_.resize(count);
    for (auto& c : g->codes_) c = r64();
    if (!in) throw Error("group load: truncated file");
    g->finalize();
    g->validate();
    return g;
}

}  // namespace grp
}  // namespace irredlab
