#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "irredlab/ffield.hpp"

namespace irredlab {
namespace grp {

using ffield::Field;
using ffield::FieldPtr;

constexpr unsigned kMaxDim = 4;

/// Square matrix over a finite field, entries stored as field indices.
struct Mat {
    uint8_t n = 0;
    std::array<uint32_t, kMaxDim * kMaxDim> a{};

    uint32_t& at(unsigned i, unsigned j) { return a[i * n + j]; }
    uint32_t at(unsigned i, unsigned j) const { return a[i * n + j]; }
    static Mat identity(unsigned n);
    bool operator==(const Mat& o) const;
};

Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_inv(const Field& F, const Mat& x);           // throws if singular
uint32_t mat_det(const Field& F, const Mat& x);
Mat mat_frobenius(const Field& F, const Mat& x, unsigned r);
Mat mat_scale(const Field& F, const Mat& x, uint32_t lambda);
bool mat_is_scalar(const Mat& x);

/// Row vector image v -> v^{sigma^r} * A (the fixed right-action convention).
std::vector<uint32_t> vec_apply(const Field& F, const std::vector<uint32_t>& v,
                                const Mat& m, unsigned frobexp);

/// Semilinear pair (matrix, Frobenius exponent). Linear elements have
/// frobexp = 0. Multiplication: (A,r)(B,s) = (A^{sigma^s} B, r+s mod f).
struct GroupElem {
    Mat m;
    uint32_t frobexp = 0;
};

GroupElem elem_mul(const Field& F, const GroupElem& x, const GroupElem& y);
GroupElem elem_inv(const Field& F, const GroupElem& x);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Sorted member-id set referring to a parent group.
struct Subgroup {
    GroupPtr parent;
    std::vector<uint32_t> ids;  // sorted

    size_t order() const { return ids.size(); }
    bool contains(uint32_t id) const;
    bool is_closed() const;  // full product/inverse closure check
    Subgroup intersect(const Subgroup& o) const;
    Subgroup conjugate(uint32_t g) const;  // { g^-1 s g }
};

/// A fully enumerated finite matrix or semilinear group. Elements are packed
/// canonical codes sorted ascending; the position in the sorted list is the
/// element id. For projective groups the code is the least packed code over
/// the admissible scalar multiples of the matrix part.
class Group : public std::enable_shared_from_this<Group> {
public:
    static constexpr uint64_t kDefaultCap = 5'000'000;

    /// Breadth-first product closure of the generators.
    static GroupPtr closure(FieldPtr field, unsigned dim, const std::vector<GroupElem>& gens,
                            std::string name, uint64_t cap = kDefaultCap);

    const Field& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    unsigned dim() const { return dim_; }
    const std::string& name() const { return name_; }
    size_t order() const { return codes_.size(); }
    uint32_t identity_id() const { return identity_id_; }
    bool projective() const { return scalars_.size() > 1; }
    /// Field elements lambda with (lambda*I, 0) identified to the identity.
    const std::vector<uint32_t>& scalars() const { return scalars_; }
    const std::vector<uint32_t>& generator_ids() const { return gen_ids_; }

    GroupElem elem(uint32_t id) const;
    uint32_t mul(uint32_t x, uint32_t y) const;
    uint32_t inverse(uint32_t x) const;
    uint32_t conj(uint32_t g, uint32_t x) const { return mul(mul(inverse(x), g), x); }
    std::optional<uint32_t> find(const GroupElem& e) const;
    uint32_t id_of(const GroupElem& e) const;  // throws if absent
    uint64_t elem_order(uint32_t id) const;

    Subgroup whole() const;
    Subgroup subgroup(std::vector<uint32_t> ids) const;
    Subgroup subgroup_closure(const std::vector<uint32_t>& gen_ids) const;
    /// Elements of the subgroup commuting with x (x need not lie in it).
    Subgroup centralizer(const GroupElem& x) const;
    Subgroup centralizer_in(const Subgroup& s, const GroupElem& x) const;
    bool normalizes(const Subgroup& s, uint32_t g) const;
    /// Checks s^g = s for every stored generator g of this group.
    bool is_normal(const Subgroup& s) const;

    uint64_t pack(const GroupElem& e) const;
    GroupElem unpack(uint64_t code) const;
    uint64_t canonical_code(const GroupElem& e) const;

    /// Spot-check of the group axioms on random pairs/triples. Throws on
    /// failure. `pairs` products are tested for membership and associativity.
    void validate(unsigned pairs = 1000) const;

    void save(const std::string& path) const;
    static GroupPtr load(const std::string& path, FieldPtr field);

private:
    Group() = default;
    void finalize();  // sort codes, build index + inverses

    FieldPtr field_;
    unsigned dim_ = 0;
    std::string name_;
    unsigned ebits_ = 0, fbits_ = 0;
    std::vector<uint64_t> codes_;                  // sorted
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<uint32_t> inv_ids_;
    std::vector<uint32_t> gen_ids_;
    std::vector<uint32_t> scalars_ = {1};
    uint32_t identity_id_ = 0;

    friend GroupPtr projective_quotient(const GroupPtr&);
    friend GroupPtr semilinear_extension(const GroupPtr&, uint64_t);
};

/// SL_n(q) from elementary transvection generators; order checked against
/// q^{n(n-1)/2} * prod_{i=2..n} (q^i - 1).
GroupPtr special_linear(unsigned n, FieldPtr field, uint64_t cap = Group::kDefaultCap);

/// GL_n(q); order checked against prod_{i=0..n-1} (q^n - q^i).
GroupPtr general_linear(unsigned n, FieldPtr field, uint64_t cap = Group::kDefaultCap);

/// Extension of a matrix group by the field automorphisms: elements (A, r)
/// with r in [0, f). Requires the base group to be Frobenius-stable.
GroupPtr semilinear_extension(const GroupPtr& g, uint64_t cap = Group::kDefaultCap);

/// Quotient by the scalar matrices lying in the input group, realized by
/// canonical class representatives.
GroupPtr projective_quotient(const GroupPtr& g);

/// SL_r(2) together with the normalizer of a Singer cycle: the subgroup
/// generated by the companion matrix of the least primitive polynomial of
/// degree r and the Frobenius matrix of the induced F_{2^r}-structure.
struct SingerData {
    GroupPtr group;
    Subgroup normalizer;
    Subgroup cycle;  // the cyclic subgroup of order 2^r - 1
};
SingerData singer_normalizer(unsigned r, uint64_t cap = Group::kDefaultCap);

/// SL_2(2^c) with U = upper unitriangular Sylow 2-subgroup and
/// H = { u(t) : coeff_0(t) = 0 } of index 2 in U.
struct SylowData {
    GroupPtr group;
    Subgroup sylow;     // U, order 2^c
    Subgroup index2;    // H, order 2^{c-1}
};
SylowData sylow2_and_index2(unsigned c, uint64_t cap = Group::kDefaultCap);
/// Same group/U but H = kernel of an arbitrary nonzero F_2-functional on U,
/// given by a mask of coefficient positions; mask 1 gives the default H.
SylowData sylow2_with_functional(unsigned c, uint32_t mask, uint64_t cap = Group::kDefaultCap);

}  // namespace grp
}  // namespace irredlab
