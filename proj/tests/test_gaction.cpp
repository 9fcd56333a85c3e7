#include "doctest.h"
#include "irredlab/gaction.hpp"

#include <random>

using namespace irredlab;
using namespace irredlab::gaction;
using namespace irredlab::grp;
using ffield::Field;

namespace {

GroupPtr pgammal(uint64_t p, unsigned f) {
    return projective_quotient(semilinear_extension(general_linear(2, Field::make(p, f))));
}

}  // namespace

TEST_CASE("gaction: projective line sizes") {
    auto a4 = Action::projective_line(projective_quotient(special_linear(2, Field::make(2, 2))));
    CHECK(a4->size() == 5);
    CHECK(a4->faithful());

    auto a16 = Action::projective_line(pgammal(2, 4));
    CHECK(a16->size() == 17);
    CHECK(a16->faithful());
}

TEST_CASE("gaction: three-point stabilizer in PGammaL(2,16) is C_4") {
    auto g = pgammal(2, 4);
    auto a = Action::projective_line(g);
    uint32_t e1 = *a->find_point({1, 0});
    uint32_t e2 = *a->find_point({0, 1});
    uint32_t e12 = *a->find_point({1, 1});
    auto stab = a->pointwise_stabilizer(g->whole().ids, {e1, e2, e12});
    REQUIRE(stab.size() == 4);
    // generated by the Frobenius pair (I, 1)
    uint32_t frob = g->id_of(GroupElem{Mat::identity(2), 1});
    CHECK(g->elem_order(frob) == 4);
    CHECK(std::count(stab.begin(), stab.end(), frob) == 1);
}

TEST_CASE("gaction: decomposition actions") {
    auto d4 = Action::decomposition_action(special_linear(2, Field::make(2, 2)));
    CHECK(d4->size() == 10);  // (q+1)q/2 unordered pairs of distinct 1-spaces

    auto d16 = Action::decomposition_action(special_linear(2, Field::make(2, 4)));
    CHECK(d16->size() == 136);  // 17*16/2

    auto d32 = Action::decomposition_action(special_linear(3, Field::make(2, 1)));
    CHECK(d32->size() == 28);  // |GL_3(2)| / 3!

    CHECK_THROWS_AS(Action::decomposition_action(special_linear(2, Field::make(2, 4)), 10), Error);
}

TEST_CASE("gaction: coset actions") {
    auto sd = singer_normalizer(3);
    auto a = Action::coset_action(sd.group, sd.normalizer);
    CHECK(a->size() == 8);  // 168/21
    CHECK(a->faithful());

    auto s3 = sylow2_and_index2(3);
    auto h = Action::coset_action(s3.group, s3.index2);
    CHECK(h->size() == 126);  // 504/4
    CHECK(h->faithful());

    // H = G: a single point, not faithful for a nontrivial group
    auto whole = Action::coset_action(sd.group, sd.group->whole());
    CHECK(whole->size() == 1);
    CHECK(!whole->faithful());
}

TEST_CASE("gaction: coset stabilizers are the conjugates of H") {
    auto sd = singer_normalizer(3);
    auto a = Action::coset_action(sd.group, sd.normalizer);
    for (uint32_t pt = 0; pt < a->size(); ++pt) {
        auto stab = a->pointwise_stabilizer(sd.group->whole().ids, {pt});
        auto conj = sd.normalizer.conjugate(a->coset_rep(pt));
        REQUIRE(stab == conj.ids);
    }
}

TEST_CASE("gaction: orbits") {
    auto g = pgammal(2, 4);
    auto a = Action::projective_line(g);

    auto full = a->orbits(g->whole().ids);
    CHECK(full.size() == 1);  // transitive

    std::vector<uint32_t> trivial{g->identity_id()};
    CHECK(a->orbits(trivial).size() == a->size());

    // point stabilizer of a 2-transitive action: orbit sizes {1, 16}
    auto stab = a->pointwise_stabilizer(g->whole().ids, {0});
    auto orbs = a->orbits(stab);
    REQUIRE(orbs.size() == 2);
    CHECK(orbs[0].size() + orbs[1].size() == 17);
    CHECK(std::min(orbs[0].size(), orbs[1].size()) == 1);
}

TEST_CASE("gaction: pointwise stabilizer conventions") {
    auto g = pgammal(2, 4);
    auto a = Action::projective_line(g);
    // empty sequence: the whole subgroup
    CHECK(a->pointwise_stabilizer(g->whole().ids, {}).size() == g->order());
    // all points of a faithful action: trivial
    std::vector<uint32_t> all(a->size());
    for (uint32_t i = 0; i < a->size(); ++i) all[i] = i;
    auto k = a->pointwise_stabilizer(g->whole().ids, all);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == g->identity_id());
}

TEST_CASE("gaction: pointwise stabilizers are order-independent") {
    auto g = pgammal(3, 2);
    auto a = Action::projective_line(g);
    std::vector<uint32_t> pts{0, 3, 5, 7};
    auto s1 = a->pointwise_stabilizer(g->whole().ids, pts);
    std::vector<uint32_t> rev(pts.rbegin(), pts.rend());
    auto s2 = a->pointwise_stabilizer(g->whole().ids, rev);
    CHECK(s1 == s2);
    // and equals the intersection of single-point stabilizers
    auto acc = g->whole().ids;
    for (uint32_t pt : pts) {
        auto sp = a->pointwise_stabilizer(g->whole().ids, {pt});
        std::vector<uint32_t> tmp;
        std::set_intersection(acc.begin(), acc.end(), sp.begin(), sp.end(),
                              std::back_inserter(tmp));
        acc = std::move(tmp);
    }
    CHECK(s1 == acc);
}

TEST_CASE("gaction: apply satisfies the action laws") {
    std::vector<ActionPtr> actions;
    actions.push_back(Action::projective_line(pgammal(2, 2)));
    actions.push_back(Action::decomposition_action(special_linear(2, Field::make(2, 2))));
    auto sd = singer_normalizer(3);
    actions.push_back(Action::coset_action(sd.group, sd.normalizer));
    std::mt19937_64 rng(99);
    for (const auto& a : actions) {
        const auto& g = a->group();
        for (int t = 0; t < 3000; ++t) {
            uint32_t x = uint32_t(rng() % g.order()), y = uint32_t(rng() % g.order());
            uint32_t pt = uint32_t(rng() % a->size());
            REQUIRE(a->apply(g.mul(x, y), pt) == a->apply(y, a->apply(x, pt)));
            REQUIRE(a->apply(g.identity_id(), pt) == pt);
        }
    }
}

TEST_CASE("gaction: json dump shape") {
    auto a = Action::projective_line(projective_quotient(special_linear(2, Field::make(2, 2))));
    auto js = a->to_json();
    CHECK(js.find("\"omega_size\":5") != std::string::npos);
    CHECK(js.find("\"points\"") != std::string::npos);
}
