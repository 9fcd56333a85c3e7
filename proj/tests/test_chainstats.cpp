#include "doctest.h"
#include "irredlab/chainstats.hpp"

using namespace irredlab;
using namespace irredlab::chainstats;
using namespace irredlab::grp;
using gaction::Action;
using gaction::ActionPtr;
using ffield::Field;

namespace {

GroupPtr pgammal(uint64_t p, unsigned f) {
    return projective_quotient(semilinear_extension(general_linear(2, Field::make(p, f))));
}

ActionPtr regular_c4() {
    // cyclic group of order 4 acting on itself by right multiplication
    auto f3 = Field::make(3, 1);
    Mat rot;
    rot.n = 2;
    rot.at(0, 1) = 1;
    rot.at(1, 0) = 2;  // -1 mod 3
    auto g = Group::closure(f3, 2, {GroupElem{rot, 0}}, "C4");
    return Action::coset_action(g, g->subgroup({g->identity_id()}));
}

}  // namespace

TEST_CASE("chainstats: predicates on conventions") {
    auto g = pgammal(2, 2);
    auto a = Action::projective_line(g);
    auto ep = predicates(*a, {});
    CHECK(!ep.is_base);
    CHECK(ep.is_irredundant);   // vacuous
    CHECK(ep.is_independent);   // vacuous
    CHECK(!ep.is_minimal_base);

    // a repeated point cannot shrink the stabilizer
    auto rep = predicates(*a, {0, 1, 0});
    CHECK(!rep.is_irredundant);
    CHECK(!rep.is_independent);
}

TEST_CASE("chainstats: explicit 5-point chain in PGammaL(2,16)") {
    auto g = pgammal(2, 4);
    auto a = Action::projective_line(g);
    const Field& F = g->field();
    uint32_t z1 = F.subfield_primitive(2);
    uint32_t z2 = F.subfield_primitive(4);
    std::vector<uint32_t> chain{
        *a->find_point({1, 0}), *a->find_point({0, 1}), *a->find_point({1, 1}),
        *a->find_point({1, z1}), *a->find_point({1, z2})};
    auto pr = predicates(*a, chain);
    CHECK(pr.is_base);
    CHECK(pr.is_irredundant);
}

TEST_CASE("chainstats: irred_max on the projective line") {
    auto a4 = Action::projective_line(pgammal(2, 2));
    auto r4 = irred_max(*a4);
    CHECK(r4.value == 4);  // 3 + (number of prime factors of f = 2)
    CHECK(r4.exact);

    auto a16 = Action::projective_line(pgammal(2, 4));
    auto r16 = irred_max(*a16);
    CHECK(r16.value == 5);
    CHECK(r16.exact);
}

TEST_CASE("chainstats: irred_max on Singer-normalizer cosets") {
    auto sd = singer_normalizer(3);
    auto a = Action::coset_action(sd.group, sd.normalizer);
    auto r = irred_max(*a);
    CHECK(r.value <= 3);
    CHECK(r.exact);
}

TEST_CASE("chainstats: base_min") {
    // sharply 3-transitive actions have minimum base size 3
    for (auto q : std::vector<std::pair<uint64_t, unsigned>>{{2, 2}, {5, 1}, {2, 3}}) {
        auto g = projective_quotient(general_linear(2, Field::make(q.first, q.second)));
        auto a = Action::projective_line(g);
        auto r = base_min(*a);
        CHECK(r.value == 3);
        CHECK(r.exact);
    }
    // a regular action needs a single point
    auto reg = regular_c4();
    CHECK(base_min(*reg).value == 1);
    // three points leave the field automorphisms; a fourth kills them
    auto a16 = Action::projective_line(pgammal(2, 4));
    CHECK(base_min(*a16).value == 4);
}

TEST_CASE("chainstats: height and Base") {
    auto a4 = Action::projective_line(pgammal(2, 2));
    auto h = height_max(*a4);
    auto b = base_max_minimal(*a4);
    auto i = irred_max(*a4);
    auto bm = base_min(*a4);
    CHECK(h.exact);
    CHECK(b.exact);
    CHECK(h.value >= b.value);
    CHECK(check_inequalities(bm.value, b.value, h.value, i.value).ok);
    CHECK(h.value <= 4);

    auto s2 = sylow2_and_index2(2);
    auto ha = Action::coset_action(s2.group, s2.index2);
    CHECK(base_max_minimal(*ha).value == 2);

    auto s3 = sylow2_and_index2(3);
    auto hb = Action::coset_action(s3.group, s3.index2);
    auto rb = base_max_minimal(*hb);
    CHECK(rb.value == 3);
    CHECK(rb.exact);
}

TEST_CASE("chainstats: oracle on tiny instances") {
    // trivial group on one point
    auto f2 = Field::make(2, 1);
    auto triv = Group::closure(f2, 2, {GroupElem{Mat::identity(2), 0}}, "1");
    auto ta = Action::coset_action(triv, triv->whole());
    auto ts = oracle_stats(*ta);
    CHECK(ts.base == 0);
    CHECK(ts.base_max == 0);
    CHECK(ts.height == 0);
    CHECK(ts.irred == 0);

    // regular cyclic group of order 4: one point is a base
    auto rs = oracle_stats(*regular_c4());
    CHECK(rs.base == 1);
    CHECK(rs.base_max == 1);
    CHECK(rs.height == 1);
    CHECK(rs.irred == 1);

    // guards
    auto a16 = Action::projective_line(pgammal(2, 4));
    CHECK_THROWS_AS(oracle_stats(*a16), Error);
}

TEST_CASE("chainstats: engines agree with the oracle") {
    std::vector<ActionPtr> acts;
    auto sd = singer_normalizer(3);
    acts.push_back(Action::coset_action(sd.group, sd.normalizer));
    acts.push_back(Action::projective_line(projective_quotient(special_linear(2, Field::make(2, 2)))));
    acts.push_back(Action::projective_line(pgammal(2, 2)));
    acts.push_back(regular_c4());
    for (const auto& a : acts) {
        auto os = oracle_stats(*a);
        CHECK(irred_max(*a).value == os.irred);
        CHECK(base_min(*a).value == os.base);
        CHECK(height_max(*a).value == os.height);
        CHECK(base_max_minimal(*a).value == os.base_max);
        CHECK(check_inequalities(os).ok);
    }
}

TEST_CASE("chainstats: minimal base iff independent base (exhaustive small case)") {
    auto a = Action::projective_line(pgammal(2, 2));
    uint32_t n = a->size();
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<uint32_t> pts;
        for (uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) pts.push_back(i);
        auto pr = predicates(*a, pts);
        REQUIRE(pr.is_minimal_base == (pr.is_independent && pr.is_base));
        // hereditary independence: deleting one point preserves independence
        if (pr.is_independent)
            for (uint32_t i = 0; i < n; ++i)
                if (mask & (1u << i)) {
                    std::vector<uint32_t> del;
                    for (uint32_t pt : pts)
                        if (pt != i) del.push_back(pt);
                    REQUIRE(predicates(*a, del).is_independent);
                }
    }
}

TEST_CASE("chainstats: socle chain inequality") {
    auto g16 = pgammal(2, 4);
    auto a16 = Action::projective_line(g16);
    std::vector<uint32_t> linear;
    for (uint32_t id = 0; id < g16->order(); ++id)
        if (g16->elem(id).frobexp == 0) linear.push_back(id);
    auto socle = g16->subgroup(std::move(linear));  // PSL_2(16) = PGL_2(16)
    CHECK(socle.order() == 4080);
    auto rep = socle_chain_check(*a16, socle);
    CHECK(rep.ok);
    CHECK(rep.irred_group == 5);
    CHECK(rep.irred_socle == 3);  // sharply 3-transitive socle
    CHECK(rep.index == 4);

    auto g4 = pgammal(2, 2);
    auto a4 = Action::projective_line(g4);
    std::vector<uint32_t> lin4;
    for (uint32_t id = 0; id < g4->order(); ++id)
        if (g4->elem(id).frobexp == 0) lin4.push_back(id);
    auto rep4 = socle_chain_check(*a4, g4->subgroup(std::move(lin4)));
    CHECK(rep4.ok);
    CHECK(rep4.irred_group == 4);
    CHECK(rep4.irred_socle == 3);
    CHECK(rep4.index == 2);
}

TEST_CASE("chainstats: trivial socle form") {
    auto sd = singer_normalizer(3);
    auto a = Action::coset_action(sd.group, sd.normalizer);
    auto rep = socle_chain_check(*a, sd.group->whole());  // G = S
    CHECK(rep.ok);
    CHECK(rep.irred_group == rep.irred_socle);
    CHECK(rep.index == 1);
}

TEST_CASE("chainstats: budget exhaustion is flagged, never silently wrong") {
    auto a = Action::projective_line(pgammal(2, 2));
    SearchLimits tiny;
    tiny.node_cap = 0;
    auto r = irred_max(*a, tiny);
    CHECK(!r.exact);
    CHECK(r.value <= 4);
    auto h = height_max(*a, tiny);
    CHECK(!h.exact);
}

TEST_CASE("chainstats: non-faithful actions are rejected") {
    auto gml = semilinear_extension(general_linear(2, Field::make(2, 2)));
    auto a = Action::projective_line(gml);  // kernel = scalars
    CHECK(!a->faithful());
    CHECK_THROWS_AS(irred_max(*a), Error);
    CHECK_THROWS_AS(base_min(*a), Error);
    CHECK_THROWS_AS(height_max(*a), Error);
    CHECK_THROWS_AS(base_max_minimal(*a), Error);
}

TEST_CASE("chainstats: report json") {
    auto a = Action::projective_line(pgammal(2, 2));
    auto r = irred_max(*a);
    auto js = r.to_json(*a);
    CHECK(js.find("\"stat\":\"Irred\"") != std::string::npos);
    CHECK(js.find("\"exact\":true") != std::string::npos);
}
