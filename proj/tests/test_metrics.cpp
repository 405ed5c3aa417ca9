#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "belief/metrics.hpp"

using namespace belief;

namespace {

universe_ptr uab() { return universe::full(vocabulary::from_csv("a,b")); }

world_set ws(const universe_ptr& u, std::initializer_list<std::size_t> ids) {
    return world_set::of(u, ids);
}

// Reference: minimum popcount(x ^ y) over all pairs, straight off the masks.
unsigned ref_dist_a(const world_set& k1, const world_set& k2) {
    unsigned best = 1u << 30;
    for (auto x : k1.ids())
        for (auto y : k2.ids())
            best = std::min(best, static_cast<unsigned>(std::popcount(x ^ y)));
    return best;
}

// Reference for the whole-sequence conditions, triple loop on masks.
sequence_verdict ref_check(const std::vector<world_set>& seq, seq_condition cond) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            for (std::size_t m = j + 1; m < seq.size(); ++m) {
                bool ok = true;
                if (cond == seq_condition::DA)
                    ok = ref_dist_a(seq[i], seq[m]) >= ref_dist_a(seq[j], seq[m]);
                else if (cond == seq_condition::DB)
                    ok = dist_B(seq[i], seq[m]).count() >= dist_B(seq[j], seq[m]).count();
                else
                    ok = dist_B(seq[j], seq[m]).subset_of(dist_B(seq[i], seq[m]));
                if (!ok) return {cond, false, std::array<std::size_t, 3>{i + 1, j + 1, m + 1}};
            }
    return {cond, true, std::nullopt};
}

// SD holds iff every world's membership string across the sequence flips at
// most once.
bool flip_oracle(const std::vector<world_set>& seq) {
    const std::size_t count = seq.front().uni()->world_count();
    for (std::size_t w = 0; w < count; ++w) {
        int flips = 0;
        for (std::size_t t = 1; t < seq.size(); ++t)
            if (seq[t].contains(w) != seq[t - 1].contains(w)) ++flips;
        if (flips > 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("pairwise distances on the pinned two-atom instance") {
    auto u = uab();
    world_set k1 = ws(u, {3});
    world_set k2 = ws(u, {0, 2});
    CHECK(dist_A(k1, k2) == 1);
    CHECK(dist_A(k2, k1) == 1);
    CHECK(dist_B(k1, k2) == ws(u, {0, 2, 3}));
    CHECK(dist_A(ws(u, {3}), ws(u, {0})) == 2);
    CHECK(dist_A(ws(u, {3}), ws(u, {3, 0})) == 0);
    CHECK(dist_B(k1, k1).empty());
    CHECK(dist_B(k1, world_set(u)) == k1);
    CHECK_THROWS_AS(dist_A(world_set(u), k1), inconsistent_belief_set);
    CHECK_THROWS_AS(dist_A(k1, world_set(u)), inconsistent_belief_set);
}

TEST_CASE("pairwise distances on an observed universe") {
    vocabulary v = vocabulary::from_csv("x,y,z");
    auto u = universe::observed(v, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    CHECK(dist_A(world_set::of(u, {4}), world_set::of(u, {3})) == 3);
    CHECK(dist_B(world_set::of(u, {4}), world_set::of(u, {3})) == world_set::of(u, {3, 4}));
}

TEST_CASE("check_sequence frozen verdicts") {
    auto u = uab();
    using S = std::vector<world_set>;

    S shrink{ws(u, {0, 1, 2, 3}), ws(u, {1, 2, 3}), ws(u, {2, 3}), ws(u, {3})};
    CHECK(check_sequence(shrink, seq_condition::SD).holds);
    CHECK(check_sequence(shrink, seq_condition::DB).holds);

    S back{ws(u, {3}), ws(u, {0}), ws(u, {3})};
    auto sd = check_sequence(back, seq_condition::SD);
    CHECK_FALSE(sd.holds);
    CHECK(sd.violation == std::array<std::size_t, 3>{1, 2, 3});

    S da_ok{ws(u, {3}), ws(u, {2}), ws(u, {0})};
    CHECK(check_sequence(da_ok, seq_condition::DA).holds);
    S da_bad{ws(u, {2}), ws(u, {3}), ws(u, {0})};
    auto da = check_sequence(da_bad, seq_condition::DA);
    CHECK_FALSE(da.holds);
    CHECK(da.violation == std::array<std::size_t, 3>{1, 2, 3});
    CHECK(da.condition == seq_condition::DA);

    S db_bad{ws(u, {3}), ws(u, {1, 2}), ws(u, {0})};
    auto db = check_sequence(db_bad, seq_condition::DB);
    CHECK_FALSE(db.holds);
    CHECK(db.violation == std::array<std::size_t, 3>{1, 2, 3});
}

TEST_CASE("check_sequence argument errors") {
    auto u = uab();
    CHECK_THROWS_AS(check_sequence({ws(u, {1})}, seq_condition::SD), error);
    CHECK_THROWS_AS(check_sequence({}, seq_condition::DB), error);
    CHECK_THROWS_AS(
        check_sequence({ws(u, {1}), world_set(u), ws(u, {2})}, seq_condition::DA),
        inconsistent_belief_set);
    // DB and SD accept empty members
    CHECK(check_sequence({ws(u, {1}), world_set(u), world_set(u)}, seq_condition::SD).holds);
}

TEST_CASE("check_sequence agrees with reference and flip oracle") {
    auto u = universe::full(vocabulary::from_csv("a,b,c"));
    std::mt19937_64 rng(20240917);
    for (int round = 0; round < 3000; ++round) {
        std::size_t len = 2 + rng() % 5;
        std::vector<world_set> seq;
        for (std::size_t t = 0; t < len; ++t)
            seq.push_back(world_set::from_mask(u, rng() % 256));

        auto sd = check_sequence(seq, seq_condition::SD);
        auto sd_ref = ref_check(seq, seq_condition::SD);
        CHECK(sd.holds == sd_ref.holds);
        CHECK(sd.violation == sd_ref.violation);
        CHECK(sd.holds == flip_oracle(seq));

        auto db = check_sequence(seq, seq_condition::DB);
        auto db_ref = ref_check(seq, seq_condition::DB);
        CHECK(db.holds == db_ref.holds);
        CHECK(db.violation == db_ref.violation);
        if (sd.holds) CHECK(db.holds);  // inclusion bounds the count

        bool all_consistent = true;
        for (const auto& t : seq) all_consistent &= !t.empty();
        if (all_consistent) {
            auto da = check_sequence(seq, seq_condition::DA);
            auto da_ref = ref_check(seq, seq_condition::DA);
            CHECK(da.holds == da_ref.holds);
            CHECK(da.violation == da_ref.violation);
        }
    }
}

TEST_CASE("dalal_gradual shells on the pinned four-atom instance") {
    auto u = universe::full(vocabulary::from_csv("a,b,c,d"));
    auto shells = dalal_gradual(world_set::of(u, {0}), world_set::of(u, {15}));
    REQUIRE(shells.size() == 3);
    CHECK(shells[0] == world_set::of(u, {1, 2, 4, 8}));
    CHECK(shells[1] == world_set::of(u, {3, 5, 6, 9, 10, 12}));
    CHECK(shells[2] == world_set::of(u, {7, 11, 13, 14}));
}

TEST_CASE("dalal_gradual shells hold every world at the distance") {
    auto u = universe::full(vocabulary::from_csv("a,b,c,d"));
    // two sources: shells are around the union
    auto shells = dalal_gradual(world_set::of(u, {0, 15}), world_set::of(u, {3}));
    REQUIRE(shells.size() == 1);
    CHECK(shells[0] == world_set::of(u, {1, 2, 4, 8, 7, 11, 13, 14}));
}

TEST_CASE("dalal_gradual degenerate and error cases") {
    auto u = uab();
    CHECK(dalal_gradual(ws(u, {3}), ws(u, {3, 2})).empty());   // already consistent
    CHECK(dalal_gradual(ws(u, {3}), ws(u, {2})).empty());      // one step away
    CHECK(dalal_gradual(ws(u, {3}), ws(u, {0})).size() == 1);  // exactly one shell
    CHECK_THROWS_AS(dalal_gradual(world_set(u), ws(u, {1})), inconsistent_belief_set);
    CHECK_THROWS_AS(dalal_gradual(ws(u, {1}), world_set(u)), inconsistent_belief_set);
}

TEST_CASE("dalal_gradual on an observed universe") {
    vocabulary v = vocabulary::from_csv("x,y,z");
    auto u = universe::observed(v, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    auto shells = dalal_gradual(world_set::of(u, {4}), world_set::of(u, {3}));
    REQUIRE(shells.size() == 2);
    CHECK(shells[0] == world_set::of(u, {0}));
    CHECK(shells[1] == world_set::of(u, {1, 2}));
}
