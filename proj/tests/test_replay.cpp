#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "belief/metrics.hpp"
#include "belief/replay.hpp"

using namespace belief;

namespace {

universe_ptr uab() { return universe::full(vocabulary::from_csv("a,b")); }

universe_ptr five_worlds() {
    vocabulary v = vocabulary::from_csv("x,y,z");
    return universe::observed(v, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}

world_set ws(const universe_ptr& u, std::initializer_list<std::size_t> ids) {
    return world_set::of(u, ids);
}

// Membership strings with at most one flip per world: exactly the sequences
// satisfying condition (SD).
std::vector<world_set> random_sd_sequence(const universe_ptr& u, std::mt19937_64& rng,
                                          std::size_t len) {
    std::vector<world_set> seq(len, world_set(u));
    for (std::size_t w = 0; w < u->world_count(); ++w) {
        bool value = rng() & 1;
        std::size_t flip = rng() % (len + 1);  // len means never
        for (std::size_t t = 0; t < len; ++t) {
            if (t == flip) value = !value;
            if (value) seq[t].add(w);
        }
    }
    return seq;
}

}  // namespace

TEST_CASE("transition inputs") {
    auto u = uab();
    auto d = construct_transition_inputs(ws(u, {3}), ws(u, {0, 1}));
    CHECK(d.phi1 == ws(u, {0, 1}));
    CHECK(d.notphi2.empty());

    auto o = construct_transition_inputs(ws(u, {1, 3}), ws(u, {0, 3}));
    CHECK(o.phi1 == ws(u, {3}));
    CHECK(o.notphi2 == ws(u, {0}));

    auto sub = construct_transition_inputs(ws(u, {1, 3}), ws(u, {3}));
    CHECK(sub.phi1 == ws(u, {3}));
    CHECK(sub.notphi2.empty());
}

TEST_CASE("initial state is the two-layer shape") {
    auto u = uab();
    auto s = initial_epistemic_state(ws(u, {2}));
    CHECK(s.belief == ws(u, {2}));
    CHECK(s.order == ranking::from_layers({ws(u, {2}), ws(u, {0, 1, 3})}));
    CHECK(initial_epistemic_state(world_set(u)).order == ranking::uniform(u));
}

TEST_CASE("transition lemmas") {
    auto u = uab();
    std::vector<world_set> seq{ws(u, {0}), ws(u, {1}), ws(u, {1, 2})};
    CHECK(verify_lemma_A(seq, 1));
    CHECK(verify_lemma_A(seq, 2));  // overlap: vacuous
    CHECK(verify_lemma_B(seq, 1));  // empty [!phi2]
    CHECK(verify_lemma_B(seq, 2));  // {2} unseen

    std::vector<world_set> bad{ws(u, {0}), ws(u, {1}), ws(u, {0})};
    CHECK_FALSE(verify_lemma_A(bad, 2));  // returns to an already-seen world
    std::vector<world_set> badb{ws(u, {0}), ws(u, {1}), ws(u, {0, 1})};
    CHECK_FALSE(verify_lemma_B(badb, 2));

    CHECK_THROWS_AS(verify_lemma_A(seq, 0), error);
    CHECK_THROWS_AS(verify_lemma_A(seq, 3), error);
    CHECK_THROWS_AS(verify_lemma_B(seq, 0), error);
}

TEST_CASE("pinned five-world replay") {
    auto u = five_worlds();
    std::vector<world_set> seq{ws(u, {0}), ws(u, {3, 4}), ws(u, {1, 2, 3, 4})};
    replay_trace t = replay_sequence(seq);
    REQUIRE(t.steps.size() == 2);
    REQUIRE(t.invariants.size() == 3);

    const replay_step& s1 = t.steps[0];
    CHECK(s1.index == 1);
    CHECK(s1.phi1 == ws(u, {3, 4}));
    CHECK(s1.notphi2.empty());
    CHECK(s1.pre.order == ranking::from_layers({ws(u, {0}), ws(u, {1, 2, 3, 4})}));
    CHECK(s1.mid.order ==
          ranking::from_layers({ws(u, {3, 4}), ws(u, {0}), ws(u, {1, 2})}));
    CHECK(s1.post.order == s1.mid.order);
    CHECK(s1.post.belief == ws(u, {3, 4}));
    CHECK(s1.matched);
    CHECK(s1.invariant_ok);
    CHECK(s1.lemma_a);
    CHECK(s1.lemma_b);
    CHECK_FALSE(s1.degenerate);

    const replay_step& s2 = t.steps[1];
    CHECK(s2.phi1 == ws(u, {3, 4}));
    CHECK(s2.notphi2 == ws(u, {1, 2}));
    CHECK(s2.mid.order ==
          ranking::from_layers({ws(u, {3, 4}), ws(u, {0}), ws(u, {1, 2})}));
    CHECK(s2.post.order == ranking::from_layers({ws(u, {1, 2, 3, 4}), ws(u, {0})}));
    CHECK(s2.matched);
    CHECK(s2.invariant_ok);
    CHECK(s2.lemma_a);
    CHECK(s2.lemma_b);

    CHECK(t.all_matched());
    CHECK(t.all_invariants());
    CHECK(t.all_lemmas());
}

TEST_CASE("nested shrinking walk replays as pure revisions") {
    auto u = universe::full(vocabulary::from_csv("a,b,c"));
    std::vector<world_set> seq{world_set::all(u), world_set::from_mask(u, 0xFE),
                               world_set::from_mask(u, 0xEE), world_set::from_mask(u, 0xE8)};
    replay_trace t = replay_sequence(seq);
    REQUIRE(t.steps.size() == 3);
    for (const auto& s : t.steps) {
        CHECK(s.notphi2.empty());  // each target entails its predecessor
        CHECK(s.post.order == s.mid.order);
        CHECK(s.matched);
    }
    CHECK(t.all_invariants());
    CHECK(t.all_lemmas());
}

TEST_CASE("an empty target is replayed and flagged") {
    auto u = uab();
    std::vector<world_set> seq{ws(u, {0}), world_set(u), ws(u, {1})};
    replay_trace t = replay_sequence(seq);
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].degenerate);
    CHECK(t.steps[0].matched);  // empty belief matches the empty target
    CHECK(t.steps[0].post.order ==
          ranking::from_layers({ws(u, {0}), ws(u, {1, 2, 3})}));
    CHECK_FALSE(t.steps[1].degenerate);
    CHECK(t.steps[1].matched);
    CHECK(t.steps[1].post.belief == ws(u, {1}));
    CHECK(t.all_matched());
}

TEST_CASE("sequence condition violations throw unless forced") {
    auto u = uab();
    std::vector<world_set> seq{ws(u, {0}), ws(u, {1}), ws(u, {0, 1, 2})};
    CHECK_THROWS_AS(replay_sequence(seq), sd_violation);
    try {
        replay_sequence(seq);
    } catch (const sd_violation& e) {
        CHECK(e.triple == std::array<std::size_t, 3>{1, 2, 3});
    }

    // forced: the contraction pulls in only the closest unseen world, so the
    // target is missed
    replay_trace t = replay_sequence(seq, true);
    CHECK(t.steps[0].matched);
    CHECK_FALSE(t.steps[1].matched);
    CHECK(t.steps[1].post.belief == ws(u, {0, 1}));
    CHECK_FALSE(t.all_matched());

    // a violation does not force a mismatch: pure revisions still land
    std::vector<world_set> back{ws(u, {3}), ws(u, {0}), ws(u, {3})};
    replay_trace t2 = replay_sequence(back, true);
    CHECK(t2.all_matched());
    CHECK_FALSE(check_sequence(back, seq_condition::SD).holds);
}

TEST_CASE("replay argument errors") {
    auto u = uab();
    CHECK_THROWS_AS(replay_sequence({ws(u, {1})}), error);
    CHECK_THROWS_AS(replay_sequence({}), error);
}

TEST_CASE("every flip-bounded sequence replays exactly") {
    auto u = universe::full(vocabulary::from_csv("a,b,c"));
    std::mt19937_64 rng(20240918);
    for (int round = 0; round < 500; ++round) {
        std::size_t len = 2 + rng() % 4;
        auto seq = random_sd_sequence(u, rng, len);
        REQUIRE(check_sequence(seq, seq_condition::SD).holds);
        replay_trace t = replay_sequence(seq);
        CHECK(t.all_matched());
        CHECK(t.all_invariants());
        CHECK(t.all_lemmas());
        for (std::size_t i = 1; i < t.steps.size(); ++i)
            CHECK(t.steps[i].pre.order == t.steps[i - 1].post.order);
    }
}

TEST_CASE("full-meet transitions recover every consistent target") {
    auto u = uab();
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b) {
            world_set k1 = world_set::from_mask(u, a);
            world_set k2 = world_set::from_mask(u, b);
            auto r = fullmeet_step(k1, k2);
            CHECK(r.result == k2);
            CHECK(r.phi1 == (k1.intersects(k2) ? (k1 & k2) : k2));
        }
}
