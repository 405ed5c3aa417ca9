#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "belief/operators.hpp"

using namespace belief;

namespace {

universe_ptr uab() { return universe::full(vocabulary::from_csv("a,b")); }

world_set ws(const universe_ptr& u, std::initializer_list<std::size_t> ids) {
    return world_set::of(u, ids);
}

// ids over {a,b}: 0 = !a!b, 1 = a!b, 2 = !ab, 3 = ab.

std::vector<ranking> all_layered(const universe_ptr& u) {
    std::vector<ranking> out;
    const std::size_t count = u->world_count();
    for (std::uint32_t nl = 1; nl <= count; ++nl) {
        std::vector<std::uint32_t> assign(count, 0);
        while (true) {
            std::uint32_t used = 0;
            for (auto a : assign) used |= 1u << a;
            if (used == (1u << nl) - 1) out.push_back(ranking::from_ranks(u, assign));
            std::size_t i = 0;
            while (i < count && assign[i] + 1 == nl) assign[i++] = 0;
            if (i == count) break;
            ++assign[i];
        }
    }
    return out;
}

bool le(const ranking& r, std::size_t w, std::size_t v) { return r.rank(w) <= r.rank(v); }

}  // namespace

TEST_CASE("expand is intersection") {
    auto u = uab();
    CHECK(expand(ws(u, {2, 3}), ws(u, {1, 3})) == ws(u, {3}));
    CHECK(expand(ws(u, {3}), ws(u, {0})).empty());
}

TEST_CASE("full_meet_revise") {
    auto u = uab();
    // consistent input refines the belief
    auto s = full_meet_revise(ws(u, {2, 3}), ws(u, {1, 3}));
    CHECK(s.belief == ws(u, {3}));
    CHECK(s.order == ranking::from_layers({ws(u, {3}), ws(u, {0, 1, 2})}));
    CHECK(is_faithful(s.order, s.belief));
    // inconsistent input: adopt it outright
    CHECK(full_meet_revise(ws(u, {3}), ws(u, {0, 2})).belief == ws(u, {0, 2}));
    // inconsistent prior behaves the same way
    CHECK(full_meet_revise(world_set(u), ws(u, {1})).belief == ws(u, {1}));
    CHECK(full_meet_revise(ws(u, {3}), world_set(u)).belief.empty());
}

TEST_CASE("full_meet_contract") {
    auto u = uab();
    // K entails phi: give up everything outside phi
    CHECK(full_meet_contract(ws(u, {3}), ws(u, {1, 3})).belief == ws(u, {0, 2, 3}));
    // tautology: nothing to retract
    CHECK(full_meet_contract(ws(u, {3}), world_set::all(u)).belief == ws(u, {3}));
    // K does not entail phi: vacuous
    CHECK(full_meet_contract(ws(u, {1, 3}), ws(u, {3})).belief == ws(u, {1, 3}));
    auto s = full_meet_contract(ws(u, {3}), ws(u, {2, 3}));
    CHECK(s.belief == ws(u, {0, 1, 3}));
    CHECK(is_faithful(s.order, s.belief));
}

TEST_CASE("dalal_D is minimum Hamming distance to the belief set") {
    auto u = uab();
    world_set k = ws(u, {3});
    CHECK(dalal_D(k, 3) == 0);
    CHECK(dalal_D(k, 2) == 1);
    CHECK(dalal_D(k, 1) == 1);
    CHECK(dalal_D(k, 0) == 2);
    CHECK(dalal_D(ws(u, {0, 3}), 1) == 1);
    CHECK_THROWS_AS(dalal_D(world_set(u), 0), inconsistent_belief_set);
}

TEST_CASE("dalal_preorder stratifies by distance") {
    auto u4 = universe::full(vocabulary::from_csv("a,b,c,d"));
    ranking r = dalal_preorder(world_set::of(u4, {0}));
    for (std::size_t id = 0; id < 16; ++id)
        CHECK(r.rank(id) == static_cast<std::uint32_t>(std::popcount(id)));
    CHECK(r.layer_count() == 5);

    // non-singleton source: distance to the nearer of the two
    auto u = uab();
    ranking r2 = dalal_preorder(ws(u, {0, 3}));
    CHECK(r2.rank(0) == 0);
    CHECK(r2.rank(3) == 0);
    CHECK(r2.rank(1) == 1);
    CHECK(r2.rank(2) == 1);
    CHECK_THROWS_AS(dalal_preorder(world_set(u)), inconsistent_belief_set);
}

TEST_CASE("dalal_preorder on an observed universe") {
    vocabulary v = vocabulary::from_csv("x,y,z");
    auto u = universe::observed(v, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    ranking r = dalal_preorder(world_set::of(u, {3}));  // 110
    CHECK(r.rank(3) == 0);
    CHECK(r.rank(1) == 1);  // 100
    CHECK(r.rank(2) == 1);  // 010
    CHECK(r.rank(0) == 2);  // 000
    CHECK(r.rank(4) == 3);  // 001
    CHECK(dalal_revise(world_set::of(u, {3}), world_set::of(u, {0, 4})) ==
          world_set::of(u, {0}));
}

TEST_CASE("dalal_revise picks distance-minimal input worlds") {
    auto u = uab();
    CHECK(dalal_revise(ws(u, {3}), ws(u, {0, 2})) == ws(u, {2}));
    CHECK(dalal_revise(ws(u, {3}), ws(u, {3, 2})) == ws(u, {3}));
    CHECK(dalal_revise(ws(u, {0, 3}), ws(u, {1, 2})) == ws(u, {1, 2}));
    CHECK(dalal_revise(world_set(u), ws(u, {1, 2})) == ws(u, {1, 2}));
    CHECK(dalal_revise(ws(u, {3}), world_set(u)).empty());
}

TEST_CASE("lex_revise on the pinned two-atom instance") {
    auto u = uab();
    epistemic_state s = two_layer_state(ws(u, {3}));
    epistemic_state t = lex_revise(s, ws(u, {0, 2}));
    CHECK(t.belief == ws(u, {0, 2}));
    CHECK(t.order == ranking::from_layers({ws(u, {0, 2}), ws(u, {3}), ws(u, {1})}));
    CHECK(is_faithful(t.order, t.belief));
}

TEST_CASE("lex_revise by the empty input keeps the order") {
    auto u = uab();
    epistemic_state s{ws(u, {3}),
                      ranking::from_layers({ws(u, {3}), ws(u, {1, 2}), ws(u, {0})})};
    epistemic_state t = lex_revise(s, world_set(u));
    CHECK(t.belief.empty());
    CHECK(t.order == s.order);
    CHECK(lex_revise(s, world_set::all(u)).order == s.order);
}

TEST_CASE("moderate_contract on the five-world example") {
    vocabulary v = vocabulary::from_csv("x,y,z");
    auto u = universe::observed(v, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    auto S = [&](std::initializer_list<std::size_t> ids) { return world_set::of(u, ids); };
    epistemic_state s{S({3, 4}), ranking::from_layers({S({3, 4}), S({0}), S({1, 2})})};
    epistemic_state t = moderate_contract(s, ~S({1, 2}));
    CHECK(t.belief == S({1, 2, 3, 4}));
    CHECK(t.order == ranking::from_layers({S({1, 2, 3, 4}), S({0})}));
    CHECK(is_faithful(t.order, t.belief));
}

TEST_CASE("moderate_contract by a tautology is the identity") {
    auto u = uab();
    epistemic_state s{ws(u, {1}), ranking::from_ranks(u, {2, 0, 1, 2})};
    epistemic_state t = moderate_contract(s, world_set::all(u));
    CHECK(t.belief == s.belief);
    CHECK(t.order == s.order);
}

TEST_CASE("operators reject cross-universe arguments") {
    auto u = uab();
    auto u2 = universe::full(vocabulary::from_csv("a,b"));
    epistemic_state s = two_layer_state(ws(u, {3}));
    CHECK_THROWS_AS(lex_revise(s, ws(u2, {0})), error);
    CHECK_THROWS_AS(moderate_contract(s, ws(u2, {0})), error);
}

TEST_CASE("order-change properties hold exhaustively on two atoms") {
    auto u = uab();
    for (const auto& prior : all_layered(u)) {
        epistemic_state s{prior.layer(0), prior};
        for (std::uint64_t f = 0; f < 16; ++f) {
            world_set phi = world_set::from_mask(u, f);
            world_set nphi = ~phi;

            epistemic_state rev = lex_revise(s, phi);
            CHECK(rev.belief == revise_R(s, phi));
            if (!phi.empty()) CHECK(is_faithful(rev.order, rev.belief));
            for (std::size_t w = 0; w < 4; ++w)
                for (std::size_t v = 0; v < 4; ++v) {
                    bool same_block = (phi.contains(w) == phi.contains(v));
                    if (same_block)
                        CHECK(le(rev.order, w, v) == le(prior, w, v));
                    else if (phi.contains(w))
                        CHECK(rev.order.rank(w) < rev.order.rank(v));
                }

            epistemic_state con = moderate_contract(s, phi);
            CHECK(con.belief == contract_C(s, phi));
            CHECK(is_faithful(con.order, con.belief));
            for (std::size_t w = 0; w < 4; ++w)
                for (std::size_t v = 0; v < 4; ++v) {
                    if (phi.contains(w) == phi.contains(v)) {
                        CHECK(le(con.order, w, v) == le(prior, w, v));
                    } else if (nphi.contains(w) && !con.belief.contains(v)) {
                        // retained-input worlds outside the new belief come last
                        CHECK(con.order.rank(w) < con.order.rank(v));
                    }
                }
        }
    }
}

TEST_CASE("belief-level properties on three atoms, sampled") {
    auto u = universe::full(vocabulary::from_csv("a,b,c"));
    std::mt19937_64 rng(20240916);
    for (int round = 0; round < 400; ++round) {
        std::vector<std::uint32_t> assign(8);
        std::uint32_t nl = 1 + static_cast<std::uint32_t>(rng() % 4);
        for (auto& a : assign) a = static_cast<std::uint32_t>(rng() % nl);
        ranking prior = ranking::from_ranks(u, assign);
        epistemic_state s{prior.layer(0), prior};
        world_set phi = world_set::from_mask(u, rng() % 256);

        world_set rb = dalal_revise(s.belief, phi);
        CHECK(rb.subset_of(phi));
        if (s.belief.intersects(phi)) CHECK(rb == (s.belief & phi));
        if (!rb.empty()) {
            unsigned best = dalal_D(s.belief, *rb.ids().begin());
            phi.for_each([&](std::size_t w) {
                unsigned d = dalal_D(s.belief, w);
                CHECK(d >= best);
                CHECK(rb.contains(w) == (d == best));
            });
        }

        world_set lb = lex_revise(s, phi).belief;
        CHECK(lb == revise_R(s, phi));
        world_set cb = moderate_contract(s, phi).belief;
        CHECK(s.belief.subset_of(cb));
        if (!phi.is_all()) CHECK(cb.intersects(~phi));
        if (!s.belief.subset_of(phi)) CHECK(cb == s.belief);
    }
}
