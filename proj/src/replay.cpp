#include "belief/replay.hpp"

#include "belief/metrics.hpp"
#include "belief/operators.hpp"

namespace belief {

transition_inputs construct_transition_inputs(const world_set& ki, const world_set& kj) {
    world_set meet = ki & kj;
    if (meet.empty()) return {kj, world_set(ki.uni())};
    return {meet, kj - ki};
}

epistemic_state initial_epistemic_state(const world_set& k1) { return two_layer_state(k1); }

namespace {

world_set seen_union(const std::vector<world_set>& seq, std::size_t upto) {
    world_set u = seq[0];
    for (std::size_t i = 1; i < upto; ++i) u = u | seq[i];
    return u;
}

void check_step_index(const std::vector<world_set>& seq, std::size_t i) {
    if (i == 0 || i >= seq.size()) throw error("transition index out of range");
}

// All worlds outside `inside` carry one common rank.
bool tied_outside(const ranking& rk, const world_set& inside) {
    world_set out = ~inside;
    bool first = true;
    std::uint32_t r = 0;
    bool ok = true;
    out.for_each([&](std::size_t id) {
        if (first) {
            r = rk.rank(id);
            first = false;
        } else {
            ok = ok && rk.rank(id) == r;
        }
    });
    return ok;
}

}  // namespace

bool verify_lemma_A(const std::vector<world_set>& seq, std::size_t i) {
    check_step_index(seq, i);
    if (seq[i - 1].intersects(seq[i])) return true;
    return !seq[i].intersects(seen_union(seq, i));
}

bool verify_lemma_B(const std::vector<world_set>& seq, std::size_t i) {
    check_step_index(seq, i);
    auto in = construct_transition_inputs(seq[i - 1], seq[i]);
    return !in.notphi2.intersects(seen_union(seq, i));
}

bool replay_trace::all_matched() const {
    for (const auto& s : steps)
        if (!s.matched) return false;
    return true;
}

bool replay_trace::all_invariants() const {
    for (bool b : invariants)
        if (!b) return false;
    return true;
}

bool replay_trace::all_lemmas() const {
    for (const auto& s : steps)
        if (!s.lemma_a || !s.lemma_b) return false;
    return true;
}

replay_trace replay_sequence(const std::vector<world_set>& seq, bool forced) {
    if (seq.size() < 2) throw error("replay needs a sequence of at least two belief sets");
    auto sd = check_sequence(seq, seq_condition::SD);
    if (!sd.holds && !forced) throw sd_violation(*sd.violation);

    replay_trace trace;
    epistemic_state state = initial_epistemic_state(seq[0]);
    world_set seen = seq[0];
    trace.invariants.push_back(tied_outside(state.order, seen));

    for (std::size_t i = 1; i < seq.size(); ++i) {
        replay_step step;
        step.index = i;
        auto in = construct_transition_inputs(seq[i - 1], seq[i]);
        step.phi1 = in.phi1;
        step.notphi2 = in.notphi2;
        step.pre = state;
        step.mid = lex_revise(state, in.phi1);
        step.post = in.notphi2.empty() ? step.mid : moderate_contract(step.mid, ~in.notphi2);
        step.matched = step.post.belief == seq[i];
        seen = seen | seq[i];
        step.invariant_ok = tied_outside(step.post.order, seen);
        step.lemma_a = verify_lemma_A(seq, i);
        step.lemma_b = verify_lemma_B(seq, i);
        step.degenerate = seq[i].empty();
        trace.invariants.push_back(step.invariant_ok);
        state = step.post;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

fullmeet_step_result fullmeet_step(const world_set& k1, const world_set& k2) {
    auto in = construct_transition_inputs(k1, k2);
    epistemic_state revised = full_meet_revise(k1, in.phi1);
    world_set result = in.notphi2.empty()
                           ? revised.belief
                           : full_meet_contract(revised.belief, ~in.notphi2).belief;
    return {in.phi1, in.notphi2, result};
}

}  // namespace belief
