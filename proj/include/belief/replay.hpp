#pragma once

#include <utility>
#include <vector>

#include "belief/epistemics.hpp"

namespace belief {

// Transition inputs for K_i -> K_j.  Disjoint targets are reached by revising
// straight to K_j (second sentence a tautology, so its complement is empty);
// overlapping targets revise to the common part and contract to let the new
// worlds in.  phi2 is carried as its complement [!phi2].
struct transition_inputs {
    world_set phi1;
    world_set notphi2;
};

transition_inputs construct_transition_inputs(const world_set& ki, const world_set& kj);

// K1 at rank 0, every other world tied at rank 1 (uniform when K1 is empty or
// total).
epistemic_state initial_epistemic_state(const world_set& k1);

// For the i-th transition (1-based) of seq: in the disjoint case phi1 must
// avoid every world already seen in K_1..K_i; vacuously true otherwise.
bool verify_lemma_A(const std::vector<world_set>& seq, std::size_t i);

// [!phi2] must avoid every world already seen in K_1..K_i.
bool verify_lemma_B(const std::vector<world_set>& seq, std::size_t i);

struct replay_step {
    std::size_t index = 0;  // 1-based transition index
    world_set phi1;
    world_set notphi2;
    epistemic_state pre;
    epistemic_state mid;   // after the lexicographic revision
    epistemic_state post;  // after the moderate contraction (== mid when skipped)
    bool matched = false;       // post belief equals the target K_{i+1}
    bool invariant_ok = false;  // worlds outside K_1 u ... u K_{i+1} all tied
    bool lemma_a = false;
    bool lemma_b = false;
    bool degenerate = false;  // empty target
};

struct replay_trace {
    std::vector<replay_step> steps;
    // invariants[0] checks the initial state against K_1; invariants[i] the
    // post state of step i.
    std::vector<bool> invariants;

    bool all_matched() const;
    bool all_invariants() const;
    bool all_lemmas() const;
};

// Replays seq (length >= 2) as lex_revise + moderate_contract steps, the mid
// ranking feeding the contraction and the post ranking feeding the next step.
// Checks condition (SD) up front and throws sd_violation unless forced.
replay_trace replay_sequence(const std::vector<world_set>& seq, bool forced = false);

struct fullmeet_step_result {
    world_set phi1;
    world_set notphi2;
    world_set result;
};

// Same transition inputs executed with the full-meet pair; recovers K2 for
// every pair of world sets with K2 consistent, no (SD) hypothesis needed.
fullmeet_step_result fullmeet_step(const world_set& k1, const world_set& k2);

}  // namespace belief
