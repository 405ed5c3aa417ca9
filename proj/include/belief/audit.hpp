#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "belief/epistemics.hpp"

namespace belief {

// Operators under audit act on an epistemic state; belief-set operators
// (full-meet, Dalal) simply ignore the ranking component.
struct revision_op {
    std::string id;
    std::function<world_set(const epistemic_state&, const world_set&)> apply;
};

struct contraction_op {
    std::string id;
    std::function<world_set(const epistemic_state&, const world_set&)> apply;
};

revision_op full_meet_revision_op();
revision_op dalal_revision_op();
revision_op lex_revision_op();
contraction_op full_meet_contraction_op();
contraction_op moderate_contraction_op();

// A failing check carries everything needed to rerun the instance.
struct audit_counterexample {
    world_set prior_belief;
    std::vector<world_set> prior_layers;
    world_set phi;
    std::optional<world_set> psi;
};

struct audit_check {
    std::string id;
    bool pass = true;
    std::uint64_t instances = 0;
    std::optional<audit_counterexample> counterexample;
};

struct audit_report {
    std::string operator_id;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<audit_check> checks;

    bool all_pass() const;
    const audit_check* find(const std::string& id) const;
};

// Prior states enumerated per universe size:
//   n <= 2: every layered ranking of at most three layers, belief = bottom
//           layer (exhaustive);
//   n == 3: canonical families per non-empty belief: the two-layer
//           (full-meet-shaped) ranking and the Dalal preorder.
// Sentences: every subset of the universe, crossed into pairs for the
// supplementary postulates.  For 4 <= n <= 12 priors and sentences are
// sampled with the given seed; n > 12 is rejected.
audit_report audit_agm_revision(const revision_op& op, const universe_ptr& u,
                                std::uint64_t seed = 0);
audit_report audit_agm_contraction(const contraction_op& op, const universe_ptr& u,
                                   std::uint64_t seed = 0);

struct dp_r_verdict {
    bool r1 = true, r2 = true, r3 = true, r4 = true, lr = true;
    bool all() const { return r1 && r2 && r3 && r4 && lr; }
};

struct dp_c_verdict {
    bool c1 = true, c2 = true, c3 = true, c4 = true, mc = true;
    bool all() const { return c1 && c2 && c3 && c4 && mc; }
};

// Pairwise checks over all world pairs:
//   R1: phi-worlds keep their relative order        (iff)
//   R2: non-phi-worlds keep their relative order    (iff)
//   R3/R4: strict/weak prior preference of a phi-world over a non-phi-world
//          survives the transition
//   LR: every phi-world ends strictly below every non-phi-world
dp_r_verdict check_R_constraints(const epistemic_state& prior, const world_set& phi,
                                 const epistemic_state& posterior);

//   C1: phi-worlds keep their relative order        (iff)
//   C2: non-phi-worlds keep their relative order    (iff)
//   C3/C4: strict/weak prior preference of a non-phi-world over a phi-world
//          survives the transition
//   MC: every non-phi-world ends strictly below every phi-world outside the
//       contracted belief
dp_c_verdict check_C_constraints(const epistemic_state& prior, const world_set& phi,
                                 const epistemic_state& posterior);

// Pinned two-atom instance where full-meet revision breaks R2: prior belief
// {ab} over {a,b}, input {!a&b}.  The report carries the witness pair and the
// lex outcome on the same instance; throws if the witness fails to violate.
struct fullmeet_dp2_report {
    audit_report report;
    std::size_t witness_first = 0;   // world id of ab
    std::size_t witness_second = 0;  // world id of a!b
    bool fullmeet_r2_violated = false;
    bool lex_all_pass = false;
};

fullmeet_dp2_report reproduce_fullmeet_dp2();

}  // namespace belief
