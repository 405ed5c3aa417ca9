#pragma once

#include "belief/epistemics.hpp"

namespace belief {

// K + phi, i.e. [K] n [phi].
world_set expand(const world_set& k, const world_set& phi);

// Full-meet change: all worlds outside the result are equally plausible.
// Revision: K n phi when consistent, else phi (inconsistent prior included).
epistemic_state full_meet_revise(const world_set& k, const world_set& phi);
// Contraction: K u (M \ phi) when K |= phi and phi is not a tautology, else K.
epistemic_state full_meet_contract(const world_set& k, const world_set& phi);

// Minimum Hamming distance from world r to any K-world.
unsigned dalal_D(const world_set& k, std::size_t world_id);

// Worlds ranked by dalal_D, distances compressed to contiguous ranks.
ranking dalal_preorder(const world_set& k);

// Distance-minimal phi-worlds; phi itself when the prior is inconsistent.
world_set dalal_revise(const world_set& k, const world_set& phi);

// Every phi-world strictly below every non-phi-world, relative order kept
// within each block.  Revision by an inconsistent phi keeps the prior order.
epistemic_state lex_revise(const epistemic_state& s, const world_set& phi);

// Contracted belief at rank 0, remaining non-phi-worlds next (prior order
// kept), remaining phi-worlds last (prior order kept).  Contraction by a
// tautology returns the state unchanged.
epistemic_state moderate_contract(const epistemic_state& s, const world_set& phi);

}  // namespace belief
