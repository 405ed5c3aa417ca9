#pragma once

#include <json.hpp>

#include "belief/ann.hpp"
#include "belief/audit.hpp"
#include "belief/epistemics.hpp"
#include "belief/metrics.hpp"
#include "belief/replay.hpp"

namespace belief {

// World sets serialize as arrays of world labels ("a=1 b=0" in full mode,
// "#idx" in observed mode); trajectory stages use bare sample indices in
// observed mode, matching how the universe identifies its members.

nlohmann::json world_set_to_json(const world_set& s);
world_set world_set_from_json(const nlohmann::json& j, const universe_ptr& u);

nlohmann::json ranking_to_json(const ranking& r);  // ordered list of layers
ranking ranking_from_json(const nlohmann::json& j, const universe_ptr& u);

nlohmann::json verdict_to_json(const sequence_verdict& v);

nlohmann::json report_to_json(const audit_report& r);

nlohmann::json state_to_json(const epistemic_state& s);

nlohmann::json trace_to_json(const replay_trace& t);

nlohmann::json trajectory_to_json(const trajectory& t);
trajectory trajectory_from_json(const nlohmann::json& j);

}  // namespace belief
