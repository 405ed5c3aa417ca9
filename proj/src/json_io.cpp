#include "belief/json_io.hpp"

namespace belief {

using nlohmann::json;

json world_set_to_json(const world_set& s) {
    json out = json::array();
    const auto& u = s.uni();
    s.for_each([&](std::size_t id) { out.push_back(u->world_label(id)); });
    return out;
}

world_set world_set_from_json(const json& j, const universe_ptr& u) {
    world_set s(u);
    for (const auto& item : j) s.add(u->world_from_label(item.get<std::string>()));
    return s;
}

json ranking_to_json(const ranking& r) {
    json out = json::array();
    for (const auto& layer : r.layers()) out.push_back(world_set_to_json(layer));
    return out;
}

ranking ranking_from_json(const json& j, const universe_ptr& u) {
    std::vector<world_set> layers;
    for (const auto& item : j) layers.push_back(world_set_from_json(item, u));
    return ranking::from_layers(layers);
}

json verdict_to_json(const sequence_verdict& v) {
    const char* name = v.condition == seq_condition::DA ? "DA"
                       : v.condition == seq_condition::DB ? "DB"
                                                          : "SD";
    json out{{"condition", name}, {"holds", v.holds}};
    if (v.violation) out["violation"] = {(*v.violation)[0], (*v.violation)[1], (*v.violation)[2]};
    return out;
}

json report_to_json(const audit_report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"id", c.id}, {"pass", c.pass}, {"instances", c.instances}};
        if (c.counterexample) {
            const auto& ce = *c.counterexample;
            json layers = json::array();
            for (const auto& l : ce.prior_layers) layers.push_back(world_set_to_json(l));
            jc["counterexample"] = {{"prior_belief", world_set_to_json(ce.prior_belief)},
                                    {"prior_layers", layers},
                                    {"phi", world_set_to_json(ce.phi)}};
            if (ce.psi) jc["counterexample"]["psi"] = world_set_to_json(*ce.psi);
        }
        checks.push_back(std::move(jc));
    }
    return json{{"operator", r.operator_id}, {"n", r.n}, {"seed", r.seed}, {"checks", checks}};
}

json state_to_json(const epistemic_state& s) {
    return json{{"belief", world_set_to_json(s.belief)}, {"ranking", ranking_to_json(s.order)}};
}

json trace_to_json(const replay_trace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back(json{{"i", s.index},
                             {"phi1", world_set_to_json(s.phi1)},
                             {"notphi2", world_set_to_json(s.notphi2)},
                             {"pre", ranking_to_json(s.pre.order)},
                             {"mid", ranking_to_json(s.mid.order)},
                             {"post", ranking_to_json(s.post.order)},
                             {"matched", s.matched},
                             {"invariant_ok", s.invariant_ok},
                             {"lemmaA", s.lemma_a},
                             {"lemmaB", s.lemma_b},
                             {"degenerate", s.degenerate}});
    }
    json invariants = json::array();
    for (bool b : t.invariants) invariants.push_back(b);
    return json{{"steps", steps},
                {"invariants", invariants},
                {"all_matched", t.all_matched()},
                {"all_invariants", t.all_invariants()},
                {"all_lemmas", t.all_lemmas()}};
}

json trajectory_to_json(const trajectory& t) {
    const auto& u = t.uni;
    json out{{"vocabulary", u->vocab().names()},
             {"mode", u->full_mode() ? "full" : "observed"},
             {"cadence", t.cadence == snapshot_cadence::every_step ? "step" : "epoch"}};
    if (!u->full_mode()) {
        json members = json::array();
        for (std::size_t id = 0; id < u->world_count(); ++id) {
            json bits = json::array();
            for (auto b : u->member(id)) bits.push_back(static_cast<int>(b));
            members.push_back(std::move(bits));
        }
        out["members"] = std::move(members);
    }
    json stages = json::array();
    for (const auto& st : t.stages) {
        json worlds = json::array();
        if (u->full_mode()) {
            st.belief.for_each([&](std::size_t id) { worlds.push_back(u->world_text(id)); });
        } else {
            st.belief.for_each([&](std::size_t id) { worlds.push_back(id); });
        }
        stages.push_back(json{{"step", st.step}, {"worlds", worlds}, {"accuracy", st.accuracy}});
    }
    out["stages"] = std::move(stages);
    return out;
}

trajectory trajectory_from_json(const json& j) {
    vocabulary v(j.at("vocabulary").get<std::vector<std::string>>());
    const std::string mode = j.at("mode").get<std::string>();
    universe_ptr u;
    if (mode == "full") {
        u = universe::full(v);
    } else if (mode == "observed") {
        std::vector<std::vector<std::uint8_t>> members;
        for (const auto& m : j.at("members")) {
            std::vector<std::uint8_t> bits;
            for (const auto& b : m) bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
            members.push_back(std::move(bits));
        }
        u = universe::observed(v, std::move(members));
    } else {
        throw error("unknown trajectory mode: " + mode);
    }
    trajectory t;
    t.uni = u;
    const std::string cadence = j.value("cadence", std::string("step"));
    t.cadence = cadence == "epoch" ? snapshot_cadence::every_epoch : snapshot_cadence::every_step;
    for (const auto& st : j.at("stages")) {
        trajectory_stage stage;
        stage.step = st.at("step").get<std::size_t>();
        stage.accuracy = st.at("accuracy").get<double>();
        world_set belief(u);
        for (const auto& w : st.at("worlds")) {
            if (w.is_number()) belief.add(w.get<std::size_t>());
            else belief.add(u->world_from_text(w.get<std::string>()));
        }
        stage.belief = std::move(belief);
        t.stages.push_back(std::move(stage));
    }
    return t;
}

}  // namespace belief
