#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "belief/idx.hpp"
#include "belief/json_io.hpp"
#include "belief/operators.hpp"
#include "belief/replay.hpp"

namespace {

using namespace belief;
using nlohmann::json;

constexpr int exit_parse = 2;
constexpr int exit_semantic = 3;
constexpr int exit_audit = 4;
constexpr int exit_training = 5;
constexpr int exit_sd = 6;
constexpr int exit_repro = 7;

std::string set_text(const world_set& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t id) {
        if (!first) out += ", ";
        out += s.uni()->world_label(id);
        first = false;
    });
    return out + "}";
}

std::string ranking_text(const ranking& r) {
    std::string out;
    for (std::uint32_t k = 0; k < r.layer_count(); ++k) {
        if (k) out += "  <  ";
        out += set_text(r.layer(k));
    }
    return out;
}

void print_belief_result(const world_set& s, const ranking* order, bool as_json) {
    if (as_json) {
        json out{{"worlds", world_set_to_json(s)}, {"formula", to_dnf(s)}};
        if (order) out["ranking"] = ranking_to_json(*order);
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "worlds:  " << set_text(s) << "  (" << s.count() << ")\n";
    std::cout << "formula: " << to_dnf(s) << "\n";
    if (order) std::cout << "ranking: " << ranking_text(*order) << "\n";
}

epistemic_state prior_state(const world_set& k, const std::string& ranking_json,
                            const universe_ptr& u) {
    if (ranking_json.empty()) return two_layer_state(k);
    return {k, ranking_from_json(json::parse(ranking_json), u)};
}

// ---------------------------------------------------------------------------
// revise / contract
// ---------------------------------------------------------------------------

struct change_args {
    std::string vocab = "a,b";
    std::string belief;
    std::string input;
    std::string op;
    std::string ranking_json;
    bool as_json = false;
};

int run_revise(const change_args& a) {
    auto u = universe::full(vocabulary::from_csv(a.vocab));
    world_set k = models(*parse_formula(a.belief, u->vocab()), u);
    world_set phi = models(*parse_formula(a.input, u->vocab()), u);
    if (a.op == "full-meet") {
        epistemic_state st = full_meet_revise(k, phi);
        print_belief_result(st.belief, &st.order, a.as_json);
    } else if (a.op == "dalal") {
        world_set r = dalal_revise(k, phi);
        print_belief_result(r, nullptr, a.as_json);
    } else {  // lex
        epistemic_state st = lex_revise(prior_state(k, a.ranking_json, u), phi);
        print_belief_result(st.belief, &st.order, a.as_json);
    }
    return 0;
}

int run_contract(const change_args& a) {
    auto u = universe::full(vocabulary::from_csv(a.vocab));
    world_set k = models(*parse_formula(a.belief, u->vocab()), u);
    world_set phi = models(*parse_formula(a.input, u->vocab()), u);
    if (a.op == "full-meet") {
        epistemic_state st = full_meet_contract(k, phi);
        print_belief_result(st.belief, &st.order, a.as_json);
    } else {  // moderate
        epistemic_state st = moderate_contract(prior_state(k, a.ranking_json, u), phi);
        print_belief_result(st.belief, &st.order, a.as_json);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

struct audit_args {
    std::string op;
    std::size_t n = 2;
    std::uint64_t seed = 0;
};

universe_ptr letter_universe(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return universe::full(vocabulary(names));
}

int run_audit(const audit_args& a) {
    std::string id = a.op;
    for (auto& ch : id)
        if (ch == '-') ch = '_';
    auto u = letter_universe(a.n);
    audit_report rep;
    if (id == "full_meet_revise") rep = audit_agm_revision(full_meet_revision_op(), u, a.seed);
    else if (id == "dalal_revise") rep = audit_agm_revision(dalal_revision_op(), u, a.seed);
    else if (id == "lex_revise") rep = audit_agm_revision(lex_revision_op(), u, a.seed);
    else if (id == "full_meet_contract")
        rep = audit_agm_contraction(full_meet_contraction_op(), u, a.seed);
    else if (id == "moderate_contract")
        rep = audit_agm_contraction(moderate_contraction_op(), u, a.seed);
    else throw error("unknown operator id: " + a.op);
    std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.all_pass() ? 0 : exit_audit;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

struct train_args {
    std::string task;
    std::string vocab = "a,b,c";
    std::vector<std::size_t> hidden = {100};
    std::size_t epochs = 1000;
    std::uint64_t seed = 0;
    std::string cadence = "step";
    std::string mode = "full";
    double lr = 1e-3;
    std::string opt = "adam";
    double threshold = 0.5;
    std::string out = "trajectory.json";
    bool as_json = false;
};

universe_ptr observed_from_inputs(vocabulary v, const std::vector<std::vector<std::uint8_t>>& xs) {
    std::vector<std::vector<std::uint8_t>> members;
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& x : xs)
        if (seen.insert(x).second) members.push_back(x);
    return universe::observed(std::move(v), std::move(members));
}

int run_train(const train_args& a) {
    dataset d;
    universe_ptr ext;
    std::size_t input_size = 0;

    if (a.task.rfind("boolean:", 0) == 0) {
        vocabulary v = vocabulary::from_csv(a.vocab);
        auto full = universe::full(v);
        formula_ptr f = parse_formula(a.task.substr(8), v);
        input_size = v.size();
        for (std::size_t id = 0; id < full->world_count(); ++id) {
            std::vector<std::uint8_t> x(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) x[i] = full->atom_true(id, i);
            d.inputs.push_back(std::move(x));
            d.labels.push_back(eval(*f, full->bits(id)) ? 1 : 0);
        }
        ext = a.mode == "full" ? full : observed_from_inputs(v, d.inputs);
    } else if (a.task.rfind("idx:", 0) == 0) {
        std::string paths = a.task.substr(4);
        auto comma = paths.find(',');
        if (comma == std::string::npos)
            throw bad_config("idx task wants idx:<images>,<labels>");
        d = load_idx_dataset(paths.substr(0, comma), paths.substr(comma + 1), {{0, 0}, {1, 1}});
        if (d.inputs.empty()) throw bad_config("empty dataset");
        input_size = d.inputs[0].size();
        std::vector<std::string> names;
        for (std::size_t i = 0; i < input_size; ++i) names.push_back("px" + std::to_string(i));
        vocabulary v(names);
        ext = a.mode == "full" ? universe::full(v) : observed_from_inputs(v, d.inputs);
    } else {
        throw bad_config("task must be boolean:<formula> or idx:<images>,<labels>");
    }

    ann_config cfg;
    cfg.input_size = input_size;
    cfg.hidden = a.hidden;
    cfg.threshold = a.threshold;
    cfg.learning_rate = a.lr;
    cfg.optimizer = a.opt == "sgd" ? optimizer_kind::sgd : optimizer_kind::adam;
    cfg.epochs = a.epochs;
    cfg.seed = a.seed;
    cfg.cadence = a.cadence == "epoch" ? snapshot_cadence::every_epoch
                                       : snapshot_cadence::every_step;

    auto [model, traj] = train(init_model(cfg), d, cfg, ext);

    json out = trajectory_to_json(traj);
    out["seed"] = a.seed;
    {
        std::ofstream f(a.out, std::ios::trunc);
        if (!f) throw error("cannot write " + a.out);
        f << out.dump(2) << "\n";
    }

    if (a.as_json) std::cout << out.dump(2) << "\n";
    std::cout << "stage  step  beliefs  accuracy\n";
    for (std::size_t i = 0; i < traj.stages.size(); ++i) {
        const auto& st = traj.stages[i];
        std::printf("%5zu  %4zu  %7zu  %.4f\n", i, st.step, st.belief.count(), st.accuracy);
    }
    std::printf("final accuracy: %.4f over %zu stage(s); trajectory -> %s\n",
                traj.stages.back().accuracy, traj.stages.size(), a.out.c_str());

    auto v = analyze_trajectory(traj);
    auto show = [](const char* name, const sequence_verdict& sv) {
        if (sv.holds) {
            std::cout << name << ": holds\n";
        } else {
            std::cout << name << ": fails at (" << (*sv.violation)[0] << "," << (*sv.violation)[1]
                      << "," << (*sv.violation)[2] << ")\n";
        }
    };
    show("SD", v.sd);
    show("DB", v.db);
    if (v.da) show("DA", *v.da);
    else std::cout << "DA: skipped (some stage has an empty belief set)\n";
    return 0;
}

// ---------------------------------------------------------------------------
// replay
// ---------------------------------------------------------------------------

struct replay_args {
    std::string trajectory_file;
    bool forced = false;
    std::string pair = "dp";
    bool as_json = false;
};

int run_replay(const replay_args& a) {
    std::ifstream f(a.trajectory_file);
    if (!f) throw error("cannot read " + a.trajectory_file);
    trajectory traj = trajectory_from_json(json::parse(f));
    std::vector<world_set> seq = traj.beliefs();

    if (a.pair == "full-meet") {
        bool all = true;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            auto r = fullmeet_step(seq[i], seq[i + 1]);
            bool ok = r.result == seq[i + 1];
            all &= ok;
            std::cout << "step " << (i + 1) << ": phi1=" << set_text(r.phi1)
                      << " notphi2=" << set_text(r.notphi2) << " recovered=" << (ok ? "yes" : "NO")
                      << "\n";
        }
        std::cout << (all ? "all steps recovered\n" : "some step failed to recover\n");
        return 0;
    }

    replay_trace tr;
    try {
        tr = replay_sequence(seq, a.forced);
    } catch (const sd_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_sd;
    }
    if (a.as_json) {
        std::cout << trace_to_json(tr).dump(2) << "\n";
        return 0;
    }
    for (const auto& s : tr.steps) {
        std::cout << "step " << s.index << ": phi1=" << set_text(s.phi1)
                  << " notphi2=" << set_text(s.notphi2) << (s.degenerate ? " degenerate" : "")
                  << " matched=" << (s.matched ? "yes" : "NO")
                  << " invariant=" << (s.invariant_ok ? "yes" : "NO")
                  << " lemmas=" << (s.lemma_a && s.lemma_b ? "yes" : "NO") << "\n";
        std::cout << "  post: " << ranking_text(s.post.order) << "\n";
    }
    std::cout << "matched=" << (tr.all_matched() ? "all" : "NOT all")
              << " invariants=" << (tr.all_invariants() ? "all" : "NOT all")
              << " lemmas=" << (tr.all_lemmas() ? "all" : "NOT all") << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// repro scenarios
// ---------------------------------------------------------------------------

bool repro_distances() {
    auto u = universe::full(vocabulary::from_csv("a,b"));
    world_set k = models(*parse_formula("!a&b", u->vocab()), u);
    world_set phi = models(*parse_formula("a<->b", u->vocab()), u);
    unsigned da = dist_A(k, phi);
    world_set db = dist_B(k, phi);
    std::cout << "  Dist_A=" << da << "  Dist_B=" << set_text(db) << "\n";
    return da == 1 && db == world_set::of(u, {0, 2, 3});
}

bool repro_dalal_gradual() {
    auto u = universe::full(vocabulary::from_csv("a,b,c,d"));
    world_set k = models(*parse_formula("!a&!b&!c&!d", u->vocab()), u);
    world_set phi = models(*parse_formula("a&b&c&d", u->vocab()), u);
    auto shells = dalal_gradual(k, phi);
    bool ok = shells.size() == 3 && shells[0] == world_set::of(u, {1, 2, 4, 8}) &&
              shells[1] == world_set::of(u, {3, 5, 6, 9, 10, 12}) &&
              shells[2] == world_set::of(u, {7, 11, 13, 14});
    for (std::size_t i = 0; i < shells.size(); ++i)
        std::cout << "  H" << (i + 1) << " (" << shells[i].count() << " worlds) = "
                  << set_text(shells[i]) << "\n";

    std::vector<world_set> seq{k};
    for (const auto& h : shells) seq.push_back(h);
    seq.push_back(dalal_revise(k, phi));
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            for (std::size_t m = j + 1; m < seq.size(); ++m)
                ok &= dist_A(seq[i], seq[m]) > dist_A(seq[j], seq[m]);
    ok &= check_sequence(seq, seq_condition::DA).holds;
    std::cout << "  strict Dist_A decrease along the extended sequence: " << (ok ? "yes" : "NO")
              << "\n";
    return ok;
}

bool repro_fullmeet_dp2() {
    auto rep = reproduce_fullmeet_dp2();
    const audit_check* r2 = rep.report.find("R2");
    std::cout << "  full-meet R2 violated: " << (rep.fullmeet_r2_violated ? "yes" : "NO")
              << ", witness pair (" << rep.witness_first << ", " << rep.witness_second << ")\n"
              << "  lex passes R1-R4 and LR on the same instance: "
              << (rep.lex_all_pass ? "yes" : "NO") << "\n";
    bool r2_flagged = r2 != nullptr && !r2->pass;
    return rep.fullmeet_r2_violated && rep.lex_all_pass && r2_flagged &&
           rep.witness_first == 3 && rep.witness_second == 1;
}

bool repro_table1() {
    dataset d;
    for (int id = 0; id < 8; ++id) {
        d.inputs.push_back({static_cast<std::uint8_t>(id & 1),
                            static_cast<std::uint8_t>((id >> 1) & 1),
                            static_cast<std::uint8_t>((id >> 2) & 1)});
        d.labels.push_back(((id & 1) + ((id >> 1) & 1) + ((id >> 2) & 1)) >= 2 ? 1 : 0);
    }
    auto u = universe::full(vocabulary::from_csv("a,b,c"));
    world_set target = world_set::from_mask(u, 0xE8);

    int converged = 0;
    bool beliefs_ok = true, replays_ok = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ann_config c;
        c.input_size = 3;
        c.hidden = {100};
        c.seed = seed;
        c.learning_rate = 1e-3;
        c.epochs = 2000;
        auto [m, t] = train(init_model(c), d, c, u);
        bool acc1 = t.stages.back().accuracy == 1.0;
        if (acc1) {
            ++converged;
            beliefs_ok &= t.stages.back().belief == target;
        }
        auto v = analyze_trajectory(t);
        bool sd = v.sd.holds;
        bool matched = true;
        if (sd) {
            auto tr = replay_sequence(t.beliefs());
            matched = tr.all_matched() && tr.all_invariants() && tr.all_lemmas();
            replays_ok &= matched;
        }
        std::cout << "  seed " << seed << ": accuracy=" << t.stages.back().accuracy
                  << " stages=" << t.stages.size() << " SD=" << (sd ? "holds" : "fails")
                  << (sd ? (matched ? " replay=matched" : " replay=MISMATCH") : "") << "\n";
    }
    std::cout << "  converged " << converged << "/10; final beliefs "
              << (beliefs_ok ? "all equal the two-of-three set" : "DIVERGE") << "\n";
    return converged >= 9 && beliefs_ok && replays_ok;
}

bool repro_backprop_dp_example() {
    auto u = universe::observed(vocabulary::from_csv("a,b,c"),
                                {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    std::vector<world_set> seq{world_set::of(u, {0}), world_set::of(u, {3, 4}),
                               world_set::of(u, {1, 2, 3, 4})};
    auto tr = replay_sequence(seq);
    const auto& s1 = tr.steps[0];
    const auto& s2 = tr.steps[1];
    auto layers = [&](const epistemic_state& st) { return st.order.layers(); };
    std::vector<world_set> mid1{world_set::of(u, {3, 4}), world_set::of(u, {0}),
                                world_set::of(u, {1, 2})};
    std::vector<world_set> post2{world_set::of(u, {1, 2, 3, 4}), world_set::of(u, {0})};

    bool ok = tr.all_matched() && tr.all_invariants() && tr.all_lemmas();
    ok &= s1.phi1 == world_set::of(u, {3, 4}) && s1.notphi2.empty();
    ok &= s2.phi1 == world_set::of(u, {3, 4}) && s2.notphi2 == world_set::of(u, {1, 2});
    ok &= layers(s1.post) == mid1;   // preorder after the first transition
    ok &= layers(s2.mid) == mid1;    // preorder after the second revision
    ok &= layers(s2.post) == post2;  // preorder after the second contraction
    std::cout << "  phi1^1=" << set_text(s1.phi1) << " [!phi2^1]=" << set_text(s1.notphi2)
              << "\n  phi1^2=" << set_text(s2.phi1) << " [!phi2^2]=" << set_text(s2.notphi2)
              << "\n  posterior 1: " << ranking_text(s1.post.order)
              << "\n  posterior 2 (mid): " << ranking_text(s2.mid.order)
              << "\n  posterior 2: " << ranking_text(s2.post.order) << "\n  matched: "
              << (ok ? "yes" : "NO") << "\n";
    return ok;
}

bool repro_mnist_smoke() {
    auto dir = std::filesystem::temp_directory_path() / "belief-repro-digits";
    std::filesystem::create_directories(dir);
    auto [img_path, lab_path] = write_synthetic_digits(dir.string());
    dataset d = load_idx_dataset(img_path, lab_path, {{0, 0}, {1, 1}});
    std::vector<std::string> names;
    for (int i = 0; i < 100; ++i) names.push_back("px" + std::to_string(i));
    auto obs = universe::observed(vocabulary(names), d.inputs);

    int good = 0, sd_holds = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ann_config c;
        c.input_size = 100;
        c.hidden = {10};
        c.seed = seed;
        c.learning_rate = 1e-3;
        c.epochs = 500;
        auto [m, t] = train(init_model(c), d, c, obs);
        double acc = t.stages.back().accuracy;
        auto v = analyze_trajectory(t);
        if (acc >= 0.90) ++good;
        if (v.sd.holds) ++sd_holds;
        std::cout << "  seed " << seed << ": accuracy=" << acc
                  << " SD=" << (v.sd.holds ? "holds" : "fails") << "\n";
    }
    std::cout << "  accuracy >= 0.90 on " << good << "/10 seeds; SD holds on " << sd_holds
              << " (reported only)\n";
    return good >= 8;
}

int run_repro(const std::string& name) {
    struct scenario {
        const char* name;
        bool (*fn)();
    };
    const scenario all[] = {
        {"distances-example", repro_distances},
        {"dalal-gradual", repro_dalal_gradual},
        {"fullmeet-dp2", repro_fullmeet_dp2},
        {"table1", repro_table1},
        {"backprop-dp-example", repro_backprop_dp_example},
        {"mnist-smoke", repro_mnist_smoke},
    };
    bool any = false, ok = true;
    for (const auto& s : all) {
        if (name != "all" && name != s.name) continue;
        any = true;
        std::cout << "repro " << s.name << ":\n";
        bool pass = s.fn();
        std::cout << "repro " << s.name << ": " << (pass ? "pass" : "FAIL") << "\n";
        ok &= pass;
    }
    if (!any) throw error("unknown scenario: " + name);
    return ok ? 0 : exit_repro;
}

template <class F>
int guarded(int semantic_code, F&& f) {
    try {
        return f();
    } catch (const syntax_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const belief::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return semantic_code;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return semantic_code;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"possible-worlds belief change toolkit"};
    app.require_subcommand(1);

    change_args rev, con;
    auto add_change = [](CLI::App* cmd, change_args& a, const std::set<std::string>& ops,
                         const std::string& default_op) {
        a.op = default_op;
        cmd->add_option("--vocab", a.vocab, "comma-separated atoms (default a,b)");
        cmd->add_option("--belief", a.belief, "prior belief formula")->required();
        cmd->add_option("--input", a.input, "input formula")->required();
        cmd->add_option("--operator", a.op, "change operator")
            ->check(CLI::IsMember(ops));
        cmd->add_option("--ranking", a.ranking_json,
                        "prior ranking as a JSON array of layers of world labels");
        cmd->add_flag("--json", a.as_json, "emit JSON");
    };
    add_change(app.add_subcommand("revise", "revise a belief set"), rev,
               {"full-meet", "dalal", "lex"}, "full-meet");
    add_change(app.add_subcommand("contract", "contract a belief set"), con,
               {"full-meet", "moderate"}, "full-meet");

    audit_args aud;
    auto* audit_cmd = app.add_subcommand("audit", "check the rationality postulates");
    audit_cmd->add_option("--operator", aud.op,
                          "full-meet-revise | dalal-revise | lex-revise | "
                          "full-meet-contract | moderate-contract")
        ->required();
    audit_cmd->add_option("--n", aud.n, "number of atoms (exhaustive for 2 and 3)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
    audit_cmd->add_option("--seed", aud.seed, "sampling seed (used for n >= 4)");

    train_args tra;
    auto* train_cmd = app.add_subcommand("train", "train a binary classifier and log its beliefs");
    train_cmd->add_option("--task", tra.task, "boolean:<formula> or idx:<images>,<labels>")
        ->required();
    train_cmd->add_option("--vocab", tra.vocab, "atoms for boolean tasks (default a,b,c)");
    train_cmd->add_option("--hidden", tra.hidden, "hidden layer widths")->delimiter(',');
    train_cmd->add_option("--epochs", tra.epochs, "training epochs");
    train_cmd->add_option("--seed", tra.seed, "init seed");
    train_cmd->add_option("--cadence", tra.cadence, "snapshot cadence")
        ->check(CLI::IsMember({"step", "epoch"}));
    train_cmd->add_option("--mode", tra.mode, "belief extraction universe")
        ->check(CLI::IsMember({"full", "observed"}));
    train_cmd->add_option("--lr", tra.lr, "learning rate");
    train_cmd->add_option("--optimizer", tra.opt, "optimizer")
        ->check(CLI::IsMember({"adam", "sgd"}));
    train_cmd->add_option("--threshold", tra.threshold, "binarization threshold");
    train_cmd->add_option("--out", tra.out, "trajectory output file");
    train_cmd->add_flag("--json", tra.as_json, "also print the trajectory JSON");

    replay_args rep;
    auto* replay_cmd = app.add_subcommand("replay", "replay a trajectory symbolically");
    replay_cmd->add_option("--trajectory", rep.trajectory_file, "trajectory JSON file")
        ->required();
    replay_cmd->add_flag("--forced", rep.forced, "replay even when condition (SD) fails");
    replay_cmd->add_option("--operator-pair", rep.pair, "dp | full-meet")
        ->check(CLI::IsMember({"dp", "full-meet"}));
    replay_cmd->add_flag("--json", rep.as_json, "emit the trace as JSON");

    std::string repro_name;
    auto* repro_cmd = app.add_subcommand("repro", "run a pinned scenario");
    repro_cmd
        ->add_option("name", repro_name,
                     "distances-example | dalal-gradual | fullmeet-dp2 | table1 | "
                     "backprop-dp-example | mnist-smoke | all")
        ->required()
        ->check(CLI::IsMember({"distances-example", "dalal-gradual", "fullmeet-dp2", "table1",
                               "backprop-dp-example", "mnist-smoke", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : exit_parse;
    }

    if (app.got_subcommand("revise")) return guarded(exit_semantic, [&] { return run_revise(rev); });
    if (app.got_subcommand("contract"))
        return guarded(exit_semantic, [&] { return run_contract(con); });
    if (app.got_subcommand("audit")) return guarded(exit_semantic, [&] { return run_audit(aud); });
    if (app.got_subcommand("train")) return guarded(exit_training, [&] { return run_train(tra); });
    if (app.got_subcommand("replay"))
        return guarded(exit_semantic, [&] { return run_replay(rep); });
    if (app.got_subcommand("repro")) return guarded(exit_repro, [&] { return run_repro(repro_name); });
    return exit_parse;
}
