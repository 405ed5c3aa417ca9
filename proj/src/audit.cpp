#include "belief/audit.hpp"

#include <random>

#include "belief/operators.hpp"

namespace belief {

revision_op full_meet_revision_op() {
    return {"full_meet_revise",
            [](const epistemic_state& s, const world_set& phi) { return full_meet_revise(s.belief, phi).belief; }};
}

revision_op dalal_revision_op() {
    return {"dalal_revise",
            [](const epistemic_state& s, const world_set& phi) { return dalal_revise(s.belief, phi); }};
}

revision_op lex_revision_op() {
    return {"lex_revise",
            [](const epistemic_state& s, const world_set& phi) { return lex_revise(s, phi).belief; }};
}

contraction_op full_meet_contraction_op() {
    return {"full_meet_contract",
            [](const epistemic_state& s, const world_set& phi) { return full_meet_contract(s.belief, phi).belief; }};
}

contraction_op moderate_contraction_op() {
    return {"moderate_contract",
            [](const epistemic_state& s, const world_set& phi) { return moderate_contract(s, phi).belief; }};
}

bool audit_report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const audit_check* audit_report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

// All rankings with at most max_layers non-empty layers, belief = bottom layer.
std::vector<epistemic_state> exhaustive_priors(const universe_ptr& u, std::uint32_t max_layers) {
    std::vector<epistemic_state> out;
    const std::size_t count = u->world_count();
    for (std::uint32_t nl = 1; nl <= max_layers && nl <= count; ++nl) {
        std::vector<std::uint32_t> assign(count, 0);
        while (true) {
            std::uint32_t used = 0;
            for (auto a : assign) used |= 1u << a;
            if (used == (1u << nl) - 1) {
                ranking rk = ranking::from_ranks(u, assign);
                out.push_back({rk.layer(0), rk});
            }
            std::size_t i = 0;
            while (i < count && assign[i] + 1 == nl) assign[i++] = 0;
            if (i == count) break;
            ++assign[i];
        }
    }
    return out;
}

// Canonical ranking families per non-empty belief at n == 3.
std::vector<epistemic_state> canonical_priors(const universe_ptr& u) {
    std::vector<epistemic_state> out;
    const std::uint64_t full = (std::uint64_t{1} << u->world_count()) - 1;
    for (std::uint64_t m = 1; m <= full; ++m) {
        world_set k = world_set::from_mask(u, m);
        out.push_back(two_layer_state(k));
        out.push_back({k, dalal_preorder(k)});
    }
    return out;
}

std::vector<epistemic_state> sampled_priors(const universe_ptr& u, std::mt19937_64& rng,
                                            std::size_t states) {
    std::vector<epistemic_state> out;
    const std::size_t count = u->world_count();
    std::uniform_int_distribution<std::size_t> pick_id(0, count - 1);
    std::uniform_int_distribution<std::size_t> pick_size(1, std::min<std::size_t>(count, 32));
    while (out.size() < states) {
        world_set k(u);
        std::size_t sz = pick_size(rng);
        for (std::size_t i = 0; i < sz; ++i) k.add(pick_id(rng));
        out.push_back(two_layer_state(k));
        out.push_back({k, dalal_preorder(k)});
    }
    return out;
}

world_set sampled_sentence(const universe_ptr& u, std::mt19937_64& rng) {
    const std::size_t count = u->world_count();
    std::uniform_int_distribution<std::size_t> pick_id(0, count - 1);
    std::uniform_int_distribution<std::size_t> pick_size(0, std::min<std::size_t>(count, 32));
    world_set s(u);
    std::size_t sz = pick_size(rng);
    for (std::size_t i = 0; i < sz; ++i) s.add(pick_id(rng));
    return s;
}

struct check_table {
    std::vector<audit_check> checks;

    explicit check_table(std::initializer_list<const char*> ids) {
        for (auto id : ids) checks.push_back({id, true, 0, std::nullopt});
    }

    audit_check& operator[](std::size_t i) { return checks[i]; }

    void note(std::size_t i, bool ok, const epistemic_state& s, const world_set& phi,
              const std::optional<world_set>& psi) {
        auto& c = checks[i];
        ++c.instances;
        if (ok || !c.pass) return;
        c.pass = false;
        c.counterexample = audit_counterexample{s.belief, s.order.layers(), phi, psi};
    }
};

std::vector<epistemic_state> priors_for(const universe_ptr& u, std::uint64_t seed) {
    const std::size_t n = u->atom_count();
    if (!u->full_mode()) throw error("audits require a full universe");
    if (n <= 2) return exhaustive_priors(u, 3);
    if (n == 3) return canonical_priors(u);
    if (n > 12) throw universe_too_large(n, 12);
    std::mt19937_64 rng(seed);
    return sampled_priors(u, rng, n <= 6 ? 24 : 8);
}

}  // namespace

audit_report audit_agm_revision(const revision_op& op, const universe_ptr& u, std::uint64_t seed) {
    audit_report rep;
    rep.operator_id = op.id;
    rep.n = u->atom_count();
    rep.seed = rep.n <= 3 ? 0 : seed;
    auto priors = priors_for(u, seed);
    check_table t{"K*1", "K*2", "K*3", "K*4", "K*5", "K*6", "K*7", "K*8"};

    if (rep.n <= 3) {
        const std::size_t sentences = std::size_t{1} << u->world_count();
        std::vector<std::uint64_t> r(sentences);
        for (const auto& s : priors) {
            const std::uint64_t k = s.belief.mask();
            for (std::uint64_t f = 0; f < sentences; ++f) {
                world_set phi = world_set::from_mask(u, f);
                r[f] = op.apply(s, phi).mask();
                t.note(0, true, s, phi, std::nullopt);
                t.note(1, (r[f] & ~f) == 0, s, phi, std::nullopt);
                t.note(2, ((k & f) & ~r[f]) == 0, s, phi, std::nullopt);
                t.note(3, (k & f) == 0 || (r[f] & ~(k & f)) == 0, s, phi, std::nullopt);
                t.note(4, (f != 0) == (r[f] != 0), s, phi, std::nullopt);
                t.note(5, op.apply(s, phi).mask() == r[f], s, phi, std::nullopt);
            }
            for (std::uint64_t f = 0; f < sentences; ++f) {
                for (std::uint64_t g = 0; g < sentences; ++g) {
                    const std::uint64_t refine = r[f] & g;
                    bool k7 = (refine & ~r[f & g]) == 0;
                    bool k8 = refine == 0 || (r[f & g] & ~refine) == 0;
                    if (k7 && k8) {
                        ++t[6].instances;
                        ++t[7].instances;
                        continue;
                    }
                    world_set phi = world_set::from_mask(u, f);
                    world_set psi = world_set::from_mask(u, g);
                    t.note(6, k7, s, phi, psi);
                    t.note(7, k8, s, phi, psi);
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed + 1);
        const std::size_t per_state = rep.n <= 6 ? 48 : 16;
        for (const auto& s : priors) {
            std::vector<world_set> fs;
            fs.push_back(world_set::empty_set(u));
            fs.push_back(world_set::all(u));
            while (fs.size() < per_state) fs.push_back(sampled_sentence(u, rng));
            for (const auto& phi : fs) {
                world_set res = op.apply(s, phi);
                world_set meet = s.belief & phi;
                t.note(0, true, s, phi, std::nullopt);
                t.note(1, res.subset_of(phi), s, phi, std::nullopt);
                t.note(2, meet.subset_of(res), s, phi, std::nullopt);
                t.note(3, meet.empty() || res.subset_of(meet), s, phi, std::nullopt);
                t.note(4, phi.empty() == res.empty(), s, phi, std::nullopt);
                t.note(5, op.apply(s, phi) == res, s, phi, std::nullopt);
            }
            for (const auto& phi : fs) {
                world_set rf = op.apply(s, phi);
                for (const auto& psi : fs) {
                    world_set refine = rf & psi;
                    world_set rfg = op.apply(s, phi & psi);
                    t.note(6, refine.subset_of(rfg), s, phi, psi);
                    t.note(7, refine.empty() || rfg.subset_of(refine), s, phi, psi);
                }
            }
        }
    }
    rep.checks = std::move(t.checks);
    return rep;
}

audit_report audit_agm_contraction(const contraction_op& op, const universe_ptr& u, std::uint64_t seed) {
    audit_report rep;
    rep.operator_id = op.id;
    rep.n = u->atom_count();
    rep.seed = rep.n <= 3 ? 0 : seed;
    auto priors = priors_for(u, seed);
    check_table t{"K-1", "K-2", "K-3", "K-4", "K-5", "K-6", "K-7", "K-8"};

    if (rep.n <= 3) {
        const std::size_t sentences = std::size_t{1} << u->world_count();
        const std::uint64_t top = sentences - 1;
        std::vector<std::uint64_t> c(sentences);
        for (const auto& s : priors) {
            const std::uint64_t k = s.belief.mask();
            for (std::uint64_t f = 0; f < sentences; ++f) {
                world_set phi = world_set::from_mask(u, f);
                c[f] = op.apply(s, phi).mask();
                t.note(0, true, s, phi, std::nullopt);
                t.note(1, (k & ~c[f]) == 0, s, phi, std::nullopt);
                t.note(2, (k & ~f) == 0 || c[f] == k, s, phi, std::nullopt);
                t.note(3, f == top || (c[f] & ~f) != 0, s, phi, std::nullopt);
                t.note(4, ((c[f] & f) & ~k) == 0, s, phi, std::nullopt);
                t.note(5, op.apply(s, phi).mask() == c[f], s, phi, std::nullopt);
            }
            for (std::uint64_t f = 0; f < sentences; ++f) {
                for (std::uint64_t g = 0; g < sentences; ++g) {
                    bool k7 = (c[f & g] & ~(c[f] | c[g])) == 0;
                    bool k8 = (c[f & g] & ~f) == 0 || (c[f] & ~c[f & g]) == 0;
                    if (k7 && k8) {
                        ++t[6].instances;
                        ++t[7].instances;
                        continue;
                    }
                    world_set phi = world_set::from_mask(u, f);
                    world_set psi = world_set::from_mask(u, g);
                    t.note(6, k7, s, phi, psi);
                    t.note(7, k8, s, phi, psi);
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed + 1);
        const std::size_t per_state = rep.n <= 6 ? 48 : 16;
        for (const auto& s : priors) {
            std::vector<world_set> fs;
            fs.push_back(world_set::empty_set(u));
            fs.push_back(world_set::all(u));
            while (fs.size() < per_state) fs.push_back(sampled_sentence(u, rng));
            for (const auto& phi : fs) {
                world_set res = op.apply(s, phi);
                t.note(0, true, s, phi, std::nullopt);
                t.note(1, s.belief.subset_of(res), s, phi, std::nullopt);
                t.note(2, s.belief.subset_of(phi) || res == s.belief, s, phi, std::nullopt);
                t.note(3, phi.is_all() || !res.subset_of(phi), s, phi, std::nullopt);
                t.note(4, (res & phi).subset_of(s.belief), s, phi, std::nullopt);
                t.note(5, op.apply(s, phi) == res, s, phi, std::nullopt);
            }
            for (const auto& phi : fs) {
                world_set cf = op.apply(s, phi);
                for (const auto& psi : fs) {
                    world_set cg = op.apply(s, psi);
                    world_set cfg = op.apply(s, phi & psi);
                    t.note(6, cfg.subset_of(cf | cg), s, phi, psi);
                    t.note(7, (cfg - phi).empty() || cf.subset_of(cfg), s, phi, psi);
                }
            }
        }
    }
    rep.checks = std::move(t.checks);
    return rep;
}

dp_r_verdict check_R_constraints(const epistemic_state& prior, const world_set& phi,
                                 const epistemic_state& posterior) {
    dp_r_verdict v;
    const auto& u = prior.order.uni();
    if (phi.uni() != u || posterior.order.uni() != u)
        throw error("constraint check inputs belong to different universes");
    const std::size_t count = u->world_count();
    for (std::size_t r1 = 0; r1 < count; ++r1) {
        bool in1 = phi.contains(r1);
        for (std::size_t r2 = 0; r2 < count; ++r2) {
            bool in2 = phi.contains(r2);
            bool pre_le = prior.order.rank(r1) <= prior.order.rank(r2);
            bool pre_lt = prior.order.rank(r1) < prior.order.rank(r2);
            bool post_le = posterior.order.rank(r1) <= posterior.order.rank(r2);
            bool post_lt = posterior.order.rank(r1) < posterior.order.rank(r2);
            if (in1 && in2) v.r1 = v.r1 && pre_le == post_le;
            if (!in1 && !in2) v.r2 = v.r2 && pre_le == post_le;
            if (in1 && !in2) {
                if (pre_lt) v.r3 = v.r3 && post_lt;
                if (pre_le) v.r4 = v.r4 && post_le;
                v.lr = v.lr && post_lt;
            }
        }
    }
    return v;
}

dp_c_verdict check_C_constraints(const epistemic_state& prior, const world_set& phi,
                                 const epistemic_state& posterior) {
    dp_c_verdict v;
    const auto& u = prior.order.uni();
    if (phi.uni() != u || posterior.order.uni() != u)
        throw error("constraint check inputs belong to different universes");
    const std::size_t count = u->world_count();
    for (std::size_t r1 = 0; r1 < count; ++r1) {
        bool in1 = phi.contains(r1);
        for (std::size_t r2 = 0; r2 < count; ++r2) {
            bool in2 = phi.contains(r2);
            bool pre_le = prior.order.rank(r1) <= prior.order.rank(r2);
            bool pre_lt = prior.order.rank(r1) < prior.order.rank(r2);
            bool post_le = posterior.order.rank(r1) <= posterior.order.rank(r2);
            bool post_lt = posterior.order.rank(r1) < posterior.order.rank(r2);
            if (in1 && in2) v.c1 = v.c1 && pre_le == post_le;
            if (!in1 && !in2) v.c2 = v.c2 && pre_le == post_le;
            if (!in1 && in2) {
                if (pre_lt) v.c3 = v.c3 && post_lt;
                if (pre_le) v.c4 = v.c4 && post_le;
                if (!posterior.belief.contains(r2)) v.mc = v.mc && post_lt;
            }
        }
    }
    return v;
}

fullmeet_dp2_report reproduce_fullmeet_dp2() {
    auto u = universe::full(vocabulary({"a", "b"}));
    const std::size_t w_ab = 3, w_nab = 2, w_anb = 1;
    epistemic_state prior = two_layer_state(world_set::of(u, {w_ab}));
    world_set phi = world_set::of(u, {w_nab});

    epistemic_state post = full_meet_revise(prior.belief, phi);
    dp_r_verdict fm = check_R_constraints(prior, phi, post);

    bool witness_pre = prior.order.rank(w_ab) < prior.order.rank(w_anb);
    bool witness_post = post.order.rank(w_ab) < post.order.rank(w_anb);
    bool violated = witness_pre && !witness_post && !fm.r2;
    if (!violated) throw error("full-meet R2 witness failed to violate");

    epistemic_state lex = lex_revise(prior, phi);
    dp_r_verdict lx = check_R_constraints(prior, phi, lex);

    fullmeet_dp2_report out;
    out.report.operator_id = "full_meet_revise";
    out.report.n = 2;
    out.report.seed = 0;
    auto layers = prior.order.layers();
    auto add = [&](const char* id, bool pass) {
        audit_check c{id, pass, 1, std::nullopt};
        if (!pass) c.counterexample = audit_counterexample{prior.belief, layers, phi, std::nullopt};
        out.report.checks.push_back(std::move(c));
    };
    add("R1", fm.r1);
    add("R2", fm.r2);
    add("R3", fm.r3);
    add("R4", fm.r4);
    add("LR", fm.lr);
    out.witness_first = w_ab;
    out.witness_second = w_anb;
    out.fullmeet_r2_violated = true;
    out.lex_all_pass = lx.all();
    return out;
}

}  // namespace belief
