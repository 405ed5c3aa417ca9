#include "belief/ann.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace belief {

namespace {

constexpr double p_clamp = 1e-7;

double sigmoid(double z) { return z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z)); }

double clamp_p(double p) { return std::min(1.0 - p_clamp, std::max(p_clamp, p)); }

void validate_config(const ann_config& cfg) {
    if (cfg.input_size == 0) throw bad_config("input size must be positive");
    if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0)) throw bad_config("threshold must lie in [0,1]");
    if (!(cfg.learning_rate >= 0.0)) throw bad_config("learning rate must be non-negative");
    for (auto h : cfg.hidden)
        if (h == 0) throw bad_config("hidden layer sizes must be positive");
}

void validate_dataset(const ann_model& m, const dataset& d) {
    if (d.inputs.empty()) throw bad_config("dataset is empty");
    if (d.inputs.size() != d.labels.size()) throw bad_config("input and label counts differ");
    const std::size_t n = m.layers.front().in;
    for (const auto& x : d.inputs) {
        if (x.size() != n)
            throw dimension_mismatch("sample has " + std::to_string(x.size()) + " inputs, model expects " +
                                     std::to_string(n));
        for (auto b : x)
            if (b > 1) throw error("sample entries must be 0 or 1");
    }
    for (auto l : d.labels)
        if (l > 1) throw non_binary_label("labels must be 0 or 1, got " + std::to_string(l));
}

// Activations per layer for one sample; acts[0] is the input, acts[L] the
// output.  Preactivations share indexing with acts[1..].
void forward_pass(const ann_model& m, const std::vector<std::uint8_t>& x,
                  std::vector<std::vector<double>>& acts, std::vector<std::vector<double>>& pre) {
    acts.assign(m.layers.size() + 1, {});
    pre.assign(m.layers.size(), {});
    acts[0].assign(x.begin(), x.end());
    for (std::size_t l = 0; l < m.layers.size(); ++l) {
        const auto& ly = m.layers[l];
        pre[l].assign(ly.out, 0.0);
        acts[l + 1].assign(ly.out, 0.0);
        for (std::size_t o = 0; o < ly.out; ++o) {
            double z = ly.b[o];
            const double* row = ly.w.data() + o * ly.in;
            for (std::size_t i = 0; i < ly.in; ++i) z += row[i] * acts[l][i];
            pre[l][o] = z;
            acts[l + 1][o] = ly.act == activation::relu ? std::max(0.0, z) : sigmoid(z);
        }
    }
}

struct grad_buffers {
    std::vector<std::vector<double>> w;
    std::vector<std::vector<double>> b;

    explicit grad_buffers(const ann_model& m) {
        for (const auto& ly : m.layers) {
            w.emplace_back(ly.w.size(), 0.0);
            b.emplace_back(ly.b.size(), 0.0);
        }
    }
};

// Mean-BCE gradient over the full batch, samples accumulated in index order.
grad_buffers backward_pass(const ann_model& m, const dataset& d) {
    grad_buffers g(m);
    const std::size_t nsamples = d.inputs.size();
    const std::size_t nlayers = m.layers.size();
    std::vector<std::vector<double>> acts, pre;
    std::vector<std::vector<double>> delta(nlayers);
    for (std::size_t s = 0; s < nsamples; ++s) {
        forward_pass(m, d.inputs[s], acts, pre);
        double p = acts[nlayers][0];
        delta[nlayers - 1].assign(1, (p - static_cast<double>(d.labels[s])) / static_cast<double>(nsamples));
        for (std::size_t l = nlayers - 1; l-- > 0;) {
            const auto& up = m.layers[l + 1];
            delta[l].assign(m.layers[l].out, 0.0);
            for (std::size_t o = 0; o < up.out; ++o) {
                double dl = delta[l + 1][o];
                const double* row = up.w.data() + o * up.in;
                for (std::size_t i = 0; i < up.in; ++i) delta[l][i] += row[i] * dl;
            }
            for (std::size_t i = 0; i < m.layers[l].out; ++i)
                if (pre[l][i] <= 0.0) delta[l][i] = 0.0;
        }
        for (std::size_t l = 0; l < nlayers; ++l) {
            const auto& ly = m.layers[l];
            for (std::size_t o = 0; o < ly.out; ++o) {
                double dl = delta[l][o];
                double* row = g.w[l].data() + o * ly.in;
                for (std::size_t i = 0; i < ly.in; ++i) row[i] += dl * acts[l][i];
                g.b[l][o] += dl;
            }
        }
    }
    return g;
}

}  // namespace

std::size_t ann_model::param_count() const {
    std::size_t c = 0;
    for (const auto& ly : layers) c += ly.w.size() + ly.b.size();
    return c;
}

std::vector<world_set> trajectory::beliefs() const {
    std::vector<world_set> out;
    out.reserve(stages.size());
    for (const auto& s : stages) out.push_back(s.belief);
    return out;
}

ann_model init_model(const ann_config& cfg) {
    validate_config(cfg);
    std::mt19937_64 rng(cfg.seed);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    ann_model m;
    std::vector<std::size_t> sizes;
    sizes.push_back(cfg.input_size);
    for (auto h : cfg.hidden) sizes.push_back(h);
    sizes.push_back(1);
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        ann_layer ly;
        ly.in = sizes[l];
        ly.out = sizes[l + 1];
        ly.act = l + 2 == sizes.size() ? activation::sigmoid : activation::relu;
        ly.w.resize(ly.in * ly.out);
        ly.b.assign(ly.out, 0.0);
        const double bound = 1.0 / std::sqrt(static_cast<double>(ly.in));
        for (auto& w : ly.w) w = (2.0 * unit() - 1.0) * bound;
        m.layers.push_back(std::move(ly));
    }
    return m;
}

double forward(const ann_model& m, const std::vector<std::uint8_t>& x) {
    if (m.layers.empty()) throw bad_config("model has no layers");
    if (x.size() != m.layers.front().in)
        throw dimension_mismatch("input has " + std::to_string(x.size()) + " bits, model expects " +
                                 std::to_string(m.layers.front().in));
    std::vector<double> cur(x.begin(), x.end());
    std::vector<double> next;
    for (const auto& ly : m.layers) {
        next.assign(ly.out, 0.0);
        for (std::size_t o = 0; o < ly.out; ++o) {
            double z = ly.b[o];
            const double* row = ly.w.data() + o * ly.in;
            for (std::size_t i = 0; i < ly.in; ++i) z += row[i] * cur[i];
            next[o] = ly.act == activation::relu ? std::max(0.0, z) : sigmoid(z);
        }
        cur.swap(next);
    }
    return cur[0];
}

double bce_loss(const ann_model& m, const dataset& d) {
    validate_dataset(m, d);
    double sum = 0.0;
    for (std::size_t s = 0; s < d.inputs.size(); ++s) {
        double p = clamp_p(forward(m, d.inputs[s]));
        sum += d.labels[s] ? -std::log(p) : -std::log(1.0 - p);
    }
    return sum / static_cast<double>(d.inputs.size());
}

double accuracy(const ann_model& m, const dataset& d, double tau) {
    validate_dataset(m, d);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < d.inputs.size(); ++s)
        hits += binarize(forward(m, d.inputs[s]), tau) == static_cast<int>(d.labels[s]);
    return static_cast<double>(hits) / static_cast<double>(d.inputs.size());
}

world_set extract_belief_set(const ann_model& m, const universe_ptr& u, double tau) {
    if (!u->full_mode()) throw error("use extract_belief_set_observed for an observed universe");
    if (u->atom_count() > 20) throw universe_too_large(u->atom_count());
    if (m.layers.front().in != u->atom_count())
        throw dimension_mismatch("model input size differs from vocabulary size");
    world_set out(u);
    std::vector<std::uint8_t> x(u->atom_count());
    for (std::size_t id = 0; id < u->world_count(); ++id) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = u->atom_true(id, i);
        if (binarize(forward(m, x), tau)) out.add(id);
    }
    return out;
}

world_set extract_belief_set_observed(const ann_model& m, const universe_ptr& u, double tau) {
    if (u->full_mode()) throw error("extract_belief_set_observed needs an observed universe");
    if (m.layers.front().in != u->atom_count())
        throw dimension_mismatch("model input size differs from vocabulary size");
    world_set out(u);
    for (std::size_t id = 0; id < u->world_count(); ++id)
        if (binarize(forward(m, u->member(id)), tau)) out.add(id);
    return out;
}

std::pair<ann_model, trajectory> train(ann_model m, const dataset& d, const ann_config& cfg,
                                       const universe_ptr& extraction) {
    validate_config(cfg);
    validate_dataset(m, d);
    auto extract = [&](const ann_model& model) {
        return extraction->full_mode() ? extract_belief_set(model, extraction, cfg.threshold)
                                       : extract_belief_set_observed(model, extraction, cfg.threshold);
    };

    trajectory traj;
    traj.uni = extraction;
    traj.cadence = cfg.cadence;
    traj.stages.push_back({0, extract(m), accuracy(m, d, cfg.threshold)});

    grad_buffers adam_m(m), adam_v(m);
    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        grad_buffers g = backward_pass(m, d);
        if (cfg.optimizer == optimizer_kind::sgd) {
            for (std::size_t l = 0; l < m.layers.size(); ++l) {
                auto& ly = m.layers[l];
                for (std::size_t i = 0; i < ly.w.size(); ++i) ly.w[i] -= cfg.learning_rate * g.w[l][i];
                for (std::size_t i = 0; i < ly.b.size(); ++i) ly.b[i] -= cfg.learning_rate * g.b[l][i];
            }
        } else {
            const double b1 = cfg.adam.beta1, b2 = cfg.adam.beta2;
            const double c1 = 1.0 - std::pow(b1, static_cast<double>(epoch));
            const double c2 = 1.0 - std::pow(b2, static_cast<double>(epoch));
            auto update = [&](double& theta, double& mm, double& vv, double grad) {
                mm = b1 * mm + (1.0 - b1) * grad;
                vv = b2 * vv + (1.0 - b2) * grad * grad;
                theta -= cfg.learning_rate * (mm / c1) / (std::sqrt(vv / c2) + cfg.adam.eps);
            };
            for (std::size_t l = 0; l < m.layers.size(); ++l) {
                auto& ly = m.layers[l];
                for (std::size_t i = 0; i < ly.w.size(); ++i)
                    update(ly.w[i], adam_m.w[l][i], adam_v.w[l][i], g.w[l][i]);
                for (std::size_t i = 0; i < ly.b.size(); ++i)
                    update(ly.b[i], adam_m.b[l][i], adam_v.b[l][i], g.b[l][i]);
            }
        }
        world_set belief = extract(m);
        if (belief != traj.stages.back().belief)
            traj.stages.push_back({epoch, std::move(belief), accuracy(m, d, cfg.threshold)});
    }
    return {std::move(m), std::move(traj)};
}

double gradient_check(const ann_model& m, const dataset& d) {
    validate_dataset(m, d);
    grad_buffers g = backward_pass(m, d);
    ann_model probe = m;
    const double h = 1e-5;
    double worst = 0.0;
    auto consider = [&](double& theta, double analytic) {
        const double saved = theta;
        theta = saved + h;
        double lp = bce_loss(probe, d);
        theta = saved - h;
        double lm = bce_loss(probe, d);
        theta = saved;
        double numeric = (lp - lm) / (2.0 * h);
        double denom = std::max(std::abs(analytic), std::abs(numeric));
        double err = denom < 1e-6 ? std::abs(analytic - numeric) : std::abs(analytic - numeric) / denom;
        worst = std::max(worst, err);
    };
    for (std::size_t l = 0; l < probe.layers.size(); ++l) {
        auto& ly = probe.layers[l];
        for (std::size_t i = 0; i < ly.w.size(); ++i) consider(ly.w[i], g.w[l][i]);
        for (std::size_t i = 0; i < ly.b.size(); ++i) consider(ly.b[i], g.b[l][i]);
    }
    return worst;
}

trajectory_verdicts analyze_trajectory(const trajectory& t) {
    auto seq = t.beliefs();
    if (seq.size() < 2) {
        trajectory_verdicts v{{seq_condition::SD, true, std::nullopt},
                              {seq_condition::DB, true, std::nullopt},
                              sequence_verdict{seq_condition::DA, true, std::nullopt}};
        return v;
    }
    trajectory_verdicts v{check_sequence(seq, seq_condition::SD), check_sequence(seq, seq_condition::DB),
                          std::nullopt};
    bool consistent = true;
    for (const auto& s : seq) consistent = consistent && !s.empty();
    if (consistent) v.da = check_sequence(seq, seq_condition::DA);
    return v;
}

}  // namespace belief
