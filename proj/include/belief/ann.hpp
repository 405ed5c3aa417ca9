#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belief/logic.hpp"
#include "belief/metrics.hpp"

namespace belief {

enum class optimizer_kind { sgd, adam };
enum class snapshot_cadence { every_step, every_epoch };

struct adam_params {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct ann_config {
    std::size_t input_size = 0;
    std::vector<std::size_t> hidden;
    double threshold = 0.5;
    double learning_rate = 1e-3;
    optimizer_kind optimizer = optimizer_kind::adam;
    adam_params adam;
    std::size_t epochs = 0;
    std::uint64_t seed = 0;
    snapshot_cadence cadence = snapshot_cadence::every_step;
};

enum class activation { relu, sigmoid };

struct ann_layer {
    std::size_t in = 0;
    std::size_t out = 0;
    std::vector<double> w;  // row-major, w[o * in + i]
    std::vector<double> b;
    activation act = activation::relu;
};

// Dimensions chain from the input size down to the single sigmoid output.
struct ann_model {
    std::vector<ann_layer> layers;
    std::size_t param_count() const;
};

struct dataset {
    std::vector<std::vector<std::uint8_t>> inputs;  // 0/1 entries
    std::vector<std::uint8_t> labels;               // 0/1
};

struct trajectory_stage {
    std::size_t step = 0;  // 0 = before the first update
    world_set belief;
    double accuracy = 0.0;
};

// Belief sets extracted after successive parameter updates, consecutive
// duplicates collapsed (the surviving stage keeps the first step index).
struct trajectory {
    universe_ptr uni;
    snapshot_cadence cadence = snapshot_cadence::every_step;
    std::vector<trajectory_stage> stages;

    std::vector<world_set> beliefs() const;
};

// Weights uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)], biases zero.  The
// stream is a seeded mt19937_64 mapped to [0,1) via (x >> 11) * 2^-53 and
// consumed layer by layer in row-major weight order, so models are
// bit-identical across platforms for a given seed.
ann_model init_model(const ann_config& cfg);

double forward(const ann_model& m, const std::vector<std::uint8_t>& x);

inline int binarize(double y, double tau) { return y >= tau ? 1 : 0; }

double bce_loss(const ann_model& m, const dataset& d);
double accuracy(const ann_model& m, const dataset& d, double tau);

// Full-batch gradient descent on binary cross-entropy.  One parameter update
// per epoch; the belief set over `extraction` and the dataset accuracy are
// snapshotted before training and after every update.
std::pair<ann_model, trajectory> train(ann_model m, const dataset& d, const ann_config& cfg,
                                       const universe_ptr& extraction);

// Thresholded output over every world of a full universe (n <= 20).
world_set extract_belief_set(const ann_model& m, const universe_ptr& u, double tau);

// Thresholded output over the members of an observed universe.
world_set extract_belief_set_observed(const ann_model& m, const universe_ptr& u, double tau);

// Backprop gradient of the full-batch BCE loss against central finite
// differences (step 1e-5).  Per-parameter relative error, with an absolute
// fallback when both gradients are below 1e-6.
double gradient_check(const ann_model& m, const dataset& d);

struct trajectory_verdicts {
    sequence_verdict sd;
    sequence_verdict db;
    std::optional<sequence_verdict> da;  // skipped when any stage is inconsistent
};

trajectory_verdicts analyze_trajectory(const trajectory& t);

}  // namespace belief
