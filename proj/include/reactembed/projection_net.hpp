#pragma once

#include "reactembed/entity.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <vector>

namespace reactembed {

struct DenseLayer {
    Eigen::MatrixXd weight;  // out_dim x in_dim
    Eigen::VectorXd bias;    // out_dim
};

/// MLP mapping one domain's pre-trained vectors into the unified space.
/// ReLU on hidden layers, identity on the output layer.
class ProjectionNet {
public:
    ProjectionNet() = default;
    explicit ProjectionNet(std::vector<DenseLayer> layers);

    Eigen::Index in_dim() const;
    Eigen::Index out_dim() const;
    std::size_t layer_count() const { return layers_.size(); }
    const std::vector<DenseLayer>& layers() const { return layers_; }
    std::vector<DenseLayer>& layers() { return layers_; }

private:
    std::vector<DenseLayer> layers_;
};

/// Weights ~ U(-b, b) with b = sqrt(6 / (fan_in + fan_out)), biases zero.
ProjectionNet init_net(Eigen::Index in_dim, const std::vector<Eigen::Index>& hidden_dims,
                       Eigen::Index out_dim, std::mt19937_64& rng);

/// Cached activations from one forward pass. inputs[l] is the row batch fed
/// to layer l (so inputs[l + 1] is layer l's post-activation output).
struct ForwardTrace {
    std::vector<Eigen::MatrixXd> inputs;
    Eigen::MatrixXd output;
};

/// Rows of x are samples.
Eigen::MatrixXd forward(const ProjectionNet& net, const Eigen::Ref<const Eigen::MatrixXd>& x);
Eigen::VectorXd forward_vec(const ProjectionNet& net, const Eigen::Ref<const Eigen::VectorXd>& x);
ForwardTrace forward_trace(const ProjectionNet& net, const Eigen::Ref<const Eigen::MatrixXd>& x);

struct NetGradients {
    std::vector<DenseLayer> layers;  // dW/db, shapes mirror the net
    Eigen::MatrixXd input;           // gradient w.r.t. the input rows
};

/// Exact analytic gradients of the forward map. output_grad rows carry
/// dLoss/dOutput for the matching rows of the trace.
NetGradients backward(const ProjectionNet& net, const ForwardTrace& trace,
                      const Eigen::Ref<const Eigen::MatrixXd>& output_grad);

std::vector<DenseLayer> zero_gradients_like(const ProjectionNet& net);

struct AdamWConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double weight_decay = 0.01;
};

/// Adam with decoupled weight decay over a layer list. Moment accumulators
/// mirror the parameter shapes exactly and are sized on first step.
class AdamW {
public:
    AdamW() = default;
    explicit AdamW(AdamWConfig config) : config_(config) {}

    void step(std::vector<DenseLayer>& params, const std::vector<DenseLayer>& grads);
    std::uint64_t step_count() const { return step_; }
    const AdamWConfig& config() const { return config_; }

private:
    AdamWConfig config_;
    std::vector<DenseLayer> moment1_;
    std::vector<DenseLayer> moment2_;
    std::uint64_t step_ = 0;
};

}  // namespace reactembed
