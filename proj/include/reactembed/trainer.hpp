#pragma once

#include "reactembed/embedding_store.hpp"
#include "reactembed/projection_net.hpp"
#include "reactembed/reaction_graph.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace reactembed {

enum class NegativeKind : std::uint8_t { IntraDomain, CrossDomain };
enum class DistanceMetric : std::uint8_t { Euclidean, SquaredEuclidean };

double triplet_distance(const Eigen::Ref<const Eigen::VectorXd>& u,
                        const Eigen::Ref<const Eigen::VectorXd>& v,
                        DistanceMetric metric = DistanceMetric::Euclidean);

/// max(0, margin + d(anchor, positive) - d(anchor, negative))
double triplet_loss(const Eigen::Ref<const Eigen::VectorXd>& anchor,
                    const Eigen::Ref<const Eigen::VectorXd>& positive,
                    const Eigen::Ref<const Eigen::VectorXd>& negative, double margin,
                    DistanceMetric metric = DistanceMetric::Euclidean);

/// alpha * intra_loss + (1 - alpha) * cross_loss, alpha in [0, 1].
double combined_loss(double intra_loss, double cross_loss, double alpha);

/// One contrastive triplet; members are node indices into the training graph.
struct Triplet {
    std::uint32_t anchor = 0;
    std::uint32_t positive = 0;
    std::uint32_t negative = 0;
    NegativeKind negative_kind = NegativeKind::IntraDomain;
};

/// The two triplets generated from one edge draw.
struct TripletPair {
    Triplet intra;
    Triplet cross;
};

struct TrainConfig {
    double margin = 1.0;
    double alpha = 0.5;
    std::int64_t triplets_per_epoch = 2000;
    std::int64_t max_epochs = 100;
    std::int64_t patience = 10;
    double validation_fraction = 0.1;
    std::uint64_t seed = 0;
    double noise_flip_prob = 0.0;
    DistanceMetric distance = DistanceMetric::Euclidean;

    std::vector<Eigen::Index> hidden_dims = {512};
    Eigen::Index unified_dim = 256;
    std::int64_t batch_size = 32;
    AdamWConfig optimizer;

    void validate() const;
};

/// Draws (intra, cross) triplet pairs: edges weighted by co-occurrence count,
/// endpoint order randomized, negatives uniform over embedded graph nodes of
/// the required domain with rejection of anchor-adjacent candidates.
/// Built once per graph; immutable and safe to share across readers.
class TripletSampler {
public:
    TripletSampler(const ReactionGraph& graph, const EmbeddingTable& proteins,
                   const EmbeddingTable& molecules, double noise_flip_prob);
    TripletSampler(const ReactionGraph& graph, const EmbeddingTable& proteins,
                   const EmbeddingTable& molecules, double noise_flip_prob,
                   std::vector<std::size_t> edge_subset);

    TripletPair sample_pair(std::mt19937_64& rng) const;
    /// Same negative/ordering/noise flow but for a fixed edge (validation sets).
    TripletPair sample_pair_for_edge(std::size_t edge_id, std::mt19937_64& rng) const;

    /// Edge ids (into graph.edges()) whose endpoints both have embeddings.
    static std::vector<std::size_t> eligible_edge_ids(const ReactionGraph& graph,
                                                      const EmbeddingTable& proteins,
                                                      const EmbeddingTable& molecules);

    const std::vector<std::size_t>& edge_ids() const { return edge_ids_; }
    const ReactionGraph& graph() const { return *graph_; }

private:
    TripletPair make_pair(std::uint32_t anchor, std::uint32_t positive,
                          std::mt19937_64& rng) const;
    std::uint32_t draw_negative(std::uint32_t anchor, std::uint32_t positive, Domain pool_domain,
                                std::mt19937_64& rng) const;

    const ReactionGraph* graph_;
    std::vector<std::size_t> edge_ids_;
    std::vector<std::uint32_t> protein_pool_;  // embedded graph nodes per domain
    std::vector<std::uint32_t> molecule_pool_;
    double noise_flip_prob_;
    EdgeSampler edge_sampler_;
};

struct EpochStats {
    std::int64_t epoch = 0;
    double train_loss = 0.0;
    double val_loss = 0.0;
    std::int64_t elapsed_ms = 0;
};

struct TrainResult {
    ProjectionNet p2u;
    ProjectionNet m2u;
    std::vector<EpochStats> log;
    double best_val_loss = 0.0;
    std::int64_t best_epoch = 0;
};

/// Contrastive alignment loop: weighted edge draws, dual negatives, blended
/// hinge loss, AdamW updates, early stop on a held-out edge set.
/// Fully deterministic given config.seed.
TrainResult train(const ReactionGraph& graph, const EmbeddingTable& proteins,
                  const EmbeddingTable& molecules, const TrainConfig& config);

/// Batched loss / gradient evaluation over triplet pairs (mean over pairs).
struct PairBatchResult {
    double mean_loss = 0.0;
    std::vector<DenseLayer> p2u_grads;
    std::vector<DenseLayer> m2u_grads;
};

PairBatchResult evaluate_pair_batch(const ReactionGraph& graph, const EmbeddingTable& proteins,
                                    const EmbeddingTable& molecules, const ProjectionNet& p2u,
                                    const ProjectionNet& m2u, std::span<const TripletPair> pairs,
                                    const TrainConfig& config, bool with_gradients);

}  // namespace reactembed
