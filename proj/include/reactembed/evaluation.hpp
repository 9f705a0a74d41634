#pragma once

#include "reactembed/entity.hpp"
#include "reactembed/projection_net.hpp"
#include "reactembed/unified_space.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace reactembed {

enum class TaskKind : std::uint8_t { Classification, Regression };
enum class Split : std::uint8_t { Train, Validation, Test };

struct LabeledItem {
    Eigen::VectorXd features;
    double label = 0.0;
    Split split = Split::Train;
    std::string name;
};

/// Frozen-feature dataset for linear probing. Pair tasks store the two
/// unified vectors concatenated, anchor order as given in the source file.
struct LabeledDataset {
    TaskKind task_kind = TaskKind::Classification;
    std::vector<LabeledItem> items;

    Eigen::Index feature_dim() const;
    std::size_t count(Split s) const;
};

/// One parsed line of a labeled dataset TSV.
struct LabeledRow {
    EntityRef a;
    std::optional<EntityRef> b;  // present for pair tasks
    Split split = Split::Train;
    double label = 0.0;
};

/// Labeled dataset TSV. Single-entity tasks:
///   `entity_id<TAB>domain<TAB>split<TAB>label`
/// pair tasks:
///   `entity_a<TAB>domain_a<TAB>entity_b<TAB>domain_b<TAB>split<TAB>label`
/// split in {train, valid, test}; `#` comments allowed. Column count must be
/// consistent across the file.
std::vector<LabeledRow> parse_labeled_rows(std::istream& in);

/// Resolves rows against unified vectors. task_kind nullopt = infer:
/// classification iff every label is 0 or 1.
LabeledDataset assemble_dataset(const std::vector<LabeledRow>& rows, const UnifiedTable& unified,
                                std::optional<TaskKind> task_kind = std::nullopt);

/// Single linear layer over the (possibly concatenated) input.
struct ProbeModel {
    TaskKind task_kind = TaskKind::Classification;
    Eigen::VectorXd weight;
    double bias = 0.0;
};

/// Raw linear output; the logit for classification tasks.
double probe_score(const ProbeModel& model, const Eigen::Ref<const Eigen::VectorXd>& features);
Eigen::VectorXd probe_scores(const ProbeModel& model, const LabeledDataset& dataset, Split split);

struct ProbeConfig {
    double learning_rate = 1e-3;
    std::int64_t batch_size = 256;
    std::int64_t patience = 10;
    std::int64_t max_epochs = 200;
    std::uint64_t seed = 0;
    double weight_decay = 0.0;
};

struct ProbeResult {
    ProbeModel model;
    double validation_metric = 0.0;  // AUC (classification) or RMSE (regression)
    std::int64_t epochs_run = 0;
};

/// Trains the linear probe with logistic cross-entropy or mean squared error,
/// AdamW updates, early stopping on the validation metric. Deterministic
/// given config.seed.
ProbeResult train_probe(const LabeledDataset& dataset, const ProbeConfig& config = {});

/// Probability that a random positive outranks a random negative, ties
/// counted half. Labels must be 0/1 with both classes present.
double auc(const Eigen::Ref<const Eigen::VectorXd>& scores,
           const Eigen::Ref<const Eigen::VectorXd>& labels);

double rmse(const Eigen::Ref<const Eigen::VectorXd>& predictions,
            const Eigen::Ref<const Eigen::VectorXd>& targets);

enum class KnnWeighting : std::uint8_t { Uniform, InverseDistance };

inline constexpr double kInverseDistanceEpsilon = 1e-12;

/// K-nearest-neighbour vote over Euclidean distance in the unified space.
/// InverseDistance weights are 1 / (d + 1e-12) so an exact duplicate of the
/// query dominates the vote.
class KnnClassifier {
public:
    KnnClassifier(Eigen::MatrixXd train_vectors, std::vector<int> labels, int k,
                  KnnWeighting weighting = KnnWeighting::InverseDistance);

    int k() const { return k_; }
    int n_classes() const { return n_classes_; }
    KnnWeighting weighting() const { return weighting_; }
    Eigen::Index train_size() const { return vectors_.rows(); }

    /// Per-class probabilities (sums to 1).
    Eigen::VectorXd predict_proba(const Eigen::Ref<const Eigen::VectorXd>& query) const;
    Eigen::MatrixXd predict_proba_rows(const Eigen::Ref<const Eigen::MatrixXd>& queries) const;
    int predict(const Eigen::Ref<const Eigen::VectorXd>& query) const;

private:
    Eigen::MatrixXd vectors_;
    std::vector<int> labels_;
    int k_;
    int n_classes_;
    KnnWeighting weighting_;
};

/// One-call form: rows of the result are per-query class probabilities.
Eigen::MatrixXd knn_zero_shot(const Eigen::Ref<const Eigen::MatrixXd>& train_vectors,
                              const std::vector<int>& train_labels,
                              const Eigen::Ref<const Eigen::MatrixXd>& queries, int k,
                              KnnWeighting weighting);

struct ScreenReport {
    struct Entry {
        std::string entity_id;
        double probability = 0.0;
    };
    std::vector<Entry> ranked;  // descending probability, ties by id
    double baseline_score = std::numeric_limits<double>::quiet_NaN();
    Eigen::VectorXd bin_edges;  // histogram over [0, 1]
    Eigen::VectorXi bin_counts;
};

/// Scores every candidate with the positive-class probability, ranks them and
/// bins the score distribution.
ScreenReport run_zero_shot_screen(const std::vector<std::string>& candidate_ids,
                                  const Eigen::Ref<const Eigen::MatrixXd>& candidates,
                                  const KnnClassifier& model,
                                  double baseline_score = std::numeric_limits<double>::quiet_NaN(),
                                  int positive_class = 1, int bins = 20);

}  // namespace reactembed
