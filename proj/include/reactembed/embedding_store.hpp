#pragma once

#include "reactembed/entity.hpp"
#include "reactembed/reaction_graph.hpp"

#include <Eigen/Core>
#include <iosfwd>
#include <unordered_map>

namespace reactembed {

/// Frozen per-entity vectors for one domain, stored as rows of one matrix.
/// Immutable after construction; concurrent reads are safe. A missing id is
/// a detectable absence (find returns nullopt), never a default vector.
class EmbeddingTable {
public:
    EmbeddingTable(Domain domain, Eigen::Index dim) : domain_(domain), data_(0, dim) {}

    /// Validates uniform dimension, finiteness and id uniqueness; errors name
    /// the offending id.
    static EmbeddingTable from_rows(Domain domain, std::vector<std::string> ids,
                                    const std::vector<Eigen::VectorXd>& rows);

    Domain domain() const { return domain_; }
    Eigen::Index dim() const { return data_.cols(); }
    Eigen::Index size() const { return data_.rows(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id_at(Eigen::Index row) const { return ids_[static_cast<std::size_t>(row)]; }
    const Eigen::MatrixXd& matrix() const { return data_; }
    auto row(Eigen::Index i) const { return data_.row(i); }

    std::optional<Eigen::Index> find(std::string_view id) const;

private:
    Domain domain_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, Eigen::Index> index_;
    Eigen::MatrixXd data_;
};

/// Embedding TSV: `entity_id<TAB>v1<TAB>...<TAB>vD`, `#` comments allowed.
/// Dimension is inferred from the first row; every later row must match it.
EmbeddingTable load_embeddings(std::istream& in, Domain domain);

struct CoverageReport {
    std::size_t covered = 0;
    std::size_t missing = 0;
};

/// Counts graph nodes of the table's domain with and without vectors.
CoverageReport coverage(const EmbeddingTable& table, const ReactionGraph& graph);

}  // namespace reactembed
