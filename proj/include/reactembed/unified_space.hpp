#pragma once

#include "reactembed/checkpoint.hpp"
#include "reactembed/embedding_store.hpp"

#include <Eigen/Core>
#include <iosfwd>
#include <unordered_map>

namespace reactembed {

struct UnifiedEmbedding {
    EntityRef entity;
    Eigen::VectorXd vector;
};

/// Projects one raw vector through the net matching the entity's domain.
/// Works for entities never seen in any reaction; no graph involved.
UnifiedEmbedding embed_entity(const EntityRef& entity,
                              const Eigen::Ref<const Eigen::VectorXd>& raw_vector,
                              const Checkpoint& nets);

/// In-memory set of unified vectors, one row per entity.
struct UnifiedTable {
    std::vector<EntityRef> entities;
    Eigen::MatrixXd vectors;
    std::unordered_map<EntityRef, Eigen::Index, EntityRefHash> index;

    Eigen::Index dim() const { return vectors.cols(); }
    Eigen::Index size() const { return vectors.rows(); }
    std::optional<Eigen::Index> find(const EntityRef& e) const;
};

/// Projects every table entry of both domains, proteins first.
UnifiedTable make_unified_table(const EmbeddingTable& proteins, const EmbeddingTable& molecules,
                                const Checkpoint& nets);

struct ExportReport {
    std::size_t exported = 0;
    std::vector<EntityRef> missing;  // entities with no raw vector; reported, not dropped silently
};

/// Unified-embedding TSV: `entity_id<TAB>domain<TAB>v1<TAB>...<TAB>vDu` with a
/// leading `#` header line. Values round-trip bit-exactly through load_unified.
ExportReport export_unified(const std::vector<EntityRef>& entities, const EmbeddingTable& proteins,
                            const EmbeddingTable& molecules, const Checkpoint& nets,
                            std::ostream& out);
void write_unified(const UnifiedTable& table, std::ostream& out);
UnifiedTable load_unified(std::istream& in);

}  // namespace reactembed
