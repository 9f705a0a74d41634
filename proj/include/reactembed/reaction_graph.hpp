#pragma once

#include "reactembed/entity.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reactembed {

enum class EdgeType : std::uint8_t { PP, PM, MM };

EdgeType edge_type_of(Domain a, Domain b);
std::string_view edge_type_name(EdgeType t);

/// One undirected edge. `a` and `b` index into ReactionGraph::nodes(),
/// ordered so that node(a) < node(b) lexicographically.
struct GraphEdge {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint64_t weight = 0;
    EdgeType type = EdgeType::PP;
};

/// Weighted undirected co-occurrence graph over typed nodes.
/// Producers call finalize() once; after that the graph is immutable and
/// safe for unrestricted concurrent reads.
class ReactionGraph {
public:
    std::uint32_t get_or_add_node(const EntityRef& e);
    void accumulate_edge(std::uint32_t u, std::uint32_t v, std::uint64_t count = 1);
    void finalize();

    const std::vector<EntityRef>& nodes() const { return nodes_; }
    const EntityRef& node(std::uint32_t idx) const { return nodes_[idx]; }
    /// Canonical edge list (sorted by endpoint refs); valid after finalize().
    const std::vector<GraphEdge>& edges() const { return edges_; }

    std::optional<std::uint32_t> find_node(const EntityRef& e) const;
    bool adjacent(std::uint32_t u, std::uint32_t v) const;
    std::uint64_t total_weight() const;
    std::size_t edge_count(EdgeType t) const;
    std::size_t node_count(Domain d) const;
    std::vector<std::uint32_t> nodes_of_domain(Domain d) const;

    /// Value equality as node set + edge weight map; insertion order is irrelevant.
    friend bool operator==(const ReactionGraph& lhs, const ReactionGraph& rhs);

private:
    static std::uint64_t pair_key(std::uint32_t u, std::uint32_t v);

    std::vector<EntityRef> nodes_;
    std::unordered_map<EntityRef, std::uint32_t, EntityRefHash> index_;
    std::unordered_map<std::uint64_t, std::uint64_t> weights_;
    std::vector<GraphEdge> edges_;
};

/// Reads reaction TSV (`reaction_id<TAB>entity_id<TAB>domain`, domain P|M,
/// `#` comments). One record per distinct reaction_id, in first-appearance
/// order, with within-reaction duplicates collapsed.
std::vector<ReactionRecord> parse_reactions(std::istream& in);

/// Edge weight = number of reactions containing both endpoints; no self-pairs.
ReactionGraph build_graph(const std::vector<ReactionRecord>& reactions);

/// Keeps only cross-domain (PM) edges; node set shrinks to surviving endpoints.
ReactionGraph remove_intra_domain_edges(const ReactionGraph& g);

/// Uniform subset without replacement of size round(keep_fraction * n),
/// emitted in original order. Deterministic given the rng state.
std::vector<ReactionRecord> subsample_reactions(const std::vector<ReactionRecord>& reactions,
                                                double keep_fraction, std::mt19937_64& rng);

/// Snapshot TSV: `entity_a<TAB>domain_a<TAB>entity_b<TAB>domain_b<TAB>weight`,
/// one undirected edge per line, endpoints lexicographic, lines sorted.
void write_graph_snapshot(const ReactionGraph& g, std::ostream& out);
ReactionGraph read_graph_snapshot(std::istream& in);

/// Weighted edge sampling via an alias table built once per graph; O(1) draws.
class EdgeSampler {
public:
    explicit EdgeSampler(const ReactionGraph& g);
    /// Restricts sampling to the given edge ids (indices into g.edges()).
    EdgeSampler(const ReactionGraph& g, std::vector<std::size_t> edge_subset);

    /// One weighted draw; returns an index into the subset list.
    std::size_t sample_subset_index(std::mt19937_64& rng) const;
    std::size_t edge_id(std::size_t subset_index) const { return subset_[subset_index]; }
    /// Endpoints of a weighted draw in randomized order (either may serve as anchor).
    std::pair<std::uint32_t, std::uint32_t> sample_endpoints(std::mt19937_64& rng) const;
    std::pair<EntityRef, EntityRef> sample(std::mt19937_64& rng) const;

    std::size_t size() const { return subset_.size(); }

private:
    void build_alias(const std::vector<double>& weights);

    const ReactionGraph* graph_;
    std::vector<std::size_t> subset_;
    std::vector<double> accept_;
    std::vector<std::uint32_t> alias_;
};

}  // namespace reactembed
