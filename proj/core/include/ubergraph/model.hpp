#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ubergraph/errors.hpp"

namespace ubergraph {

enum class Mode : std::uint8_t { well_founded, cyclic };

enum class NodeKind : std::uint8_t { vertex, edge };

/// A reference into an ubergraph's element domain V ∪ E: either a fundamental
/// vertex or an edge, identified by its position in the declaration order.
/// Ordering is the canonical index order (all vertices first, then all edges).
struct Node {
    NodeKind kind;
    std::uint32_t index;

    friend auto operator<=>(const Node&, const Node&) = default;
};

struct EdgeDef {
    std::string label;
    std::vector<std::string> members;
};

/// A validated recursive hypergraph: fundamental vertices plus edges whose
/// members are vertices or other edges. Immutable after build(); safe to share
/// across threads.
class Ubergraph {
public:
    /// Validates and constructs. Declaration order is preserved as the
    /// canonical index order used by every matrix and digraph derived later.
    /// Member sets are stored sorted by canonical node order.
    ///
    /// Throws UbergraphError with one of: InvalidLabel, DuplicateLabel,
    /// UnknownMember, EmptyEdge, DuplicateMember, and in well-founded mode
    /// DuplicateEdgeSet and FoundationViolation.
    static Ubergraph build(std::vector<std::string> vertex_labels,
                           std::vector<EdgeDef> edge_defs,
                           Mode mode = Mode::well_founded);

    Mode mode() const noexcept { return mode_; }
    std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_labels_.size(); }
    std::size_t node_count() const noexcept { return vertex_count() + edge_count(); }

    const std::vector<std::string>& vertex_labels() const noexcept { return vertex_labels_; }
    const std::vector<std::string>& edge_labels() const noexcept { return edge_labels_; }

    const std::string& label(Node node) const;

    /// Label lookup across the shared vertex/edge namespace.
    std::optional<Node> find(std::string_view label) const;

    /// Like find() but throws UnknownId when the label is not declared.
    Node node(std::string_view label) const;

    /// All nodes in canonical index order: vertices then edges.
    std::vector<Node> nodes() const;

    /// Position of a node in the canonical order (vertex i -> i, edge j -> n+j).
    std::size_t canonical_index(Node node) const noexcept;
    Node node_at(std::size_t canonical_index) const;

    /// Member set of an edge, sorted by canonical node order.
    std::span<const Node> members(std::size_t edge_index) const;
    std::span<const Node> members(Node edge_node) const;

    /// True iff the node occurs in V or in some member set; such nodes form
    /// the path domain ("vertices" in the wide sense). Edges that are members
    /// of nothing are not vertex nodes.
    bool is_vertex_node(Node node) const;

    /// Nesting level of one edge: 0 when all members are fundamental vertices,
    /// otherwise 1 + max level over member edges. Well-founded mode only.
    std::size_t level(std::size_t edge_index) const;

    /// Max nesting level over all edges; 0 for empty and trivial ubergraphs.
    /// Throws UndefinedInCyclicMode in cyclic mode.
    std::size_t depth() const;

    /// For depth-0 ubergraphs: true iff every nonempty subset of every edge's
    /// member set is also an edge. Throws NotAHypergraph when depth > 0.
    bool is_simplicial_complex() const;

    /// Structural equality: same mode, same labels in the same declaration
    /// order, same member sets.
    bool operator==(const Ubergraph& other) const;

private:
    Ubergraph() = default;

    Mode mode_ = Mode::well_founded;
    std::vector<std::string> vertex_labels_;
    std::vector<std::string> edge_labels_;
    std::vector<std::vector<Node>> members_;      // per edge, sorted canonically
    std::vector<std::size_t> levels_;             // per edge; well-founded only
    std::vector<bool> edge_is_member_;            // per edge: occurs in some member set
    std::size_t depth_ = 0;
    std::unordered_map<std::string, Node> index_; // label -> node
};

/// Whether a label is a valid identifier: nonempty, [A-Za-z0-9_]+.
bool is_valid_label(std::string_view label);

} // namespace ubergraph
