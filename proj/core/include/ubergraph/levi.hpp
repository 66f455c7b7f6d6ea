#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ubergraph/model.hpp"

namespace ubergraph {

/// A plain labeled digraph: nodes identified by position, arcs as sorted
/// out-adjacency without parallel arcs.
struct Digraph {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> out;

    std::size_t node_count() const noexcept { return labels.size(); }
    std::size_t arc_count() const;
    std::vector<std::size_t> in_degrees() const;
    std::vector<std::vector<std::size_t>> in_adjacency() const;
};

/// The uber-Levi digraph of an ubergraph: one node per fundamental vertex and
/// per edge (canonical order), an arc x -> y exactly when x is a member of y.
struct LeviDigraph {
    Digraph graph;
    std::vector<NodeKind> kinds;    // parallel to graph.labels
    std::size_t vertex_count = 0;   // first vertex_count nodes are vertices

    /// In-degree-0 nodes, ascending. For well-founded ubergraphs these are
    /// exactly the fundamental vertices.
    std::vector<std::size_t> roots() const;
};

LeviDigraph uber_levi(const Ubergraph& u);

bool is_dag(const Digraph& d);
inline bool is_dag(const LeviDigraph& d) { return is_dag(d.graph); }

/// Strict inclusion between edge member sets, with its Hasse reduction.
/// Pairs (i, j) mean edge i ⊂ edge j, by edge index; both lists sorted.
struct EdgeOrder {
    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_pairs;
};

/// Computed from member sets and cross-checked against strict in-neighborhood
/// inclusion in the uber-Levi digraph; the two routes must agree.
EdgeOrder edge_inclusion_order(const Ubergraph& u);

/// Reads an acyclic digraph back as a well-founded ubergraph: roots become
/// fundamental vertices, non-roots become edges whose member sets are their
/// in-neighborhoods. Non-roots whose member sets come out identical are
/// collapsed to one edge (quotient by set extensionality). Throws NotADag.
Ubergraph dag_to_ubergraph(const Digraph& d);

/// Deterministic DOT export: vertex nodes as circles, edge nodes as boxes,
/// statements in canonical order.
std::string to_dot(const LeviDigraph& d);

} // namespace ubergraph
