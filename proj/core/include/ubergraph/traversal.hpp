#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ubergraph/model.hpp"

namespace ubergraph {

/// The minimal set of fundamental vertices supporting an edge: every vertex
/// reachable from it by repeatedly expanding edge members. Sorted vertex
/// indices.
std::vector<std::uint32_t> v0(const Ubergraph& u, std::size_t edge_index);

/// Membership closure of a set of edges: the given edges plus every edge
/// reachable through edge members. Sorted edge indices.
std::vector<std::size_t> closure(const Ubergraph& u, std::vector<std::size_t> edge_indices);

/// The sububergraph (V, E'). E' must be membership-closed; throws
/// NotMembershipClosed naming the missing edges, or UnknownEdge.
Ubergraph sububergraph(const Ubergraph& u, std::vector<std::size_t> edge_indices);

/// The induced sububergraph U[V']: vertex set V', edges whose v0 lies inside
/// V'. The kept edge set is membership-closed by construction. Throws
/// UnknownVertex.
Ubergraph induced_sububergraph(const Ubergraph& u, std::vector<std::uint32_t> vertex_indices);

/// Number of edges containing x.
std::size_t degree(const Ubergraph& u, Node x);

/// True iff some edge contains both x and y. False when x == y, matching the
/// adjacency matrix's zero diagonal.
bool adjacent(const Ubergraph& u, Node x, Node y);

/// True iff the member sets of the two edges intersect.
bool incident(const Ubergraph& u, std::size_t edge_e, std::size_t edge_f);

/// The path domain: V plus every edge that occurs in some member set, in
/// canonical order. These are the elements paths can visit; edges contained
/// in nothing can only appear as path connectors.
std::vector<Node> path_domain(const Ubergraph& u);

/// Alternating sequence x_1, e_1, x_2, ..., e_s, x_{s+1} with x_i, x_{i+1}
/// co-members of e_i, distinct edges, distinct nodes (except a cycle's ends).
struct Path {
    std::vector<Node> nodes;
    std::vector<std::size_t> edges;

    std::size_t length() const noexcept { return edges.size(); }
};

/// Shortest path between two path-domain nodes via breadth-first search on
/// the co-membership relation; witness edges take the smallest edge index.
/// find_path(x, x) is the length-0 path. Throws NotAVertex when an endpoint
/// is outside the path domain.
std::optional<Path> find_path(const Ubergraph& u, Node from, Node to);

/// Partition of the path domain into co-membership components. Blocks are
/// ordered by their smallest member, members in canonical order.
std::vector<std::vector<Node>> components(const Ubergraph& u);

bool is_connected(const Ubergraph& u);

/// True iff some cycle (closed path of length >= 2) exists. Equivalent to the
/// bipartite membership graph (path-domain nodes one side, edges the other)
/// containing a cycle.
bool has_berge_cycle(const Ubergraph& u);

} // namespace ubergraph
