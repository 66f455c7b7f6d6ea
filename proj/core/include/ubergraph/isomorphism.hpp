#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ubergraph/levi.hpp"
#include "ubergraph/model.hpp"

namespace ubergraph {

/// An isomorphism witness between two ubergraphs U and U2: a vertex bijection
/// plus the edge bijection it induces. When the witness came from the Levi
/// route, levi_map holds the full node bijection between the uber-Levi
/// digraphs; the direct search leaves it empty.
struct IsoWitness {
    std::vector<std::uint32_t> vertex_map; // vertex i of U -> vertex vertex_map[i] of U2
    std::vector<std::uint32_t> edge_map;   // edge j of U -> edge edge_map[j] of U2
    std::vector<std::size_t> levi_map;
};

/// Independent witness check: both maps bijective, and every edge's member set
/// is carried exactly onto the member set of its image.
bool verify_witness(const Ubergraph& u, const Ubergraph& v,
                    const std::vector<std::uint32_t>& vertex_map,
                    const std::vector<std::uint32_t>& edge_map);

/// Backtracking search over vertex bijections, pruned by per-vertex incidence
/// signatures; a candidate bijection is accepted when it extends to the edges
/// bottom-up by nesting level. Complete for any input it accepts. Requires
/// well-founded inputs (UndefinedInCyclicMode otherwise) and throws TooLarge
/// when either vertex count exceeds max_vertices.
std::optional<IsoWitness> is_isomorphic_direct(const Ubergraph& u, const Ubergraph& v,
                                               std::size_t max_vertices = 10);

/// Digraph isomorphism via backtracking, pruned by (in-degree, out-degree,
/// longest-path layer on DAGs). Returns the node bijection when one exists.
std::optional<std::vector<std::size_t>> is_levi_isomorphic(const Digraph& d, const Digraph& e);

/// Ubergraph isomorphism through the uber-Levi digraphs: two ubergraphs are
/// isomorphic exactly when their uber-Levi digraphs are. The node bijection is
/// restricted to the fundamental vertices (the in-degree-0 nodes) and verified
/// against the member-set definition before returning. In cyclic mode the Levi
/// formulation is taken as the definition itself.
std::optional<IsoWitness> is_isomorphic(const Ubergraph& u, const Ubergraph& v);

} // namespace ubergraph
