#include "ubergraph/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ubergraph {

namespace {

constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);

Node map_node(Node node, const std::vector<std::uint32_t>& vertex_map,
              const std::vector<std::uint32_t>& edge_map) {
    std::uint32_t image =
        node.kind == NodeKind::vertex ? vertex_map[node.index] : edge_map[node.index];
    return Node{node.kind, image};
}

bool is_bijection(const std::vector<std::uint32_t>& map, std::size_t codomain) {
    std::vector<bool> hit(codomain, false);
    for (std::uint32_t image : map) {
        if (image >= codomain || hit[image]) return false;
        hit[image] = true;
    }
    return map.size() == codomain;
}

/// Given a vertex bijection, the edge bijection it induces is forced: working
/// up the nesting levels, each edge's mapped member set must be the member set
/// of exactly one edge on the other side. Returns Absent when some edge's
/// image is not an edge there. Well-founded inputs only.
std::optional<std::vector<std::uint32_t>> induced_edge_map(
    const Ubergraph& u, const Ubergraph& v, const std::vector<std::uint32_t>& vertex_map) {
    std::map<std::vector<Node>, std::uint32_t> lookup;
    for (std::size_t j = 0; j < v.edge_count(); ++j) {
        auto span = v.members(j);
        lookup.emplace(std::vector<Node>(span.begin(), span.end()),
                       static_cast<std::uint32_t>(j));
    }

    std::vector<std::size_t> by_level(u.edge_count());
    std::iota(by_level.begin(), by_level.end(), std::size_t{0});
    std::stable_sort(by_level.begin(), by_level.end(),
                     [&](std::size_t a, std::size_t b) { return u.level(a) < u.level(b); });

    std::vector<std::uint32_t> edge_map(u.edge_count(), kUnassigned);
    std::vector<bool> used(v.edge_count(), false);
    for (std::size_t j : by_level) {
        std::vector<Node> image;
        image.reserve(u.members(j).size());
        for (Node member : u.members(j)) image.push_back(map_node(member, vertex_map, edge_map));
        std::sort(image.begin(), image.end());
        auto it = lookup.find(image);
        if (it == lookup.end() || used[it->second]) return std::nullopt;
        used[it->second] = true;
        edge_map[j] = it->second;
    }
    return edge_map;
}

/// Per-vertex pruning signature: the sorted (nesting level, member count)
/// profile of the edges the vertex sits in directly. Isomorphism-invariant.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> vertex_signatures(
    const Ubergraph& u) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sigs(u.vertex_count());
    for (std::size_t j = 0; j < u.edge_count(); ++j)
        for (Node member : u.members(j))
            if (member.kind == NodeKind::vertex)
                sigs[member.index].emplace_back(u.level(j), u.members(j).size());
    for (auto& sig : sigs) std::sort(sig.begin(), sig.end());
    return sigs;
}

} // namespace

bool verify_witness(const Ubergraph& u, const Ubergraph& v,
                    const std::vector<std::uint32_t>& vertex_map,
                    const std::vector<std::uint32_t>& edge_map) {
    if (vertex_map.size() != u.vertex_count() || u.vertex_count() != v.vertex_count())
        return false;
    if (edge_map.size() != u.edge_count() || u.edge_count() != v.edge_count()) return false;
    if (!is_bijection(vertex_map, v.vertex_count())) return false;
    if (!is_bijection(edge_map, v.edge_count())) return false;
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        std::vector<Node> image;
        image.reserve(u.members(j).size());
        for (Node member : u.members(j)) image.push_back(map_node(member, vertex_map, edge_map));
        std::sort(image.begin(), image.end());
        auto expected = v.members(edge_map[j]);
        if (!std::equal(image.begin(), image.end(), expected.begin(), expected.end()))
            return false;
    }
    return true;
}

std::optional<IsoWitness> is_isomorphic_direct(const Ubergraph& u, const Ubergraph& v,
                                               std::size_t max_vertices) {
    if (u.mode() != Mode::well_founded || v.mode() != Mode::well_founded)
        throw UbergraphError(ErrorCode::undefined_in_cyclic_mode,
                             "direct isomorphism search requires well-founded inputs; "
                             "use is_isomorphic for cyclic ones");
    if (u.vertex_count() > max_vertices || v.vertex_count() > max_vertices)
        throw UbergraphError(ErrorCode::too_large,
                             "direct isomorphism search is limited to " +
                                 std::to_string(max_vertices) + " vertices");

    if (u.vertex_count() != v.vertex_count() || u.edge_count() != v.edge_count())
        return std::nullopt;
    if (u.depth() != v.depth()) return std::nullopt;

    auto edge_profile = [](const Ubergraph& g) {
        std::vector<std::pair<std::size_t, std::size_t>> profile;
        profile.reserve(g.edge_count());
        for (std::size_t j = 0; j < g.edge_count(); ++j)
            profile.emplace_back(g.level(j), g.members(j).size());
        std::sort(profile.begin(), profile.end());
        return profile;
    };
    if (edge_profile(u) != edge_profile(v)) return std::nullopt;

    auto sig_u = vertex_signatures(u);
    auto sig_v = vertex_signatures(v);
    {
        auto sorted_u = sig_u;
        auto sorted_v = sig_v;
        std::sort(sorted_u.begin(), sorted_u.end());
        std::sort(sorted_v.begin(), sorted_v.end());
        if (sorted_u != sorted_v) return std::nullopt;
    }

    std::size_t n = u.vertex_count();
    std::vector<std::uint32_t> vertex_map(n, kUnassigned);
    std::vector<bool> used(n, false);
    std::optional<std::vector<std::uint32_t>> edge_map;

    auto search = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == n) {
            edge_map = induced_edge_map(u, v, vertex_map);
            return edge_map.has_value();
        }
        for (std::uint32_t candidate = 0; candidate < n; ++candidate) {
            if (used[candidate] || sig_v[candidate] != sig_u[pos]) continue;
            vertex_map[pos] = candidate;
            used[candidate] = true;
            if (self(self, pos + 1)) return true;
            used[candidate] = false;
        }
        vertex_map[pos] = kUnassigned;
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    IsoWitness witness{std::move(vertex_map), std::move(*edge_map), {}};
    if (!verify_witness(u, v, witness.vertex_map, witness.edge_map))
        throw std::logic_error("isomorphism search produced a witness that fails verification");
    return witness;
}

std::optional<std::vector<std::size_t>> is_levi_isomorphic(const Digraph& d, const Digraph& e) {
    std::size_t n = d.node_count();
    if (n != e.node_count() || d.arc_count() != e.arc_count()) return std::nullopt;
    bool d_acyclic = is_dag(d);
    if (d_acyclic != is_dag(e)) return std::nullopt;

    // Longest-path layer from the sources; defined (and used for pruning)
    // only when the digraph is acyclic.
    auto layers = [&](const Digraph& g) -> std::vector<std::size_t> {
        std::vector<std::size_t> layer(g.node_count(), 0);
        if (!d_acyclic) return layer;
        std::vector<std::size_t> in_deg = g.in_degrees();
        std::vector<std::size_t> queue;
        for (std::size_t i = 0; i < g.node_count(); ++i)
            if (in_deg[i] == 0) queue.push_back(i);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t x = queue[head];
            for (std::size_t y : g.out[x]) {
                layer[y] = std::max(layer[y], layer[x] + 1);
                if (--in_deg[y] == 0) queue.push_back(y);
            }
        }
        return layer;
    };

    using NodeSig = std::tuple<std::size_t, std::size_t, std::size_t>;
    auto signatures = [&](const Digraph& g) {
        std::vector<std::size_t> in_deg = g.in_degrees();
        std::vector<std::size_t> layer = layers(g);
        std::vector<NodeSig> sigs(g.node_count());
        for (std::size_t i = 0; i < g.node_count(); ++i)
            sigs[i] = {in_deg[i], g.out[i].size(), layer[i]};
        return sigs;
    };
    std::vector<NodeSig> sig_d = signatures(d);
    std::vector<NodeSig> sig_e = signatures(e);
    {
        auto sorted_d = sig_d;
        auto sorted_e = sig_e;
        std::sort(sorted_d.begin(), sorted_d.end());
        std::sort(sorted_e.begin(), sorted_e.end());
        if (sorted_d != sorted_e) return std::nullopt;
    }

    auto adjacency = [](const Digraph& g) {
        std::vector<std::vector<bool>> adj(g.node_count(),
                                           std::vector<bool>(g.node_count(), false));
        for (std::size_t x = 0; x < g.node_count(); ++x)
            for (std::size_t y : g.out[x]) adj[x][y] = true;
        return adj;
    };
    std::vector<std::vector<bool>> adj_d = adjacency(d);
    std::vector<std::vector<bool>> adj_e = adjacency(e);

    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (sig_d[x] == sig_e[y]) candidates[x].push_back(y);

    // Most-constrained nodes first keeps the branching factor down.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return candidates[a].size() < candidates[b].size();
    });

    constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);
    std::vector<std::size_t> mapping(n, kUnmapped);
    std::vector<bool> used(n, false);

    auto search = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == n) return true;
        std::size_t x = order[pos];
        for (std::size_t y : candidates[x]) {
            if (used[y]) continue;
            bool consistent = adj_d[x][x] == adj_e[y][y]; // self-loops must correspond
            for (std::size_t k = 0; k < pos && consistent; ++k) {
                std::size_t w = order[k];
                consistent = adj_d[x][w] == adj_e[y][mapping[w]] &&
                             adj_d[w][x] == adj_e[mapping[w]][y];
            }
            if (!consistent) continue;
            mapping[x] = y;
            used[y] = true;
            if (self(self, pos + 1)) return true;
            mapping[x] = kUnmapped;
            used[y] = false;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return mapping;
}

std::optional<IsoWitness> is_isomorphic(const Ubergraph& u, const Ubergraph& v) {
    if (u.mode() != v.mode()) return std::nullopt;
    if (u.vertex_count() != v.vertex_count() || u.edge_count() != v.edge_count())
        return std::nullopt;

    LeviDigraph levi_u = uber_levi(u);
    LeviDigraph levi_v = uber_levi(v);
    auto psi = is_levi_isomorphic(levi_u.graph, levi_v.graph);
    if (!psi) return std::nullopt;

    // Empty edges are rejected at build time, so the in-degree-0 nodes are
    // exactly the fundamental vertices and the bijection cannot mix kinds.
    std::size_t n = u.vertex_count();
    IsoWitness witness;
    witness.vertex_map.resize(n);
    witness.levi_map = *psi;
    for (std::size_t i = 0; i < n; ++i) {
        if ((*psi)[i] >= n)
            throw std::logic_error("uber-Levi bijection mapped a vertex to an edge node");
        witness.vertex_map[i] = static_cast<std::uint32_t>((*psi)[i]);
    }

    if (u.mode() == Mode::well_founded) {
        // Check the member-set definition directly on the restricted map: the
        // vertex bijection alone must extend over the edges.
        auto edge_map = induced_edge_map(u, v, witness.vertex_map);
        if (!edge_map)
            throw std::logic_error(
                "uber-Levi bijection restricted to vertices fails direct verification");
        witness.edge_map = std::move(*edge_map);
    } else {
        witness.edge_map.resize(u.edge_count());
        for (std::size_t j = 0; j < u.edge_count(); ++j)
            witness.edge_map[j] = static_cast<std::uint32_t>((*psi)[n + j] - n);
    }
    if (!verify_witness(u, v, witness.vertex_map, witness.edge_map))
        throw std::logic_error("uber-Levi isomorphism witness fails member-set verification");
    return witness;
}

} // namespace ubergraph
