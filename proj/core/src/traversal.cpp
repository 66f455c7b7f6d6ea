#include "ubergraph/traversal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace ubergraph {

namespace {

// Edges containing each node, by canonical index, ascending.
std::vector<std::vector<std::size_t>> containing_edges(const Ubergraph& u) {
    std::vector<std::vector<std::size_t>> result(u.node_count());
    for (std::size_t j = 0; j < u.edge_count(); ++j)
        for (Node member : u.members(j)) result[u.canonical_index(member)].push_back(j);
    return result;
}

void require_path_node(const Ubergraph& u, Node x) {
    if (!u.is_vertex_node(x))
        throw UbergraphError(ErrorCode::not_a_vertex,
                             "'" + u.label(x) +
                                 "' is an edge contained in nothing; it is not in the path domain");
}

} // namespace

std::vector<std::uint32_t> v0(const Ubergraph& u, std::size_t edge_index) {
    if (edge_index >= u.edge_count())
        throw UbergraphError(ErrorCode::unknown_edge, "edge index out of range");
    std::vector<bool> vertex_seen(u.vertex_count(), false);
    std::vector<bool> edge_seen(u.edge_count(), false);
    std::vector<std::size_t> stack{edge_index};
    edge_seen[edge_index] = true;
    while (!stack.empty()) {
        std::size_t e = stack.back();
        stack.pop_back();
        for (Node member : u.members(e)) {
            if (member.kind == NodeKind::vertex) {
                vertex_seen[member.index] = true;
            } else if (!edge_seen[member.index]) {
                edge_seen[member.index] = true;
                stack.push_back(member.index);
            }
        }
    }
    std::vector<std::uint32_t> result;
    for (std::uint32_t i = 0; i < u.vertex_count(); ++i)
        if (vertex_seen[i]) result.push_back(i);
    return result;
}

std::vector<std::size_t> closure(const Ubergraph& u, std::vector<std::size_t> edge_indices) {
    std::vector<bool> included(u.edge_count(), false);
    std::vector<std::size_t> stack;
    for (std::size_t e : edge_indices) {
        if (e >= u.edge_count())
            throw UbergraphError(ErrorCode::unknown_edge, "edge index out of range");
        if (!included[e]) {
            included[e] = true;
            stack.push_back(e);
        }
    }
    while (!stack.empty()) {
        std::size_t e = stack.back();
        stack.pop_back();
        for (Node member : u.members(e)) {
            if (member.kind == NodeKind::edge && !included[member.index]) {
                included[member.index] = true;
                stack.push_back(member.index);
            }
        }
    }
    std::vector<std::size_t> result;
    for (std::size_t e = 0; e < u.edge_count(); ++e)
        if (included[e]) result.push_back(e);
    return result;
}

Ubergraph sububergraph(const Ubergraph& u, std::vector<std::size_t> edge_indices) {
    std::vector<bool> included(u.edge_count(), false);
    for (std::size_t e : edge_indices) {
        if (e >= u.edge_count())
            throw UbergraphError(ErrorCode::unknown_edge, "edge index out of range");
        included[e] = true;
    }
    std::string missing;
    for (std::size_t e = 0; e < u.edge_count(); ++e) {
        if (!included[e]) continue;
        for (Node member : u.members(e)) {
            if (member.kind == NodeKind::edge && !included[member.index]) {
                if (!missing.empty()) missing += ", ";
                missing += u.label(member);
            }
        }
    }
    if (!missing.empty())
        throw UbergraphError(ErrorCode::not_membership_closed,
                             "edge set is not membership-closed; missing: " + missing);

    std::vector<EdgeDef> defs;
    for (std::size_t e = 0; e < u.edge_count(); ++e) {
        if (!included[e]) continue;
        EdgeDef def;
        def.label = u.edge_labels()[e];
        for (Node member : u.members(e)) def.members.push_back(u.label(member));
        defs.push_back(std::move(def));
    }
    return Ubergraph::build(u.vertex_labels(), std::move(defs), u.mode());
}

Ubergraph induced_sububergraph(const Ubergraph& u, std::vector<std::uint32_t> vertex_indices) {
    std::vector<bool> kept_vertex(u.vertex_count(), false);
    for (std::uint32_t v : vertex_indices) {
        if (v >= u.vertex_count())
            throw UbergraphError(ErrorCode::unknown_vertex, "vertex index out of range");
        kept_vertex[v] = true;
    }
    std::vector<std::string> vertex_labels;
    for (std::size_t i = 0; i < u.vertex_count(); ++i)
        if (kept_vertex[i]) vertex_labels.push_back(u.vertex_labels()[i]);

    std::vector<EdgeDef> defs;
    for (std::size_t e = 0; e < u.edge_count(); ++e) {
        auto support = v0(u, e);
        bool inside = std::all_of(support.begin(), support.end(),
                                  [&](std::uint32_t v) { return kept_vertex[v]; });
        if (!inside) continue;
        EdgeDef def;
        def.label = u.edge_labels()[e];
        for (Node member : u.members(e)) def.members.push_back(u.label(member));
        defs.push_back(std::move(def));
    }
    return Ubergraph::build(std::move(vertex_labels), std::move(defs), u.mode());
}

std::size_t degree(const Ubergraph& u, Node x) {
    u.label(x); // range check
    std::size_t count = 0;
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        auto members = u.members(j);
        if (std::binary_search(members.begin(), members.end(), x)) ++count;
    }
    return count;
}

bool adjacent(const Ubergraph& u, Node x, Node y) {
    u.label(x);
    u.label(y);
    if (x == y) return false;
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        auto members = u.members(j);
        if (std::binary_search(members.begin(), members.end(), x) &&
            std::binary_search(members.begin(), members.end(), y))
            return true;
    }
    return false;
}

bool incident(const Ubergraph& u, std::size_t edge_e, std::size_t edge_f) {
    auto e = u.members(edge_e);
    auto f = u.members(edge_f);
    std::size_t i = 0, j = 0;
    while (i < e.size() && j < f.size()) {
        if (e[i] == f[j]) return true;
        if (e[i] < f[j])
            ++i;
        else
            ++j;
    }
    return false;
}

std::vector<Node> path_domain(const Ubergraph& u) {
    std::vector<Node> domain;
    for (Node node : u.nodes())
        if (u.is_vertex_node(node)) domain.push_back(node);
    return domain;
}

std::optional<Path> find_path(const Ubergraph& u, Node from, Node to) {
    require_path_node(u, from);
    require_path_node(u, to);
    if (from == to) return Path{{from}, {}};

    auto containers = containing_edges(u);
    const std::size_t size = u.node_count();
    std::vector<bool> visited(size, false);
    std::vector<Node> parent(size, Node{NodeKind::vertex, 0});
    std::vector<std::size_t> via_edge(size, SIZE_MAX);

    std::deque<Node> queue{from};
    visited[u.canonical_index(from)] = true;
    bool found = false;
    while (!queue.empty() && !found) {
        Node x = queue.front();
        queue.pop_front();
        for (std::size_t e : containers[u.canonical_index(x)]) {
            for (Node y : u.members(e)) {
                std::size_t yi = u.canonical_index(y);
                if (visited[yi]) continue;
                visited[yi] = true;
                parent[yi] = x;
                via_edge[yi] = e;
                if (y == to) {
                    found = true;
                    break;
                }
                queue.push_back(y);
            }
            if (found) break;
        }
    }
    if (!found) return std::nullopt;

    Path path;
    for (Node x = to;; x = parent[u.canonical_index(x)]) {
        path.nodes.push_back(x);
        std::size_t e = via_edge[u.canonical_index(x)];
        if (e == SIZE_MAX) break;
        path.edges.push_back(e);
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

std::vector<std::vector<Node>> components(const Ubergraph& u) {
    auto domain = path_domain(u);
    auto containers = containing_edges(u);
    std::vector<bool> visited(u.node_count(), false);
    std::vector<std::vector<Node>> blocks;
    for (Node start : domain) {
        if (visited[u.canonical_index(start)]) continue;
        std::vector<Node> block;
        std::vector<Node> stack{start};
        visited[u.canonical_index(start)] = true;
        while (!stack.empty()) {
            Node x = stack.back();
            stack.pop_back();
            block.push_back(x);
            for (std::size_t e : containers[u.canonical_index(x)]) {
                for (Node y : u.members(e)) {
                    std::size_t yi = u.canonical_index(y);
                    if (!visited[yi]) {
                        visited[yi] = true;
                        stack.push_back(y);
                    }
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

bool is_connected(const Ubergraph& u) { return components(u).size() <= 1; }

bool has_berge_cycle(const Ubergraph& u) {
    // Forest check on the bipartite membership graph: one side the path
    // domain, the other side one connector node per edge. A length-s cycle
    // corresponds exactly to a length-2s cycle here.
    const std::size_t size = u.node_count() + u.edge_count();
    std::vector<std::size_t> uf(size);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](std::size_t x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        std::size_t connector = u.node_count() + j;
        for (Node member : u.members(j)) {
            std::size_t a = find(u.canonical_index(member));
            std::size_t b = find(connector);
            if (a == b) return true;
            uf[a] = b;
        }
    }
    return false;
}

} // namespace ubergraph
