#include "ubergraph/levi.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace ubergraph {

std::size_t Digraph::arc_count() const {
    std::size_t total = 0;
    for (const auto& targets : out) total += targets.size();
    return total;
}

std::vector<std::size_t> Digraph::in_degrees() const {
    std::vector<std::size_t> degrees(node_count(), 0);
    for (const auto& targets : out)
        for (std::size_t target : targets) ++degrees[target];
    return degrees;
}

std::vector<std::vector<std::size_t>> Digraph::in_adjacency() const {
    std::vector<std::vector<std::size_t>> in(node_count());
    for (std::size_t source = 0; source < out.size(); ++source)
        for (std::size_t target : out[source]) in[target].push_back(source);
    for (auto& sources : in) std::sort(sources.begin(), sources.end());
    return in;
}

std::vector<std::size_t> LeviDigraph::roots() const {
    std::vector<std::size_t> result;
    auto degrees = graph.in_degrees();
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (degrees[i] == 0) result.push_back(i);
    return result;
}

LeviDigraph uber_levi(const Ubergraph& u) {
    LeviDigraph d;
    d.vertex_count = u.vertex_count();
    d.graph.labels.reserve(u.node_count());
    d.kinds.reserve(u.node_count());
    for (Node node : u.nodes()) {
        d.graph.labels.push_back(u.label(node));
        d.kinds.push_back(node.kind);
    }
    d.graph.out.resize(u.node_count());
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        std::size_t target = u.vertex_count() + j;
        for (Node member : u.members(j))
            d.graph.out[u.canonical_index(member)].push_back(target);
    }
    for (auto& targets : d.graph.out) std::sort(targets.begin(), targets.end());
    return d;
}

bool is_dag(const Digraph& d) {
    std::vector<std::size_t> pending = d.in_degrees();
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < pending.size(); ++i)
        if (pending[i] == 0) ready.push_back(i);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::size_t node = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t target : d.out[node])
            if (--pending[target] == 0) ready.push_back(target);
    }
    return seen == d.node_count();
}

EdgeOrder edge_inclusion_order(const Ubergraph& u) {
    const std::size_t m = u.edge_count();

    auto strictly_included = [](std::span<const Node> small, std::span<const Node> big) {
        return small.size() < big.size() &&
               std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    EdgeOrder order;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && strictly_included(u.members(i), u.members(j)))
                order.strict_pairs.emplace_back(i, j);

    // Same order read from the uber-Levi digraph: N^-(e_i) ⊂ N^-(e_j).
    LeviDigraph levi = uber_levi(u);
    auto in = levi.graph.in_adjacency();
    std::vector<std::pair<std::size_t, std::size_t>> from_levi;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& ni = in[u.vertex_count() + i];
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto& nj = in[u.vertex_count() + j];
            if (ni.size() < nj.size() &&
                std::includes(nj.begin(), nj.end(), ni.begin(), ni.end()))
                from_levi.emplace_back(i, j);
        }
    }
    if (order.strict_pairs != from_levi)
        throw std::logic_error("member-set inclusion disagrees with Levi in-neighborhoods");

    // Hasse reduction: drop pairs witnessed by an intermediate edge.
    std::vector included(m, std::vector<bool>(m, false));
    for (auto [i, j] : order.strict_pairs) included[i][j] = true;
    for (auto [i, j] : order.strict_pairs) {
        bool transitive = false;
        for (std::size_t k = 0; k < m && !transitive; ++k)
            transitive = included[i][k] && included[k][j];
        if (!transitive) order.hasse_pairs.emplace_back(i, j);
    }
    return order;
}

Ubergraph dag_to_ubergraph(const Digraph& d) {
    const std::size_t size = d.node_count();
    auto in = d.in_adjacency();

    // Deterministic Kahn order: smallest ready node first.
    std::vector<std::size_t> pending = d.in_degrees();
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < size; ++i)
        if (pending[i] == 0) ready.push(i);
    std::vector<std::size_t> topo;
    topo.reserve(size);
    while (!ready.empty()) {
        std::size_t node = ready.top();
        ready.pop();
        topo.push_back(node);
        for (std::size_t target : d.out[node])
            if (--pending[target] == 0) ready.push(target);
    }
    if (topo.size() != size)
        throw UbergraphError(ErrorCode::not_a_dag, "digraph has a directed cycle");

    // Roots become fundamental vertices.
    auto degrees = d.in_degrees();
    std::vector<std::string> vertex_labels;
    std::vector<std::size_t> vertex_of(size, SIZE_MAX);
    for (std::size_t i = 0; i < size; ++i) {
        if (degrees[i] == 0) {
            vertex_of[i] = vertex_labels.size();
            vertex_labels.push_back(d.labels[i]);
        }
    }

    // Non-roots become edges keyed by their member sets; identical sets
    // collapse to one edge. Keys are built bottom-up in topological order so
    // the collapse propagates through nesting.
    struct Class {
        std::vector<std::pair<NodeKind, std::size_t>> key; // sorted member key
        std::size_t min_input_index;
    };
    std::map<std::vector<std::pair<NodeKind, std::size_t>>, std::size_t> interned;
    std::vector<Class> classes;
    std::vector<std::size_t> class_of(size, SIZE_MAX);

    for (std::size_t node : topo) {
        if (degrees[node] == 0) continue;
        std::vector<std::pair<NodeKind, std::size_t>> key;
        key.reserve(in[node].size());
        for (std::size_t source : in[node]) {
            if (vertex_of[source] != SIZE_MAX)
                key.emplace_back(NodeKind::vertex, vertex_of[source]);
            else
                key.emplace_back(NodeKind::edge, class_of[source]);
        }
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        auto [it, inserted] = interned.emplace(key, classes.size());
        if (inserted) {
            classes.push_back({std::move(key), node});
        } else {
            classes[it->second].min_input_index =
                std::min(classes[it->second].min_input_index, node);
        }
        class_of[node] = it->second;
    }

    // Declare edges by the input order of each class representative.
    std::vector<std::size_t> class_order(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) class_order[c] = c;
    std::sort(class_order.begin(), class_order.end(), [&](std::size_t a, std::size_t b) {
        return classes[a].min_input_index < classes[b].min_input_index;
    });

    std::vector<std::string> class_label(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        class_label[c] = d.labels[classes[c].min_input_index];

    std::vector<EdgeDef> edge_defs;
    edge_defs.reserve(classes.size());
    for (std::size_t c : class_order) {
        EdgeDef def;
        def.label = class_label[c];
        for (auto [kind, index] : classes[c].key)
            def.members.push_back(kind == NodeKind::vertex ? vertex_labels[index]
                                                           : class_label[index]);
        edge_defs.push_back(std::move(def));
    }

    return Ubergraph::build(std::move(vertex_labels), std::move(edge_defs),
                            Mode::well_founded);
}

std::string to_dot(const LeviDigraph& d) {
    std::string out = "digraph uberlevi {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < d.graph.node_count(); ++i) {
        out += "  \"" + d.graph.labels[i] + "\" [shape=" +
               (d.kinds[i] == NodeKind::vertex ? "circle" : "box") + "];\n";
    }
    for (std::size_t i = 0; i < d.graph.node_count(); ++i)
        for (std::size_t target : d.graph.out[i])
            out += "  \"" + d.graph.labels[i] + "\" -> \"" + d.graph.labels[target] + "\";\n";
    out += "}\n";
    return out;
}

} // namespace ubergraph
