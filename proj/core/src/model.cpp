#include "ubergraph/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ubergraph {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_label: return "InvalidLabel";
        case ErrorCode::unknown_member: return "UnknownMember";
        case ErrorCode::empty_edge: return "EmptyEdge";
        case ErrorCode::duplicate_member: return "DuplicateMember";
        case ErrorCode::duplicate_label: return "DuplicateLabel";
        case ErrorCode::duplicate_edge_set: return "DuplicateEdgeSet";
        case ErrorCode::foundation_violation: return "FoundationViolation";
        case ErrorCode::undefined_in_cyclic_mode: return "UndefinedInCyclicMode";
        case ErrorCode::not_a_hypergraph: return "NotAHypergraph";
        case ErrorCode::unknown_id: return "UnknownId";
        case ErrorCode::syntax_error: return "SyntaxError";
        case ErrorCode::not_membership_closed: return "NotMembershipClosed";
        case ErrorCode::unknown_edge: return "UnknownEdge";
        case ErrorCode::unknown_vertex: return "UnknownVertex";
        case ErrorCode::not_a_dag: return "NotADag";
        case ErrorCode::not_a_vertex: return "NotAVertex";
        case ErrorCode::not_symmetric: return "NotSymmetric";
        case ErrorCode::no_convergence: return "NoConvergence";
        case ErrorCode::degenerate_distribution: return "DegenerateDistribution";
        case ErrorCode::negative_eigenvalue: return "NegativeEigenvalue";
        case ErrorCode::too_large: return "TooLarge";
    }
    return "UnknownError";
}

bool is_valid_label(std::string_view label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

Ubergraph Ubergraph::build(std::vector<std::string> vertex_labels,
                           std::vector<EdgeDef> edge_defs,
                           Mode mode) {
    Ubergraph u;
    u.mode_ = mode;
    u.vertex_labels_ = std::move(vertex_labels);

    // One namespace for vertex and edge labels.
    for (std::size_t i = 0; i < u.vertex_labels_.size(); ++i) {
        const std::string& label = u.vertex_labels_[i];
        if (!is_valid_label(label))
            throw UbergraphError(ErrorCode::invalid_label,
                                 "invalid vertex label '" + label + "'");
        auto [it, inserted] = u.index_.emplace(
            label, Node{NodeKind::vertex, static_cast<std::uint32_t>(i)});
        if (!inserted)
            throw UbergraphError(ErrorCode::duplicate_label,
                                 "label '" + label + "' declared twice");
    }
    u.edge_labels_.reserve(edge_defs.size());
    for (std::size_t j = 0; j < edge_defs.size(); ++j) {
        const std::string& label = edge_defs[j].label;
        if (!is_valid_label(label))
            throw UbergraphError(ErrorCode::invalid_label,
                                 "invalid edge label '" + label + "'");
        auto [it, inserted] = u.index_.emplace(
            label, Node{NodeKind::edge, static_cast<std::uint32_t>(j)});
        if (!inserted)
            throw UbergraphError(ErrorCode::duplicate_label,
                                 "label '" + label + "' declared twice");
        u.edge_labels_.push_back(label);
    }

    // Resolve members; forward references to later edges are fine.
    u.members_.resize(edge_defs.size());
    for (std::size_t j = 0; j < edge_defs.size(); ++j) {
        const EdgeDef& def = edge_defs[j];
        if (def.members.empty())
            throw UbergraphError(ErrorCode::empty_edge,
                                 "edge '" + def.label + "' has no members");
        std::vector<Node>& resolved = u.members_[j];
        resolved.reserve(def.members.size());
        for (const std::string& member : def.members) {
            auto it = u.index_.find(member);
            if (it == u.index_.end())
                throw UbergraphError(ErrorCode::unknown_member,
                                     "edge '" + def.label + "' references undeclared label '" +
                                         member + "'");
            resolved.push_back(it->second);
        }
        std::sort(resolved.begin(), resolved.end());
        auto dup = std::adjacent_find(resolved.begin(), resolved.end());
        if (dup != resolved.end())
            throw UbergraphError(ErrorCode::duplicate_member,
                                 "edge '" + def.label + "' lists member '" + u.label(*dup) +
                                     "' twice");
    }

    u.edge_is_member_.assign(u.edge_count(), false);
    for (const auto& members : u.members_)
        for (Node member : members)
            if (member.kind == NodeKind::edge) u.edge_is_member_[member.index] = true;

    if (mode == Mode::well_founded) {
        // E is a set of sets: no two edges may share a member set.
        std::map<std::vector<Node>, std::size_t> seen;
        for (std::size_t j = 0; j < u.edge_count(); ++j) {
            auto [it, inserted] = seen.emplace(u.members_[j], j);
            if (!inserted)
                throw UbergraphError(ErrorCode::duplicate_edge_set,
                                     "edges '" + u.edge_labels_[it->second] + "' and '" +
                                         u.edge_labels_[j] + "' have identical member sets");
        }

        // Kahn's algorithm on the edge-edge membership digraph. Vertices have
        // no members, so any membership cycle lies entirely among edges.
        const std::size_t m = u.edge_count();
        std::vector<std::size_t> pending(m, 0); // unresolved edge members of edge j
        std::vector<std::vector<std::size_t>> contained_in(m);
        for (std::size_t j = 0; j < m; ++j) {
            for (Node member : u.members_[j]) {
                if (member.kind == NodeKind::edge) {
                    ++pending[j];
                    contained_in[member.index].push_back(j);
                }
            }
        }
        std::vector<std::size_t> ready;
        for (std::size_t j = 0; j < m; ++j)
            if (pending[j] == 0) ready.push_back(j);

        u.levels_.assign(m, 0);
        std::size_t resolved_count = 0;
        while (!ready.empty()) {
            std::size_t j = ready.back();
            ready.pop_back();
            ++resolved_count;
            std::size_t lvl = 0;
            for (Node member : u.members_[j])
                if (member.kind == NodeKind::edge)
                    lvl = std::max(lvl, u.levels_[member.index] + 1);
            u.levels_[j] = lvl;
            for (std::size_t container : contained_in[j])
                if (--pending[container] == 0) ready.push_back(container);
        }
        if (resolved_count != m)
            throw UbergraphError(ErrorCode::foundation_violation,
                                 "membership digraph has a cycle");
        u.depth_ = 0;
        for (std::size_t lvl : u.levels_) u.depth_ = std::max(u.depth_, lvl);
    }

    return u;
}

const std::string& Ubergraph::label(Node node) const {
    if (node.kind == NodeKind::vertex) {
        if (node.index >= vertex_count())
            throw UbergraphError(ErrorCode::unknown_id, "vertex index out of range");
        return vertex_labels_[node.index];
    }
    if (node.index >= edge_count())
        throw UbergraphError(ErrorCode::unknown_id, "edge index out of range");
    return edge_labels_[node.index];
}

std::optional<Node> Ubergraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Node Ubergraph::node(std::string_view label) const {
    auto found = find(label);
    if (!found)
        throw UbergraphError(ErrorCode::unknown_id,
                             "no vertex or edge named '" + std::string(label) + "'");
    return *found;
}

std::vector<Node> Ubergraph::nodes() const {
    std::vector<Node> all;
    all.reserve(node_count());
    for (std::size_t i = 0; i < vertex_count(); ++i)
        all.push_back({NodeKind::vertex, static_cast<std::uint32_t>(i)});
    for (std::size_t j = 0; j < edge_count(); ++j)
        all.push_back({NodeKind::edge, static_cast<std::uint32_t>(j)});
    return all;
}

std::size_t Ubergraph::canonical_index(Node node) const noexcept {
    return node.kind == NodeKind::vertex ? node.index : vertex_count() + node.index;
}

Node Ubergraph::node_at(std::size_t canonical_index) const {
    if (canonical_index < vertex_count())
        return {NodeKind::vertex, static_cast<std::uint32_t>(canonical_index)};
    if (canonical_index < node_count())
        return {NodeKind::edge, static_cast<std::uint32_t>(canonical_index - vertex_count())};
    throw UbergraphError(ErrorCode::unknown_id, "canonical index out of range");
}

std::span<const Node> Ubergraph::members(std::size_t edge_index) const {
    if (edge_index >= edge_count())
        throw UbergraphError(ErrorCode::unknown_id, "edge index out of range");
    return members_[edge_index];
}

std::span<const Node> Ubergraph::members(Node edge_node) const {
    if (edge_node.kind != NodeKind::edge)
        throw UbergraphError(ErrorCode::unknown_id, "node is not an edge");
    return members(edge_node.index);
}

bool Ubergraph::is_vertex_node(Node node) const {
    if (node.kind == NodeKind::vertex) {
        if (node.index >= vertex_count())
            throw UbergraphError(ErrorCode::unknown_id, "vertex index out of range");
        return true;
    }
    if (node.index >= edge_count())
        throw UbergraphError(ErrorCode::unknown_id, "edge index out of range");
    return edge_is_member_[node.index];
}

std::size_t Ubergraph::level(std::size_t edge_index) const {
    if (mode_ != Mode::well_founded)
        throw UbergraphError(ErrorCode::undefined_in_cyclic_mode,
                             "nesting level is undefined in cyclic mode");
    if (edge_index >= edge_count())
        throw UbergraphError(ErrorCode::unknown_id, "edge index out of range");
    return levels_[edge_index];
}

std::size_t Ubergraph::depth() const {
    if (mode_ != Mode::well_founded)
        throw UbergraphError(ErrorCode::undefined_in_cyclic_mode,
                             "depth is undefined in cyclic mode");
    return depth_;
}

bool Ubergraph::is_simplicial_complex() const {
    if (depth() != 0)
        throw UbergraphError(ErrorCode::not_a_hypergraph,
                             "simplicial-complex test requires a depth-0 ubergraph");
    std::set<std::vector<Node>> edge_sets(members_.begin(), members_.end());
    for (const std::vector<Node>& members : members_) {
        const std::size_t k = members.size();
        if (k >= 63)
            throw UbergraphError(ErrorCode::too_large,
                                 "subset enumeration limited to edges with < 63 members");
        // Every nonempty proper subset must appear as an edge; the full set is
        // an edge by construction.
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << k); ++mask) {
            std::vector<Node> subset;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::uint64_t(1) << b)) subset.push_back(members[b]);
            if (!edge_sets.contains(subset)) return false;
        }
    }
    return true;
}

bool Ubergraph::operator==(const Ubergraph& other) const {
    return mode_ == other.mode_ && vertex_labels_ == other.vertex_labels_ &&
           edge_labels_ == other.edge_labels_ && members_ == other.members_;
}

} // namespace ubergraph
