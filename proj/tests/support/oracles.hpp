#pragma once

// Slow, independent reference implementations used only by tests:
//   - eigenvalues via the exact integer characteristic polynomial,
//   - isomorphism by trying every vertex bijection on nested set forms,
//   - minimal vertex support by intersecting all supporting subsets,
//   - a clause-by-clause path validator and an independent BFS distance.
// Everything here favors obvious correctness over speed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "ubergraph/model.hpp"
#include "ubergraph/traversal.hpp"

namespace testsupport {

using ubergraph::Node;
using ubergraph::NodeKind;
using ubergraph::Ubergraph;

// --- characteristic polynomial eigenvalue oracle ---------------------------

/// Coefficients c[0..n] of det(lambda*I - A), exact integers, via the
/// Faddeev-LeVerrier recurrence (all divisions are exact).
inline std::vector<__int128> charpoly(const std::vector<std::int64_t>& a, std::size_t n) {
    std::vector<__int128> m(n * n, 0), next(n * n);
    std::vector<__int128> c(n + 1, 0);
    c[n] = 1;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1; // M_0 = I
    __int128 ck = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A * (M_{k-1} + c_{n-k+1} I); the first step uses c_n = 1.
        if (k > 1)
            for (std::size_t i = 0; i < n; ++i) m[i * n + i] += ck;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                __int128 sum = 0;
                for (std::size_t l = 0; l < n; ++l) sum += __int128(a[i * n + l]) * m[l * n + j];
                next[i * n + j] = sum;
            }
        m = next;
        __int128 trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += m[i * n + i];
        ck = -trace / __int128(k);
        c[n - k] = ck;
    }
    return c;
}

namespace detail {

inline long double poly_eval(const std::vector<long double>& c, long double x) {
    long double value = 0;
    for (std::size_t i = c.size(); i-- > 0;) value = value * x + c[i];
    return value;
}

inline long double root_tolerance(const std::vector<long double>& c, long double x) {
    long double scale = 1;
    long double pw = 1;
    for (long double coef : c) {
        scale += std::abs(coef) * pw;
        pw *= std::abs(x) > 1 ? std::abs(x) : 1;
    }
    return 1e-11L * scale;
}

/// All roots (with multiplicity, ascending) of a polynomial known to have
/// only real roots, by recursing on the derivative: simple roots change sign
/// between consecutive critical points, multiple roots sit on critical points
/// where the polynomial itself (nearly) vanishes. Returns nullopt if the
/// expected root count cannot be certified.
inline std::optional<std::vector<long double>> all_real_roots(std::vector<long double> c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    std::size_t d = c.size() - 1;
    if (d == 0) return std::vector<long double>{};
    if (d == 1) return std::vector<long double>{-c[0] / c[1]};

    std::vector<long double> dc(d);
    for (std::size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * static_cast<long double>(i);
    auto crit = all_real_roots(std::move(dc));
    if (!crit) return std::nullopt;

    long double bound = 0;
    for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[i] / c[d]));
    bound += 1;

    // Cluster the critical points into distinct values with counts.
    std::vector<std::pair<long double, std::size_t>> distinct;
    for (long double x : *crit) {
        if (!distinct.empty() && std::abs(x - distinct.back().first) < 1e-9L)
            ++distinct.back().second;
        else
            distinct.emplace_back(x, 1);
    }

    std::vector<long double> roots;
    std::vector<long double> points{-bound};
    for (auto [x, count] : distinct) {
        if (std::abs(poly_eval(c, x)) <= root_tolerance(c, x))
            roots.insert(roots.end(), count + 1, x); // multiple root at a critical point
        points.push_back(x);
    }
    points.push_back(bound);

    auto effective_sign = [&](long double x) -> int {
        long double value = poly_eval(c, x);
        if (std::abs(value) <= root_tolerance(c, x)) return 0;
        return value > 0 ? 1 : -1;
    };
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        int lo_sign = effective_sign(points[i]);
        int hi_sign = effective_sign(points[i + 1]);
        if (lo_sign == 0 || hi_sign == 0 || lo_sign == hi_sign) continue;
        long double lo = points[i], hi = points[i + 1];
        for (int it = 0; it < 200; ++it) {
            long double mid = (lo + hi) / 2;
            long double value = poly_eval(c, mid);
            if ((value > 0 ? 1 : -1) == lo_sign)
                lo = mid;
            else
                hi = mid;
        }
        roots.push_back((lo + hi) / 2);
    }
    if (roots.size() != d) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace detail

/// Eigenvalues of a symmetric integer matrix, descending, via the exact
/// characteristic polynomial. Zero eigenvalues come out exactly (they are the
/// trailing zero coefficients); the rest by root isolation between critical
/// points. Returns nullopt only if root certification fails.
inline std::optional<std::vector<double>> oracle_eigenvalues(const std::vector<std::int64_t>& a,
                                                             std::size_t n) {
    std::vector<__int128> c = charpoly(a, n);
    std::size_t zeros = 0;
    while (zeros < n && c[zeros] == 0) ++zeros;

    std::vector<long double> reduced(c.size() - zeros);
    for (std::size_t i = 0; i < reduced.size(); ++i)
        reduced[i] = static_cast<long double>(c[i + zeros]);
    auto roots = detail::all_real_roots(std::move(reduced));
    if (!roots) return std::nullopt;

    std::vector<double> eigenvalues(roots->begin(), roots->end());
    eigenvalues.insert(eigenvalues.end(), zeros, 0.0);
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    return eigenvalues;
}

// --- all-bijections isomorphism oracle --------------------------------------

namespace detail {

/// Hereditarily finite set form of an edge, with vertices renamed through
/// perm; equal forms mean equal nested sets.
inline std::string edge_form(const Ubergraph& u, std::size_t j,
                             const std::vector<std::uint32_t>& perm) {
    std::vector<std::string> parts;
    for (Node member : u.members(j)) {
        if (member.kind == NodeKind::vertex)
            parts.push_back("v" + std::to_string(perm[member.index]));
        else
            parts.push_back(edge_form(u, member.index, perm));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out + "}";
}

inline std::vector<std::string> edge_forms(const Ubergraph& u,
                                           const std::vector<std::uint32_t>& perm) {
    std::vector<std::string> forms;
    for (std::size_t j = 0; j < u.edge_count(); ++j) forms.push_back(edge_form(u, j, perm));
    std::sort(forms.begin(), forms.end());
    return forms;
}

inline std::vector<std::uint32_t> identity_perm(std::size_t n) {
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
    return perm;
}

} // namespace detail

/// Tries every vertex bijection and compares the nested set forms of the two
/// edge sets. Well-founded inputs only; factorial in the vertex count.
inline bool oracle_is_isomorphic(const Ubergraph& u, const Ubergraph& v) {
    if (u.vertex_count() != v.vertex_count() || u.edge_count() != v.edge_count()) return false;
    std::vector<std::string> target = detail::edge_forms(v, detail::identity_perm(v.vertex_count()));
    std::vector<std::uint32_t> perm = detail::identity_perm(u.vertex_count());
    do {
        if (detail::edge_forms(u, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Complete isomorphism invariant for small well-founded ubergraphs: the
/// lexicographically least nested-form listing over all vertex renamings,
/// prefixed with the vertex count (isolated vertices leave no other trace).
inline std::string canonical_key(const Ubergraph& u) {
    std::string best;
    std::vector<std::uint32_t> perm = detail::identity_perm(u.vertex_count());
    do {
        std::vector<std::string> forms = detail::edge_forms(u, perm);
        std::string key;
        for (const std::string& form : forms) key += form + "|";
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return "n" + std::to_string(u.vertex_count()) + ":" + best;
}

// --- brute-force minimal vertex support -------------------------------------

namespace detail {

inline bool supports(const Ubergraph& u, std::size_t j, std::uint64_t vertex_mask) {
    for (Node member : u.members(j)) {
        if (member.kind == NodeKind::vertex) {
            if (!(vertex_mask >> member.index & 1)) return false;
        } else if (!supports(u, member.index, vertex_mask)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Intersection of every vertex subset S such that the edge can be written
/// over S alone. Sorted vertex indices; exponential in the vertex count.
inline std::vector<std::uint32_t> brute_v0(const Ubergraph& u, std::size_t edge_index) {
    std::uint64_t intersection = ~std::uint64_t{0};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.vertex_count()); ++mask)
        if (detail::supports(u, edge_index, mask)) intersection &= mask;
    std::vector<std::uint32_t> result;
    for (std::uint32_t i = 0; i < u.vertex_count(); ++i)
        if (intersection >> i & 1) result.push_back(i);
    return result;
}

// --- path validation and independent distances ------------------------------

/// Checks the alternating-sequence definition clause by clause: endpoints,
/// membership of consecutive nodes in the connecting edge, path-domain
/// membership, distinct edges, distinct nodes.
inline bool validate_path(const Ubergraph& u, const ubergraph::Path& path, Node from, Node to) {
    if (path.nodes.empty() || path.nodes.size() != path.edges.size() + 1) return false;
    if (path.nodes.front() != from || path.nodes.back() != to) return false;

    std::set<Node> domain;
    for (std::uint32_t i = 0; i < u.vertex_count(); ++i) domain.insert(Node{NodeKind::vertex, i});
    for (std::size_t j = 0; j < u.edge_count(); ++j)
        for (Node member : u.members(j)) domain.insert(member);
    for (Node node : path.nodes)
        if (!domain.count(node)) return false;

    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        auto members = u.members(path.edges[i]);
        auto has = [&](Node x) {
            return std::find(members.begin(), members.end(), x) != members.end();
        };
        if (!has(path.nodes[i]) || !has(path.nodes[i + 1])) return false;
    }
    std::set<std::size_t> edge_set(path.edges.begin(), path.edges.end());
    if (edge_set.size() != path.edges.size()) return false;
    std::set<Node> node_set(path.nodes.begin(), path.nodes.end());
    return node_set.size() == path.nodes.size();
}

/// Breadth-first distance over co-membership, built from scratch. nullopt
/// when unreachable.
inline std::optional<std::size_t> bfs_distance(const Ubergraph& u, Node from, Node to) {
    std::map<Node, std::vector<Node>> adjacency;
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        auto members = u.members(j);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b)
                if (a != b) adjacency[members[a]].push_back(members[b]);
    }
    std::map<Node, std::size_t> distance{{from, 0}};
    std::queue<Node> queue;
    queue.push(from);
    while (!queue.empty()) {
        Node at = queue.front();
        queue.pop();
        if (at == to) return distance[at];
        for (Node next : adjacency[at])
            if (!distance.count(next)) {
                distance[next] = distance[at] + 1;
                queue.push(next);
            }
    }
    return std::nullopt;
}

} // namespace testsupport
