// ugt: command-line front end for the ubergraph library.
//
// One subcommand per analysis; every command reads a UGT file, prints a
// deterministic text report to stdout, and exits 0. Validation and analysis
// errors exit 1 with a one-line diagnostic naming the error case; usage
// errors exit 2.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ubergraph/format.hpp"
#include "ubergraph/isomorphism.hpp"
#include "ubergraph/levi.hpp"
#include "ubergraph/matrix.hpp"
#include "ubergraph/spectral.hpp"
#include "ubergraph/traversal.hpp"

namespace {

using namespace ubergraph;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Ubergraph load(const std::string& path) { return parse(read_file(path)); }

// Deterministic short form for doubles: enough digits to be useful, no
// trailing zero noise, no negative zero.
std::string fmt(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.9g", x);
    std::string s = buffer;
    return s == "-0" ? "0" : s;
}

std::uint32_t vertex_index(const Ubergraph& u, const std::string& label) {
    auto node = u.find(label);
    if (!node || node->kind != NodeKind::vertex)
        throw UbergraphError(ErrorCode::unknown_vertex, "no vertex labeled '" + label + "'");
    return node->index;
}

std::size_t edge_index(const Ubergraph& u, const std::string& label) {
    auto node = u.find(label);
    if (!node || node->kind != NodeKind::edge)
        throw UbergraphError(ErrorCode::unknown_edge, "no edge labeled '" + label + "'");
    return node->index;
}

void run_validate(const std::string& file) {
    Ubergraph u = load(file);
    std::cout << "valid: " << u.vertex_count() << " vertices, " << u.edge_count()
              << " edges\n";
}

void run_stats(const std::string& file) {
    Ubergraph u = load(file);
    std::cout << "mode: " << (u.mode() == Mode::cyclic ? "cyclic" : "well-founded") << '\n';
    std::cout << "vertices: " << u.vertex_count() << '\n';
    std::cout << "edges: " << u.edge_count() << '\n';
    if (u.mode() == Mode::well_founded)
        std::cout << "depth: " << u.depth() << '\n';
    else
        std::cout << "depth: n/a (cyclic mode)\n";
    std::cout << "connected: " << (is_connected(u) ? "yes" : "no") << '\n';
    std::cout << "components: " << components(u).size() << '\n';
    if (u.node_count() > 0)
        std::cout << "degrees:\n" << render_plain(degree_vector(incidence_matrix(u)));
}

void run_matrix(const std::string& file, bool csv,
                LabeledMatrix (*compute)(const Ubergraph&)) {
    Ubergraph u = load(file);
    LabeledMatrix m = compute(u);
    std::cout << (csv ? render_csv(m) : render_plain(m));
}

void run_entropy(const std::string& file) {
    Ubergraph u = load(file);
    SpectralReport report = spectral_report(u);
    std::cout << "eigenvalues:";
    for (double lambda : report.eigenvalues) std::cout << ' ' << fmt(lambda);
    std::cout << '\n';
    std::cout << "trace: " << report.trace << '\n';
    std::cout << "mu:";
    for (double p : report.mu) std::cout << ' ' << fmt(p);
    std::cout << '\n';
    std::cout << "entropy: " << fmt(report.entropy_bits) << " bits\n";
}

void run_levi(const std::string& file, const std::string& dot_path) {
    Ubergraph u = load(file);
    LeviDigraph levi = uber_levi(u);
    std::size_t nodes = levi.graph.node_count();
    std::cout << "nodes: " << nodes << " (" << levi.vertex_count << " vertices, "
              << nodes - levi.vertex_count << " edges)\n";
    std::cout << "arcs: " << levi.graph.arc_count() << '\n';
    std::cout << "dag: " << (is_dag(levi) ? "yes" : "no") << '\n';
    std::vector<std::size_t> roots = levi.roots();
    if (roots.empty()) {
        std::cout << "roots: (none)\n";
    } else {
        std::cout << "roots:";
        for (std::size_t r : roots) std::cout << ' ' << levi.graph.labels[r];
        std::cout << '\n';
    }
    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + dot_path);
        out << to_dot(levi);
        std::cout << "dot written to " << dot_path << '\n';
    }
}

void run_order(const std::string& file) {
    Ubergraph u = load(file);
    if (u.edge_count() == 0) {
        std::cout << "(no edges)\n";
        return;
    }
    EdgeOrder order = edge_inclusion_order(u);

    std::vector<bool> comparable(u.edge_count(), false);
    for (auto [a, b] : order.strict_pairs) comparable[a] = comparable[b] = true;

    // Cover the Hasse diagram by greedy maximal chains, smallest edge index
    // first, then list the edges comparable to nothing.
    std::set<std::pair<std::size_t, std::size_t>> uncovered(order.hasse_pairs.begin(),
                                                            order.hasse_pairs.end());
    std::vector<std::string> segments;
    while (!uncovered.empty()) {
        std::size_t at = uncovered.begin()->first;
        std::string chain = u.edge_labels()[at];
        for (;;) {
            auto next = uncovered.lower_bound({at, 0});
            if (next == uncovered.end() || next->first != at) break;
            at = next->second;
            uncovered.erase(next);
            chain += " < " + u.edge_labels()[at];
        }
        segments.push_back(std::move(chain));
    }
    for (std::size_t j = 0; j < u.edge_count(); ++j)
        if (!comparable[j]) segments.push_back(u.edge_labels()[j] + " incomparable");

    for (std::size_t i = 0; i < segments.size(); ++i)
        std::cout << (i ? "; " : "") << segments[i];
    std::cout << '\n';

    if (order.hasse_pairs.empty()) {
        std::cout << "hasse: (none)\n";
    } else {
        std::cout << "hasse:";
        for (std::size_t i = 0; i < order.hasse_pairs.size(); ++i) {
            auto [a, b] = order.hasse_pairs[i];
            std::cout << (i ? ", " : " ") << u.edge_labels()[a] << " < " << u.edge_labels()[b];
        }
        std::cout << '\n';
    }
}

void run_iso(const std::string& file1, const std::string& file2) {
    Ubergraph a = load(file1);
    Ubergraph b = load(file2);
    auto witness = is_isomorphic(a, b);
    if (!witness) {
        std::cout << "not isomorphic\n";
        return;
    }
    for (std::size_t i = 0; i < a.vertex_count(); ++i)
        std::cout << a.vertex_labels()[i] << " -> "
                  << b.vertex_labels()[witness->vertex_map[i]] << '\n';
    for (std::size_t j = 0; j < a.edge_count(); ++j)
        std::cout << a.edge_labels()[j] << " -> " << b.edge_labels()[witness->edge_map[j]]
                  << '\n';
}

void run_induce(const std::string& file, const std::vector<std::string>& vertices) {
    Ubergraph u = load(file);
    std::vector<std::uint32_t> indices;
    indices.reserve(vertices.size());
    for (const std::string& label : vertices) indices.push_back(vertex_index(u, label));
    std::cout << serialize(induced_sububergraph(u, indices));
}

void run_sub(const std::string& file, const std::vector<std::string>& edges) {
    Ubergraph u = load(file);
    std::vector<std::size_t> indices;
    indices.reserve(edges.size());
    for (const std::string& label : edges) indices.push_back(edge_index(u, label));
    std::cout << serialize(sububergraph(u, indices));
}

void run_path(const std::string& file, const std::string& from, const std::string& to) {
    Ubergraph u = load(file);
    auto result = find_path(u, u.node(from), u.node(to));
    if (!result) {
        std::cout << "no path\n";
        return;
    }
    std::cout << "path: " << u.label(result->nodes[0]);
    for (std::size_t i = 0; i < result->edges.size(); ++i)
        std::cout << ' ' << u.edge_labels()[result->edges[i]] << ' '
                  << u.label(result->nodes[i + 1]);
    std::cout << '\n' << "length: " << result->length() << '\n';
}

void run_components(const std::string& file) {
    Ubergraph u = load(file);
    auto blocks = components(u);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::cout << "component " << i + 1 << ':';
        for (Node node : blocks[i]) std::cout << ' ' << u.label(node);
        std::cout << '\n';
    }
    if (blocks.empty()) std::cout << "(empty)\n";
}

void run_simplicial(const std::string& file) {
    Ubergraph u = load(file);
    std::cout << (u.is_simplicial_complex() ? "yes" : "no") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ubergraph toolkit: validate, analyse, and export UGT files"};
    app.require_subcommand(1);

    std::string file, file2, dot_path, from_label, to_label;
    std::vector<std::string> labels;
    bool csv = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "UGT input file")->required();
        return cmd;
    };

    add_file(app.add_subcommand("validate", "Parse a file and report its size"))
        ->callback([&] { run_validate(file); });

    add_file(app.add_subcommand("stats", "Counts, depth, connectivity, degree table"))
        ->callback([&] { run_stats(file); });

    auto* incidence_cmd =
        add_file(app.add_subcommand("incidence", "(n+m) x m incidence matrix"));
    incidence_cmd->add_flag("--csv", csv, "CSV instead of aligned text");
    incidence_cmd->callback([&] { run_matrix(file, csv, incidence_matrix); });

    auto* adjacency_cmd =
        add_file(app.add_subcommand("adjacency", "(n+m) x (n+m) adjacency matrix"));
    adjacency_cmd->add_flag("--csv", csv, "CSV instead of aligned text");
    adjacency_cmd->callback([&] { run_matrix(file, csv, adjacency_matrix); });

    auto* laplacian_cmd = add_file(app.add_subcommand("laplacian", "Laplacian matrix D - A"));
    laplacian_cmd->add_flag("--csv", csv, "CSV instead of aligned text");
    laplacian_cmd->callback([&] { run_matrix(file, csv, laplacian); });

    add_file(app.add_subcommand("entropy", "Laplacian spectrum and spectral entropy"))
        ->callback([&] { run_entropy(file); });

    auto* levi_cmd = add_file(app.add_subcommand("levi", "Uber-Levi digraph summary"));
    levi_cmd->add_option("--dot", dot_path, "write the digraph to this DOT file");
    levi_cmd->callback([&] { run_levi(file, dot_path); });

    add_file(app.add_subcommand("order", "Edge inclusion order and Hasse diagram"))
        ->callback([&] { run_order(file); });

    auto* iso_cmd = app.add_subcommand("iso", "Test two files for isomorphism");
    iso_cmd->add_option("file1", file, "first UGT file")->required();
    iso_cmd->add_option("file2", file2, "second UGT file")->required();
    iso_cmd->callback([&] { run_iso(file, file2); });

    auto* induce_cmd =
        add_file(app.add_subcommand("induce", "Induced sububergraph on a vertex set"));
    induce_cmd->add_option("--vertices", labels, "vertex labels")
        ->delimiter(',')
        ->required();
    induce_cmd->callback([&] { run_induce(file, labels); });

    auto* sub_cmd =
        add_file(app.add_subcommand("sub", "Sububergraph on a membership-closed edge set"));
    sub_cmd->add_option("--edges", labels, "edge labels")->delimiter(',')->required();
    sub_cmd->callback([&] { run_sub(file, labels); });

    auto* path_cmd = add_file(app.add_subcommand("path", "Shortest path between two nodes"));
    path_cmd->add_option("--from", from_label, "start node label")->required();
    path_cmd->add_option("--to", to_label, "end node label")->required();
    path_cmd->callback([&] { run_path(file, from_label, to_label); });

    add_file(app.add_subcommand("components", "Connected components of the path domain"))
        ->callback([&] { run_components(file); });

    add_file(app.add_subcommand("simplicial", "Is a depth-0 ubergraph a simplicial complex?"))
        ->callback([&] { run_simplicial(file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UbergraphError& e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what();
        if (e.has_position())
            std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
        std::cerr << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
