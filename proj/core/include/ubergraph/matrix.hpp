#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ubergraph/model.hpp"

namespace ubergraph {

/// Dense integer matrix with row/column labels. Entries are exact so golden
/// comparisons are bit-exact.
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::int64_t> entries; // row-major

    std::size_t rows() const noexcept { return row_labels.size(); }
    std::size_t cols() const noexcept { return col_labels.size(); }
    std::int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
    std::int64_t& at(std::size_t r, std::size_t c) { return entries[r * cols() + c]; }
};

struct LabeledVector {
    std::vector<std::string> labels;
    std::vector<std::int64_t> values;
};

/// (n+m) x m incidence matrix: rows in canonical node order, columns the
/// edges in declaration order, entry 1 iff the row node is a member of the
/// column edge. For depth-0 ubergraphs the top n rows are the classical
/// hypergraph incidence matrix and the bottom m rows are zero.
LabeledMatrix incidence_matrix(const Ubergraph& u);

/// Row sums of an incidence matrix: the degree of each node.
LabeledVector degree_vector(const LabeledMatrix& incidence);

/// Edge-edge incidence read from the matrix: nonzero inner product of the two
/// labeled columns. Throws UnknownEdge for labels that are not columns.
bool incident_from_matrix(const LabeledMatrix& incidence, const std::string& edge_e,
                          const std::string& edge_f);

/// (n+m) x (n+m) adjacency matrix: entry (x, y) counts the edges containing
/// both x and y; diagonal zero.
LabeledMatrix adjacency_matrix(const Ubergraph& u);

/// Laplacian L = D - A with D the diagonal of adjacency row sums.
LabeledMatrix laplacian(const Ubergraph& u);

/// Space-aligned text table: header row of column labels, then one row label
/// plus entries per line.
std::string render_plain(const LabeledMatrix& m);
std::string render_plain(const LabeledVector& v);

/// RFC 4180 CSV with a leading empty cell before the column labels.
std::string render_csv(const LabeledMatrix& m);
std::string render_csv(const LabeledVector& v);

} // namespace ubergraph
