#include "ubergraph/matrix.hpp"

#include <algorithm>

namespace ubergraph {

namespace {

std::vector<std::string> node_labels(const Ubergraph& u) {
    std::vector<std::string> labels;
    labels.reserve(u.node_count());
    for (Node node : u.nodes()) labels.push_back(u.label(node));
    return labels;
}

} // namespace

LabeledMatrix incidence_matrix(const Ubergraph& u) {
    LabeledMatrix m;
    m.row_labels = node_labels(u);
    m.col_labels = u.edge_labels();
    m.entries.assign(m.rows() * m.cols(), 0);
    for (std::size_t j = 0; j < u.edge_count(); ++j)
        for (Node member : u.members(j)) m.at(u.canonical_index(member), j) = 1;
    return m;
}

LabeledVector degree_vector(const LabeledMatrix& incidence) {
    LabeledVector v;
    v.labels = incidence.row_labels;
    v.values.resize(incidence.rows(), 0);
    for (std::size_t r = 0; r < incidence.rows(); ++r)
        for (std::size_t c = 0; c < incidence.cols(); ++c) v.values[r] += incidence.at(r, c);
    return v;
}

bool incident_from_matrix(const LabeledMatrix& incidence, const std::string& edge_e,
                          const std::string& edge_f) {
    auto column = [&](const std::string& label) {
        auto it = std::find(incidence.col_labels.begin(), incidence.col_labels.end(), label);
        if (it == incidence.col_labels.end())
            throw UbergraphError(ErrorCode::unknown_edge,
                                 "no incidence column labeled '" + label + "'");
        return static_cast<std::size_t>(it - incidence.col_labels.begin());
    };
    std::size_t e = column(edge_e);
    std::size_t f = column(edge_f);
    std::int64_t dot = 0;
    for (std::size_t r = 0; r < incidence.rows(); ++r)
        dot += incidence.at(r, e) * incidence.at(r, f);
    return dot != 0;
}

LabeledMatrix adjacency_matrix(const Ubergraph& u) {
    LabeledMatrix a;
    a.row_labels = node_labels(u);
    a.col_labels = a.row_labels;
    a.entries.assign(a.rows() * a.cols(), 0);
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        auto members = u.members(j);
        for (std::size_t p = 0; p < members.size(); ++p) {
            for (std::size_t q = p + 1; q < members.size(); ++q) {
                std::size_t x = u.canonical_index(members[p]);
                std::size_t y = u.canonical_index(members[q]);
                ++a.at(x, y);
                ++a.at(y, x);
            }
        }
    }
    return a;
}

LabeledMatrix laplacian(const Ubergraph& u) {
    LabeledMatrix l = adjacency_matrix(u);
    for (std::size_t r = 0; r < l.rows(); ++r) {
        std::int64_t row_sum = 0;
        for (std::size_t c = 0; c < l.cols(); ++c) row_sum += l.at(r, c);
        for (std::size_t c = 0; c < l.cols(); ++c) l.at(r, c) = -l.at(r, c);
        l.at(r, r) = row_sum;
    }
    return l;
}

namespace {

std::string align_table(const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels,
                        const std::vector<std::vector<std::string>>& cells) {
    std::size_t label_width = 0;
    for (const auto& label : row_labels) label_width = std::max(label_width, label.size());
    std::vector<std::size_t> widths(col_labels.size());
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
        widths[c] = col_labels[c].size();
        for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    auto pad_left = [](std::string_view s, std::size_t width) {
        return std::string(width - s.size(), ' ') + std::string(s);
    };
    auto pad_right = [](std::string_view s, std::size_t width) {
        return std::string(s) + std::string(width - s.size(), ' ');
    };
    if (!col_labels.empty()) {
        out += std::string(label_width, ' ');
        for (std::size_t c = 0; c < col_labels.size(); ++c)
            out += "  " + pad_left(col_labels[c], widths[c]);
        out += '\n';
    }
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        out += pad_right(row_labels[r], label_width);
        for (std::size_t c = 0; c < col_labels.size(); ++c)
            out += "  " + pad_left(cells[r][c], widths[c]);
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_plain(const LabeledMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows(),
                                                std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) cells[r][c] = std::to_string(m.at(r, c));
    return align_table(m.row_labels, m.col_labels, cells);
}

std::string render_plain(const LabeledVector& v) {
    std::size_t label_width = 0;
    for (const auto& label : v.labels) label_width = std::max(label_width, label.size());
    std::string out;
    for (std::size_t i = 0; i < v.labels.size(); ++i) {
        out += v.labels[i];
        out += std::string(label_width - v.labels[i].size(), ' ');
        out += "  " + std::to_string(v.values[i]) + '\n';
    }
    return out;
}

std::string render_csv(const LabeledMatrix& m) {
    std::string out;
    for (const auto& label : m.col_labels) {
        out += ',';
        out += label;
    }
    out += "\r\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += m.row_labels[r];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out += ',';
            out += std::to_string(m.at(r, c));
        }
        out += "\r\n";
    }
    return out;
}

std::string render_csv(const LabeledVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.labels.size(); ++i)
        out += v.labels[i] + ',' + std::to_string(v.values[i]) + "\r\n";
    return out;
}

} // namespace ubergraph
