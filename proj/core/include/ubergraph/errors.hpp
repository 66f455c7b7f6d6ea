#pragma once

#include <stdexcept>
#include <string>

namespace ubergraph {

enum class ErrorCode {
    invalid_label,
    unknown_member,
    empty_edge,
    duplicate_member,
    duplicate_label,
    duplicate_edge_set,
    foundation_violation,
    undefined_in_cyclic_mode,
    not_a_hypergraph,
    unknown_id,
    syntax_error,
    not_membership_closed,
    unknown_edge,
    unknown_vertex,
    not_a_dag,
    not_a_vertex,
    not_symmetric,
    no_convergence,
    degenerate_distribution,
    negative_eigenvalue,
    too_large,
};

/// Stable name for diagnostics, e.g. "UnknownMember".
const char* error_code_name(ErrorCode code);

class UbergraphError : public std::runtime_error {
public:
    UbergraphError(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    // Syntax errors carry a 1-based source position.
    UbergraphError(ErrorCode code, std::string message, int line, int column)
        : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

    ErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    bool has_position() const noexcept { return line_ > 0; }

private:
    ErrorCode code_;
    int line_ = 0;
    int column_ = 0;
};

} // namespace ubergraph
