#pragma once

#include <string>
#include <string_view>

#include "ubergraph/model.hpp"

namespace ubergraph {

/// Parse UGT text into a validated ubergraph.
///
/// Line-oriented grammar, whitespace-insensitive within lines:
///   mode-decl   := "mode" ("well-founded" | "cyclic")   -- optional, at most
///                  one, before any declaration; default well-founded
///   vertex-decl := "vertex" IDENT+
///   edge-decl   := "edge" IDENT "=" "{" IDENT* "}"
///   comment     := "#" rest-of-line (also allowed after a declaration)
///   IDENT       := [A-Za-z0-9_]+
///
/// LF and CRLF both accepted. Throws UbergraphError: SyntaxError with the
/// offending token's line/column, or any build() validation error.
Ubergraph parse(std::string_view text);

/// Emit UGT text: mode directive (cyclic only), one vertex line listing all
/// vertices in declaration order, then one edge line per edge in declaration
/// order. parse(serialize(u)) == u.
std::string serialize(const Ubergraph& u);

} // namespace ubergraph
