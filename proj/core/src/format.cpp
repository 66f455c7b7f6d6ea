#include "ubergraph/format.hpp"

#include <cctype>
#include <vector>

namespace ubergraph {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

bool is_word_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '-'; }

// Words ([A-Za-z0-9_-]+) and the punctuation tokens "=", "{", "}". Hyphens are
// tokenized so "well-founded" stays one word; identifier contexts reject them.
std::vector<Token> tokenize_line(std::string_view line, int line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c == '#') break; // comment to end of line
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        int column = static_cast<int>(i) + 1;
        if (c == '=' || c == '{' || c == '}') {
            tokens.push_back({std::string(1, static_cast<char>(c)), column});
            ++i;
            continue;
        }
        if (is_word_char(c)) {
            std::size_t start = i;
            while (i < line.size() && is_word_char(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back({std::string(line.substr(start, i - start)), column});
            continue;
        }
        throw UbergraphError(ErrorCode::syntax_error,
                             "unexpected character '" + std::string(1, static_cast<char>(c)) +
                                 "'",
                             line_no, column);
    }
    return tokens;
}

const std::string& expect_ident(const Token& token, int line_no) {
    if (!is_valid_label(token.text))
        throw UbergraphError(ErrorCode::syntax_error,
                             "expected identifier, got '" + token.text + "'", line_no,
                             token.column);
    return token.text;
}

} // namespace

Ubergraph parse(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<EdgeDef> edges;
    Mode mode = Mode::well_founded;
    bool saw_mode = false;
    bool saw_declaration = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) break;
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<Token> tokens = tokenize_line(line, line_no);
        if (tokens.empty()) continue;

        const Token& head = tokens.front();
        if (head.text == "mode") {
            if (saw_mode)
                throw UbergraphError(ErrorCode::syntax_error, "duplicate mode directive",
                                     line_no, head.column);
            if (saw_declaration)
                throw UbergraphError(ErrorCode::syntax_error,
                                     "mode directive must precede declarations", line_no,
                                     head.column);
            if (tokens.size() != 2)
                throw UbergraphError(ErrorCode::syntax_error,
                                     "expected 'mode well-founded' or 'mode cyclic'", line_no,
                                     head.column);
            if (tokens[1].text == "well-founded")
                mode = Mode::well_founded;
            else if (tokens[1].text == "cyclic")
                mode = Mode::cyclic;
            else
                throw UbergraphError(ErrorCode::syntax_error,
                                     "unknown mode '" + tokens[1].text + "'", line_no,
                                     tokens[1].column);
            saw_mode = true;
        } else if (head.text == "vertex") {
            if (tokens.size() < 2)
                throw UbergraphError(ErrorCode::syntax_error,
                                     "expected at least one vertex label", line_no,
                                     head.column);
            for (std::size_t t = 1; t < tokens.size(); ++t)
                vertices.push_back(expect_ident(tokens[t], line_no));
            saw_declaration = true;
        } else if (head.text == "edge") {
            // edge IDENT = { IDENT* }
            if (tokens.size() < 4)
                throw UbergraphError(ErrorCode::syntax_error,
                                     "expected 'edge NAME = { members }'", line_no,
                                     head.column);
            EdgeDef def;
            def.label = expect_ident(tokens[1], line_no);
            if (tokens[2].text != "=")
                throw UbergraphError(ErrorCode::syntax_error, "expected '='", line_no,
                                     tokens[2].column);
            if (tokens[3].text != "{")
                throw UbergraphError(ErrorCode::syntax_error, "expected '{'", line_no,
                                     tokens[3].column);
            std::size_t t = 4;
            while (t < tokens.size() && tokens[t].text != "}") {
                def.members.push_back(expect_ident(tokens[t], line_no));
                ++t;
            }
            if (t == tokens.size())
                throw UbergraphError(ErrorCode::syntax_error, "missing '}'", line_no,
                                     tokens.back().column);
            if (t + 1 != tokens.size())
                throw UbergraphError(ErrorCode::syntax_error,
                                     "unexpected token after '}'", line_no,
                                     tokens[t + 1].column);
            edges.push_back(std::move(def));
            saw_declaration = true;
        } else {
            throw UbergraphError(ErrorCode::syntax_error,
                                 "expected 'mode', 'vertex', or 'edge', got '" + head.text +
                                     "'",
                                 line_no, head.column);
        }
    }

    return Ubergraph::build(std::move(vertices), std::move(edges), mode);
}

std::string serialize(const Ubergraph& u) {
    std::string out;
    if (u.mode() == Mode::cyclic) out += "mode cyclic\n";
    if (u.vertex_count() > 0) {
        out += "vertex";
        for (const std::string& label : u.vertex_labels()) {
            out += ' ';
            out += label;
        }
        out += '\n';
    }
    for (std::size_t j = 0; j < u.edge_count(); ++j) {
        out += "edge ";
        out += u.edge_labels()[j];
        out += " = {";
        for (Node member : u.members(j)) {
            out += ' ';
            out += u.label(member);
        }
        out += " }\n";
    }
    return out;
}

} // namespace ubergraph
