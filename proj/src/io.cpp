#include "incidence/io.hpp"

#include <algorithm>
#include <sstream>

#include "incidence/error.hpp"

namespace incidence {

namespace {

std::vector<std::pair<int, std::string>> numbered_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

int parse_int(const std::string& token, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected " + what + ", got '" + token + "'");
    }
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

} // namespace

Position parse_board(const std::string& text) {
    auto lines = numbered_lines(text);
    if (lines.empty()) throw ParseError("empty board document");

    auto header = split_tokens(lines[0].second);
    const int header_line = lines[0].first;
    if (header.size() != 3 || (header[0] != "graph" && header[0] != "hypergraph"))
        throw ParseError(header_line, "expected 'graph <n> <m>' or 'hypergraph <n> <m>'");
    const bool shorthand = header[0] == "graph";
    const int n = parse_int(header[1], header_line, "vertex count");
    const int m = parse_int(header[2], header_line, "edge count");
    if (n < 0 || m < 0) throw ParseError(header_line, "negative size");
    if (static_cast<int>(lines.size()) < 1 + m)
        throw ParseError(header_line, "fewer edge lines than the declared " +
                                          std::to_string(m));

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        auto [line, content] = lines[1 + i];
        auto tokens = split_tokens(content);
        Edge e;
        std::size_t first = 0;
        if (shorthand) {
            e.color = EdgeColor::Blue;
            if (tokens.size() != 2) throw ParseError(line, "expected 'u v'");
        } else {
            if (tokens.empty() || tokens[0].size() != 1 ||
                std::string("BRG").find(tokens[0][0]) == std::string::npos)
                throw ParseError(line, "expected color tag B, R or G");
            e.color = tokens[0][0] == 'B'   ? EdgeColor::Blue
                      : tokens[0][0] == 'R' ? EdgeColor::Red
                                            : EdgeColor::Green;
            first = 1;
            if (tokens.size() == 1) throw ParseError(line, "empty hyperedge");
        }
        for (std::size_t j = first; j < tokens.size(); ++j) {
            int v = parse_int(tokens[j], line, "vertex id");
            if (v < 0 || v >= n)
                throw ParseError(line, "vertex " + std::to_string(v) +
                                           " out of range [0, " + std::to_string(n) + ")");
            e.vertices.push_back(v);
        }
        std::sort(e.vertices.begin(), e.vertices.end());
        edges.push_back(std::move(e));
    }

    std::vector<VertexId> left, right;
    for (std::size_t i = 1 + m; i < lines.size(); ++i) {
        auto [line, content] = lines[i];
        auto tokens = split_tokens(content);
        std::vector<VertexId>* side = nullptr;
        if (!tokens.empty() && tokens[0] == "L:") side = &left;
        else if (!tokens.empty() && tokens[0] == "R:") side = &right;
        else throw ParseError(line, "expected 'L: <ids>' or 'R: <ids>'");
        for (std::size_t j = 1; j < tokens.size(); ++j) {
            int v = parse_int(tokens[j], line, "vertex id");
            if (v < 0 || v >= n)
                throw ParseError(line, "vertex " + std::to_string(v) +
                                           " out of range [0, " + std::to_string(n) + ")");
            side->push_back(v);
        }
        for (VertexId v : left)
            if (std::find(right.begin(), right.end(), v) != right.end())
                throw ParseError(line, "vertex " + std::to_string(v) +
                                           " claimed by both players");
    }

    try {
        return Position(Hypergraph::build(n, std::move(edges)), left, right);
    } catch (const ParseError& e) {
        throw ParseError(std::string("board: ") + e.what());
    }
}

std::string serialize_board(const Position& p) {
    const Hypergraph& g = p.graph();
    std::ostringstream out;
    const bool shorthand = g.all_blue() && g.is_graph();
    out << (shorthand ? "graph " : "hypergraph ") << g.vertex_count() << ' '
        << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        if (!shorthand)
            out << (e.color == EdgeColor::Blue  ? "B"
                    : e.color == EdgeColor::Red ? "R"
                                                : "G");
        bool lead = shorthand;
        for (VertexId v : e.vertices) {
            if (!lead) out << ' ';
            else lead = false;
            out << v;
            lead = false;
        }
        out << '\n';
    }
    for (Player side : {Player::Left, Player::Right}) {
        auto claimed = p.claimed_by(side);
        if (claimed.empty()) continue;
        out << (side == Player::Left ? "L:" : "R:");
        for (VertexId v : claimed) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::uint64_t board_digest(const Position& p) {
    std::uint64_t fnv = 1469598103934665603ull;
    for (char c : serialize_board(p)) {
        fnv ^= static_cast<unsigned char>(c);
        fnv *= 1099511628211ull;
    }
    return fnv;
}

QBFormula parse_qbf(const std::string& text) {
    auto lines = numbered_lines(text);
    if (lines.empty()) throw ParseError("empty formula document");
    QBFormula f;
    {
        auto [line, content] = lines[0];
        for (const std::string& token : split_tokens(content)) {
            if (token.size() < 2 || (token[0] != 'e' && token[0] != 'a'))
                throw ParseError(line, "expected e<var> or a<var>, got '" + token + "'");
            int var = parse_int(token.substr(1), line, "variable id");
            f.prefix.push_back({var, token[0] == 'e' ? Quantifier::Exists
                                                     : Quantifier::ForAll});
        }
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [line, content] = lines[i];
        auto tokens = split_tokens(content);
        if (tokens.empty() || tokens.back() != "0")
            throw ParseError(line, "clause must end with 0");
        std::vector<int> clause;
        for (std::size_t j = 0; j + 1 < tokens.size(); ++j)
            clause.push_back(parse_int(tokens[j], line, "literal"));
        f.clauses.push_back(std::move(clause));
    }
    try {
        f.validate();
    } catch (const ParseError& e) {
        throw ParseError(std::string("formula: ") + e.what());
    }
    return f;
}

std::string serialize_qbf(const QBFormula& f) {
    std::ostringstream out;
    bool lead = true;
    for (auto [var, qt] : f.prefix) {
        if (!lead) out << ' ';
        lead = false;
        out << (qt == Quantifier::Exists ? 'e' : 'a') << var;
    }
    out << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

nlohmann::json result_record(const Position& p, const SolveOptions& opt,
                             const std::optional<SolveResult>& left,
                             const std::optional<SolveResult>& right) {
    char digest[19];
    std::snprintf(digest, sizeof digest, "0x%016llx",
                  static_cast<unsigned long long>(board_digest(p)));
    nlohmann::json record{
        {"digest", digest},
        {"convention", p.graph().convention() == Convention::MakerBreaker ? "maker-breaker"
                       : p.graph().convention() == Convention::MakerMaker ? "maker-maker"
                                                                          : "partisan"},
        {"vertices", p.vertex_count()},
        {"edges", p.graph().edge_count()},
        {"free", p.free_count()},
        {"options",
         {{"twin_reduction", opt.twin_reduction},
          {"symmetry_pruning", opt.symmetry_pruning},
          {"domination_pruning", opt.domination_pruning},
          {"alpha_beta", opt.alpha_beta},
          {"workers", opt.workers}}},
    };
    auto side = [](const SolveResult& r) {
        return nlohmann::json{{"value", r.value},
                              {"optimal_moves", r.optimal_moves},
                              {"nodes_expanded", r.nodes_expanded},
                              {"memo_hits", r.memo_hits}};
    };
    if (left) record["left_first"] = side(*left);
    if (right) record["right_first"] = side(*right);
    return record;
}

std::string to_dot(const Position& p) {
    const Hypergraph& g = p.graph();
    std::ostringstream out;
    out << "graph board {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"" << v << "\"";
        if (p.cell(v) == CellState::Left) out << ", style=filled, fillcolor=lightblue";
        if (p.cell(v) == CellState::Right) out << ", style=filled, fillcolor=lightpink";
        out << "];\n";
    }
    auto color_of = [](EdgeColor c) {
        return c == EdgeColor::Blue ? "blue" : c == EdgeColor::Red ? "red" : "green";
    };
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edges()[ei];
        if (e.vertices.size() == 2) {
            out << "  v" << e.vertices[0] << " -- v" << e.vertices[1] << " [color="
                << color_of(e.color) << "];\n";
        } else {
            out << "  e" << ei << " [shape=box, label=\"\", width=0.15, height=0.15, color="
                << color_of(e.color) << "];\n";
            for (VertexId v : e.vertices)
                out << "  e" << ei << " -- v" << v << " [color=" << color_of(e.color)
                    << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace incidence
