#include "incidence/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "incidence/error.hpp"

namespace incidence {

Hypergraph Hypergraph::build(int n, std::vector<Edge> edges, bool allow_multi) {
    if (n < 0) throw ParseError("negative vertex count");
    Hypergraph h;
    h.n_ = n;
    h.allow_multi_ = allow_multi;
    std::set<std::pair<std::vector<VertexId>, EdgeColor>> seen;
    for (auto& e : edges) {
        if (e.vertices.empty()) throw ParseError("empty hyperedge");
        std::sort(e.vertices.begin(), e.vertices.end());
        e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
        for (VertexId v : e.vertices)
            if (v < 0 || v >= n)
                throw ParseError("vertex " + std::to_string(v) + " out of range [0," +
                                 std::to_string(n) + ")");
        if (!allow_multi && !seen.insert({e.vertices, e.color}).second)
            throw ParseError("duplicate hyperedge in simple mode");
        if (e.vertices.size() != 2) h.uniform2_ = false;
        if (e.color != EdgeColor::Blue) h.all_blue_ = false;
        if (e.color != EdgeColor::Green) h.all_green_ = false;
    }
    h.edges_ = std::move(edges);
    h.degree_.assign(n, 0);
    h.incident_.assign(n, {});
    for (int i = 0; i < static_cast<int>(h.edges_.size()); ++i)
        for (VertexId v : h.edges_[i].vertices) {
            ++h.degree_[v];
            h.incident_[v].push_back(i);
        }
    h.max_degree_ = h.degree_.empty() ? 0 : *std::max_element(h.degree_.begin(), h.degree_.end());
    std::map<std::pair<VertexId, VertexId>, int> pair_count;
    for (const auto& e : h.edges_)
        for (std::size_t i = 0; i < e.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < e.vertices.size(); ++j) {
                int c = ++pair_count[{e.vertices[i], e.vertices[j]}];
                h.pair_mult_ = std::max(h.pair_mult_, c);
            }
    if (h.uniform2_) {
        h.adjacency_.assign(n, {});
        for (const auto& e : h.edges_) {
            h.adjacency_[e.vertices[0]].push_back(e.vertices[1]);
            h.adjacency_[e.vertices[1]].push_back(e.vertices[0]);
        }
        for (auto& a : h.adjacency_) std::sort(a.begin(), a.end());
    }
    return h;
}

Convention Hypergraph::convention() const {
    if (edges_.empty()) return Convention::MakerBreaker; // edgeless: degenerate, report MB
    if (all_blue_) return Convention::MakerBreaker;
    if (all_green_) return Convention::MakerMaker;
    return Convention::Partisan;
}

const std::vector<VertexId>& Hypergraph::neighbors(VertexId v) const {
    if (!uniform2_) throw ParseError("neighbors() requires a 2-uniform board");
    return adjacency_[v];
}

Hypergraph Hypergraph::negated() const {
    std::vector<Edge> edges = edges_;
    for (auto& e : edges) {
        if (e.color == EdgeColor::Blue)
            e.color = EdgeColor::Red;
        else if (e.color == EdgeColor::Red)
            e.color = EdgeColor::Blue;
    }
    Hypergraph h = build(n_, std::move(edges), allow_multi_);
    h.sum_offsets_ = sum_offsets_;
    return h;
}

Hypergraph disjoint_sum(const Hypergraph& a, const Hypergraph& b) {
    std::vector<Edge> edges = a.edges_;
    for (const auto& e : b.edges_) {
        Edge shifted = e;
        for (auto& v : shifted.vertices) v += a.n_;
        edges.push_back(std::move(shifted));
    }
    Hypergraph h = Hypergraph::build(a.n_ + b.n_, std::move(edges),
                                     a.allow_multi_ || b.allow_multi_);
    h.sum_offsets_ = a.sum_offsets_;
    for (int off : b.sum_offsets_) h.sum_offsets_.push_back(off + a.n_);
    return h;
}

Position::Position(Hypergraph g)
    : graph_(std::make_shared<Hypergraph>(std::move(g))),
      cells_(graph_->vertex_count(), CellState::Free),
      free_count_(graph_->vertex_count()) {}

Position::Position(Hypergraph g, const std::vector<VertexId>& left,
                   const std::vector<VertexId>& right)
    : Position(std::move(g)) {
    for (VertexId v : left) {
        if (v < 0 || v >= vertex_count() || cells_[v] != CellState::Free)
            throw ParseError("bad Left claim at vertex " + std::to_string(v));
        cells_[v] = CellState::Left;
        --free_count_;
    }
    for (VertexId v : right) {
        if (v < 0 || v >= vertex_count() || cells_[v] != CellState::Free)
            throw ParseError("bad Right claim at vertex " + std::to_string(v));
        cells_[v] = CellState::Right;
        --free_count_;
    }
}

Position::Position(std::shared_ptr<const Hypergraph> g, std::vector<CellState> cells)
    : graph_(std::move(g)), cells_(std::move(cells)) {
    if (static_cast<int>(cells_.size()) != graph_->vertex_count())
        throw ParseError("cell vector size mismatch");
    free_count_ = static_cast<int>(
        std::count(cells_.begin(), cells_.end(), CellState::Free));
}

std::vector<VertexId> Position::free_vertices() const {
    std::vector<VertexId> out;
    out.reserve(free_count_);
    for (int v = 0; v < vertex_count(); ++v)
        if (cells_[v] == CellState::Free) out.push_back(v);
    return out;
}

std::vector<VertexId> Position::claimed_by(Player p) const {
    CellState want = p == Player::Left ? CellState::Left : CellState::Right;
    std::vector<VertexId> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (cells_[v] == want) out.push_back(v);
    return out;
}

Position Position::claim(Player who, VertexId v) const {
    if (v < 0 || v >= vertex_count())
        throw ParseError("claim: vertex " + std::to_string(v) + " out of range");
    if (cells_[v] != CellState::Free)
        throw ParseError("claim: vertex " + std::to_string(v) + " already claimed");
    Position next = *this;
    next.cells_[v] = who == Player::Left ? CellState::Left : CellState::Right;
    --next.free_count_;
    return next;
}

int Position::terminal_score() const {
    if (!terminal()) throw ParseError("terminal_score on non-terminal position");
    int score = 0;
    for (const auto& e : graph_->edges()) {
        bool all_left = true, all_right = true;
        for (VertexId v : e.vertices) {
            all_left &= cells_[v] == CellState::Left;
            all_right &= cells_[v] == CellState::Right;
        }
        if (all_left && (e.color == EdgeColor::Blue || e.color == EdgeColor::Green)) ++score;
        if (all_right && (e.color == EdgeColor::Red || e.color == EdgeColor::Green)) --score;
    }
    return score;
}

Position Position::negated() const {
    std::vector<CellState> cells = cells_;
    for (auto& c : cells) {
        if (c == CellState::Left)
            c = CellState::Right;
        else if (c == CellState::Right)
            c = CellState::Left;
    }
    return Position(std::make_shared<Hypergraph>(graph_->negated()), std::move(cells));
}

int Position::claimed_neighbors(VertexId v, Player p) const {
    CellState want = p == Player::Left ? CellState::Left : CellState::Right;
    int count = 0;
    for (VertexId u : graph_->neighbors(v))
        if (cells_[u] == want) ++count;
    return count;
}

Position disjoint_sum(const Position& a, const Position& b) {
    Hypergraph g = disjoint_sum(a.graph(), b.graph());
    std::vector<CellState> cells = a.cells_;
    cells.insert(cells.end(), b.cells_.begin(), b.cells_.end());
    return Position(std::make_shared<Hypergraph>(std::move(g)), std::move(cells));
}

Hypergraph make_path(int n, EdgeColor color) {
    if (n < 0) throw ParseError("path: negative order");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({{i, i + 1}, color});
    return Hypergraph::build(n, std::move(edges));
}

Hypergraph make_cycle(int n, EdgeColor color) {
    if (n < 3) throw ParseError("cycle: order must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({{i, (i + 1) % n}, color});
    return Hypergraph::build(n, std::move(edges));
}

Hypergraph make_complete(int n, EdgeColor color) {
    if (n < 0) throw ParseError("complete: negative order");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({{i, j}, color});
    return Hypergraph::build(n, std::move(edges));
}

Hypergraph make_star(int leaves, EdgeColor color) {
    if (leaves < 0) throw ParseError("star: negative leaf count");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({{0, i}, color});
    return Hypergraph::build(leaves + 1, std::move(edges));
}

Hypergraph make_binary_tree(int depth, EdgeColor color) {
    if (depth < 0) throw ParseError("binary tree: negative depth");
    int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({{(v - 1) / 2, v}, color});
    return Hypergraph::build(n, std::move(edges));
}

Hypergraph make_union_paths(const std::vector<int>& lengths, EdgeColor color) {
    std::vector<Edge> edges;
    int n = 0;
    for (int len : lengths) {
        if (len < 1) throw ParseError("union of paths: lengths must be >= 1");
        for (int i = 0; i + 1 < len; ++i) edges.push_back({{n + i, n + i + 1}, color});
        n += len;
    }
    return Hypergraph::build(n, std::move(edges));
}

Hypergraph make_unique_move_board() {
    // u = 0 with leaves 1..4 and neighbor b = 5; b has leaves 6, 7.
    // v = 8 with leaves 9..12 and neighbor d = 13.
    std::vector<Edge> edges;
    for (int leaf = 1; leaf <= 4; ++leaf) edges.push_back({{0, leaf}, EdgeColor::Blue});
    edges.push_back({{0, 5}, EdgeColor::Blue});
    edges.push_back({{5, 6}, EdgeColor::Blue});
    edges.push_back({{5, 7}, EdgeColor::Blue});
    for (int leaf = 9; leaf <= 12; ++leaf) edges.push_back({{8, leaf}, EdgeColor::Blue});
    edges.push_back({{8, 13}, EdgeColor::Blue});
    return Hypergraph::build(14, std::move(edges));
}

Hypergraph make_demo_graph(EdgeColor color) {
    std::vector<Edge> edges;
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3},
                        {2, 5}, {3, 5}, {4, 5}, {4, 6}, {5, 6}})
        edges.push_back({{u, v}, color});
    return Hypergraph::build(7, std::move(edges));
}

Hypergraph make_singleton_star(int delta) {
    if (delta < 1) throw ParseError("singleton star: Delta must be >= 1");
    std::vector<Edge> edges;
    edges.push_back({{0}, EdgeColor::Green});
    for (int i = 1; i < delta; ++i) edges.push_back({{0, i}, EdgeColor::Green});
    return Hypergraph::build(delta, std::move(edges));
}

} // namespace incidence
