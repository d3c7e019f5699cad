#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace incidence {

using VertexId = int;

enum class EdgeColor : std::uint8_t { Blue, Red, Green };

enum class Player : std::uint8_t { Left, Right };

inline Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

/// Derived from the edge colors, never stored independently.
enum class Convention : std::uint8_t { MakerBreaker, MakerMaker, Partisan };

struct ScorePair {
    int ls = 0;
    int rs = 0;
    friend bool operator==(const ScorePair&, const ScorePair&) = default;
};

struct Edge {
    std::vector<VertexId> vertices; // sorted, distinct
    EdgeColor color = EdgeColor::Blue;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable colored hypergraph. Vertex ids are dense 0..n-1.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates and builds. Throws ParseError on out-of-range vertices,
    /// empty hyperedges, or (in simple mode) duplicate (set, color) pairs.
    static Hypergraph build(int n, std::vector<Edge> edges, bool allow_multi = false);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool allow_multi() const { return allow_multi_; }

    int degree(VertexId v) const { return degree_[v]; }
    int max_degree() const { return max_degree_; }
    /// ell(H): maximum number of hyperedges containing one fixed vertex pair.
    int max_pair_multiplicity() const { return pair_mult_; }

    bool is_graph() const { return uniform2_; } // 2-uniform
    bool all_blue() const { return all_blue_; }
    bool all_green() const { return all_green_; }
    Convention convention() const;

    /// Adjacency for 2-uniform boards only.
    const std::vector<VertexId>& neighbors(VertexId v) const;

    /// Edge indices incident to each vertex (any uniformity).
    const std::vector<int>& incident_edges(VertexId v) const { return incident_[v]; }

    /// Blue<->Red color swap; Green unchanged.
    Hypergraph negated() const;

    /// Component start offsets recorded by disjoint sums (always contains 0).
    const std::vector<int>& sum_offsets() const { return sum_offsets_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<VertexId>> adjacency_; // 2-uniform only
    int max_degree_ = 0;
    int pair_mult_ = 0;
    bool allow_multi_ = false;
    bool uniform2_ = true;
    bool all_blue_ = true;
    bool all_green_ = true;
    std::vector<int> sum_offsets_{0};

    friend Hypergraph disjoint_sum(const Hypergraph&, const Hypergraph&);
};

Hypergraph disjoint_sum(const Hypergraph& a, const Hypergraph& b);

enum class CellState : std::uint8_t { Free, Left, Right };

/// A board plus the disjoint claimed sets. Immutable: claim() returns a copy.
class Position {
public:
    Position() : graph_(std::make_shared<Hypergraph>()) {}
    explicit Position(Hypergraph g);
    Position(Hypergraph g, const std::vector<VertexId>& left, const std::vector<VertexId>& right);
    Position(std::shared_ptr<const Hypergraph> g, std::vector<CellState> cells);

    const Hypergraph& graph() const { return *graph_; }
    std::shared_ptr<const Hypergraph> graph_ptr() const { return graph_; }
    CellState cell(VertexId v) const { return cells_[v]; }
    const std::vector<CellState>& cells() const { return cells_; }

    int vertex_count() const { return graph_->vertex_count(); }
    int free_count() const { return free_count_; }
    bool terminal() const { return free_count_ == 0; }

    std::vector<VertexId> free_vertices() const;
    std::vector<VertexId> claimed_by(Player p) const;

    /// Throws ParseError if v is out of range or already claimed.
    Position claim(Player who, VertexId v) const;

    /// Score of a fully claimed board: blue/green edges owned by Left count +1,
    /// red/green edges owned by Right count -1. Throws if non-terminal.
    int terminal_score() const;

    /// Blue<->Red and V_L<->V_R swapped.
    Position negated() const;

    /// Count of p's claimed neighbors of v (2-uniform boards).
    int claimed_neighbors(VertexId v, Player p) const;

    friend Position disjoint_sum(const Position&, const Position&);

private:
    std::shared_ptr<const Hypergraph> graph_;
    std::vector<CellState> cells_;
    int free_count_ = 0;
};

Position disjoint_sum(const Position& a, const Position& b);

// --- Generators -------------------------------------------------------------
// Canonical numbering: paths and cycles along the walk, trees breadth-first,
// stars center first.

Hypergraph make_path(int n, EdgeColor color = EdgeColor::Blue);
Hypergraph make_cycle(int n, EdgeColor color = EdgeColor::Blue);
Hypergraph make_complete(int n, EdgeColor color = EdgeColor::Blue);
Hypergraph make_star(int leaves, EdgeColor color = EdgeColor::Green);
Hypergraph make_binary_tree(int depth, EdgeColor color = EdgeColor::Blue);
Hypergraph make_union_paths(const std::vector<int>& lengths, EdgeColor color = EdgeColor::Blue);
/// The 14-vertex graph with Ls=4 (unique move u=0) and Rs=2 (unique move v=8).
Hypergraph make_unique_move_board();
/// Singleton edge {0} plus (delta-1) pairs {0,i}, all green; Delta = delta.
Hypergraph make_singleton_star(int delta);
/// 7-vertex, 10-edge running-example graph (degree sequence 4,3,3,3,3,2,2).
Hypergraph make_demo_graph(EdgeColor color = EdgeColor::Blue);

} // namespace incidence
