#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "incidence/hypergraph.hpp"

namespace incidence {

struct SolveOptions {
    /// Twin-pair assignment before the search (see twin_reduce). Legal only on all-Blue
    /// 2-uniform boards; requesting it elsewhere is an error.
    bool twin_reduction = false;
    /// Search one representative per class of interchangeable free vertices.
    bool symmetry_pruning = true;
    /// Skip moves dominated per the degree-count criterion (all-Blue 2-uniform
    /// boards only; ignored elsewhere).
    bool domination_pruning = false;
    /// Alpha-beta windows. Off by default so node counts stay reproducible.
    bool alpha_beta = false;
    /// >1 splits the root move loop across OpenMP workers. Values are exact
    /// either way, so the result is identical to a single-worker run.
    int workers = 1;
    /// Abort with ResourceError past this many expanded nodes (0 = unlimited).
    std::uint64_t node_budget = 0;
    /// Memo entries per shard before the shard is dropped.
    std::size_t memo_shard_capacity = 1u << 21;
};

struct SolveResult {
    int value = 0;
    std::vector<VertexId> optimal_moves; // ascending; empty iff terminal
    std::uint64_t nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
};

/// Opaque memo key. Positions identical up to component reordering, removal of
/// settled edges/vertices, and path reversal share a key; equal keys imply
/// equal residual value.
std::string canonical_key(const Position& p, Player to_move);

/// Twin reduction: repeatedly hands one vertex of each equivalent free
/// pair to Left and the other to Right. Requires an all-Blue 2-uniform board.
Position twin_reduce(const Position& p);

/// Sufficient domination test: true iff
/// |N(v) n V_L| >= |N(u) n V_L| + |(N(u) \ N(v)) n V_F|.
/// Requires u, v free on an all-Blue 2-uniform board.
bool dominates(const Position& p, VertexId v, VertexId u);

class Solver {
public:
    explicit Solver(SolveOptions options = {});
    ~Solver();
    Solver(Solver&&) noexcept;
    Solver& operator=(Solver&&) noexcept;

    const SolveOptions& options() const { return options_; }

    /// Exact value for the given mover, with the full optimizer set.
    SolveResult solve(const Position& p, Player to_move);

    ScorePair score_pair(const Position& p);

    /// Decision form: is value(p, to_move) >= threshold? Uses a narrow
    /// alpha-beta window regardless of the alpha_beta option.
    bool decide_at_least(const Position& p, Player to_move, int threshold);

    /// Milnor test: Ls(g - h) = Rs(g - h) = 0. Throws ResourceError when the
    /// combined board has more than `free_vertex_budget` free vertices.
    bool milnor_equivalent(const Position& g, const Position& h,
                           int free_vertex_budget = 36);

    /// Drop all memoized values (kept across solve calls otherwise).
    void clear_memo();

private:
    struct Impl;
    SolveOptions options_;
    std::unique_ptr<Impl> impl_;
};

} // namespace incidence
