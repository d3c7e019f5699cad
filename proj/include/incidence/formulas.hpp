#pragma once

#include <utility>
#include <vector>

#include "incidence/dyadic.hpp"
#include "incidence/hypergraph.hpp"

namespace incidence {

// Closed forms and bounds. Score conventions follow the board colors: the
// mm_* operations treat the board as both-players-scoring, the mb_* families
// as Left-only-scoring.

/// Left-first score of a both-players-scoring simple graph:
/// ½(Σ_{i odd} d_i − Σ_{i even} d_i) with degrees sorted decreasingly
/// (computed by counting, no sort). Right-first score is the negative.
/// Throws ParseError on non-2-uniform input.
int mm_score(const Hypergraph& g);

/// Greedy optimal move: a maximum-degree free vertex, smallest index among
/// ties. Throws ParseError on terminal positions or non-2-uniform boards.
VertexId mm_optimal_move(const Position& p);

/// Window for the Left-first score of a both-players-scoring board:
/// (0, Δ) in general, (0, ⌊Δ/2⌋) for 2-uniform boards.
std::pair<int, int> mm_delta_bounds(const Hypergraph& h);

/// Σ over Right-free edges of 2^{−|e \ V_L|}, exact. All-Blue boards only.
Dyadic potential(const Position& p);

/// Change in potential caused by v: Left claiming adds it, Right claiming
/// removes it.
Dyadic potential_delta(const Position& p, VertexId v);

/// Free vertex maximizing the potential delta, smallest index among ties.
VertexId potential_greedy_move(const Position& p);

/// Potential-based score window for a fresh all-Blue board:
/// (Σ2^{−|e|} − n·ℓ/8, Σ2^{−|e|}) with ℓ the max pair multiplicity (at
/// least 1); for graphs this is (m/4 − n/8, m/4).
std::pair<Dyadic, Dyadic> es_bounds(const Hypergraph& h);

/// Exact score pair of the fresh n-vertex path (Left-only scoring):
/// with n = 5q + r, Ls = q if r ∈ {0,1,2} else q+1; Rs = q−1 if r = 0 else q.
ScorePair mb_path_score(int n);

/// Exact score pair of the n-vertex path with one endpoint Left-claimed.
ScorePair mb_claimed_path_score(int n);

/// Exact score pair of a disjoint union of fresh paths. Linear time: per-path
/// residues plus a solver-derived residual table shipped as a constant.
ScorePair mb_union_paths_score(const std::vector<int>& lengths);

/// Exact score pair of the fresh n-cycle (n >= 3), via the claimed-path
/// split reduction for Ls and the path identity Rs(C_n) = Ls(P_{n-1}).
ScorePair mb_cycle_score(int n);

/// Exact score pair of the complete binary tree of depth k:
/// (2^{k−1}, 2^{k−1}−1), depth 0 scoring (0,0).
ScorePair binary_tree_score(int k);

/// The 8-entry residual table behind mb_union_paths_score, exposed for
/// verification: entry(p3, p5) with p3 ∈ {0,1}, p5 ∈ {0..3}.
ScorePair path_union_residual(int p3, int p5);

/// Derivation checksum embedded with the table (FNV-1a over the entries).
std::uint64_t path_union_residual_checksum();

} // namespace incidence
