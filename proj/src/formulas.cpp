#include "incidence/formulas.hpp"

#include <algorithm>
#include <climits>

#include "incidence/error.hpp"
#include "incidence/solver.hpp"

namespace incidence {

namespace {
struct ResidualEntry {
    int p3, p5, ls, rs;
};
#include "path_union_residuals.inc"
} // namespace

int mm_score(const Hypergraph& g) {
    if (!g.is_graph()) throw ParseError("mm_score: requires a 2-uniform board");
    const int n = g.vertex_count();
    std::vector<int> count(n, 0); // degree <= n-1
    for (int v = 0; v < n; ++v) ++count[g.degree(v)];
    // Alternating sum over the decreasing degree sequence, by counting.
    long long sum = 0;
    int position = 1;
    for (int d = n - 1; d >= 0; --d)
        for (int c = 0; c < count[d]; ++c, ++position)
            sum += (position % 2 == 1) ? d : -d;
    return static_cast<int>(sum / 2);
}

VertexId mm_optimal_move(const Position& p) {
    if (!p.graph().is_graph())
        throw ParseError("mm_optimal_move: requires a 2-uniform board");
    if (p.terminal()) throw ParseError("mm_optimal_move: terminal position");
    VertexId best = -1;
    int best_degree = -1;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (p.cell(v) == CellState::Free && p.graph().degree(v) > best_degree) {
            best = v;
            best_degree = p.graph().degree(v);
        }
    return best;
}

std::pair<int, int> mm_delta_bounds(const Hypergraph& h) {
    int upper = h.max_degree();
    if (h.is_graph()) upper /= 2;
    return {0, upper};
}

namespace {
bool right_free(const Edge& e, const Position& p) {
    for (VertexId v : e.vertices)
        if (p.cell(v) == CellState::Right) return false;
    return true;
}

int free_of_left(const Edge& e, const Position& p) {
    int k = 0;
    for (VertexId v : e.vertices)
        if (p.cell(v) != CellState::Left) ++k;
    return k;
}
} // namespace

Dyadic potential(const Position& p) {
    if (!p.graph().all_blue()) throw ParseError("potential: requires an all-Blue board");
    Dyadic total;
    for (const Edge& e : p.graph().edges())
        if (right_free(e, p)) total = total + Dyadic::pow2(free_of_left(e, p));
    return total;
}

Dyadic potential_delta(const Position& p, VertexId v) {
    if (!p.graph().all_blue())
        throw ParseError("potential_delta: requires an all-Blue board");
    Dyadic total;
    for (int ei : p.graph().incident_edges(v)) {
        const Edge& e = p.graph().edges()[ei];
        if (right_free(e, p)) total = total + Dyadic::pow2(free_of_left(e, p));
    }
    return total;
}

VertexId potential_greedy_move(const Position& p) {
    if (p.terminal()) throw ParseError("potential_greedy_move: terminal position");
    VertexId best = -1;
    Dyadic best_delta(-1);
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (p.cell(v) != CellState::Free) continue;
        Dyadic d = potential_delta(p, v);
        if (best < 0 || d > best_delta) {
            best = v;
            best_delta = d;
        }
    }
    return best;
}

std::pair<Dyadic, Dyadic> es_bounds(const Hypergraph& h) {
    Dyadic upper;
    for (const Edge& e : h.edges())
        upper = upper + Dyadic::pow2(static_cast<int>(e.vertices.size()));
    int ell = std::max(1, h.max_pair_multiplicity());
    Dyadic lower = upper - Dyadic(static_cast<long long>(h.vertex_count()) * ell, 3);
    return {lower, upper};
}

ScorePair mb_path_score(int n) {
    if (n < 1) throw ParseError("path score: length must be >= 1");
    int q = n / 5, r = n % 5;
    return {r <= 2 ? q : q + 1, r == 0 ? q - 1 : q};
}

ScorePair mb_claimed_path_score(int n) {
    if (n < 1) throw ParseError("claimed path score: length must be >= 1");
    if (n == 1) return {0, 0};
    // Base table for lengths 2..6; length drops by 5 per unit of score.
    static constexpr int base_ls[5] = {1, 1, 1, 1, 2};
    static constexpr int base_rs[5] = {0, 0, 0, 1, 1};
    int q = (n - 2) / 5, r = (n - 2) % 5;
    return {q + base_ls[r], q + base_rs[r]};
}

ScorePair path_union_residual(int p3, int p5) {
    if (p3 < 0 || p3 > 1 || p5 < 0 || p5 > 3)
        throw ParseError("path union residual: p3 in {0,1}, p5 in {0..3}");
    for (const auto& e : kResidualTable)
        if (e.p3 == p3 && e.p5 == p5) return {e.ls, e.rs};
    throw ParseError("path union residual: missing table entry");
}

std::uint64_t path_union_residual_checksum() { return kResidualChecksum; }

ScorePair mb_union_paths_score(const std::vector<int>& lengths) {
    int offset = 0, n3 = 0, n4 = 0, n5 = 0;
    for (int n : lengths) {
        if (n < 1) throw ParseError("union of paths: lengths must be >= 1");
        int r = (n - 1) % 5 + 1; // residue taken in 1..5
        offset += (n - r) / 5;
        if (r == 3) ++n3;
        else if (r == 4) ++n4;
        else if (r == 5) ++n5;
    }
    offset += (n3 + n4) / 2 + 3 * (n5 / 4);
    ScorePair residual = path_union_residual((n3 + n4) % 2, n5 % 4);
    return {offset + residual.ls, offset + residual.rs};
}

namespace {
// Endpoint-claimed path of length k, reduced modulo the length-5 equivalence
// to a representative of length 1..6 plus an integer offset.
std::pair<int, int> claimed_path_representative(int k) {
    if (k == 1) return {0, 1}; // a lone claimed vertex contributes nothing
    return {(k - 2) / 5, (k - 2) % 5 + 2};
}
} // namespace

ScorePair mb_cycle_score(int n) {
    if (n < 3) throw ParseError("cycle score: length must be >= 3");
    int rs = mb_path_score(n - 1).ls;

    // Left opens anywhere (symmetry); Right cuts the remaining arc, leaving a
    // sum of two endpoint-claimed paths with k + k' = n. Right picks the cut.
    Solver solver;
    int ls = INT_MAX;
    for (int k = 1; 2 * k <= n; ++k) {
        auto [q1, rep1] = claimed_path_representative(k);
        auto [q2, rep2] = claimed_path_representative(n - k);
        std::vector<int> lengths;
        std::vector<VertexId> claimed;
        int base = 0;
        for (int rep : {rep1, rep2}) {
            if (rep == 1) continue;
            lengths.push_back(rep);
            claimed.push_back(base);
            base += rep;
        }
        Position p{make_union_paths(lengths), claimed, {}};
        int value = p.terminal() ? p.terminal_score() : solver.solve(p, Player::Left).value;
        ls = std::min(ls, q1 + q2 + value);
    }
    return {ls, rs};
}

ScorePair binary_tree_score(int k) {
    if (k < 0) throw ParseError("binary tree score: negative depth");
    if (k == 0) return {0, 0};
    return {1 << (k - 1), (1 << (k - 1)) - 1};
}

} // namespace incidence
