// Acceptance run: one line per criterion, "PASS"/"FAIL" plus one
// non-blocking "REPORT" probe at the end. Exits nonzero iff a blocking
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "incidence/dyadic.hpp"
#include "incidence/formulas.hpp"
#include "incidence/hypergraph.hpp"
#include "incidence/kernelizer.hpp"
#include "incidence/reductions.hpp"
#include "incidence/solver.hpp"

using namespace incidence;

namespace {

constexpr auto E_ = Quantifier::Exists;
constexpr auto A_ = Quantifier::ForAll;

// --- tiny check harness ------------------------------------------------------

struct Outcome {
    bool ok = true;
    std::string note; // first failure, or a summary for reports
    int checks = 0;

    void expect(bool condition, const std::string& what) {
        ++checks;
        if (!condition && ok) {
            ok = false;
            note = what;
        }
    }
};

// --- isomorphism-free graph enumeration (edge bitmasks, colex indexing) ------

int edge_index(int i, int j) { // i < j
    return j * (j - 1) / 2 + i;
}

std::vector<std::vector<std::array<int, 7>>> permutation_tables() {
    std::vector<std::vector<std::array<int, 7>>> tables(8);
    for (int n = 1; n <= 7; ++n) {
        std::array<int, 7> p{};
        std::iota(p.begin(), p.begin() + n, 0);
        do {
            tables[n].push_back(p);
        } while (std::next_permutation(p.begin(), p.begin() + n));
    }
    return tables;
}

std::uint32_t apply_permutation(int n, std::uint32_t mask, const std::array<int, 7>& p) {
    std::uint32_t out = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> edge_index(i, j) & 1u) {
                int a = p[i], b = p[j];
                if (a > b) std::swap(a, b);
                out |= 1u << edge_index(a, b);
            }
    return out;
}

std::uint32_t canonical_mask(int n, std::uint32_t mask,
                             const std::vector<std::array<int, 7>>& perms) {
    std::uint32_t best = mask;
    for (const auto& p : perms) best = std::min(best, apply_permutation(n, mask, p));
    return best;
}

/// One representative edge mask per isomorphism class, for each vertex count
/// 1..7, built by augmenting each (n-1)-vertex class with a new vertex.
/// Colex edge indexing keeps old edge bits stable under augmentation.
std::vector<std::vector<std::uint32_t>> isomorphism_free_graphs() {
    static const auto perms = permutation_tables();
    std::vector<std::vector<std::uint32_t>> classes(8);
    classes[1] = {0};
    for (int n = 2; n <= 7; ++n) {
        std::set<std::uint32_t> found;
        for (std::uint32_t base : classes[n - 1])
            for (std::uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
                std::uint32_t mask = base;
                for (int i = 0; i < n - 1; ++i)
                    if (nbrs >> i & 1u) mask |= 1u << edge_index(i, n - 1);
                found.insert(canonical_mask(n, mask, perms[n]));
            }
        classes[n].assign(found.begin(), found.end());
    }
    return classes;
}

Hypergraph graph_from_mask(int n, std::uint32_t mask, EdgeColor color) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> edge_index(i, j) & 1u) edges.push_back({{i, j}, color});
    return Hypergraph::build(n, std::move(edges));
}

// --- shared fixtures ---------------------------------------------------------

// 22-vertex, 5-class worked kernelization example: a K5 class adjacent to two
// independent classes and a K4 class; a K3 class hangs off one independent
// class.
Hypergraph worked_example() {
    auto clique = [](std::vector<Edge>& edges, int from, int to) {
        for (int u = from; u <= to; ++u)
            for (int v = u + 1; v <= to; ++v) edges.push_back({{u, v}, EdgeColor::Blue});
    };
    auto join = [](std::vector<Edge>& edges, int a0, int a1, int b0, int b1) {
        for (int u = a0; u <= a1; ++u)
            for (int v = b0; v <= b1; ++v)
                edges.push_back({{std::min(u, v), std::max(u, v)}, EdgeColor::Blue});
    };
    std::vector<Edge> edges;
    clique(edges, 0, 4);
    clique(edges, 10, 13);
    clique(edges, 19, 21);
    join(edges, 0, 4, 5, 9);
    join(edges, 0, 4, 10, 13);
    join(edges, 0, 4, 14, 18);
    join(edges, 5, 9, 19, 21);
    return Hypergraph::build(22, std::move(edges));
}

Hypergraph random_graph(std::mt19937& rng, int n, double density, EdgeColor color) {
    std::vector<Edge> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) edges.push_back({{i, j}, color});
    return Hypergraph::build(n, std::move(edges));
}

Hypergraph random_hypergraph(std::mt19937& rng, int n, int m, int max_size) {
    std::set<std::pair<std::vector<VertexId>, EdgeColor>> seen;
    std::vector<Edge> edges;
    for (int guard = 0; guard < 40 * m && static_cast<int>(edges.size()) < m; ++guard) {
        int size = 1 + static_cast<int>(rng() % max_size);
        std::set<VertexId> verts;
        while (static_cast<int>(verts.size()) < std::min(size, n))
            verts.insert(static_cast<VertexId>(rng() % n));
        std::vector<VertexId> sorted(verts.begin(), verts.end());
        auto color = static_cast<EdgeColor>(rng() % 3);
        if (seen.insert({sorted, color}).second) edges.push_back({sorted, color});
    }
    return Hypergraph::build(n, std::move(edges));
}

// Random graph with a prescribed small neighborhood diversity: a handful of
// classes, each a clique or an independent set, with random class joins.
Hypergraph random_bounded_diversity_graph(std::mt19937& rng, int max_classes, int max_n) {
    const int t = 2 + static_cast<int>(rng() % (max_classes - 1));
    std::vector<int> sizes(t, 1);
    int total = t;
    while (total < max_n && rng() % 3 != 0) {
        ++sizes[rng() % t];
        ++total;
    }
    std::vector<int> start(t + 1, 0);
    for (int c = 0; c < t; ++c) start[c + 1] = start[c] + sizes[c];
    std::vector<Edge> edges;
    for (int c = 0; c < t; ++c)
        if (sizes[c] > 1 && rng() % 2 == 0)
            for (int u = start[c]; u < start[c + 1]; ++u)
                for (int v = u + 1; v < start[c + 1]; ++v)
                    edges.push_back({{u, v}, EdgeColor::Blue});
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            if (rng() % 2 == 0)
                for (int u = start[a]; u < start[a + 1]; ++u)
                    for (int v = start[b]; v < start[b + 1]; ++v)
                        edges.push_back({{u, v}, EdgeColor::Blue});
    return Hypergraph::build(total, std::move(edges));
}

bool kernel_decision(Solver& solver, const KernelInstance& inst) {
    if (inst.position.terminal()) return inst.position.terminal_score() >= inst.k;
    return solver.decide_at_least(inst.position, inst.first, inst.k);
}

QBFormula make_formula(std::vector<std::pair<int, Quantifier>> prefix,
                       std::vector<std::vector<int>> clauses) {
    QBFormula f;
    f.prefix = std::move(prefix);
    f.clauses = std::move(clauses);
    return f;
}

std::string pair_text(ScorePair sp) {
    return "(" + std::to_string(sp.ls) + "," + std::to_string(sp.rs) + ")";
}

// --- criteria ----------------------------------------------------------------

Outcome criterion_path_tables() {
    Outcome out;
    Solver solver;
    static constexpr int ls[10] = {0, 0, 1, 1, 1, 1, 1, 2, 2, 2};
    static constexpr int rs[10] = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
    for (int n = 1; n <= 10; ++n)
        out.expect(solver.score_pair(Position{make_path(n)}) == ScorePair{ls[n - 1], rs[n - 1]},
                   "path table mismatch at n=" + std::to_string(n));
    static constexpr int cls[11] = {0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3};
    static constexpr int crs[11] = {0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2};
    for (int n = 1; n <= 11; ++n)
        out.expect(solver.score_pair(Position{make_path(n), {0}, {}}) ==
                       ScorePair{cls[n - 1], crs[n - 1]},
                   "claimed-endpoint table mismatch at n=" + std::to_string(n));
    return out;
}

Outcome criterion_closed_forms() {
    Outcome out;
    SolveOptions o;
    o.alpha_beta = true;
    Solver solver(o);
    for (int n = 1; n <= 14; ++n) {
        out.expect(mb_path_score(n) == solver.score_pair(Position{make_path(n)}),
                   "path closed form off at n=" + std::to_string(n));
        out.expect(mb_claimed_path_score(n) ==
                       solver.score_pair(Position{make_path(n), {0}, {}}),
                   "claimed closed form off at n=" + std::to_string(n));
    }
    // Every multiset of path lengths with total <= 20, as nonincreasing parts.
    std::vector<int> parts;
    std::function<void(int, int)> recurse = [&](int remaining, int largest) {
        if (!parts.empty()) {
            ScorePair formula = mb_union_paths_score(parts);
            ScorePair searched = solver.score_pair(Position{make_union_paths(parts)});
            std::string tag;
            for (int p : parts) tag += std::to_string(p) + " ";
            out.expect(formula == searched, "union closed form off at [" + tag + "]: " +
                                                pair_text(formula) + " vs " +
                                                pair_text(searched));
        }
        for (int next = std::min(remaining, largest); next >= 1; --next) {
            parts.push_back(next);
            recurse(remaining - next, next);
            parts.pop_back();
        }
    };
    recurse(20, 20);
    return out;
}

Outcome criterion_mm_formula(const std::vector<std::vector<std::uint32_t>>& classes) {
    Outcome out;
    Solver solver;
    for (int n = 1; n <= 7; ++n)
        for (std::uint32_t mask : classes[n]) {
            Hypergraph g = graph_from_mask(n, mask, EdgeColor::Green);
            out.expect(mm_score(g) == solver.solve(Position{g}, Player::Left).value,
                       "degree formula off on n=" + std::to_string(n) +
                           " mask=" + std::to_string(mask));
        }
    std::mt19937 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        Hypergraph g =
            random_graph(rng, 3 + static_cast<int>(rng() % 10), 0.4, EdgeColor::Green);
        out.expect(mm_score(g) == solver.solve(Position{g}, Player::Left).value,
                   "degree formula off on random trial " + std::to_string(trial));
    }
    return out;
}

Outcome criterion_equivalences() {
    Outcome out;
    Solver solver;
    auto blue = [](int n) { return Position{make_path(n)}; };
    auto red = [](int n) { return Position{make_path(n, EdgeColor::Red)}; };
    // Shifting a path by five vertices adds one point: the blue path plus the
    // red (negated) short path is worth exactly one for either mover.
    for (int n = 1; n <= 4; ++n)
        out.expect(solver.score_pair(disjoint_sum(blue(n + 5), red(n))) == ScorePair{1, 1},
                   "five-shift identity off at n=" + std::to_string(n));
    // The four short-path identities.
    out.expect(solver.score_pair(blue(1)) == ScorePair{0, 0}, "P1 not null");
    out.expect(solver.score_pair(blue(2)) == ScorePair{0, 0}, "P2 not null");
    out.expect(solver.milnor_equivalent(blue(1), blue(2)), "P1 != P2");
    out.expect(solver.score_pair(disjoint_sum(blue(3), blue(3))) == ScorePair{1, 1},
               "2*P3 != 1");
    out.expect(solver.milnor_equivalent(blue(4), blue(3)), "P4 != P3");
    out.expect(solver.score_pair(disjoint_sum(disjoint_sum(blue(5), blue(5)), blue(3))) ==
                   ScorePair{2, 2},
               "2*P5 + P3 != 2");
    // Consequence via the group structure, solved over component-canonical
    // keys: four disjoint five-paths are worth exactly three.
    out.expect(solver.score_pair(Position{make_union_paths({5, 5, 5, 5})}) ==
                   ScorePair{3, 3},
               "4*P5 != 3");
    return out;
}

Outcome criterion_cycles() {
    Outcome out;
    SolveOptions o;
    o.alpha_beta = true;
    Solver solver(o);
    for (int n = 3; n <= 12; ++n) {
        ScorePair formula = mb_cycle_score(n);
        out.expect(formula == solver.score_pair(Position{make_cycle(n)}),
                   "cycle closed form off at n=" + std::to_string(n));
        out.expect(formula.rs == mb_path_score(n - 1).ls,
                   "cycle/path identity off at n=" + std::to_string(n));
    }
    return out;
}

Outcome criterion_binary_trees() {
    Outcome out;
    SolveOptions o;
    o.twin_reduction = true;
    o.alpha_beta = true;
    Solver solver(o);
    for (int k = 1; k <= 3; ++k) {
        ScorePair expected{1 << (k - 1), (1 << (k - 1)) - 1};
        out.expect(binary_tree_score(k) == expected,
                   "tree closed form off at depth " + std::to_string(k));
        out.expect(solver.score_pair(Position{make_binary_tree(k)}) == expected,
                   "tree search off at depth " + std::to_string(k));
    }
    return out;
}

Outcome criterion_es_bounds(const std::vector<std::vector<std::uint32_t>>& classes) {
    Outcome out;
    SolveOptions o;
    o.alpha_beta = true;
    Solver solver(o);
    for (int n = 1; n <= 7; ++n)
        for (std::uint32_t mask : classes[n]) {
            Hypergraph g = graph_from_mask(n, mask, EdgeColor::Blue);
            const int m = g.edge_count();
            ScorePair sp = solver.score_pair(Position{g});
            out.expect(8 * sp.ls >= 2 * m - n, "lower bound broken on n=" +
                                                   std::to_string(n) + " mask=" +
                                                   std::to_string(mask));
            out.expect(4 * sp.rs <= m, "upper bound broken on n=" + std::to_string(n) +
                                           " mask=" + std::to_string(mask));
        }
    out.expect(solver.solve(Position{make_complete(8)}, Player::Left).value == 6,
               "K8 tightness witness off");
    out.expect(solver.solve(Position{make_union_paths({3, 3})}, Player::Right).value == 1,
               "twin-path tightness witness off");
    return out;
}

Outcome criterion_unique_moves() {
    Outcome out;
    Solver solver;
    Position p{make_unique_move_board()};
    auto left = solver.solve(p, Player::Left);
    auto right = solver.solve(p, Player::Right);
    out.expect(left.value == 4, "left value " + std::to_string(left.value));
    out.expect(left.optimal_moves == std::vector<VertexId>{0}, "left move set not {u}");
    out.expect(right.value == 2, "right value " + std::to_string(right.value));
    out.expect(right.optimal_moves == std::vector<VertexId>{8}, "right move set not {v}");
    return out;
}

Outcome criterion_kernelization() {
    Outcome out;
    // Worked transcript: k 30 -> 14 -> 13, leading degree 8 -> 7, |U| = 7.
    {
        KernelInstance inst{Position{worked_example()}, 30, Player::Left};
        auto [kernel, t] = kernelize(inst);
        out.expect(t.step1_pairs.size() == 9 && t.step2_edges_removed == 16,
                   "worked transcript steps 1-2 off");
        out.expect(t.step3_rounds.size() == 1 && t.step3_rounds[0] == std::tuple{1, 1, 1},
                   "worked transcript balance round off");
        out.expect(t.step4_u_size == 7 && kernel.k == 13, "worked transcript result off");
    }
    std::mt19937 rng(104);
    SolveOptions o;
    o.twin_reduction = true;
    o.domination_pruning = true;
    Solver solver(o);
    int instances = 0;
    while (instances < 500) {
        Hypergraph g = random_bounded_diversity_graph(rng, 5, 10);
        const long long w = neighborhood_diversity(g);
        if (w > 5) {
            out.expect(false, "generator produced diversity " + std::to_string(w));
            break;
        }
        const int m = g.edge_count();
        for (Player first : {Player::Left, Player::Right}) {
            const int value = solver.solve(Position{g}, first).value;
            for (int k = 0; k <= m; ++k) {
                KernelInstance inst{Position{g}, k, first};
                auto [kernel, t] = kernelize(inst);
                out.expect(kernel.position.vertex_count() <= w * w + w,
                           "vertex bound broken");
                out.expect(kernel.position.graph().edge_count() <= w * w * w,
                           "edge bound broken");
                out.expect((value >= k) == kernel_decision(solver, kernel),
                           "decision flipped at k=" + std::to_string(k));
                ++instances;
            }
        }
    }
    out.expect(instances >= 500, "too few instances");
    return out;
}

Outcome criterion_reductions() {
    Outcome out;
    // Clause gadget satisfaction counts by (true source literals, selector),
    // with the shared pad variable held false.
    {
        QBFormula f = make_formula({{1, E_}, {2, E_}, {3, E_}}, {{1, 2, 3}});
        auto [g, k] = qbf3_to_qmax2sat(f);
        out.expect(k == 7, "threshold off");
        static constexpr int table[4][2] = {{6, 4}, {7, 6}, {7, 7}, {6, 7}};
        for (int mask = 0; mask < 8; ++mask)
            for (int d = 0; d < 2; ++d) {
                std::array<bool, 6> value{}; // 1..3 literals, 4 selector, 5 pad
                for (int v = 1; v <= 3; ++v) value[v] = (mask >> (v - 1)) & 1;
                value[4] = d != 0;
                value[5] = false;
                int satisfied = 0;
                for (const auto& clause : g.clauses)
                    for (int lit : clause)
                        if ((lit > 0) == value[std::abs(lit)]) {
                            ++satisfied;
                            break;
                        }
                const int truthy = (mask & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
                out.expect(satisfied == table[truthy][d],
                           "gadget count off at mask=" + std::to_string(mask) +
                               " d=" + std::to_string(d));
            }
    }
    // Exhaustive width-lowering soundness: three variables, one or two clauses.
    {
        std::vector<std::vector<int>> signs;
        for (int s = 0; s < 8; ++s)
            signs.push_back({(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3});
        for (int qs = 0; qs < 8; ++qs) {
            std::vector<std::pair<int, Quantifier>> prefix;
            for (int v = 1; v <= 3; ++v)
                prefix.push_back({v, (qs >> (v - 1)) & 1 ? A_ : E_});
            for (std::size_t a = 0; a < signs.size(); ++a) {
                QBFormula one = make_formula(prefix, {signs[a]});
                auto [g1, k1] = qbf3_to_qmax2sat(one);
                out.expect(qbf_value(one) == (qmax2sat_value(g1) >= k1),
                           "width lowering unsound (one clause)");
                for (std::size_t b = a; b < signs.size(); ++b) {
                    QBFormula two = make_formula(prefix, {signs[a], signs[b]});
                    auto [g2, k2] = qbf3_to_qmax2sat(two);
                    out.expect(qbf_value(two) == (qmax2sat_value(g2) >= k2),
                               "width lowering unsound (two clauses)");
                }
            }
        }
    }
    // Board-level soundness: exhaustive for <= 2 variables, a deterministic
    // sample of the 3- and 4-variable space.
    {
        SolveOptions o;
        o.twin_reduction = true;
        o.domination_pruning = true;
        o.alpha_beta = true;
        auto check_board = [&](const QBFormula& f, int k) {
            const bool falsifier_wins = qmax2sat_value(f) < k;
            auto [g, cert] = qmax2sat_to_incidence(f, k);
            Solver board_solver(o);
            const bool reached = board_solver.decide_at_least(
                Position{g}, Player::Right, static_cast<int>(cert.k_prime));
            out.expect(reached == falsifier_wins,
                       "board decision off for k=" + std::to_string(k) + " formula " +
                           std::to_string(f.prefix.size()) + "v" +
                           std::to_string(f.clauses.size()) + "c");
        };
        for (int v = 1; v <= 4; ++v) {
            std::vector<int> literals;
            for (int x = 1; x <= v; ++x) {
                literals.push_back(x);
                literals.push_back(-x);
            }
            std::vector<std::vector<int>> pairs;
            for (std::size_t a = 0; a < literals.size(); ++a)
                for (std::size_t b = a + 1; b < literals.size(); ++b)
                    pairs.push_back({literals[a], literals[b]});
            std::vector<std::pair<QBFormula, int>> cases;
            for (int qs = 0; qs < (1 << v); ++qs) {
                std::vector<std::pair<int, Quantifier>> prefix;
                for (int x = 1; x <= v; ++x)
                    prefix.push_back({x, (qs >> (x - 1)) & 1 ? A_ : E_});
                for (std::size_t a = 0; a < pairs.size(); ++a) {
                    for (int k = 0; k <= 1; ++k)
                        cases.push_back({make_formula(prefix, {pairs[a]}), k});
                    for (std::size_t b = a; b < pairs.size(); ++b)
                        for (int k = 0; k <= 2; ++k)
                            cases.push_back(
                                {make_formula(prefix, {pairs[a], pairs[b]}), k});
                }
            }
            if (v >= 3) { // sample the larger spaces deterministically
                std::mt19937 rng(105 + v);
                std::shuffle(cases.begin(), cases.end(), rng);
                cases.resize(v == 3 ? 30 : 12);
            }
            for (const auto& [f, k] : cases) check_board(f, k);
        }
    }
    // Universal lift: every all-Blue labeled graph with <= 5 vertices.
    {
        Solver solver;
        for (int n = 1; n <= 5; ++n)
            for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
                Hypergraph g = graph_from_mask(n, mask, EdgeColor::Blue);
                if (g.edge_count() == 0) continue;
                const int rs = solver.solve(Position{g}, Player::Right).value;
                const int ls =
                    solver.solve(Position{mb_to_mm_universal(g)}, Player::Left).value;
                out.expect(ls == rs, "lift equality off on n=" + std::to_string(n) +
                                         " mask=" + std::to_string(mask));
            }
    }
    return out;
}

Outcome criterion_invariants() {
    Outcome out;
    std::mt19937 rng(106);
    SolveOptions o;
    o.alpha_beta = true;
    Solver solver(o);
    auto random_position = [&](const Hypergraph& g, int claims) {
        Position p{g};
        for (int c = 0; c < claims; ++c) {
            auto free = p.free_vertices();
            if (free.empty()) break;
            p = p.claim(c % 2 == 0 ? Player::Left : Player::Right,
                        free[rng() % free.size()]);
        }
        return p;
    };
    int cases = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        Hypergraph g = trial % 2 == 0
                           ? random_graph(rng, n, 0.5, static_cast<EdgeColor>(rng() % 3))
                           : random_hypergraph(rng, n, 2 + static_cast<int>(rng() % 5), 4);
        Position p = random_position(g, static_cast<int>(rng() % 4));
        ScorePair sp = solver.score_pair(p);
        out.expect(sp.ls >= sp.rs, "zugzwang found on trial " + std::to_string(trial));
        ++cases;
        ScorePair neg = solver.score_pair(p.negated());
        out.expect(neg.ls == -sp.rs && neg.rs == -sp.ls,
                   "negation antisymmetry off on trial " + std::to_string(trial));
        ++cases;
    }
    for (int trial = 0; trial < 250; ++trial) {
        Hypergraph g = random_graph(rng, 3 + static_cast<int>(rng() % 3), 0.6,
                                    static_cast<EdgeColor>(rng() % 3));
        Hypergraph h = random_hypergraph(rng, 3 + static_cast<int>(rng() % 3), 3, 3);
        ScorePair sg = solver.score_pair(Position{g});
        ScorePair sh = solver.score_pair(Position{h});
        ScorePair sum = solver.score_pair(Position{disjoint_sum(g, h)});
        bool sandwich = sg.rs + sh.rs <= sum.rs && sum.rs <= sg.ls + sh.rs &&
                        sg.ls + sh.rs <= sum.ls && sum.ls <= sg.ls + sh.ls;
        out.expect(sandwich, "sum sandwich broken on trial " + std::to_string(trial));
        ++cases;
    }
    out.expect(cases >= 1000, "too few cases");
    return out;
}

/// Non-blocking probe: hunt for a first-player score beating (max degree+1)/2
/// on small all-Green hypergraphs. Returns a report string in `note`.
Outcome criterion_conjecture_probe() {
    Outcome out;
    constexpr int n = 5;
    std::vector<int> candidates; // every nonempty vertex subset as a bitmask
    for (int mask = 1; mask < (1 << n); ++mask) candidates.push_back(mask);

    std::vector<int> chosen;
    long long boards = 0, violations = 0;
    std::string first_violation;

    // Left-first alternating play on the current edge set, by brute force.
    std::function<int(int, int, int)> value = [&](int left, int right, int depth) -> int {
        if (depth == n) {
            int score = 0;
            for (int e : chosen) {
                if ((e & ~left) == 0) ++score;
                if ((e & ~right) == 0) --score;
            }
            return score;
        }
        const bool left_turn = depth % 2 == 0;
        int best = left_turn ? -1000 : 1000;
        for (int v = 0; v < n; ++v) {
            const int bit = 1 << v;
            if ((left | right) & bit) continue;
            int child = left_turn ? value(left | bit, right, depth + 1)
                                  : value(left, right | bit, depth + 1);
            best = left_turn ? std::max(best, child) : std::min(best, child);
        }
        return best;
    };

    std::function<void(std::size_t)> enumerate = [&](std::size_t from) {
        if (!chosen.empty()) {
            ++boards;
            int delta = 0;
            for (int v = 0; v < n; ++v) {
                int deg = 0;
                for (int e : chosen) deg += (e >> v) & 1;
                delta = std::max(delta, deg);
            }
            if (2 * value(0, 0, 0) > delta + 1) {
                ++violations;
                if (first_violation.empty())
                    for (int e : chosen)
                        first_violation += "{" + std::to_string(e) + "} ";
            }
        }
        if (chosen.size() == 6) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            chosen.push_back(candidates[i]);
            enumerate(i + 1);
            chosen.pop_back();
        }
    };
    enumerate(0);

    std::ostringstream report;
    report << boards << " boards; " << violations << " score(s) above (max degree+1)/2";
    if (violations > 0) report << "; first edge-mask set: " << first_violation;
    out.note = report.str();
    out.checks = static_cast<int>(boards);
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* description;
        std::function<Outcome()> run;
        double time_limit_seconds; // 0 = none
        bool blocking;
    };

    const auto classes = isomorphism_free_graphs();
    {
        // The enumeration itself must be sound before anything trusts it.
        static constexpr std::size_t expected[8] = {0, 1, 2, 4, 11, 34, 156, 1044};
        for (int n = 1; n <= 7; ++n)
            if (classes[n].size() != expected[n]) {
                std::printf("graph enumeration self-check failed at n=%d (%zu)\n", n,
                            classes[n].size());
                return 1;
            }
    }

    const std::vector<Criterion> criteria = {
        {1, "path and claimed-endpoint score tables", criterion_path_tables, 10.0, true},
        {2, "closed forms vs search on paths and unions", criterion_closed_forms, 300.0,
         true},
        {3, "degree formula on all small graphs", [&] { return criterion_mm_formula(classes); },
         0.0, true},
        {4, "path equivalence identities", criterion_equivalences, 0.0, true},
        {5, "cycle closed form and cycle/path identity", criterion_cycles, 0.0, true},
        {6, "complete binary trees via twin reduction", criterion_binary_trees, 60.0, true},
        {7, "potential-method score bounds on all small graphs",
         [&] { return criterion_es_bounds(classes); }, 0.0, true},
        {8, "unique optimal moves on the two-star board", criterion_unique_moves, 0.0,
         true},
        {9, "kernelization decisions, transcript and size bounds",
         criterion_kernelization, 0.0, true},
        {10, "formula-to-board reduction soundness", criterion_reductions, 0.0, true},
        {11, "nonzugzwang, negation and sum-bound properties", criterion_invariants, 0.0,
         true},
        {12, "first-player score vs degree bound probe", criterion_conjecture_probe, 0.0,
         false},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.note = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
            out.ok = false;
            out.note = "time limit exceeded";
        }
        if (!c.blocking) {
            std::printf("criterion %d (%s): REPORT %s [%.1fs]\n", c.id, c.description,
                        out.note.c_str(), seconds);
            continue;
        }
        if (out.ok) {
            std::printf("criterion %d (%s): PASS (%d checks, %.1fs)\n", c.id,
                        c.description, out.checks, seconds);
        } else {
            ++failures;
            std::printf("criterion %d (%s): FAIL — %s [%.1fs]\n", c.id, c.description,
                        out.note.c_str(), seconds);
        }
    }
    return failures == 0 ? 0 : 1;
}
