#include "incidence/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <map>
#include <set>

#include "incidence/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace incidence {

namespace {

constexpr int kInf = 1 << 20;

void append_u16(std::string& s, int v) {
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

enum class EdgeStatus : std::uint8_t { Live, Dead, ScoredLeft, ScoredRight };

EdgeStatus classify_edge(const Edge& e, const std::vector<CellState>& cells) {
    int left = 0, right = 0, free = 0;
    for (VertexId v : e.vertices) {
        switch (cells[v]) {
            case CellState::Left: ++left; break;
            case CellState::Right: ++right; break;
            case CellState::Free: ++free; break;
        }
    }
    switch (e.color) {
        case EdgeColor::Blue:
            if (right > 0) return EdgeStatus::Dead;
            return free == 0 ? EdgeStatus::ScoredLeft : EdgeStatus::Live;
        case EdgeColor::Red:
            if (left > 0) return EdgeStatus::Dead;
            return free == 0 ? EdgeStatus::ScoredRight : EdgeStatus::Live;
        case EdgeColor::Green:
            if (left > 0 && right > 0) return EdgeStatus::Dead;
            if (free > 0) return EdgeStatus::Live;
            return left > 0 ? EdgeStatus::ScoredLeft : EdgeStatus::ScoredRight;
    }
    return EdgeStatus::Dead;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

char cell_char(CellState c) {
    switch (c) {
        case CellState::Free: return 'F';
        case CellState::Left: return 'L';
        case CellState::Right: return 'R';
    }
    return '?';
}

// Serializes one component under the labeling `order` (original vertex ids in
// label order). `local` maps original id -> label and must cover the component.
std::string serialize_component(const Hypergraph& g, const std::vector<CellState>& cells,
                                const std::vector<VertexId>& order,
                                const std::vector<int>& local,
                                const std::vector<int>& live_edges) {
    std::string s;
    append_u16(s, static_cast<int>(order.size()));
    for (VertexId v : order) s.push_back(cell_char(cells[v]));
    std::vector<std::pair<std::vector<int>, char>> edges;
    for (int ei : live_edges) {
        const Edge& e = g.edges()[ei];
        std::vector<int> labels;
        labels.reserve(e.vertices.size());
        for (VertexId v : e.vertices) labels.push_back(local[v]);
        std::sort(labels.begin(), labels.end());
        edges.push_back({std::move(labels), static_cast<char>(e.color)});
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [labels, color] : edges) {
        s.push_back(color);
        s.push_back(static_cast<char>(labels.size()));
        for (int l : labels) append_u16(s, l);
    }
    return s;
}

struct Reduced {
    int locked = 0;
    std::string key;
};

// Removes settled edges and unreachable claimed vertices, splits into
// connected components, canonicalizes path components under reversal, and
// keys the sorted component multiset plus mover. Equal keys imply equal
// residual (locked score removed) value.
Reduced reduce_position(const Hypergraph& g, const std::vector<CellState>& cells,
                        Player mover, bool want_key) {
    Reduced out;
    const int n = g.vertex_count();
    std::vector<int> live;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        switch (classify_edge(g.edges()[ei], cells)) {
            case EdgeStatus::ScoredLeft: ++out.locked; break;
            case EdgeStatus::ScoredRight: --out.locked; break;
            case EdgeStatus::Live: live.push_back(ei); break;
            case EdgeStatus::Dead: break;
        }
    }
    if (!want_key) return out;

    UnionFind uf(n);
    std::vector<char> kept(n, 0);
    for (int v = 0; v < n; ++v)
        if (cells[v] == CellState::Free) kept[v] = 1;
    for (int ei : live) {
        const auto& verts = g.edges()[ei].vertices;
        for (VertexId v : verts) {
            kept[v] = 1;
            uf.unite(verts[0], v);
        }
    }

    std::map<int, std::vector<VertexId>> comp_vertices;
    for (int v = 0; v < n; ++v)
        if (kept[v]) comp_vertices[uf.find(v)].push_back(v);
    std::map<int, std::vector<int>> comp_edges;
    for (int ei : live) comp_edges[uf.find(g.edges()[ei].vertices[0])].push_back(ei);

    std::vector<int> local(n, -1);
    std::vector<int> live_degree(n, 0);
    std::vector<std::string> serials;
    serials.reserve(comp_vertices.size());
    for (auto& [root, verts] : comp_vertices) {
        const auto& edges = comp_edges[root]; // may be absent: free singleton
        bool two_uniform = true;
        for (int ei : edges) {
            const auto& ev = g.edges()[ei].vertices;
            if (ev.size() != 2) two_uniform = false;
            for (VertexId v : ev) ++live_degree[v];
        }
        bool is_path = two_uniform && edges.size() + 1 == verts.size();
        if (is_path)
            for (VertexId v : verts)
                if (live_degree[v] > 2) is_path = false;

        if (is_path && verts.size() >= 2) {
            // Walk from each endpoint; reversal is an isomorphism, key by min.
            std::vector<VertexId> ends;
            for (VertexId v : verts)
                if (live_degree[v] <= 1) ends.push_back(v);
            std::string best;
            for (VertexId start : ends) {
                std::vector<VertexId> order{start};
                VertexId prev = -1, cur = start;
                while (static_cast<int>(order.size()) < static_cast<int>(verts.size())) {
                    VertexId next = -1;
                    for (int ei : edges) {
                        const auto& ev = g.edges()[ei].vertices;
                        if (ev[0] == cur && ev[1] != prev) next = ev[1];
                        else if (ev[1] == cur && ev[0] != prev) next = ev[0];
                        if (next != -1) break;
                    }
                    order.push_back(next);
                    prev = cur;
                    cur = next;
                }
                for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
                std::string s = serialize_component(g, cells, order, local, edges);
                if (best.empty() || s < best) best = std::move(s);
            }
            serials.push_back(std::move(best));
        } else {
            for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
            serials.push_back(serialize_component(g, cells, verts, local, edges));
        }
        for (int ei : edges)
            for (VertexId v : g.edges()[ei].vertices) live_degree[v] = 0;
    }
    std::sort(serials.begin(), serials.end());
    out.key.push_back(mover == Player::Left ? 'l' : 'r');
    for (const auto& s : serials) {
        out.key.push_back('|');
        out.key += s;
    }
    return out;
}

int count_claimed_neighbors(const Hypergraph& g, const std::vector<CellState>& cells,
                            VertexId v, CellState want) {
    int count = 0;
    for (VertexId u : g.neighbors(v))
        if (cells[u] == want) ++count;
    return count;
}

bool dominates_impl(const Hypergraph& g, const std::vector<CellState>& cells,
                    VertexId v, VertexId u) {
    int v_left = count_claimed_neighbors(g, cells, v, CellState::Left);
    int u_left = count_claimed_neighbors(g, cells, u, CellState::Left);
    const auto& nv = g.neighbors(v);
    int free_outside = 0;
    for (VertexId w : g.neighbors(u))
        if (cells[w] == CellState::Free && !std::binary_search(nv.begin(), nv.end(), w))
            ++free_outside;
    return v_left >= u_left + free_outside;
}

// Interchangeability of two free vertices: the transposition (u v) must map
// the live edge multiset onto itself color for color.
bool interchangeable(const Hypergraph& g, const std::vector<CellState>& cells,
                     const std::set<std::pair<std::vector<VertexId>, char>>& edge_set,
                     VertexId u, VertexId v) {
    auto swapped_present = [&](const Edge& e) {
        std::vector<VertexId> verts = e.vertices;
        for (auto& w : verts) {
            if (w == u) w = v;
            else if (w == v) w = u;
        }
        std::sort(verts.begin(), verts.end());
        return edge_set.count({verts, static_cast<char>(e.color)}) > 0;
    };
    for (int ei : g.incident_edges(u))
        if (!swapped_present(g.edges()[ei])) return false;
    for (int ei : g.incident_edges(v))
        if (!swapped_present(g.edges()[ei])) return false;
    (void)cells;
    return true;
}

} // namespace

std::string canonical_key(const Position& p, Player to_move) {
    return reduce_position(p.graph(), p.cells(), to_move, true).key;
}

bool dominates(const Position& p, VertexId v, VertexId u) {
    if (!p.graph().is_graph() || !p.graph().all_blue())
        throw ParseError("dominates: requires an all-Blue 2-uniform board");
    if (p.cell(v) != CellState::Free || p.cell(u) != CellState::Free)
        throw ParseError("dominates: both vertices must be free");
    return dominates_impl(p.graph(), p.cells(), v, u);
}

Position twin_reduce(const Position& p) {
    if (!p.graph().is_graph() || !p.graph().all_blue())
        throw ParseError("twin_reduce: requires an all-Blue 2-uniform board");
    const Hypergraph& g = p.graph();
    std::vector<CellState> cells = p.cells();

    // One bucket of equal-key free vertices is paired off per round. Open
    // buckets are independent sets and closed buckets cliques, so every pair
    // in the bucket stays equivalent while the bucket is consumed.
    for (;;) {
        bool paired = false;
        for (int closed = 0; closed <= 1 && !paired; ++closed) {
            std::map<std::pair<int, std::vector<VertexId>>, std::vector<VertexId>> buckets;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (cells[v] != CellState::Free) continue;
                std::vector<VertexId> free_nbrs;
                for (VertexId u : g.neighbors(v))
                    if (cells[u] == CellState::Free) free_nbrs.push_back(u);
                if (closed) {
                    free_nbrs.push_back(v);
                    std::sort(free_nbrs.begin(), free_nbrs.end());
                }
                int left = count_claimed_neighbors(g, cells, v, CellState::Left);
                buckets[{left, std::move(free_nbrs)}].push_back(v);
            }
            for (const auto& [key, members] : buckets) {
                if (members.size() < 2) continue;
                for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
                    cells[members[i]] = CellState::Left;
                    cells[members[i + 1]] = CellState::Right;
                }
                paired = true;
                break;
            }
        }
        if (!paired) break;
    }
    return Position(p.graph_ptr(), std::move(cells));
}

// ---------------------------------------------------------------------------

struct Solver::Impl {
    static constexpr int kShards = 64;
    struct Shard {
        std::unordered_map<std::string, std::uint32_t> map;
        std::mutex mu;
    };
    std::array<Shard, kShards> shards;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> hits{0};
    SolveOptions opt;
    bool locking = false;

    struct Ctx {
        const Hypergraph* g = nullptr;
        std::vector<CellState> cells;
        int free_count = 0;
    };

    static std::uint32_t pack(int lo, int hi) {
        // Residual scores are bounded by the edge count, so +/-30000 safely
        // stands in for the search infinities inside the 16-bit fields.
        lo = std::clamp(lo, -30000, 30000);
        hi = std::clamp(hi, -30000, 30000);
        return static_cast<std::uint16_t>(lo) |
               (static_cast<std::uint32_t>(static_cast<std::uint16_t>(hi)) << 16);
    }
    static void unpack(std::uint32_t v, int& lo, int& hi) {
        lo = static_cast<std::int16_t>(v & 0xffff);
        hi = static_cast<std::int16_t>(v >> 16);
    }

    Shard& shard_for(const std::string& key) {
        return shards[std::hash<std::string>{}(key) % kShards];
    }

    bool lookup(const std::string& key, int& lo, int& hi) {
        Shard& s = shard_for(key);
        if (locking) {
            std::lock_guard<std::mutex> lk(s.mu);
            auto it = s.map.find(key);
            if (it == s.map.end()) return false;
            unpack(it->second, lo, hi);
        } else {
            auto it = s.map.find(key);
            if (it == s.map.end()) return false;
            unpack(it->second, lo, hi);
        }
        return true;
    }

    void store(const std::string& key, int lo, int hi) {
        Shard& s = shard_for(key);
        auto merge = [&](std::unordered_map<std::string, std::uint32_t>& m) {
            if (m.size() >= opt.memo_shard_capacity) m.clear();
            auto [it, inserted] = m.try_emplace(key, pack(lo, hi));
            if (!inserted) {
                int plo, phi;
                unpack(it->second, plo, phi);
                it->second = pack(std::max(lo, plo), std::min(hi, phi));
            }
        };
        if (locking) {
            std::lock_guard<std::mutex> lk(s.mu);
            merge(s.map);
        } else {
            merge(s.map);
        }
    }

    void check_budget() {
        if (opt.node_budget && nodes.load(std::memory_order_relaxed) > opt.node_budget)
            throw ResourceError("node budget of " + std::to_string(opt.node_budget) +
                                " exceeded");
    }

    // Candidate moves below the root: symmetry classes and (all-Blue graphs)
    // domination pruning. The root expands every free vertex so that the
    // optimizer set is complete.
    std::vector<VertexId> candidate_moves(const Ctx& c) {
        std::vector<VertexId> moves;
        for (int v = 0; v < c.g->vertex_count(); ++v)
            if (c.cells[v] == CellState::Free) moves.push_back(v);
        if (moves.size() < 2) return moves;

        if (opt.domination_pruning && c.g->is_graph() && c.g->all_blue()) {
            std::vector<VertexId> keep;
            for (VertexId u : moves) {
                bool pruned = false;
                for (VertexId v : moves) {
                    if (v == u) continue;
                    if (dominates_impl(*c.g, c.cells, v, u) &&
                        (!dominates_impl(*c.g, c.cells, u, v) || v < u)) {
                        pruned = true;
                        break;
                    }
                }
                if (!pruned) keep.push_back(u);
            }
            moves = std::move(keep);
        }

        if (opt.symmetry_pruning && moves.size() >= 2) {
            std::set<std::pair<std::vector<VertexId>, char>> edge_set;
            for (const auto& e : c.g->edges())
                if (classify_edge(e, c.cells) == EdgeStatus::Live)
                    edge_set.insert({e.vertices, static_cast<char>(e.color)});
            // Coarse signature first, exact transposition check within buckets.
            std::map<std::vector<int>, std::vector<VertexId>> sig_buckets;
            for (VertexId v : moves) {
                std::vector<int> sig;
                for (int ei : c.g->incident_edges(v)) {
                    const Edge& e = c.g->edges()[ei];
                    if (classify_edge(e, c.cells) != EdgeStatus::Live) continue;
                    int l = 0, r = 0, f = 0;
                    for (VertexId w : e.vertices) {
                        if (w == v) continue;
                        switch (c.cells[w]) {
                            case CellState::Left: ++l; break;
                            case CellState::Right: ++r; break;
                            case CellState::Free: ++f; break;
                        }
                    }
                    sig.push_back((static_cast<int>(e.color) << 24) |
                                  (static_cast<int>(e.vertices.size()) << 16) | (l << 10) |
                                  (r << 5) | f);
                }
                std::sort(sig.begin(), sig.end());
                sig_buckets[std::move(sig)].push_back(v);
            }
            std::vector<VertexId> reps;
            for (const auto& [sig, members] : sig_buckets) {
                std::vector<VertexId> bucket_reps;
                for (VertexId v : members) {
                    bool merged = false;
                    for (VertexId rep : bucket_reps)
                        if (interchangeable(*c.g, c.cells, edge_set, rep, v)) {
                            merged = true;
                            break;
                        }
                    if (!merged) bucket_reps.push_back(v);
                }
                reps.insert(reps.end(), bucket_reps.begin(), bucket_reps.end());
            }
            std::sort(reps.begin(), reps.end());
            moves = std::move(reps);
        }
        return moves;
    }

    int search(Ctx& c, Player mover, int alpha, int beta, bool use_ab) {
        nodes.fetch_add(1, std::memory_order_relaxed);
        check_budget();
        Reduced red = reduce_position(*c.g, c.cells, mover, c.free_count > 0);
        if (c.free_count == 0) return red.locked;

        int lo = -kInf, hi = kInf;
        if (lookup(red.key, lo, hi)) {
            hits.fetch_add(1, std::memory_order_relaxed);
            if (lo == hi) return red.locked + lo;
            if (use_ab) {
                if (red.locked + lo >= beta) return red.locked + lo;
                if (red.locked + hi <= alpha) return red.locked + hi;
                alpha = std::max(alpha, red.locked + lo);
                beta = std::min(beta, red.locked + hi);
            }
        }

        std::vector<VertexId> moves = candidate_moves(c);
        if (use_ab && c.g->is_graph() && c.g->all_blue()) {
            // Highest Left-neighbor count first: the domination heuristic.
            std::vector<std::pair<int, VertexId>> scored;
            for (VertexId v : moves)
                scored.push_back(
                    {-count_claimed_neighbors(*c.g, c.cells, v, CellState::Left), v});
            std::sort(scored.begin(), scored.end());
            for (std::size_t i = 0; i < moves.size(); ++i) moves[i] = scored[i].second;
        }

        const bool maximizing = mover == Player::Left;
        int best = maximizing ? -kInf : kInf;
        int a = alpha, b = beta;
        for (VertexId v : moves) {
            c.cells[v] = maximizing ? CellState::Left : CellState::Right;
            --c.free_count;
            int val = search(c, opponent(mover), a, b, use_ab);
            c.cells[v] = CellState::Free;
            ++c.free_count;
            if (maximizing) {
                best = std::max(best, val);
                if (use_ab) {
                    a = std::max(a, best);
                    if (best >= beta) break;
                }
            } else {
                best = std::min(best, val);
                if (use_ab) {
                    b = std::min(b, best);
                    if (best <= alpha) break;
                }
            }
        }

        int residual = best - red.locked;
        if (!use_ab || (best > alpha && best < beta))
            store(red.key, residual, residual);
        else if (best >= beta)
            store(red.key, residual, kInf);
        else
            store(red.key, -kInf, residual);
        return best;
    }

    int value(const Position& p, Player mover, int alpha, int beta, bool use_ab) {
        Ctx c{&p.graph(), p.cells(), p.free_count()};
        return search(c, mover, alpha, beta, use_ab);
    }
};

Solver::Solver(SolveOptions options)
    : options_(options), impl_(std::make_unique<Impl>()) {
    impl_->opt = options_;
    impl_->locking = options_.workers > 1;
}

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

void Solver::clear_memo() {
    for (auto& s : impl_->shards) s.map.clear();
}

namespace {

// Per-component fresh subpositions, for sum-bound window seeding.
std::vector<Position> split_components(const Position& p) {
    const Hypergraph& g = p.graph();
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& e : g.edges())
        for (VertexId v : e.vertices) uf.unite(e.vertices[0], v);
    std::map<int, std::vector<VertexId>> comps;
    for (int v = 0; v < n; ++v) comps[uf.find(v)].push_back(v);
    std::vector<Position> out;
    for (auto& [root, verts] : comps) {
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (const auto& e : g.edges())
            if (uf.find(e.vertices[0]) == root) {
                Edge copy = e;
                for (auto& v : copy.vertices) v = local[v];
                edges.push_back(std::move(copy));
            }
        Hypergraph sub = Hypergraph::build(static_cast<int>(verts.size()), std::move(edges),
                                           g.allow_multi());
        std::vector<CellState> cells;
        cells.reserve(verts.size());
        for (VertexId v : verts) cells.push_back(p.cell(v));
        out.emplace_back(std::make_shared<Hypergraph>(std::move(sub)), std::move(cells));
    }
    return out;
}

} // namespace

SolveResult Solver::solve(const Position& p, Player to_move) {
    Position q = options_.twin_reduction ? twin_reduce(p) : p;

    SolveResult result;
    std::uint64_t nodes_before = impl_->nodes.load();
    std::uint64_t hits_before = impl_->hits.load();

    if (q.terminal()) {
        result.value = q.terminal_score();
        result.nodes_expanded = 0;
        result.memo_hits = 0;
        return result;
    }

    // Sum-bound seeding: values of a sum lie within the summed per-component
    // score pairs, so a window around them never clips the true value.
    int alpha = -kInf, beta = kInf;
    if (options_.alpha_beta) {
        auto comps = split_components(q);
        if (comps.size() > 1) {
            int rs_sum = 0, ls_sum = 0;
            bool ok = true;
            for (const auto& comp : comps) {
                if (comp.terminal()) {
                    int s = comp.terminal_score();
                    rs_sum += s;
                    ls_sum += s;
                    continue;
                }
                if (comp.free_count() > 16) { ok = false; break; }
                rs_sum += impl_->value(comp, Player::Right, -kInf, kInf, true);
                ls_sum += impl_->value(comp, Player::Left, -kInf, kInf, true);
            }
            if (ok) {
                alpha = rs_sum - 1;
                beta = ls_sum + 1;
            }
        }
    }

    std::vector<VertexId> moves = q.free_vertices();
    std::vector<int> values(moves.size());
    const bool maximizing = to_move == Player::Left;
    const CellState mark = maximizing ? CellState::Left : CellState::Right;

    auto eval_child = [&](std::size_t i) {
        Impl::Ctx c{&q.graph(), q.cells(), q.free_count()};
        c.cells[moves[i]] = mark;
        --c.free_count;
        // Fixed window per child: every child whose value lies inside it is
        // evaluated exactly, so the optimizer set is complete.
        values[i] = impl_->search(c, opponent(to_move), alpha, beta, options_.alpha_beta);
    };

#ifdef _OPENMP
    if (options_.workers > 1) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) num_threads(options_.workers)
        for (long i = 0; i < static_cast<long>(moves.size()); ++i) {
            try {
                eval_child(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else
#endif
    {
        for (std::size_t i = 0; i < moves.size(); ++i) eval_child(i);
    }

    int best = maximizing ? -kInf : kInf;
    for (int v : values) best = maximizing ? std::max(best, v) : std::min(best, v);
    result.value = best;
    for (std::size_t i = 0; i < moves.size(); ++i)
        if (values[i] == best) result.optimal_moves.push_back(moves[i]);
    result.nodes_expanded = impl_->nodes.load() - nodes_before;
    result.memo_hits = impl_->hits.load() - hits_before;
    return result;
}

ScorePair Solver::score_pair(const Position& p) {
    return {solve(p, Player::Left).value, solve(p, Player::Right).value};
}

bool Solver::decide_at_least(const Position& p, Player to_move, int threshold) {
    Position q = options_.twin_reduction ? twin_reduce(p) : p;
    if (q.terminal()) return q.terminal_score() >= threshold;
    int val = impl_->value(q, to_move, threshold - 1, threshold, true);
    return val >= threshold;
}

bool Solver::milnor_equivalent(const Position& g, const Position& h,
                               int free_vertex_budget) {
    Position sum = disjoint_sum(g, h.negated());
    if (sum.free_count() > free_vertex_budget)
        throw ResourceError("equivalence board has " + std::to_string(sum.free_count()) +
                            " free vertices, budget " + std::to_string(free_vertex_budget));
    ScorePair sp = score_pair(sum);
    return sp.ls == 0 && sp.rs == 0;
}

} // namespace incidence
