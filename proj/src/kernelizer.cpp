#include "incidence/kernelizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "incidence/error.hpp"

namespace incidence {

TypePartition nd_partition(const Hypergraph& g) {
    if (!g.is_graph()) throw ParseError("nd_partition: requires a 2-uniform board");
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(b)] = find(a); };

    std::map<std::vector<VertexId>, VertexId> open_rep, closed_rep;
    for (int v = 0; v < n; ++v) {
        std::vector<VertexId> open = g.neighbors(v);
        std::sort(open.begin(), open.end());
        std::vector<VertexId> closed = open;
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        if (auto [it, fresh] = open_rep.try_emplace(std::move(open), v); !fresh)
            unite(it->second, v);
        if (auto [it, fresh] = closed_rep.try_emplace(std::move(closed), v); !fresh)
            unite(it->second, v);
    }

    std::map<int, std::vector<VertexId>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    TypePartition part;
    for (auto& [root, members] : groups) part.classes.push_back(std::move(members));
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    part.nd = static_cast<int>(part.classes.size());
    return part;
}

int neighborhood_diversity(const Hypergraph& g) { return nd_partition(g).nd; }

std::string KernelTranscript::to_text() const {
    std::string s;
    for (auto [l, r] : step1_pairs)
        s += "pair " + std::to_string(l) + " " + std::to_string(r) + "\n";
    s += "edges-removed " + std::to_string(step2_edges_removed) + "\n";
    for (auto [i, step, delta] : step3_rounds)
        s += "balance i " + std::to_string(i) + " s " + std::to_string(step) +
             " kdelta " + std::to_string(delta) + "\n";
    s += "u-size " + std::to_string(step4_u_size) + "\n";
    s += std::string("shortcut ") +
         (shortcut == 0 ? "none" : shortcut == 1 ? "true" : "false") + "\n";
    return s;
}

namespace {

KernelInstance trivial_instance(bool answer, Player first) {
    return {Position{Hypergraph::build(0, {})}, answer ? 0 : 1, first};
}

int left_neighbor_count(const Hypergraph& g, const std::vector<CellState>& cells,
                        VertexId v) {
    int k = 0;
    for (VertexId u : g.neighbors(v))
        if (cells[u] == CellState::Left) ++k;
    return k;
}

// Shared engine: `script` replays a recorded run instead of searching for
// pairs and balancing rounds itself.
std::pair<KernelInstance, KernelTranscript> run(const KernelInstance& inst,
                                                const KernelOptions& opt,
                                                const KernelTranscript* script) {
    const Hypergraph& g = inst.position.graph();
    if (!g.is_graph() || !g.all_blue())
        throw ParseError("kernelize: requires an all-Blue 2-uniform instance");

    KernelTranscript t;
    std::vector<CellState> cells = inst.position.cells();
    long long k = inst.k;
    TypePartition part = nd_partition(g);
    const long long w = part.nd;

    // Step 1: hand one vertex of a same-type free pair with equal
    // Left-neighbor counts to each player; scores are unchanged.
    if (script) {
        for (auto [l, r] : script->step1_pairs) {
            cells[l] = CellState::Left;
            cells[r] = CellState::Right;
            t.step1_pairs.push_back({l, r});
        }
    } else {
        for (;;) {
            bool found = false;
            for (const auto& cls : part.classes) {
                std::map<int, VertexId> by_left;
                for (VertexId v : cls) {
                    if (cells[v] != CellState::Free) continue;
                    auto [it, fresh] = by_left.try_emplace(
                        left_neighbor_count(g, cells, v), v);
                    if (!fresh) {
                        cells[it->second] = CellState::Left;
                        cells[v] = CellState::Right;
                        t.step1_pairs.push_back({it->second, v});
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) break;
        }
    }

    // Step 2: edges inside V_L are banked, Right's vertices are discarded.
    for (const Edge& e : g.edges())
        if (cells[e.vertices[0]] == CellState::Left &&
            cells[e.vertices[1]] == CellState::Left)
            ++t.step2_edges_removed;
    k -= t.step2_edges_removed;

    std::vector<VertexId> free;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cells[v] == CellState::Free) free.push_back(v);
    const int r = static_cast<int>(free.size());

    // Step 3: cap Left-neighbor counts; a surplus above the next count plus r
    // is banked at the first player's share of the leading moves.
    std::vector<std::pair<int, VertexId>> ranked; // (-p, v), ascending = p desc
    for (VertexId v : free) ranked.push_back({-left_neighbor_count(g, cells, v), v});
    std::sort(ranked.begin(), ranked.end());
    std::vector<long long> p(r);
    for (int i = 0; i < r; ++i) p[i] = -ranked[i].first;

    auto share_of = [&](int i) {
        if (opt.literal_share || inst.first == Player::Left) return (i + 1) / 2;
        return i / 2;
    };
    if (script) {
        for (auto [i, s, delta] : script->step3_rounds) {
            for (int j = 0; j < i; ++j) p[j] -= s;
            k -= delta;
            t.step3_rounds.push_back({i, s, delta});
        }
    } else {
        for (;;) {
            std::sort(p.rbegin(), p.rend());
            int i = -1;
            for (int j = 0; j < r; ++j) {
                long long next = j + 1 < r ? p[j + 1] : 0;
                if (p[j] > next + r) { i = j + 1; break; }
            }
            if (i < 0) break;
            long long next = i < r ? p[i] : 0;
            int s = static_cast<int>(p[i - 1] - next - r);
            for (int j = 0; j < i; ++j) p[j] -= s;
            int delta = s * share_of(i);
            k -= delta;
            t.step3_rounds.push_back({i, s, delta});
        }
    }
    std::sort(p.rbegin(), p.rend());

    // Step 4: replace V_L by a fresh Left-claimed block U of size p_1; the
    // i-th free vertex keeps p_i neighbors in U, lowest indices first.
    const int u_size = r > 0 ? static_cast<int>(p[0]) : 0;
    t.step4_u_size = u_size;

    if (k <= 0) {
        t.shortcut = 1;
        return {trivial_instance(true, inst.first), t};
    }
    if (k > w * w * w || r == 0) {
        t.shortcut = 2;
        return {trivial_instance(false, inst.first), t};
    }

    std::vector<int> label(g.vertex_count(), -1);
    for (int i = 0; i < r; ++i) label[ranked[i].second] = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = label[e.vertices[0]], b = label[e.vertices[1]];
        if (a >= 0 && b >= 0)
            edges.push_back({{std::min(a, b), std::max(a, b)}, EdgeColor::Blue});
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < p[i]; ++j)
            edges.push_back({{i, r + j}, EdgeColor::Blue});
    Hypergraph kernel = Hypergraph::build(r + u_size, std::move(edges));
    std::vector<VertexId> left(u_size);
    std::iota(left.begin(), left.end(), r);
    KernelInstance out{Position{std::move(kernel), left, {}}, static_cast<int>(k),
                       inst.first};
    return {std::move(out), t};
}

} // namespace

std::pair<KernelInstance, KernelTranscript> kernelize(const KernelInstance& inst,
                                                      const KernelOptions& opt) {
    return run(inst, opt, nullptr);
}

KernelInstance kernel_replay(const KernelInstance& inst, const KernelTranscript& t,
                             const KernelOptions& opt) {
    return run(inst, opt, &t).first;
}

} // namespace incidence
