#include "incidence/reductions.hpp"

#include <algorithm>
#include <set>

#include "incidence/error.hpp"

namespace incidence {

void QBFormula::validate() const {
    std::set<int> vars;
    for (auto [var, qt] : prefix) {
        if (var <= 0) throw ParseError("qbf: variables must be positive");
        if (!vars.insert(var).second)
            throw ParseError("qbf: variable " + std::to_string(var) +
                             " quantified twice");
    }
    for (const auto& clause : clauses) {
        if (clause.empty()) throw ParseError("qbf: empty clause");
        for (int lit : clause) {
            if (lit == 0) throw ParseError("qbf: zero literal");
            if (!vars.count(std::abs(lit)))
                throw ParseError("qbf: unquantified variable " +
                                 std::to_string(std::abs(lit)));
        }
    }
}

int QBFormula::width() const {
    std::size_t w = 0;
    for (const auto& clause : clauses) w = std::max(w, clause.size());
    return static_cast<int>(w);
}

namespace {

constexpr int kMaxOracleVariables = 20;

struct Evaluator {
    const QBFormula& f;
    std::map<int, bool> assignment;

    int satisfied() const {
        int count = 0;
        for (const auto& clause : f.clauses) {
            for (int lit : clause) {
                bool value = assignment.at(std::abs(lit));
                if ((lit > 0) == value) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    }

    int value(std::size_t idx) {
        if (idx == f.prefix.size()) return satisfied();
        auto [var, qt] = f.prefix[idx];
        assignment[var] = false;
        int a = value(idx + 1);
        assignment[var] = true;
        int b = value(idx + 1);
        assignment.erase(var);
        return qt == Quantifier::Exists ? std::max(a, b) : std::min(a, b);
    }
};

void guard_size(const QBFormula& f) {
    if (f.prefix.size() > kMaxOracleVariables)
        throw ResourceError("formula oracle limited to " +
                            std::to_string(kMaxOracleVariables) + " variables");
}

} // namespace

bool qbf_value(const QBFormula& f) {
    f.validate();
    guard_size(f);
    Evaluator e{f, {}};
    return e.value(0) == static_cast<int>(f.clauses.size());
}

int qmax2sat_value(const QBFormula& f) {
    f.validate();
    if (f.width() > 2) throw ParseError("qmax2sat_value: clauses must have width <= 2");
    guard_size(f);
    Evaluator e{f, {}};
    return e.value(0);
}

std::pair<QBFormula, int> qbf3_to_qmax2sat(const QBFormula& f) {
    f.validate();
    for (const auto& clause : f.clauses)
        if (clause.size() != 3)
            throw ParseError("qbf3_to_qmax2sat: clauses must have width 3");

    int fresh = 1;
    for (auto [var, qt] : f.prefix) fresh = std::max(fresh, var + 1);

    QBFormula out;
    out.prefix = f.prefix;
    const int m = static_cast<int>(f.clauses.size());
    if (m == 0) return {out, 0};

    std::vector<int> selector(m);
    for (int i = 0; i < m; ++i) {
        selector[i] = fresh++;
        out.prefix.push_back({selector[i], Quantifier::Exists});
    }
    const int pad = fresh++; // widens the unit clauses; Falsifier keeps it false
    out.prefix.push_back({pad, Quantifier::ForAll});

    for (int i = 0; i < m; ++i) {
        const auto& c = f.clauses[i];
        const int d = selector[i];
        for (int lit : {c[0], c[1], c[2], d}) out.clauses.push_back({lit, pad});
        out.clauses.push_back({-c[0], -c[1]});
        out.clauses.push_back({-c[0], -c[2]});
        out.clauses.push_back({-c[1], -c[2]});
        for (int lit : {c[0], c[1], c[2]}) out.clauses.push_back({-d, lit});
    }
    return {out, 7 * m};
}

std::pair<Hypergraph, ReductionCertificate> qmax2sat_to_incidence(const QBFormula& f,
                                                                  int k) {
    f.validate();
    for (const auto& clause : f.clauses) {
        if (clause.size() != 2)
            throw ParseError("qmax2sat_to_incidence: clauses must have width 2");
        if (clause[0] == clause[1])
            throw ParseError("qmax2sat_to_incidence: degenerate repeated literal");
    }
    const long long m = static_cast<long long>(f.clauses.size());
    if (m == 0) throw ParseError("qmax2sat_to_incidence: need at least one clause");

    int fresh = 1;
    for (auto [var, qt] : f.prefix) fresh = std::max(fresh, var + 1);

    // Pad the prefix to strict alternation: exists outermost, forall
    // innermost. Padding variables appear in no clause but get full stars.
    std::vector<std::pair<int, Quantifier>> padded;
    Quantifier expected = Quantifier::Exists;
    auto flip = [](Quantifier q) {
        return q == Quantifier::Exists ? Quantifier::ForAll : Quantifier::Exists;
    };
    for (auto [var, qt] : f.prefix) {
        while (qt != expected) {
            padded.push_back({fresh++, expected});
            expected = flip(expected);
        }
        padded.push_back({var, qt});
        expected = flip(expected);
    }
    if (expected == Quantifier::ForAll) padded.push_back({fresh++, Quantifier::ForAll});

    const long long two_n = static_cast<long long>(padded.size());
    const long long n = two_n / 2;

    ReductionCertificate cert;
    cert.padded_variables = static_cast<int>(two_n);

    // Centers first (outermost variable first: positive, negative, spare),
    // then all leaves in the same order.
    VertexId next = 0;
    for (auto [var, qt] : padded) {
        cert.literal_vertex[var] = next++;
        cert.literal_vertex[-var] = next++;
        cert.spare_vertex[var] = next++;
    }
    std::vector<Edge> edges;
    for (std::size_t idx = 0; idx < padded.size(); ++idx) {
        const long long i = two_n - static_cast<long long>(idx); // inside position
        const int var = padded[idx].first;
        for (VertexId center : {cert.literal_vertex[var], cert.literal_vertex[-var],
                                cert.spare_vertex[var]})
            for (long long leaf = 0; leaf < 2 * m * i; ++leaf)
                edges.push_back({{center, next++}, EdgeColor::Blue});
    }
    for (const auto& clause : f.clauses) {
        VertexId a = cert.literal_vertex.at(clause[0]);
        VertexId b = cert.literal_vertex.at(clause[1]);
        edges.push_back({{std::min(a, b), std::max(a, b)}, EdgeColor::Blue});
    }

    const long long big_n = 6 * m * n * (2 * n + 1); // total leaf count
    cert.total_vertices = big_n + 6 * n;
    cert.total_edges = big_n + m;
    cert.n_prime = 3 * m * n * (n + 1) - 2 * m * n;
    cert.k_prime = cert.n_prime + m - k + 1;
    if (next != cert.total_vertices ||
        static_cast<long long>(edges.size()) != cert.total_edges)
        throw ParseError("qmax2sat_to_incidence: internal size mismatch");

    return {Hypergraph::build(static_cast<int>(cert.total_vertices), std::move(edges),
                              /*allow_multi=*/true),
            cert};
}

Hypergraph mb_to_mm_universal(const Hypergraph& g) {
    if (!g.all_blue())
        throw ParseError("mb_to_mm_universal: requires an all-Blue board");
    const VertexId hub = g.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Edge lifted = e;
        lifted.vertices.push_back(hub);
        lifted.color = EdgeColor::Green;
        edges.push_back(std::move(lifted));
    }
    return Hypergraph::build(g.vertex_count() + 1, std::move(edges), g.allow_multi());
}

} // namespace incidence
