#pragma once

#include <map>
#include <utility>
#include <vector>

#include "incidence/hypergraph.hpp"

namespace incidence {

enum class Quantifier : std::uint8_t { Exists, ForAll };

/// Prenex quantified CNF. Variables are positive integers; literals are
/// signed variable ids. The prefix is ordered outermost first and must
/// mention each clause variable exactly once.
struct QBFormula {
    std::vector<std::pair<int, Quantifier>> prefix;
    std::vector<std::vector<int>> clauses;

    void validate() const; // throws ParseError on malformed input
    int width() const;     // maximum clause size (0 when clause-free)
};

/// True iff the Satisfier wins the full-satisfaction game: quantifiers are
/// resolved in prefix order, exists maximizing and forall minimizing.
/// Throws ResourceError beyond 20 variables.
bool qbf_value(const QBFormula& f);

/// Game-optimal number of satisfied clauses of a width-<=2 prenex CNF.
/// Throws ResourceError beyond 20 variables.
int qmax2sat_value(const QBFormula& f);

/// Clause gadget lowering width-3 quantified CNF to width 2. Each input
/// clause becomes ten clauses over its literals plus a fresh existential
/// selector; exactly seven are satisfiable per clause iff the input clause
/// is satisfied. Unit output clauses are padded with one fresh innermost
/// universal variable. Returns the width-2 formula and the threshold 7m.
std::pair<QBFormula, int> qbf3_to_qmax2sat(const QBFormula& f);

/// Parameters tying a constructed board back to its source formula.
struct ReductionCertificate {
    std::map<int, VertexId> literal_vertex; // signed literal -> star center
    std::map<int, VertexId> spare_vertex;   // variable -> third star center
    int padded_variables = 0;               // 2n after alternation padding
    long long n_prime = 0;
    long long k_prime = 0;
    long long total_vertices = 0;
    long long total_edges = 0;
};

/// Star construction lowering the width-2 quantified CNF threshold game to a
/// Left-only-scoring board. The prefix is padded to strict alternation
/// (exists outermost, forall innermost); variable at position i from the
/// inside gets three stars of 2mi leaves; clauses become edges between
/// literal centers. Right moving first reaches k' iff the Falsifier wins
/// (f, k).
std::pair<Hypergraph, ReductionCertificate> qmax2sat_to_incidence(const QBFormula& f,
                                                                  int k);

/// Universal-vertex lift: every edge gains one fresh shared vertex and turns
/// green. The Left-first score of the lift equals the Right-first score of
/// the all-Blue input.
Hypergraph mb_to_mm_universal(const Hypergraph& g);

} // namespace incidence
