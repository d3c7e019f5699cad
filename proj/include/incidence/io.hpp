#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "incidence/hypergraph.hpp"
#include "incidence/reductions.hpp"
#include "incidence/solver.hpp"

namespace incidence {

/// Board text format. Header "graph <n> <m>" with m lines "u v" (all edges
/// Blue), or "hypergraph <n> <m>" with m lines "<B|R|G> v1 v2 ...".
/// Optional trailing "L: <ids>" and "R: <ids>" lines claim vertices.
/// Blank lines and lines starting with '#' are ignored.
Position parse_board(const std::string& text);

/// Canonical text form; parse_board round-trips it byte for byte.
std::string serialize_board(const Position& p);

/// FNV-1a over the canonical board text.
std::uint64_t board_digest(const Position& p);

/// QBF text format: one prefix line of e<var>/a<var> tokens (outermost
/// first), then one clause per line as signed integers, zero-terminated.
QBFormula parse_qbf(const std::string& text);
std::string serialize_qbf(const QBFormula& f);

/// Machine-readable solve record. Deterministic for fixed input and options;
/// carries no wall-clock data.
nlohmann::json result_record(const Position& p, const SolveOptions& opt,
                             const std::optional<SolveResult>& left,
                             const std::optional<SolveResult>& right);

/// Graphviz export; hyperedges of size != 2 are drawn via box junction nodes.
std::string to_dot(const Position& p);

} // namespace incidence
