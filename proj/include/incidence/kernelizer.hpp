#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "incidence/hypergraph.hpp"

namespace incidence {

/// Partition of the vertices into type classes: u and v share a type iff
/// N(u)\{v} = N(v)\{u}. Each class induces a clique or an independent set.
struct TypePartition {
    std::vector<std::vector<VertexId>> classes; // sorted by smallest member
    int nd = 0;                                 // class count
};

TypePartition nd_partition(const Hypergraph& g);
int neighborhood_diversity(const Hypergraph& g);

/// Decision instance: does the `first`-moving player's optimal score on the
/// Left-only-scoring board reach k?
struct KernelInstance {
    Position position; // all-Blue 2-uniform
    int k = 0;
    Player first = Player::Left;
};

/// Replayable log of the kernelization steps.
struct KernelTranscript {
    std::vector<std::pair<VertexId, VertexId>> step1_pairs; // (to Left, to Right)
    int step2_edges_removed = 0;
    /// (i, s, k-delta) per balancing round.
    std::vector<std::tuple<int, int, int>> step3_rounds;
    int step4_u_size = 0;
    /// Outcome marker: 0 = kernel, 1 = trivially true, 2 = trivially false.
    int shortcut = 0;

    std::string to_text() const;
};

struct KernelOptions {
    /// Charge ceil(i/2) per balancing unit regardless of who moves first
    /// (the Left-first charge), instead of the mover-aware share.
    bool literal_share = false;
};

/// Cubic kernelization for Left-only-scoring 2-uniform decision instances.
/// The output decides the same question; it has at most w²+w vertices,
/// w³ edges and threshold at most w³ for w the neighborhood diversity,
/// or is one of the trivial constant instances.
std::pair<KernelInstance, KernelTranscript> kernelize(const KernelInstance& inst,
                                                      const KernelOptions& opt = {});

/// Re-applies a recorded transcript to the input instance; the result must
/// equal the kernelize output bit for bit.
KernelInstance kernel_replay(const KernelInstance& inst, const KernelTranscript& t,
                             const KernelOptions& opt = {});

} // namespace incidence
