#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "berge/hypergraph.hpp"

namespace berge {

struct BipartiteGraph {
  int size_a = 0;
  int size_b = 0;
  std::vector<std::vector<int>> adj;  // per A-vertex, ascending B-neighbors
};

BipartiteGraph make_bipartite(int size_a, int size_b,
                              const std::vector<std::pair<int, int>>& edges);

struct Matching {
  std::vector<int> match_a;  // A-vertex -> B-vertex or -1
  std::vector<int> match_b;  // B-vertex -> A-vertex or -1
  int size = 0;

  std::vector<std::pair<int, int>> pairs() const;
};

// Kuhn's augmenting-path matching; maximality is re-checked before returning.
Matching maximum_matching(const BipartiteGraph& g);

// The partition certificate:
//   - m is a maximum matching
//   - bprime = matched B-vertices, partitioned into b1 and b2
//   - m restricted to a1 is a perfect matching onto b1
//   - every neighbor of an a2-vertex lies in b2
//   - every a1-vertex has a neighbor outside bprime
struct MatchingPartition {
  Matching m;
  std::vector<int> a1, a2, b1, b2, bprime;  // ascending
};

// Raised when no certificate satisfying all five conditions exists (the
// search was exhaustive) or the bounded search gave up.
struct CertificateError : std::runtime_error {
  bool exhaustive;  // true: nonexistence is proven for this input
  std::string dump;
  CertificateError(const std::string& msg, bool exh, std::string d)
      : std::runtime_error(msg), exhaustive(exh), dump(std::move(d)) {}
};

// Returns a violation description, or nullopt when every condition holds.
std::optional<std::string> partition_violation(const BipartiteGraph& g, const MatchingPartition& p);

// Builds a certificate deterministically: maximum matching, then a rotation
// repair loop, then an exhaustive search over exposable B-subsets of the
// reachable core. Throws CertificateError when none exists or the core is
// too large to finish.
MatchingPartition matching_partition(const BipartiteGraph& g);

// A = edges of h0, B = edges of shadow(h0, k), adjacency is containment.
BipartiteGraph incidence_bipartite(const UniformHypergraph& h0, int k);

struct ReductionReport {
  int a1_size = 0, a2_size = 0, b1_size = 0, b2_size = 0;
  std::uint64_t g_value = 0;
  bool chain_ok = false;        // g_value >= |E(h0)|
  bool a2_all_blue = false;     // every k-subset of every A2-edge is blue
  bool red_clique_free = false; // measured, not asserted
  std::optional<bool> blue_pattern_free;  // when a pattern is supplied
};

// Lemma-style reduction: red = B1, blue = B2 on the vertex set of h0.
// clique_size is the r used by the g-value (typically h0.r).
std::pair<RedBlueHypergraph, ReductionReport> redblue_reduction(
    const UniformHypergraph& h0, int k, int clique_size,
    const UniformHypergraph* pattern = nullptr);

// Red edge count plus the number of K_r^(k) cliques in the blue part.
std::uint64_t g_value(const RedBlueHypergraph& h, int r);

}  // namespace berge
