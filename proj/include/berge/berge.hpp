#pragma once

#include <optional>

#include "berge/hypergraph.hpp"

namespace berge {

// Witness of a Berge copy: an injection of pattern vertices plus an
// injective assignment of a containing host edge to each pattern edge.
struct BergeEmbedding {
  std::vector<int> vertex_map;  // pattern vertex -> host vertex
  std::vector<int> edge_map;    // pattern edge index -> host edge index
};

bool validate_embedding(const Hypergraph& host, const UniformHypergraph& pattern,
                        const BergeEmbedding& emb);

// Deterministic witness: the lexicographically least vertex_map among all
// successful embeddings, with the edge assignment produced by the matching
// in pattern-edge order.
std::optional<BergeEmbedding> find_berge(const Hypergraph& host, const UniformHypergraph& pattern);

// Existence only; pattern vertices are searched in descending-degree order
// which prunes faster inside the extremal search.
bool contains_berge(const Hypergraph& host, const UniformHypergraph& pattern);

struct FreenessWitness {
  int member = -1;
  BergeEmbedding embedding;
};

bool is_berge_free(const Hypergraph& host, const std::vector<UniformHypergraph>& family,
                   FreenessWitness* witness = nullptr);

// Number of host edges containing e.
std::uint64_t shadow_multiplicity(const Hypergraph& host, VertexSet e);

// r-sets of the r-shadow contained in at most |E(pattern)|-1 host edges.
std::vector<VertexSet> blue_edges(const Hypergraph& host, const UniformHypergraph& pattern);

// Completes a vertex map whose every mapped pattern edge has multiplicity
// at least |E(pattern)| into a full embedding; Hall's condition makes the
// distinct-representative matching succeed.
BergeEmbedding greedy_berge_from_copy(const Hypergraph& host, const UniformHypergraph& pattern,
                                      const std::vector<int>& vertex_map);

// All k-uniform Berge copies of pattern up to isomorphism, each returned in
// canonical form; fresh vertices are introduced in first-use order.
std::vector<Hypergraph> enumerate_berge_copies(const UniformHypergraph& pattern, int k);

}  // namespace berge
