#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "berge/hypergraph.hpp"

namespace berge {

struct SearchBudget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  int workers = 1;
};

struct ExtremalResult {
  std::uint64_t value = 0;
  std::vector<Hypergraph> witnesses;  // canonical representatives
  std::uint64_t nodes = 0;            // canonical graphs visited
  bool exhausted = true;              // false iff a budget cut the search short
};

// Predicate deciding whether g (which already contains new_edge as its
// largest mask) is still admissible. Must be monotone decreasing under
// edge addition.
using GrowPredicate = std::function<bool(const Hypergraph& g, VertexSet new_edge)>;

struct EnumerationResult {
  std::uint64_t classes = 0;
  bool exhausted = true;
};

// Orderly generation: visits exactly one minimum-labeled representative per
// isomorphism class of predicate-closed r-graphs on n vertices.
EnumerationResult enumerate_uniform(int n, int r, const GrowPredicate& pred,
                                    const SearchBudget& budget,
                                    const std::function<void(const Hypergraph&)>& visit);

// Maximum edge count over F-free r-graphs (subhypergraph freeness).
ExtremalResult ex_uniform(int n, int k, const UniformHypergraph& pattern,
                          const SearchBudget& budget = {}, bool all_witnesses = false);

// Maximum edge count over Berge-F-free r-graphs.
ExtremalResult ex_berge(int n, int r, const UniformHypergraph& pattern,
                        const SearchBudget& budget = {}, bool all_witnesses = false);

// Maximum number of K_s^(k) cliques over F-free k-graphs.
ExtremalResult ex_generalized(int n, int k, int s, const UniformHypergraph& pattern,
                              const SearchBudget& budget = {}, bool all_witnesses = false);

struct RamseyResult {
  int value = -1;       // least N with every 2-coloring containing a mono copy
  bool exceeded = false;  // true when the cap was reached without success
  int witness_order = -1;
  // good 2-coloring of K_{witness_order}^(r): color per edge of the complete
  // r-graph in storage order, true = red
  std::vector<bool> witness_coloring;
};

RamseyResult ramsey_number(const UniformHypergraph& pattern, int cap);

struct SandwichReport {
  std::uint64_t lower = 0;        // ex_k(n, K_r^(k), F)
  std::uint64_t middle = 0;       // ex_r(n, Berge-F)
  std::uint64_t upper = 0;        // lower + ex_k(n, F)
  std::uint64_t ex_pattern = 0;   // ex_k(n, F)
  bool left_ok = false, right_ok = false;
  bool construction_ok = false;   // clique replacement of every lower witness is Berge-F-free
  bool exhausted = true;
};

SandwichReport verify_sandwich(int n, int k, int r, const UniformHypergraph& pattern,
                               const SearchBudget& budget = {});

struct ExpansionChainReport {
  std::uint64_t base = 0;    // ex_r(n, Berge-F0)
  std::uint64_t middle = 0;  // ex_r(n, Berge-F0^{+k})
  std::uint64_t upper = 0;   // ex_r(n, F0^{+r})
  bool chain_ok = false;
  int chromatic = 0;
  // Turan lower-bound data, reported when chromatic > r > k
  std::optional<std::uint64_t> turan_edges;
  std::optional<bool> turan_free_ok;     // T^r(n, m-1) checked Berge-F0^{+k}-free
  std::optional<bool> turan_le_middle;
  bool exhausted = true;
};

ExpansionChainReport verify_expansion_chain(int n, int r, int k, const UniformHypergraph& f0,
                                            const SearchBudget& budget = {});

// Documented exact grid; the CLI requires --force outside it.
bool within_exact_grid(int n, int r);

}  // namespace berge
