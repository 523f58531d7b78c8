#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace berge {

// Vertices are dense integers 0..n-1; an edge is a bitmask over them.
// 64 bits bounds the exact toolkit range (documented n <= 12 for canonical
// forms, far below the mask width).
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline bool has_vertex(VertexSet s, int v) { return (s >> v) & 1; }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

std::vector<int> set_vertices(VertexSet s);
VertexSet set_from_vertices(const std::vector<int>& vs);

// Order on edges used everywhere an edge list is stored: lexicographic on
// the ascending vertex sequences, so {0,1,2} < {0,2} < {1,2}.
bool edge_lex_less(VertexSet a, VertexSet b);

struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> edges;  // distinct, nonempty, lex-sorted

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(VertexSet e) const;
  bool operator==(const Hypergraph& o) const = default;
};

struct UniformHypergraph {
  Hypergraph base;
  int r = 0;  // every edge has exactly r vertices

  int n() const { return base.n; }
  int edge_count() const { return base.edge_count(); }
};

enum class EdgeColor { red, blue };

struct RedBlueHypergraph {
  UniformHypergraph base;
  std::vector<EdgeColor> colors;  // index-aligned with base.base.edges
};

// Rejects out-of-range vertices, duplicate edges and empty edges.
Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edge_list);
Hypergraph hypergraph_from_masks(int n, std::vector<VertexSet> edges);

UniformHypergraph make_uniform(int n, int r, const std::vector<std::vector<int>>& edge_list);
UniformHypergraph uniform_from_masks(int n, int r, std::vector<VertexSet> edges);
// Checks that every edge of h has the same size and tags h with it.
UniformHypergraph as_uniform(const Hypergraph& h);

RedBlueHypergraph make_redblue(UniformHypergraph base, std::vector<EdgeColor> colors);
UniformHypergraph color_subgraph(const RedBlueHypergraph& h, EdgeColor c);

std::uint64_t binomial(int n, int k);

// All r-subsets of `support`, in increasing mask order.
std::vector<VertexSet> subsets_of_size(VertexSet support, int r);

// --- constructions ---

// r-shadow: all r-sets contained in at least one edge.
UniformHypergraph shadow(const Hypergraph& h, int r);

// Complete r-graph on s vertices.
UniformHypergraph complete_uniform(int s, int r);

// Balanced p-partition of n vertices (contiguous ranges, larger parts
// first); edges are the r-sets meeting every part at most once.
UniformHypergraph turan_hypergraph(int n, int r, int p);
// Part id of each vertex under the turan_hypergraph partition rule.
std::vector<int> turan_parts(int n, int p);

// Pads every edge of f0 with its own fresh vertices up to size r; fresh
// vertices are numbered n(f0), n(f0)+1, ... in edge order.
UniformHypergraph expansion(const UniformHypergraph& f0, int r);

// All r-sets containing the pinned vertices {0,..,t-1}.
UniformHypergraph star_construction(int n, int r, int t);

// All r-sets of V(g) whose k-subsets are all edges of g.
UniformHypergraph clique_replacement(const UniformHypergraph& g, int r);

// --- counting ---

// Injective vertex maps from pat into host sending every edge of pat onto
// an edge of host.
std::uint64_t count_injections(const Hypergraph& pat, const Hypergraph& host);

// Number of subhypergraphs of host isomorphic to pat, i.e. injections
// divided by |Aut(pat)|; the division is asserted exact.
std::uint64_t count_sub_copies(const Hypergraph& pat, const Hypergraph& host);

// s-subsets of V(h) whose every r-subset is an edge.
std::uint64_t count_cliques(const UniformHypergraph& h, int s);

// Does host+e contain a copy of pat mapping some pattern edge onto e?
bool has_copy_through_edge(const Hypergraph& pat, const Hypergraph& host, VertexSet e);

// Exact chromatic number of a 2-graph by exhaustive search.
int chromatic_number(const UniformHypergraph& g);

}  // namespace berge
