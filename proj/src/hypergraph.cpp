#include "berge/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace berge {

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> vs;
  while (s) {
    int v = std::countr_zero(s);
    vs.push_back(v);
    s &= s - 1;
  }
  return vs;
}

VertexSet set_from_vertices(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

bool edge_lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  VertexSet d = a ^ b;
  VertexSet v = d & (VertexSet(0) - d);  // lowest differing vertex
  VertexSet above = ~((v << 1) - 1);     // vertices strictly above it
  if (a & v) return (b & above) != 0;    // a continues with v; b with something larger or ends
  return (a & above) == 0;               // b continues with v; a is a proper prefix or larger
}

bool Hypergraph::has_edge(VertexSet e) const {
  return std::binary_search(edges.begin(), edges.end(), e, edge_lex_less);
}

static void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of supported range [0,64]: " + std::to_string(n));
}

static VertexSet full_set(int n) {
  return n == kMaxVertices ? ~VertexSet{0} : (vbit(n) - 1);
}

Hypergraph hypergraph_from_masks(int n, std::vector<VertexSet> edges) {
  check_vertex_count(n);
  VertexSet universe = full_set(n);
  for (VertexSet e : edges) {
    if (e == 0) throw std::invalid_argument("empty edge");
    if (!is_subset(e, universe)) throw std::invalid_argument("vertex out of range in edge");
  }
  std::sort(edges.begin(), edges.end(), edge_lex_less);
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw std::invalid_argument("duplicate edge");
  return Hypergraph{n, std::move(edges)};
}

Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edge_list) {
  check_vertex_count(n);
  std::vector<VertexSet> masks;
  masks.reserve(edge_list.size());
  for (const auto& vs : edge_list) {
    VertexSet e = 0;
    for (int v : vs) {
      if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
      e |= vbit(v);
    }
    if (static_cast<int>(vs.size()) != set_size(e))
      throw std::invalid_argument("repeated vertex inside an edge");
    masks.push_back(e);
  }
  return hypergraph_from_masks(n, std::move(masks));
}

UniformHypergraph uniform_from_masks(int n, int r, std::vector<VertexSet> edges) {
  if (r < 1) throw std::invalid_argument("uniformity must be >= 1");
  Hypergraph h = hypergraph_from_masks(n, std::move(edges));
  for (VertexSet e : h.edges)
    if (set_size(e) != r) throw std::invalid_argument("edge size differs from uniformity");
  return UniformHypergraph{std::move(h), r};
}

UniformHypergraph make_uniform(int n, int r, const std::vector<std::vector<int>>& edge_list) {
  Hypergraph h = make_hypergraph(n, edge_list);
  if (r < 1) throw std::invalid_argument("uniformity must be >= 1");
  for (VertexSet e : h.edges)
    if (set_size(e) != r) throw std::invalid_argument("edge size differs from uniformity");
  return UniformHypergraph{std::move(h), r};
}

UniformHypergraph as_uniform(const Hypergraph& h) {
  if (h.edges.empty()) throw std::invalid_argument("cannot infer uniformity of an edgeless hypergraph");
  int r = set_size(h.edges.front());
  for (VertexSet e : h.edges)
    if (set_size(e) != r) throw std::invalid_argument("hypergraph is not uniform");
  return UniformHypergraph{h, r};
}

RedBlueHypergraph make_redblue(UniformHypergraph base, std::vector<EdgeColor> colors) {
  if (colors.size() != base.base.edges.size())
    throw std::invalid_argument("color list length differs from edge count");
  return RedBlueHypergraph{std::move(base), std::move(colors)};
}

UniformHypergraph color_subgraph(const RedBlueHypergraph& h, EdgeColor c) {
  std::vector<VertexSet> picked;
  for (std::size_t i = 0; i < h.colors.size(); ++i)
    if (h.colors[i] == c) picked.push_back(h.base.base.edges[i]);
  return uniform_from_masks(h.base.n(), h.base.r, std::move(picked));
}

std::uint64_t binomial(int n, int k) {
  // exact for the toolkit's small-n range
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<VertexSet> subsets_of_size(VertexSet support, int r) {
  std::vector<VertexSet> out;
  if (r < 0 || r > set_size(support)) return out;
  std::vector<int> vs = set_vertices(support);
  int m = static_cast<int>(vs.size());
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    VertexSet e = 0;
    for (int i : idx) e |= vbit(vs[i]);
    out.push_back(e);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

UniformHypergraph shadow(const Hypergraph& h, int r) {
  if (r < 1) throw std::invalid_argument("shadow uniformity must be >= 1");
  std::vector<VertexSet> out;
  for (VertexSet e : h.edges) {
    if (set_size(e) < r) continue;
    for (VertexSet s : subsets_of_size(e, r)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return uniform_from_masks(h.n, r, std::move(out));
}

UniformHypergraph complete_uniform(int s, int r) {
  if (r < 1 || s < r) throw std::invalid_argument("complete_uniform needs s >= r >= 1");
  return uniform_from_masks(s, r, subsets_of_size(full_set(s), r));
}

std::vector<int> turan_parts(int n, int p) {
  // contiguous ranges, larger parts first
  std::vector<int> part(n);
  int q = n / p, rem = n % p;
  int v = 0;
  for (int i = 0; i < p; ++i) {
    int sz = q + (i < rem ? 1 : 0);
    for (int j = 0; j < sz; ++j) part[v++] = i;
  }
  return part;
}

UniformHypergraph turan_hypergraph(int n, int r, int p) {
  if (n < 1 || p < 1 || r < 1) throw std::invalid_argument("turan_hypergraph needs n,r,p >= 1");
  check_vertex_count(n);
  std::vector<int> part = turan_parts(n, p);
  std::vector<std::vector<int>> part_members(p);
  for (int v = 0; v < n; ++v) part_members[part[v]].push_back(v);

  // pick r distinct parts, then one vertex from each
  std::vector<VertexSet> edges;
  auto rec = [&](auto&& self, int first_part, VertexSet acc, int left) -> void {
    if (left == 0) {
      edges.push_back(acc);
      return;
    }
    for (int i = first_part; i <= p - left; ++i)
      for (int v : part_members[i]) self(self, i + 1, acc | vbit(v), left - 1);
  };
  rec(rec, 0, 0, r);
  return uniform_from_masks(n, r, std::move(edges));
}

UniformHypergraph expansion(const UniformHypergraph& f0, int r) {
  if (r < f0.r) throw std::invalid_argument("expansion target below pattern uniformity");
  int per_edge = r - f0.r;
  int n = f0.n() + f0.edge_count() * per_edge;
  check_vertex_count(n);
  std::vector<VertexSet> edges;
  int fresh = f0.n();
  for (VertexSet e : f0.base.edges) {
    VertexSet big = e;
    for (int j = 0; j < per_edge; ++j) big |= vbit(fresh++);
    edges.push_back(big);
  }
  return uniform_from_masks(n, r, std::move(edges));
}

UniformHypergraph star_construction(int n, int r, int t) {
  if (t < 0 || t > r || r > n) throw std::invalid_argument("star_construction needs 0 <= t <= r <= n");
  check_vertex_count(n);
  VertexSet pinned = t == 0 ? 0 : (vbit(t) - 1);
  VertexSet rest = full_set(n) & ~pinned;
  std::vector<VertexSet> edges;
  for (VertexSet s : subsets_of_size(rest, r - t)) edges.push_back(s | pinned);
  return uniform_from_masks(n, r, std::move(edges));
}

UniformHypergraph clique_replacement(const UniformHypergraph& g, int r) {
  if (r < g.r) throw std::invalid_argument("clique_replacement needs r >= uniformity of g");
  std::vector<VertexSet> edges;
  for (VertexSet cand : subsets_of_size(full_set(g.n()), r)) {
    bool full = true;
    for (VertexSet sub : subsets_of_size(cand, g.r))
      if (!g.base.has_edge(sub)) {
        full = false;
        break;
      }
    if (full) edges.push_back(cand);
  }
  return uniform_from_masks(g.n(), r, std::move(edges));
}

namespace {

// Backtracking injection search. Pattern vertices are assigned in a fixed
// order (descending degree, then index); a pattern edge is checked the
// moment its last vertex gets an image. Supports pre-seeded images.
struct InjectionSearch {
  int pn = 0, hn = 0;
  std::vector<VertexSet> pat_edges;
  std::vector<std::uint64_t> host_sorted;  // host edge masks, numeric order
  std::vector<int> order;                  // pattern vertices in assignment order
  std::vector<std::vector<int>> close_at;  // pattern edges completed at step i
  std::vector<int> image;                  // pattern vertex -> host vertex
  VertexSet used = 0;
  std::uint64_t count = 0;
  bool exists_only = false;
  bool found = false;

  InjectionSearch(const Hypergraph& pat, const Hypergraph& host) {
    pn = pat.n;
    hn = host.n;
    pat_edges = pat.edges;
    host_sorted.assign(host.edges.begin(), host.edges.end());
    std::sort(host_sorted.begin(), host_sorted.end());

    std::vector<int> deg(pn, 0);
    for (VertexSet e : pat_edges)
      for (int v : set_vertices(e)) deg[v]++;
    order.resize(pn);
    for (int i = 0; i < pn; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

    std::vector<int> pos(pn);
    for (int i = 0; i < pn; ++i) pos[order[i]] = i;
    close_at.assign(std::max(pn, 1), {});
    for (std::size_t ei = 0; ei < pat_edges.size(); ++ei) {
      int last = -1;
      for (int v : set_vertices(pat_edges[ei])) last = std::max(last, pos[v]);
      if (last >= 0) close_at[last].push_back(static_cast<int>(ei));
    }
    image.assign(pn, -1);
  }

  bool host_has(std::uint64_t mask) const {
    return std::binary_search(host_sorted.begin(), host_sorted.end(), mask);
  }

  VertexSet mapped_mask(int ei) const {
    VertexSet m = 0;
    for (int v : set_vertices(pat_edges[ei])) m |= vbit(image[v]);
    return m;
  }

  bool closed_edges_ok(int step) const {
    for (int ei : close_at[step])
      if (!host_has(mapped_mask(ei))) return false;
    return true;
  }

  // returns true when the caller should stop unwinding (exists_only hit)
  bool run(int step) {
    if (step == pn) {
      ++count;
      found = true;
      return exists_only;
    }
    int u = order[step];
    if (image[u] != -1) {
      if (!closed_edges_ok(step)) return false;
      return run(step + 1);
    }
    for (int w = 0; w < hn; ++w) {
      if (has_vertex(used, w)) continue;
      image[u] = w;
      used |= vbit(w);
      bool stop = closed_edges_ok(step) && run(step + 1);
      used &= ~vbit(w);
      image[u] = -1;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

std::uint64_t count_injections(const Hypergraph& pat, const Hypergraph& host) {
  if (pat.n > host.n) return 0;
  InjectionSearch s(pat, host);
  s.run(0);
  return s.count;
}

std::uint64_t count_sub_copies(const Hypergraph& pat, const Hypergraph& host) {
  std::uint64_t inj = count_injections(pat, host);
  std::uint64_t aut = count_injections(pat, pat);
  assert(aut > 0);
  if (inj % aut != 0) throw std::runtime_error("injection count not divisible by automorphism count");
  return inj / aut;
}

std::uint64_t count_cliques(const UniformHypergraph& h, int s) {
  if (s < h.r) throw std::invalid_argument("count_cliques needs s >= uniformity");
  // extend the candidate set one vertex at a time, checking the r-subsets
  // through the new vertex as soon as they exist
  std::uint64_t total = 0;
  auto rec = [&](auto&& self, int next, VertexSet acc, int size) -> void {
    if (size == s) {
      ++total;
      return;
    }
    for (int v = next; v < h.n(); ++v) {
      bool ok = true;
      if (size >= h.r - 1) {
        for (VertexSet sub : subsets_of_size(acc, h.r - 1)) {
          if (!h.base.has_edge(sub | vbit(v))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) self(self, v + 1, acc | vbit(v), size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return total;
}

bool has_copy_through_edge(const Hypergraph& pat, const Hypergraph& host, VertexSet e) {
  if (pat.n > host.n) return false;
  if (!host.has_edge(e)) return false;
  std::vector<int> evs = set_vertices(e);
  for (std::size_t pin = 0; pin < pat.edges.size(); ++pin) {
    if (set_size(pat.edges[pin]) != static_cast<int>(evs.size())) continue;
    std::vector<int> pvs = set_vertices(pat.edges[pin]);
    std::vector<int> perm = evs;
    do {
      InjectionSearch s(pat, host);
      s.exists_only = true;
      for (std::size_t i = 0; i < pvs.size(); ++i) {
        s.image[pvs[i]] = perm[i];
        s.used |= vbit(perm[i]);
      }
      s.run(0);
      if (s.found) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

int chromatic_number(const UniformHypergraph& g) {
  if (g.r != 2) throw std::invalid_argument("chromatic_number expects a 2-graph");
  int n = g.n();
  if (n == 0) return 0;
  std::vector<VertexSet> nbr(n, 0);
  for (VertexSet e : g.base.edges) {
    auto vs = set_vertices(e);
    nbr[vs[0]] |= vbit(vs[1]);
    nbr[vs[1]] |= vbit(vs[0]);
  }
  std::vector<int> color(n, -1);
  auto feasible = [&](auto&& self, int v, int k, int maxused) -> bool {
    if (v == n) return true;
    int limit = std::min(k - 1, maxused + 1);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (int u : set_vertices(nbr[v] & (vbit(v) - 1)))
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1, k, std::max(maxused, c))) {
        color[v] = -1;
        return true;
      }
      color[v] = -1;
    }
    return false;
  };
  for (int k = 1; k <= n; ++k)
    if (feasible(feasible, 0, k, -1)) return k;
  return n;
}

}  // namespace berge
