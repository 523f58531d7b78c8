#include "berge/matching.hpp"

#include <algorithm>
#include <sstream>

#include "berge/berge.hpp"

namespace berge {

BipartiteGraph make_bipartite(int size_a, int size_b,
                              const std::vector<std::pair<int, int>>& edges) {
  if (size_a < 0 || size_b < 0) throw std::invalid_argument("negative part size");
  BipartiteGraph g{size_a, size_b, std::vector<std::vector<int>>(size_a)};
  for (auto [a, b] : edges) {
    if (a < 0 || a >= size_a || b < 0 || b >= size_b)
      throw std::invalid_argument("bipartite edge endpoint out of range");
    g.adj[a].push_back(b);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(match_a.size()); ++a)
    if (match_a[a] != -1) out.emplace_back(a, match_a[a]);
  return out;
}

namespace {

bool kuhn_augment(const BipartiteGraph& g, int a, std::vector<bool>& vis, Matching& m) {
  for (int b : g.adj[a]) {
    if (vis[b]) continue;
    vis[b] = true;
    if (m.match_b[b] == -1 || kuhn_augment(g, m.match_b[b], vis, m)) {
      m.match_a[a] = b;
      m.match_b[b] = a;
      return true;
    }
  }
  return false;
}

bool has_augmenting_path(const BipartiteGraph& g, const Matching& m) {
  for (int a = 0; a < g.size_a; ++a) {
    if (m.match_a[a] != -1) continue;
    std::vector<bool> vis(g.size_b, false);
    Matching probe = m;
    if (kuhn_augment(g, a, vis, probe)) return true;
  }
  return false;
}

std::vector<bool> exposed_b(const BipartiteGraph& g, const Matching& m) {
  std::vector<bool> ex(g.size_b, false);
  for (int b = 0; b < g.size_b; ++b) ex[b] = (m.match_b[b] == -1);
  return ex;
}

// A-vertices with at least one exposed neighbor; the only possible A1.
std::vector<bool> exposed_neighbors(const BipartiteGraph& g, const std::vector<bool>& ex) {
  std::vector<bool> a1(g.size_a, false);
  for (int a = 0; a < g.size_a; ++a)
    for (int b : g.adj[a])
      if (ex[b]) {
        a1[a] = true;
        break;
      }
  return a1;
}

MatchingPartition assemble(const BipartiteGraph& g, Matching m) {
  MatchingPartition p;
  auto ex = exposed_b(g, m);
  auto in_a1 = exposed_neighbors(g, ex);
  std::vector<bool> in_b1(g.size_b, false);
  for (int a = 0; a < g.size_a; ++a) {
    if (in_a1[a]) {
      p.a1.push_back(a);
      if (m.match_a[a] != -1) in_b1[m.match_a[a]] = true;
    } else {
      p.a2.push_back(a);
    }
  }
  for (int b = 0; b < g.size_b; ++b) {
    if (ex[b]) continue;
    p.bprime.push_back(b);
    if (in_b1[b])
      p.b1.push_back(b);
    else
      p.b2.push_back(b);
  }
  p.m = std::move(m);
  return p;
}

std::string dump_instance(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "bipartite |A|=" << g.size_a << " |B|=" << g.size_b << " edges:";
  for (int a = 0; a < g.size_a; ++a)
    for (int b : g.adj[a]) os << " (" << a << "," << b << ")";
  return os.str();
}

// Alternating reachability from exposed B-vertices: B-side travels any
// non-matching edge to A, A-side travels its matching edge back to B.
void reachable_core(const BipartiteGraph& g, const Matching& m, std::vector<bool>& az,
                    std::vector<bool>& bz) {
  az.assign(g.size_a, false);
  bz.assign(g.size_b, false);
  std::vector<std::vector<int>> b_adj(g.size_b);
  for (int a = 0; a < g.size_a; ++a)
    for (int b : g.adj[a]) b_adj[b].push_back(a);
  std::vector<int> stack;
  for (int b = 0; b < g.size_b; ++b)
    if (m.match_b[b] == -1) {
      bz[b] = true;
      stack.push_back(b);
    }
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    for (int a : b_adj[b]) {
      if (m.match_b[b] == a || az[a]) continue;
      az[a] = true;
      int nb = m.match_a[a];
      if (nb != -1 && !bz[nb]) {
        bz[nb] = true;
        stack.push_back(nb);
      }
    }
  }
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
  Matching m;
  m.match_a.assign(g.size_a, -1);
  m.match_b.assign(g.size_b, -1);
  for (int a = 0; a < g.size_a; ++a) {
    std::vector<bool> vis(g.size_b, false);
    if (kuhn_augment(g, a, vis, m)) ++m.size;
  }
  if (has_augmenting_path(g, m))
    throw std::runtime_error("internal error: matching not maximum after augmentation");
  return m;
}

std::optional<std::string> partition_violation(const BipartiteGraph& g,
                                               const MatchingPartition& p) {
  const Matching& m = p.m;
  if (static_cast<int>(m.match_a.size()) != g.size_a ||
      static_cast<int>(m.match_b.size()) != g.size_b)
    return "matching arrays have wrong size";
  // matching consistency against g
  for (int a = 0; a < g.size_a; ++a) {
    int b = m.match_a[a];
    if (b == -1) continue;
    if (b < 0 || b >= g.size_b || m.match_b[b] != a) return "matching arrays inconsistent";
    if (!std::binary_search(g.adj[a].begin(), g.adj[a].end(), b))
      return "matching uses a non-edge";
  }
  for (int b = 0; b < g.size_b; ++b) {
    int a = m.match_b[b];
    if (a != -1 && (a < 0 || a >= g.size_a || m.match_a[a] != b))
      return "matching arrays inconsistent";
  }
  if (has_augmenting_path(g, m)) return "matching is not maximum";

  std::vector<bool> in_a1(g.size_a, false), in_a2(g.size_a, false);
  for (int a : p.a1) in_a1[a] = true;
  for (int a : p.a2) in_a2[a] = true;
  for (int a = 0; a < g.size_a; ++a)
    if (in_a1[a] == in_a2[a]) return "A1/A2 is not a partition of A";

  std::vector<bool> in_b1(g.size_b, false), in_b2(g.size_b, false), in_bp(g.size_b, false);
  for (int b : p.b1) in_b1[b] = true;
  for (int b : p.b2) in_b2[b] = true;
  for (int b : p.bprime) in_bp[b] = true;
  for (int b = 0; b < g.size_b; ++b) {
    bool matched = m.match_b[b] != -1;
    if (in_bp[b] != matched) return "Bprime differs from the matched B-vertices";
    if (matched && in_b1[b] == in_b2[b]) return "B1/B2 is not a partition of Bprime";
    if (!matched && (in_b1[b] || in_b2[b])) return "B1/B2 contains an unmatched vertex";
  }

  // M restricted to A1 is a perfect matching onto B1
  std::vector<bool> hit(g.size_b, false);
  for (int a : p.a1) {
    int b = m.match_a[a];
    if (b == -1) return "A1-vertex unmatched";
    if (!in_b1[b]) return "A1-vertex matched outside B1";
    hit[b] = true;
  }
  for (int b : p.b1)
    if (!hit[b]) return "B1-vertex unused by the A1 matching";

  for (int a : p.a2)
    for (int b : g.adj[a])
      if (!in_b2[b]) return "A2-vertex has a neighbor outside B2";

  for (int a : p.a1) {
    bool ok = false;
    for (int b : g.adj[a])
      if (!in_bp[b]) {
        ok = true;
        break;
      }
    if (!ok) return "A1-vertex has no neighbor outside Bprime";
  }
  return std::nullopt;
}

namespace {

// Condition that the repair loop and the exhaustive fallback both target:
// with A1 = vertices seeing an exposed neighbor, no A2-vertex may be
// adjacent to a B1 = M(A1) vertex. Returns such an offending pair.
std::optional<std::pair<int, int>> first_conflict(const BipartiteGraph& g, const Matching& m) {
  auto ex = exposed_b(g, m);
  auto in_a1 = exposed_neighbors(g, ex);
  std::vector<bool> in_b1(g.size_b, false);
  for (int a = 0; a < g.size_a; ++a)
    if (in_a1[a] && m.match_a[a] != -1) in_b1[m.match_a[a]] = true;
  for (int a = 0; a < g.size_a; ++a) {
    if (in_a1[a]) continue;
    for (int b : g.adj[a])
      if (in_b1[b]) return std::make_pair(a, b);
  }
  return std::nullopt;
}

// Try to saturate forced A-vertices first, then the rest, under candidate
// restrictions; returns a maximum matching of the restricted graph.
std::optional<Matching> restricted_matching(const BipartiteGraph& g,
                                            const std::vector<std::vector<int>>& cands,
                                            const std::vector<bool>& forced, int want_size) {
  BipartiteGraph rg{g.size_a, g.size_b, cands};
  Matching m;
  m.match_a.assign(g.size_a, -1);
  m.match_b.assign(g.size_b, -1);
  for (int pass = 0; pass < 2; ++pass)
    for (int a = 0; a < g.size_a; ++a) {
      if (forced[a] != (pass == 0) || m.match_a[a] != -1) continue;
      std::vector<bool> vis(g.size_b, false);
      if (kuhn_augment(rg, a, vis, m)) ++m.size;
    }
  for (int a = 0; a < g.size_a; ++a)
    if (forced[a] && m.match_a[a] == -1) return std::nullopt;
  if (m.size != want_size) return std::nullopt;
  return m;
}

}  // namespace

MatchingPartition matching_partition(const BipartiteGraph& g) {
  Matching m = maximum_matching(g);

  // rotation repair: free the B1-vertex that an A2-vertex touches by
  // re-matching its A1 partner to one of its exposed neighbors
  long long budget = static_cast<long long>(g.size_a) * g.size_b + 1;
  for (long long it = 0; it < budget; ++it) {
    auto conflict = first_conflict(g, m);
    if (!conflict) {
      MatchingPartition p = assemble(g, m);
      if (auto v = partition_violation(g, p))
        throw std::runtime_error("internal error: invalid certificate accepted: " + *v);
      return p;
    }
    auto [a2, b] = *conflict;
    int a1 = m.match_b[b];
    auto ex = exposed_b(g, m);
    int bu = -1;
    for (int nb : g.adj[a1])
      if (ex[nb]) {
        bu = nb;
        break;
      }
    if (bu == -1) break;  // conflict vertex lost its exposed neighbor; rotate no further
    m.match_a[a1] = bu;
    m.match_b[bu] = a1;
    m.match_b[b] = -1;
  }

  // exhaustive fallback on the alternating-reachable core: every exposable
  // B-vertex lies there and vertices outside it keep their matching
  std::vector<bool> az, bz;
  reachable_core(g, m, az, bz);
  std::vector<int> core_b;
  for (int b = 0; b < g.size_b; ++b)
    if (bz[b]) core_b.push_back(b);
  int exposed_count = g.size_b - m.size;

  double combos = 1;
  for (int i = 0; i < exposed_count; ++i)
    combos *= static_cast<double>(core_b.size() - i) / (i + 1);
  if (combos > 2e6)
    throw CertificateError("matching partition search gave up: core too large", false,
                           dump_instance(g));

  std::vector<int> pick(exposed_count);
  for (int i = 0; i < exposed_count; ++i) pick[i] = i;
  bool done = exposed_count > static_cast<int>(core_b.size());
  while (!done) {
    std::vector<bool> exposed(g.size_b, false);
    for (int i : pick) exposed[core_b[i]] = true;
    // forced split for this exposed set
    std::vector<bool> in_a1 = exposed_neighbors(g, exposed);
    std::vector<bool> b_banned(g.size_b, false);  // N(A2) and the exposed set
    for (int b = 0; b < g.size_b; ++b) b_banned[b] = exposed[b];
    for (int a = 0; a < g.size_a; ++a)
      if (!in_a1[a])
        for (int b : g.adj[a]) b_banned[b] = true;
    std::vector<std::vector<int>> cands(g.size_a);
    for (int a = 0; a < g.size_a; ++a)
      for (int b : g.adj[a]) {
        if (exposed[b]) continue;
        if (in_a1[a] && b_banned[b]) continue;
        cands[a].push_back(b);
      }
    auto mm = restricted_matching(g, cands, in_a1, m.size);
    if (mm) {
      MatchingPartition p = assemble(g, *mm);
      if (auto v = partition_violation(g, p))
        throw std::runtime_error("internal error: invalid certificate accepted: " + *v);
      return p;
    }
    // next combination
    int i = exposed_count - 1;
    while (i >= 0 && pick[i] == static_cast<int>(core_b.size()) - exposed_count + i) --i;
    if (i < 0) {
      done = true;
    } else {
      ++pick[i];
      for (int j = i + 1; j < exposed_count; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (exposed_count == 0) done = true;  // single empty combination
  }

  throw CertificateError("no matching partition satisfies all five conditions", true,
                         dump_instance(g));
}

BipartiteGraph incidence_bipartite(const UniformHypergraph& h0, int k) {
  if (k > h0.r) throw std::invalid_argument("shadow uniformity exceeds edge size");
  UniformHypergraph sh = shadow(h0.base, k);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < h0.edge_count(); ++a)
    for (int b = 0; b < sh.edge_count(); ++b)
      if (is_subset(sh.base.edges[b], h0.base.edges[a])) edges.emplace_back(a, b);
  return make_bipartite(h0.edge_count(), sh.edge_count(), edges);
}

std::uint64_t g_value(const RedBlueHypergraph& h, int r) {
  if (r < h.base.r) throw std::invalid_argument("clique size below uniformity");
  std::uint64_t red = 0;
  for (EdgeColor c : h.colors)
    if (c == EdgeColor::red) ++red;
  return red + count_cliques(color_subgraph(h, EdgeColor::blue), r);
}

std::pair<RedBlueHypergraph, ReductionReport> redblue_reduction(
    const UniformHypergraph& h0, int k, int clique_size, const UniformHypergraph* pattern) {
  if (k > h0.r && h0.edge_count() > 0)
    throw std::invalid_argument("shadow uniformity exceeds edge size");
  UniformHypergraph sh = shadow(h0.base, k);
  BipartiteGraph g = incidence_bipartite(h0, k);
  MatchingPartition p = matching_partition(g);

  std::vector<std::pair<VertexSet, EdgeColor>> colored;
  for (int b : p.b1) colored.emplace_back(sh.base.edges[b], EdgeColor::red);
  for (int b : p.b2) colored.emplace_back(sh.base.edges[b], EdgeColor::blue);
  std::sort(colored.begin(), colored.end(),
            [](const auto& x, const auto& y) { return edge_lex_less(x.first, y.first); });
  std::vector<VertexSet> masks;
  std::vector<EdgeColor> colors;
  for (auto& [e, c] : colored) {
    masks.push_back(e);
    colors.push_back(c);
  }
  RedBlueHypergraph rb = make_redblue(uniform_from_masks(h0.n(), k, masks), colors);

  ReductionReport rep;
  rep.a1_size = static_cast<int>(p.a1.size());
  rep.a2_size = static_cast<int>(p.a2.size());
  rep.b1_size = static_cast<int>(p.b1.size());
  rep.b2_size = static_cast<int>(p.b2.size());
  rep.g_value = g_value(rb, clique_size);
  rep.chain_ok = rep.g_value >= static_cast<std::uint64_t>(h0.edge_count());

  UniformHypergraph blue = color_subgraph(rb, EdgeColor::blue);
  rep.a2_all_blue = true;
  for (int a : p.a2)
    for (VertexSet sub : subsets_of_size(h0.base.edges[a], k))
      if (!blue.base.has_edge(sub)) rep.a2_all_blue = false;

  UniformHypergraph red = color_subgraph(rb, EdgeColor::red);
  rep.red_clique_free = count_cliques(red, clique_size) == 0;

  if (pattern) rep.blue_pattern_free = !contains_berge(blue.base, *pattern);
  return {std::move(rb), rep};
}

}  // namespace berge
