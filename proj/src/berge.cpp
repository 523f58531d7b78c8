#include "berge/berge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "berge/canonical.hpp"

namespace berge {

bool validate_embedding(const Hypergraph& host, const UniformHypergraph& pattern,
                        const BergeEmbedding& emb) {
  int pn = pattern.n();
  int pm = pattern.edge_count();
  if (static_cast<int>(emb.vertex_map.size()) != pn) return false;
  if (static_cast<int>(emb.edge_map.size()) != pm) return false;
  VertexSet seen = 0;
  for (int w : emb.vertex_map) {
    if (w < 0 || w >= host.n || has_vertex(seen, w)) return false;
    seen |= vbit(w);
  }
  std::vector<bool> used(host.edges.size(), false);
  for (int i = 0; i < pm; ++i) {
    int hi = emb.edge_map[i];
    if (hi < 0 || hi >= host.edge_count() || used[hi]) return false;
    used[hi] = true;
    VertexSet mapped = 0;
    for (int v : set_vertices(pattern.base.edges[i])) mapped |= vbit(emb.vertex_map[v]);
    if (!is_subset(mapped, host.edges[hi])) return false;
  }
  return true;
}

std::uint64_t shadow_multiplicity(const Hypergraph& host, VertexSet e) {
  std::uint64_t c = 0;
  for (VertexSet h : host.edges)
    if (is_subset(e, h)) ++c;
  return c;
}

std::vector<VertexSet> blue_edges(const Hypergraph& host, const UniformHypergraph& pattern) {
  std::uint64_t limit = pattern.edge_count();
  std::vector<VertexSet> out;
  if (limit == 0) return out;
  for (VertexSet s : shadow(host, pattern.r).base.edges)
    if (shadow_multiplicity(host, s) <= limit - 1) out.push_back(s);
  return out;
}

namespace {

// Kuhn augmenting-path matching from pattern edges to host edges restricted
// to the given candidate lists. Deterministic: edges and candidates are
// scanned in ascending order.
struct EdgeMatcher {
  const std::vector<std::vector<int>>& cands;
  int host_edges;
  std::vector<int> match_pat;   // pattern edge -> host edge or -1
  std::vector<int> match_host;  // host edge -> pattern edge or -1

  EdgeMatcher(const std::vector<std::vector<int>>& c, int hm)
      : cands(c), host_edges(hm), match_pat(c.size(), -1), match_host(hm, -1) {}

  bool augment(int pe, std::vector<bool>& vis) {
    for (int he : cands[pe]) {
      if (vis[he]) continue;
      vis[he] = true;
      if (match_host[he] == -1 || augment(match_host[he], vis)) {
        match_host[he] = pe;
        match_pat[pe] = he;
        return true;
      }
    }
    return false;
  }

  int run(int upto) {
    int size = 0;
    for (int pe = 0; pe < upto; ++pe) {
      std::vector<bool> vis(host_edges, false);
      if (augment(pe, vis)) ++size;
    }
    return size;
  }
};

struct BergeSearch {
  const Hypergraph& host;
  const UniformHypergraph& pattern;
  std::vector<int> order;  // assignment order over pattern vertices
  std::vector<std::vector<int>> close_at;
  std::vector<int> image;
  VertexSet used = 0;

  BergeSearch(const Hypergraph& h, const UniformHypergraph& p, bool by_degree)
      : host(h), pattern(p) {
    int pn = pattern.n();
    order.resize(pn);
    for (int i = 0; i < pn; ++i) order[i] = i;
    if (by_degree) {
      std::vector<int> deg(pn, 0);
      for (VertexSet e : pattern.base.edges)
        for (int v : set_vertices(e)) deg[v]++;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    }
    std::vector<int> pos(pn);
    for (int i = 0; i < pn; ++i) pos[order[i]] = i;
    close_at.assign(std::max(pn, 1), {});
    for (int ei = 0; ei < pattern.edge_count(); ++ei) {
      int last = -1;
      for (int v : set_vertices(pattern.base.edges[ei])) last = std::max(last, pos[v]);
      if (last >= 0) close_at[last].push_back(ei);
    }
    image.assign(pn, -1);
  }

  // candidate host edges for every pattern edge fully mapped so far
  bool matchable(std::vector<std::vector<int>>& cands, int mapped_edges) {
    EdgeMatcher m(cands, host.edge_count());
    return m.run(mapped_edges) == mapped_edges;
  }

  bool run(int step, std::vector<std::vector<int>>& cands, BergeEmbedding* out) {
    if (step == pattern.n()) {
      EdgeMatcher m(cands, host.edge_count());
      if (m.run(pattern.edge_count()) != pattern.edge_count()) return false;
      if (out) {
        out->vertex_map = image;
        out->edge_map = m.match_pat;
      }
      return true;
    }
    int u = order[step];
    for (int w = 0; w < host.n; ++w) {
      if (has_vertex(used, w)) continue;
      image[u] = w;
      used |= vbit(w);
      bool viable = true;
      std::vector<int> added;
      for (int ei : close_at[step]) {
        VertexSet mapped = 0;
        for (int v : set_vertices(pattern.base.edges[ei])) mapped |= vbit(image[v]);
        std::vector<int> c;
        for (int hi = 0; hi < host.edge_count(); ++hi)
          if (is_subset(mapped, host.edges[hi])) c.push_back(hi);
        if (c.empty()) {
          viable = false;
          break;
        }
        cands[ei] = std::move(c);
        added.push_back(ei);
      }
      if (viable && !close_at[step].empty()) {
        // a failed matching over the closed edges prunes the branch: the
        // candidate sets of closed edges never grow again
        int mapped_edges = 0;
        std::vector<std::vector<int>> closed;
        for (int ei = 0; ei < pattern.edge_count(); ++ei)
          if (!cands[ei].empty()) {
            closed.push_back(cands[ei]);
            ++mapped_edges;
          }
        EdgeMatcher m(closed, host.edge_count());
        viable = m.run(mapped_edges) == mapped_edges;
      }
      if (viable && run(step + 1, cands, out)) return true;
      for (int ei : added) cands[ei].clear();
      used &= ~vbit(w);
      image[u] = -1;
    }
    return false;
  }

  bool search(BergeEmbedding* out) {
    if (host.edge_count() < pattern.edge_count()) return false;
    if (pattern.n() > host.n) return false;
    std::vector<std::vector<int>> cands(pattern.edge_count());
    return run(0, cands, out);
  }
};

}  // namespace

std::optional<BergeEmbedding> find_berge(const Hypergraph& host, const UniformHypergraph& pattern) {
  BergeSearch s(host, pattern, /*by_degree=*/false);
  BergeEmbedding emb;
  if (!s.search(&emb)) return std::nullopt;
  if (!validate_embedding(host, pattern, emb))
    throw std::runtime_error("internal error: embedding failed self-validation");
  return emb;
}

bool contains_berge(const Hypergraph& host, const UniformHypergraph& pattern) {
  BergeSearch s(host, pattern, /*by_degree=*/true);
  return s.search(nullptr);
}

bool is_berge_free(const Hypergraph& host, const std::vector<UniformHypergraph>& family,
                   FreenessWitness* witness) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (witness) {
      auto emb = find_berge(host, family[i]);
      if (emb) {
        witness->member = static_cast<int>(i);
        witness->embedding = *emb;
        return false;
      }
    } else if (contains_berge(host, family[i])) {
      return false;
    }
  }
  return true;
}

BergeEmbedding greedy_berge_from_copy(const Hypergraph& host, const UniformHypergraph& pattern,
                                      const std::vector<int>& vertex_map) {
  int pn = pattern.n();
  if (static_cast<int>(vertex_map.size()) != pn)
    throw std::invalid_argument("vertex map size differs from pattern order");
  VertexSet seen = 0;
  for (int w : vertex_map) {
    if (w < 0 || w >= host.n || has_vertex(seen, w))
      throw std::invalid_argument("vertex map is not an injection into the host");
    seen |= vbit(w);
  }
  std::uint64_t need = pattern.edge_count();
  std::vector<std::vector<int>> cands(pattern.edge_count());
  for (int ei = 0; ei < pattern.edge_count(); ++ei) {
    VertexSet mapped = 0;
    for (int v : set_vertices(pattern.base.edges[ei])) mapped |= vbit(vertex_map[v]);
    std::uint64_t mult = shadow_multiplicity(host, mapped);
    if (mult < need)
      throw std::invalid_argument("pattern edge " + std::to_string(ei) + " has multiplicity " +
                                  std::to_string(mult) + " < " + std::to_string(need));
    for (int hi = 0; hi < host.edge_count(); ++hi)
      if (is_subset(mapped, host.edges[hi])) cands[ei].push_back(hi);
  }
  EdgeMatcher m(cands, host.edge_count());
  if (m.run(pattern.edge_count()) != pattern.edge_count())
    throw std::runtime_error("internal error: matching failed although Hall's condition holds");
  BergeEmbedding emb{vertex_map, m.match_pat};
  if (!validate_embedding(host, pattern, emb))
    throw std::runtime_error("internal error: embedding failed self-validation");
  return emb;
}

std::vector<Hypergraph> enumerate_berge_copies(const UniformHypergraph& pattern, int k) {
  if (k < pattern.r) throw std::invalid_argument("target uniformity below pattern uniformity");
  int per = k - pattern.r;
  int base = pattern.n();
  int m = pattern.edge_count();

  std::set<std::pair<int, std::vector<VertexSet>>> seen;  // (n, canonical key)
  std::vector<Hypergraph> out;

  std::vector<VertexSet> built;
  auto emit = [&](int fresh_used) {
    Hypergraph h = hypergraph_from_masks(base + fresh_used, built);
    auto key = std::make_pair(h.n, canonical_key(h));
    if (seen.insert(key).second) out.push_back(canonical_form(h).canonical);
  };

  auto rec = [&](auto&& self, int ei, int fresh_used) -> void {
    if (ei == m) {
      emit(fresh_used);
      return;
    }
    VertexSet pe = pattern.base.edges[ei];
    VertexSet active = (fresh_used + base == kMaxVertices ? ~VertexSet{0} : vbit(base + fresh_used) - 1);
    VertexSet allowed = active & ~pe;
    for (int take_new = 0; take_new <= per; ++take_new) {
      VertexSet news = 0;
      for (int j = 0; j < take_new; ++j) news |= vbit(base + fresh_used + j);
      for (VertexSet ext : subsets_of_size(allowed, per - take_new)) {
        VertexSet enlarged = pe | ext | news;
        bool dup = false;
        for (VertexSet prev : built)
          if (prev == enlarged) {
            dup = true;
            break;
          }
        if (dup) continue;
        built.push_back(enlarged);
        self(self, ei + 1, fresh_used + take_new);
        built.pop_back();
      }
    }
  };
  if (base + m * per > kMaxVertices) throw std::invalid_argument("enumeration exceeds vertex budget");
  rec(rec, 0, 0);

  std::sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) {
    if (a.n != b.n) return a.n < b.n;
    return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                        b.edges.end());
  });
  return out;
}

}  // namespace berge
