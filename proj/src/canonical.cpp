#include "berge/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

Hypergraph apply_permutation(const Hypergraph& h, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != h.n) throw std::invalid_argument("permutation size differs from n");
  std::vector<bool> seen(h.n, false);
  for (int v : perm) {
    if (v < 0 || v >= h.n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  std::vector<VertexSet> edges;
  edges.reserve(h.edges.size());
  for (VertexSet e : h.edges) {
    VertexSet m = 0;
    for (int v : set_vertices(e)) m |= vbit(perm[v]);
    edges.push_back(m);
  }
  return hypergraph_from_masks(h.n, std::move(edges));
}

namespace {

// DFS over label assignments. Position pos receives some input vertex;
// once an edge's last vertex is labeled its relabeled mask is fixed and,
// holding bit pos, sorts after everything completed earlier. The running
// prefix is therefore append-only, which makes prefix pruning sound.
struct CanonSearch {
  int n;
  std::vector<VertexSet> edges;
  std::vector<std::vector<int>> at_vertex;  // edge indices through each vertex
  std::vector<bool> swap_auto;              // n*n: transposition (u v) is an automorphism

  std::vector<int> assigned_label;  // input vertex -> label or -1
  std::vector<int> label_source;    // label -> input vertex
  std::vector<int> missing;         // per edge: #unlabeled vertices
  std::vector<VertexSet> prefix;    // completed relabeled masks, ascending
  std::vector<std::size_t> prefix_mark;

  std::vector<VertexSet> best;
  std::vector<int> best_perm;
  bool have_best = false;
  bool stop_less = false;  // is_min_labeling mode: abort on first strict improvement
  bool found_less = false;

  explicit CanonSearch(const Hypergraph& h) : n(h.n), edges(h.edges) {
    at_vertex.assign(std::max(n, 1), {});
    for (std::size_t ei = 0; ei < edges.size(); ++ei)
      for (int v : set_vertices(edges[ei])) at_vertex[v].push_back(static_cast<int>(ei));
    swap_auto.assign(static_cast<std::size_t>(n) * n, false);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool ok = true;
        for (VertexSet e : edges) {
          bool hu = has_vertex(e, u), hv = has_vertex(e, v);
          if (hu == hv) continue;
          VertexSet swapped = (e & ~(vbit(u) | vbit(v))) | (hu ? vbit(v) : vbit(u));
          if (!std::binary_search(edges.begin(), edges.end(), swapped, edge_lex_less)) {
            ok = false;
            break;
          }
        }
        swap_auto[u * n + v] = ok;
      }
    assigned_label.assign(n, -1);
    label_source.assign(n, -1);
    missing.resize(edges.size());
    for (std::size_t ei = 0; ei < edges.size(); ++ei) missing[ei] = set_size(edges[ei]);
  }

  VertexSet relabeled(int ei) const {
    VertexSet m = 0;
    for (int v : set_vertices(edges[ei])) m |= vbit(assigned_label[v]);
    return m;
  }

  // -1 strictly less than best somewhere, 0 equal so far, +1 strictly greater
  int compare_prefix() const {
    if (!have_best) return -1;
    std::size_t len = std::min(prefix.size(), best.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (prefix[i] < best[i]) return -1;
      if (prefix[i] > best[i]) return 1;
    }
    if (prefix.size() > best.size()) return 1;  // only possible in degenerate calls
    return 0;
  }

  void record_leaf() {
    int c = compare_prefix();
    if (c < 0) {
      if (stop_less) {
        found_less = true;
        return;
      }
      best = prefix;
      best_perm = assigned_label;
      have_best = true;
    }
  }

  void run(int pos) {
    if (found_less) return;
    if (pos == n) {
      record_leaf();
      return;
    }
    // candidates, deduplicated along leftover transposition symmetry
    std::vector<int> cands;
    for (int u = 0; u < n; ++u) {
      if (assigned_label[u] != -1) continue;
      bool dup = false;
      for (int v : cands)
        if (swap_auto[std::min(u, v) * n + std::max(u, v)]) {
          dup = true;
          break;
        }
      if (!dup) cands.push_back(u);
    }
    // try candidates in order of the masks they complete
    std::vector<std::pair<std::vector<VertexSet>, int>> ranked;
    ranked.reserve(cands.size());
    for (int u : cands) {
      std::vector<VertexSet> add;
      assigned_label[u] = pos;
      for (int ei : at_vertex[u])
        if (missing[ei] == 1) add.push_back(relabeled(ei));
      assigned_label[u] = -1;
      std::sort(add.begin(), add.end());
      ranked.emplace_back(std::move(add), u);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto& [add, u] : ranked) {
      assigned_label[u] = pos;
      label_source[pos] = u;
      for (int ei : at_vertex[u]) --missing[ei];
      prefix_mark.push_back(prefix.size());
      prefix.insert(prefix.end(), add.begin(), add.end());

      if (compare_prefix() <= 0) run(pos + 1);

      prefix.resize(prefix_mark.back());
      prefix_mark.pop_back();
      for (int ei : at_vertex[u]) ++missing[ei];
      assigned_label[u] = -1;
      label_source[pos] = -1;
      if (found_less) return;
    }
  }
};

}  // namespace

CanonicalCertificate canonical_form(const Hypergraph& h) {
  if (h.n == 0) return CanonicalCertificate{h, {}};
  CanonSearch s(h);
  s.run(0);
  std::vector<VertexSet> masks = s.best;
  CanonicalCertificate cert;
  cert.perm = s.best_perm;
  cert.canonical = hypergraph_from_masks(h.n, std::move(masks));
  return cert;
}

bool is_min_labeling(const Hypergraph& h) {
  if (h.n == 0) return true;
  CanonSearch s(h);
  s.best.assign(h.edges.begin(), h.edges.end());
  std::sort(s.best.begin(), s.best.end());
  s.have_best = true;
  s.stop_less = true;
  s.run(0);
  return !s.found_less;
}

std::vector<VertexSet> canonical_key(const Hypergraph& h) {
  if (h.n == 0) return {};
  CanonSearch s(h);
  s.run(0);
  return s.best;
}

}  // namespace berge
