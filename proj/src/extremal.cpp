#include "berge/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "berge/berge.hpp"
#include "berge/canonical.hpp"

namespace berge {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchSpec {
  int n = 0;
  int r = 0;
  GrowPredicate pred;
  std::function<std::uint64_t(const Hypergraph&)> objective;
  bool prune_by_edges = false;  // objective is the edge count
};

struct BudgetState {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  bool timed;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  explicit BudgetState(const SearchBudget& b)
      : max_nodes(b.max_nodes),
        deadline(Clock::now() +
                 std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(
                     std::isfinite(b.max_seconds) ? b.max_seconds : 0.0))),
        timed(std::isfinite(b.max_seconds)) {}

  // one tick per visited node; flips stop when a budget runs out
  void tick() {
    std::uint64_t c = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (c > max_nodes) stop.store(true, std::memory_order_relaxed);
    if (timed && (c & 255) == 0 && Clock::now() > deadline)
      stop.store(true, std::memory_order_relaxed);
  }
};

struct SubtreeAcc {
  std::uint64_t seen = 0;  // best objective seen
  bool any = false;
  std::vector<Hypergraph> wits;
  std::uint64_t nodes = 0;

  void visit(const Hypergraph& h, std::uint64_t obj, bool all_witnesses) {
    ++nodes;
    if (!any || obj > seen) {
      seen = obj;
      any = true;
      wits.clear();
      wits.push_back(h);
    } else if (obj == seen && (all_witnesses || wits.empty())) {
      wits.push_back(h);
    }
  }
};

struct Node {
  std::vector<VertexSet> masks;  // ascending numeric order
  Hypergraph hyper;
  int last_rank = -1;
};

// Children of a node: append a larger candidate mask, keep it if the
// predicate still holds and the child is minimum-labeled (orderly test).
class Engine {
 public:
  Engine(const SearchSpec& spec, BudgetState& budget, bool all_witnesses)
      : spec_(spec), budget_(budget), all_witnesses_(all_witnesses) {
    VertexSet full = spec.n == kMaxVertices ? ~VertexSet{0} : (vbit(spec.n) - 1);
    all_masks_ = subsets_of_size(full, spec.r);
    std::sort(all_masks_.begin(), all_masks_.end());
  }

  std::uint64_t greedy_bound() const {
    std::vector<VertexSet> cur;
    for (VertexSet e : all_masks_) {
      cur.push_back(e);
      Hypergraph h = hypergraph_from_masks(spec_.n, cur);
      if (!spec_.pred(h, e)) cur.pop_back();
    }
    return cur.size();
  }

  std::vector<Node> expand_frontier(SubtreeAcc& prefix, int target) {
    std::vector<Node> level;
    level.push_back(Node{{}, hypergraph_from_masks(spec_.n, {}), -1});
    int depth = 0;
    while (depth < 3 && static_cast<int>(level.size()) < target) {
      std::vector<Node> next;
      for (Node& nd : level) {
        budget_.tick();
        prefix.visit(nd.hyper, spec_.objective(nd.hyper), all_witnesses_);
        for (Node& ch : children(nd)) next.push_back(std::move(ch));
      }
      if (next.empty()) return {};
      level = std::move(next);
      ++depth;
    }
    return level;
  }

  std::vector<Node> children(const Node& nd) {
    std::vector<Node> out;
    for (int rank = nd.last_rank + 1; rank < static_cast<int>(all_masks_.size()); ++rank) {
      VertexSet e = all_masks_[rank];
      std::vector<VertexSet> masks = nd.masks;
      masks.push_back(e);
      Hypergraph h = hypergraph_from_masks(spec_.n, masks);
      if (!spec_.pred(h, e)) continue;
      if (!is_min_labeling(h)) continue;
      out.push_back(Node{std::move(masks), std::move(h), rank});
    }
    return out;
  }

  void dfs(const Node& nd, std::uint64_t bar, SubtreeAcc& acc) {
    if (budget_.stop.load(std::memory_order_relaxed)) return;
    budget_.tick();
    acc.visit(nd.hyper, spec_.objective(nd.hyper), all_witnesses_);
    std::uint64_t local_bar = std::max(bar, acc.seen);
    int total = static_cast<int>(all_masks_.size());
    for (int rank = nd.last_rank + 1; rank < total; ++rank) {
      if (spec_.prune_by_edges) {
        // candidates only shrink with rank, so the first failing bound ends the loop
        std::uint64_t potential = nd.masks.size() + 1 + (total - 1 - rank);
        if (potential < std::max(local_bar, acc.seen)) break;
      }
      VertexSet e = all_masks_[rank];
      std::vector<VertexSet> masks = nd.masks;
      masks.push_back(e);
      Hypergraph h = hypergraph_from_masks(spec_.n, masks);
      if (!spec_.pred(h, e)) continue;
      if (!is_min_labeling(h)) continue;
      Node child{std::move(masks), std::move(h), rank};
      dfs(child, local_bar, acc);
      local_bar = std::max(local_bar, acc.seen);
      if (budget_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  // Deterministic across worker counts: fixed frontier, per-subtree bounds.
  ExtremalResult run(int workers) {
    std::uint64_t bar = spec_.prune_by_edges ? greedy_bound() : 0;
    SubtreeAcc prefix;
    std::vector<Node> frontier = expand_frontier(prefix, std::max(64, 4 * workers));

    std::vector<SubtreeAcc> accs(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(workers, 1)) if (workers > 1)
#endif
    for (std::size_t i = 0; i < frontier.size(); ++i) dfs(frontier[i], bar, accs[i]);

    ExtremalResult res;
    SubtreeAcc merged = std::move(prefix);
    for (SubtreeAcc& a : accs) {
      merged.nodes += a.nodes;
      if (!a.any) continue;
      if (!merged.any || a.seen > merged.seen) {
        merged.seen = a.seen;
        merged.any = true;
        merged.wits = std::move(a.wits);
      } else if (a.seen == merged.seen) {
        if (all_witnesses_)
          for (Hypergraph& w : a.wits) merged.wits.push_back(std::move(w));
        else if (merged.wits.empty())
          merged.wits = std::move(a.wits);
      }
    }
    res.value = merged.any ? merged.seen : 0;
    res.witnesses = std::move(merged.wits);
    if (!all_witnesses_ && res.witnesses.size() > 1) res.witnesses.resize(1);
    res.nodes = merged.nodes;
    res.exhausted = !budget_.stop.load();
    return res;
  }

  // Straight recursion with one continuously shared bound; the reference
  // the parallel engine is tested against.
  ExtremalResult run_reference() {
    SubtreeAcc acc;
    std::uint64_t bar = spec_.prune_by_edges ? greedy_bound() : 0;
    Node root{{}, hypergraph_from_masks(spec_.n, {}), -1};
    dfs(root, bar, acc);
    ExtremalResult res;
    res.value = acc.any ? acc.seen : 0;
    res.witnesses = std::move(acc.wits);
    if (!all_witnesses_ && res.witnesses.size() > 1) res.witnesses.resize(1);
    res.nodes = acc.nodes;
    res.exhausted = !budget_.stop.load();
    return res;
  }

 private:
  SearchSpec spec_;
  BudgetState& budget_;
  bool all_witnesses_;
  std::vector<VertexSet> all_masks_;
};

SearchSpec uniform_spec(int n, int k, const UniformHypergraph& pattern) {
  SearchSpec s;
  s.n = n;
  s.r = k;
  s.pred = [&pattern](const Hypergraph& g, VertexSet e) {
    return !has_copy_through_edge(pattern.base, g, e);
  };
  s.objective = [](const Hypergraph& g) { return static_cast<std::uint64_t>(g.edge_count()); };
  s.prune_by_edges = true;
  return s;
}

SearchSpec berge_spec(int n, int r, const UniformHypergraph& pattern) {
  SearchSpec s;
  s.n = n;
  s.r = r;
  s.pred = [&pattern](const Hypergraph& g, VertexSet) { return !contains_berge(g, pattern); };
  s.objective = [](const Hypergraph& g) { return static_cast<std::uint64_t>(g.edge_count()); };
  s.prune_by_edges = true;
  return s;
}

SearchSpec generalized_spec(int n, int k, int s_clique, const UniformHypergraph& pattern) {
  SearchSpec s;
  s.n = n;
  s.r = k;
  s.pred = [&pattern](const Hypergraph& g, VertexSet e) {
    return !has_copy_through_edge(pattern.base, g, e);
  };
  s.objective = [s_clique, k](const Hypergraph& g) {
    return count_cliques(UniformHypergraph{g, k}, s_clique);
  };
  s.prune_by_edges = false;
  return s;
}

void check_params(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("search needs n >= 0 and r >= 1");
  if (n > kMaxVertices) throw std::invalid_argument("vertex count above mask width");
}

}  // namespace

EnumerationResult enumerate_uniform(int n, int r, const GrowPredicate& pred,
                                    const SearchBudget& budget,
                                    const std::function<void(const Hypergraph&)>& visit) {
  check_params(n, r);
  BudgetState bs(budget);
  VertexSet full = n == kMaxVertices ? ~VertexSet{0} : (vbit(n) - 1);
  std::vector<VertexSet> all_masks = subsets_of_size(full, r);
  std::sort(all_masks.begin(), all_masks.end());
  EnumerationResult res;

  auto rec = [&](auto&& self, const std::vector<VertexSet>& masks, const Hypergraph& h,
                 int last) -> void {
    if (bs.stop.load(std::memory_order_relaxed)) return;
    bs.tick();
    ++res.classes;
    visit(h);
    for (int rank = last + 1; rank < static_cast<int>(all_masks.size()); ++rank) {
      VertexSet e = all_masks[rank];
      std::vector<VertexSet> next = masks;
      next.push_back(e);
      Hypergraph nh = hypergraph_from_masks(n, next);
      if (!pred(nh, e)) continue;
      if (!is_min_labeling(nh)) continue;
      self(self, next, nh, rank);
      if (bs.stop.load(std::memory_order_relaxed)) return;
    }
  };
  rec(rec, {}, hypergraph_from_masks(n, {}), -1);
  res.exhausted = !bs.stop.load();
  return res;
}

ExtremalResult ex_uniform(int n, int k, const UniformHypergraph& pattern,
                          const SearchBudget& budget, bool all_witnesses) {
  check_params(n, k);
  BudgetState bs(budget);
  Engine eng(uniform_spec(n, k, pattern), bs, all_witnesses);
  return eng.run(budget.workers);
}

ExtremalResult ex_berge(int n, int r, const UniformHypergraph& pattern,
                        const SearchBudget& budget, bool all_witnesses) {
  check_params(n, r);
  BudgetState bs(budget);
  Engine eng(berge_spec(n, r, pattern), bs, all_witnesses);
  return eng.run(budget.workers);
}

ExtremalResult ex_generalized(int n, int k, int s, const UniformHypergraph& pattern,
                              const SearchBudget& budget, bool all_witnesses) {
  check_params(n, k);
  if (s < k) throw std::invalid_argument("clique size below uniformity");
  BudgetState bs(budget);
  Engine eng(generalized_spec(n, k, s, pattern), bs, all_witnesses);
  return eng.run(budget.workers);
}

ExtremalResult ex_uniform_reference(int n, int k, const UniformHypergraph& pattern,
                                    const SearchBudget& budget, bool all_witnesses) {
  check_params(n, k);
  BudgetState bs(budget);
  Engine eng(uniform_spec(n, k, pattern), bs, all_witnesses);
  return eng.run_reference();
}

ExtremalResult ex_berge_reference(int n, int r, const UniformHypergraph& pattern,
                                  const SearchBudget& budget, bool all_witnesses) {
  check_params(n, r);
  BudgetState bs(budget);
  Engine eng(berge_spec(n, r, pattern), bs, all_witnesses);
  return eng.run_reference();
}

RamseyResult ramsey_number(const UniformHypergraph& pattern, int cap) {
  int r = pattern.r;
  if (pattern.edge_count() == 0) throw std::invalid_argument("ramsey pattern needs an edge");
  if (cap < r) throw std::invalid_argument("cap below pattern uniformity");

  RamseyResult result;
  result.witness_order = r - 1;
  result.witness_coloring = {};

  for (int order = r; order <= cap; ++order) {
    UniformHypergraph complete = complete_uniform(order, r);
    const std::vector<VertexSet>& all = complete.base.edges;
    std::vector<bool> colors(all.size(), false);
    std::vector<VertexSet> red, blue;

    // good coloring = neither color class contains the pattern; first edge
    // pinned red kills the color-swap symmetry
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
      if (idx == all.size()) return true;
      for (int c = 0; c < (idx == 0 ? 1 : 2); ++c) {
        std::vector<VertexSet>& mine = c == 0 ? red : blue;
        mine.push_back(all[idx]);
        Hypergraph mono = hypergraph_from_masks(order, mine);
        bool bad = has_copy_through_edge(pattern.base, mono, all[idx]);
        if (!bad) {
          colors[idx] = (c == 0);
          if (self(self, idx + 1)) {
            mine.pop_back();
            return true;
          }
        }
        mine.pop_back();
      }
      return false;
    };
    if (rec(rec, 0)) {
      result.witness_order = order;
      result.witness_coloring = colors;
    } else {
      result.value = order;
      return result;
    }
  }
  result.exceeded = true;
  return result;
}

SandwichReport verify_sandwich(int n, int k, int r, const UniformHypergraph& pattern,
                               const SearchBudget& budget) {
  if (k > r) throw std::invalid_argument("sandwich needs k <= r");
  if (pattern.r != k) throw std::invalid_argument("pattern uniformity must equal k");
  SandwichReport rep;
  ExtremalResult lower = ex_generalized(n, k, r, pattern, budget, /*all_witnesses=*/true);
  ExtremalResult middle = ex_berge(n, r, pattern, budget);
  ExtremalResult expat = ex_uniform(n, k, pattern, budget);
  rep.lower = lower.value;
  rep.middle = middle.value;
  rep.ex_pattern = expat.value;
  rep.upper = lower.value + expat.value;
  rep.exhausted = lower.exhausted && middle.exhausted && expat.exhausted;

  rep.construction_ok = true;
  for (const Hypergraph& w : lower.witnesses) {
    UniformHypergraph replaced = clique_replacement(UniformHypergraph{w, k}, r);
    if (static_cast<std::uint64_t>(replaced.edge_count()) != lower.value ||
        contains_berge(replaced.base, pattern))
      rep.construction_ok = false;
  }
  if (rep.exhausted) {
    rep.left_ok = rep.lower <= rep.middle;
    rep.right_ok = rep.middle <= rep.upper;
  }
  return rep;
}

ExpansionChainReport verify_expansion_chain(int n, int r, int k, const UniformHypergraph& f0,
                                            const SearchBudget& budget) {
  if (!(2 <= k && k <= r)) throw std::invalid_argument("expansion chain needs 2 <= k <= r");
  if (f0.r != 2) throw std::invalid_argument("f0 must be a 2-graph");
  ExpansionChainReport rep;
  UniformHypergraph mid_pattern = expansion(f0, k);
  UniformHypergraph top_pattern = expansion(f0, r);

  ExtremalResult base = ex_berge(n, r, f0, budget);
  ExtremalResult middle = ex_berge(n, r, mid_pattern, budget);
  ExtremalResult upper = ex_uniform(n, r, top_pattern, budget);
  rep.base = base.value;
  rep.middle = middle.value;
  rep.upper = upper.value;
  rep.exhausted = base.exhausted && middle.exhausted && upper.exhausted;
  if (rep.exhausted) rep.chain_ok = rep.base <= rep.middle && rep.middle <= rep.upper;

  rep.chromatic = chromatic_number(f0);
  if (rep.chromatic > r && r > k) {
    UniformHypergraph turan = turan_hypergraph(n, r, rep.chromatic - 1);
    rep.turan_edges = turan.edge_count();
    rep.turan_free_ok = !contains_berge(turan.base, mid_pattern);
    rep.turan_le_middle = rep.exhausted &&
                          static_cast<std::uint64_t>(turan.edge_count()) <= rep.middle;
  }
  return rep;
}

bool within_exact_grid(int n, int r) {
  if (r == 2) return n <= 9;
  if (r == 3) return n <= 7;
  if (r == 4) return n <= 6;
  return false;
}

}  // namespace berge
