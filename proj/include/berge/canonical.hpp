#pragma once

#include "berge/hypergraph.hpp"

namespace berge {

struct CanonicalCertificate {
  Hypergraph canonical;    // the relabeled hypergraph, storage edge order
  std::vector<int> perm;   // perm[input vertex] = canonical vertex
};

// Canonical form under vertex relabeling: the labeling minimizing the
// sorted vector of edge bitmasks in numeric order. Exact for every n
// (branch-and-bound over label assignments with transposition-symmetry
// pruning); the toolkit's supported exact range is n <= 12.
CanonicalCertificate canonical_form(const Hypergraph& h);

// True iff h's own labeling already attains the canonical minimum.
// This is the orderly-generation acceptance test.
bool is_min_labeling(const Hypergraph& h);

// Sorted edge-mask vector of the canonical relabeling; equality of keys
// (together with n) is isomorphism at toolkit scale.
std::vector<VertexSet> canonical_key(const Hypergraph& h);

Hypergraph apply_permutation(const Hypergraph& h, const std::vector<int>& perm);

}  // namespace berge
