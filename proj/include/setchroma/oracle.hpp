#pragma once

#include "setchroma/bigint.hpp"
#include "setchroma/genfunc.hpp"
#include "setchroma/graph.hpp"

// Exhaustive enumerators used as ground truth. Nothing here goes through the
// bond lattice or a generating function. Each guard throws CapacityError
// instead of truncating.
namespace setchroma::oracle {

/// Enumerates all 2^{nk} assignments of subsets of [k] to the vertices and
/// counts those where adjacent subsets differ in size.
BigCount brute_force_set_coloring(const SimpleGraph& g, int k);

/// Sum of prod_i alpha_{f(i)} over all f : V -> {0..k} with f(u) != f(v) on
/// every edge; (k+1)^n states.
BigCount brute_force_weighted(const SimpleGraph& g, const WeightSequence& alpha);

/// n-tuples of subsets of [k] with pairwise distinct cardinalities.
BigCount brute_force_urns(int n, int k);

/// Sum of prod_i alpha_{f(i)} over all f : [n] -> {0..k} constant on each
/// block of `blocks`.
BigCount brute_force_block_constant(const Partition& blocks, const WeightSequence& alpha);

/// Chromatic number by exhaustive search over colorings with c colors,
/// c = 0, 1, 2, ...
int chromatic_number(const SimpleGraph& g);

}  // namespace setchroma::oracle
