#pragma once

#include <functional>
#include <vector>

#include "secdt/abb.hpp"

namespace secdt {

// Group-wise aggregation over internally grouped vectors: a secret value
// vector x plus a secret group flag vector g (g[1] = 1) whose 1s mark the
// first element of each contiguous hidden group.

// y[i] = sum of x over i's group.
SVec group_sum(Abb& abb, const SVec& g, const SVec& x);

// Same aggregation for several value vectors, sharing one sort permutation.
std::vector<SVec> group_sum_multi(Abb& abb, const SVec& g,
                                  std::span<const SVec> xs);

// y[i] = sum of x from the group head up to i.
SVec group_prefix_sum(Abb& abb, const SVec& g, const SVec& x);

// y[i] = max of x over i's group (signed order).
SVec group_max(Abb& abb, const SVec& g, const SVec& x);

// Comparator for group_max_by: receives the key columns of two candidate
// rows and returns the secret bit [a < b].
using RowLess = std::function<SVec(Abb&, std::span<const SVec> a,
                                   std::span<const SVec> b)>;

// Generalized group-wise max: cols[0..nkeys) are the key columns fed to the
// comparator, and every column (keys included) is carried through and
// returned group-constant. Ties select the leftmost maximal row.
std::vector<SVec> group_max_by(Abb& abb, const SVec& g,
                               std::span<const SVec> cols, std::size_t nkeys,
                               const RowLess& less);

// f[i] = 1 iff b[i] = 1 and no earlier element of i's group has b = 1.
SVec group_first_one(Abb& abb, const SVec& g, const SVec& b);

// f[i] = 1 iff all bits of y in i's group are equal.
SVec group_same(Abb& abb, const SVec& g, const SVec& y);

} // namespace secdt
