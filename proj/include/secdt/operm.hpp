#pragma once

#include <vector>

#include "secdt/abb.hpp"

namespace secdt {

// Secret permutation, stored as a destination-index vector d with
// d[i] = pi(i) in [1, n]. Revealed only after masking with a fresh shuffle.
struct PrivatePerm {
    SVec dest;
    std::size_t size() const { return dest.size(); }
};

// One sort key; bits = 1 means the vector already holds bits, otherwise it
// is bit-decomposed by the backend.
struct SortKey {
    SVec values;
    int bits = 1;
};

// Uniformly random secret permutation of [1, n].
PrivatePerm random_perm(Abb& abb, std::size_t n);

// z[pi(i)] = x[i], all vectors through one shuffle.
std::vector<SVec> apply(Abb& abb, const PrivatePerm& perm,
                        std::span<const SVec> xs);
SVec apply(Abb& abb, const PrivatePerm& perm, const SVec& x);

// z[i] = x[pi(i)].
std::vector<SVec> apply_inv(Abb& abb, const PrivatePerm& perm,
                            std::span<const SVec> xs);
SVec apply_inv(Abb& abb, const PrivatePerm& perm, const SVec& x);

// Permutation that stably sorts the key tuples in lexicographic order;
// secret-shared radix sort, least-significant bit of the last key first.
PrivatePerm sort_perm(Abb& abb, std::span<const SortKey> keys);

// SortPerm + Apply with one permutation shared across all payloads.
std::vector<SVec> sort_by(Abb& abb, std::span<const SortKey> keys,
                          std::span<const SVec> payloads);

} // namespace secdt
