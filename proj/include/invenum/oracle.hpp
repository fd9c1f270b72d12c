#ifndef INVENUM_ORACLE_HPP
#define INVENUM_ORACLE_HPP

// Ground-truth enumeration of permutations by inversion count, generated as
// subdiagonal sequences with a fixed entry sum.  An indecomposable
// permutation with k inversions has length at most k + 1, so I_k is finite
// and fully enumerable.

#include <functional>
#include <vector>

#include "invenum/count_report.hpp"
#include "invenum/permutation.hpp"

namespace invenum {

inline constexpr int kDefaultOracleBound = 14;

struct AvoiderQuery {
    long long k = 0;
    PatternSet patterns;
    bool indecomposable_only = true;
    int bound = kDefaultOracleBound;

    AvoiderQuery(long long k_, PatternSet patterns_, bool indecomposable_only_ = true,
                 int bound_ = kDefaultOracleBound)
        : k(k_), patterns(std::move(patterns_)), indecomposable_only(indecomposable_only_),
          bound(bound_) {}
};

// Streams every permutation of length n <= max_length with exactly k
// inversions, in (length, lexicographic) order, without materializing.
void for_each_permutation_with_inversions(
    long long k, int max_length, const std::function<void(const Permutation&)>& fn);

// Materialized variant; asks for modest k only.
std::vector<Permutation> permutations_with_inversions(long long k, int max_length,
                                                      int bound = kDefaultOracleBound);

// All of I_k, sorted by length then one-line lexicographic order.
std::vector<Permutation> indecomposables_with_inversions(long long k,
                                                         int bound = kDefaultOracleBound);

// |{p in I_k : p avoids all patterns}|.  With indecomposable_only = false
// the query ranges over all permutations with k inversions of length
// <= k + 1 instead; that window is exhaustive for I_k but not for the
// decomposable permutations, which exist at every larger length.
long long count_avoiders(const AvoiderQuery& q);
std::vector<Permutation> enumerate_avoiders(const AvoiderQuery& q);

// Counts for k = 0..k_max, tagged method "oracle".
CountReport avoider_sequence(const PatternSet& patterns, long long k_max,
                             int bound = kDefaultOracleBound);

// All 123-avoiding permutations with k inversions, including decomposable
// ones.  Length cap k + 2 is exact: such a permutation has at most two
// components (one element from each of three blocks would form a 123), and
// each component is an indecomposable with k_i inversions, so of length
// <= k_i + 1.
long long total_123_avoiders(long long k, int bound = kDefaultOracleBound);

} // namespace invenum

#endif
