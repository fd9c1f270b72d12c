#ifndef INVENUM_PERMUTATION_HPP
#define INVENUM_PERMUTATION_HPP

// Permutations in one-line notation, inversion statistics, direct/skew sums,
// the component factorization, classical pattern containment, the symmetry
// maps that preserve inversion count, and the inversion-table encoding.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace invenum {

// A permutation of 1..n in one-line notation, n >= 1.  Values are validated
// on construction; instances are immutable afterwards.
class Permutation {
  public:
    explicit Permutation(std::vector<int> values);

    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; } // 0-based
    const std::vector<int>& values() const { return values_; }

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> values_;
};

// An inversion table b_1..b_n with b_i <= n - i (so b_n = 0).
class SubdiagonalSequence {
  public:
    explicit SubdiagonalSequence(std::vector<int> entries);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }
    long long sum() const;

    auto operator<=>(const SubdiagonalSequence&) const = default;

  private:
    std::vector<int> entries_;
};

// A nonempty, duplicate-free set of patterns kept in canonical order
// (by length, then lexicographically) for stable reporting.
class PatternSet {
  public:
    explicit PatternSet(std::vector<Permutation> patterns);

    const std::vector<Permutation>& patterns() const { return patterns_; }
    std::string to_string() const;

    // The set {reverse_complement(t) : t in this set}.
    PatternSet reverse_complemented() const;

    auto operator<=>(const PatternSet&) const = default;

  private:
    std::vector<Permutation> patterns_;
};

// Number of pairs i < j with p_i > p_j.
long long inversions(const Permutation& p);

// The unique maximal factorization p = c_1 (+) c_2 (+) ... into
// indecomposable blocks, each renumbered to a permutation of its own length.
std::vector<Permutation> components(const Permutation& p);

bool is_decomposable(const Permutation& p);
bool is_indecomposable(const Permutation& p);

// p followed by q shifted up by |p|; adds no inversions across the blocks.
Permutation direct_sum(const Permutation& p, const Permutation& q);

// p shifted up by |q| followed by q; adds |p|*|q| inversions across blocks.
Permutation skew_sum(const Permutation& p, const Permutation& q);

// p_1..p_n  ->  (n+1-p_n)(n+1-p_{n-1})..(n+1-p_1).  Involution; preserves
// inversion count and the number of components.
Permutation reverse_complement(const Permutation& p);

// Group inverse: q with q_{p_i} = i.  Involution with the same invariants.
Permutation inverse(const Permutation& p);

// Classical containment: some subsequence of p is order-isomorphic to t.
bool contains(const Permutation& p, const Permutation& t);
bool avoids(const Permutation& p, const Permutation& t);
bool avoids_all(const Permutation& p, const PatternSet& patterns);

// b_i = number of values after p_i that are smaller than p_i.
SubdiagonalSequence inversion_table(const Permutation& p);

// Inverse of inversion_table; the two are mutually inverse bijections.
Permutation permutation_from_table(const SubdiagonalSequence& b);

// flag i is true iff b_i attains its maximum n - i ("diagonal" entries).
std::vector<bool> diagonal_flags(const SubdiagonalSequence& b);

// Textual format: space-free digit string for n <= 9 ("3142"),
// comma-separated values otherwise ("10,1,2,...").  parse accepts both.
std::string to_string(const Permutation& p);
Permutation parse_permutation(const std::string& text);

// CLI pattern-set format: comma-separated digit strings, e.g. "132,213".
PatternSet parse_pattern_set(const std::string& text);

} // namespace invenum

#endif
