#ifndef INVENUM_FAST_COUNTS_HPP
#define INVENUM_FAST_COUNTS_HPP

// The fast counting paths: the quadratic-time table for 321-avoiders, the
// Gorenstein-partition recurrence (plain and windowed), the table
// characterization of 123-avoiders, the degenerate closed forms, and an
// experimental recurrence kept for side-by-side comparison only.

#include <vector>

#include <gmpxx.h>

#include "invenum/permutation.hpp"

namespace invenum {

// Memoized triangle for the 321-avoider recurrence
//   a(0, m) = 1
//   a(n, 1) = sum_{i=1..n} a(n-i, i)
//   a(n, m) = a(n, m-1) + sum_{i=m..n} a(n-i, i)
// with count_i321(k) = a(k, 1).  Building the table for max_n costs O(n^2)
// time and space: a(n, m) is constant for m >= n, and the inner sums are
// shared via the suffix recurrence S(n, m) = a(n-m, m) + S(n, m+1).
class Avoider321Table {
  public:
    explicit Avoider321Table(int max_n);

    // valid for n >= 0, m >= 1 with n + min(m, n) <= max_n (plus the full
    // column m = 1 and the whole n = 0 row)
    const mpz_class& value(int n, int m) const;

    int max_n() const { return max_n_; }

  private:
    int max_n_;
    mpz_class one_{1};
    std::vector<std::vector<mpz_class>> rows_; // rows_[n][m-1], trimmed width
};

// |I_k(321)| via the table; also the parallelogram-polyomino cell counts.
mpz_class count_i321(long long k);
std::vector<mpz_class> count_i321_sequence(long long k_max);

// Memoized table for the Gorenstein-partition recurrence
//   f(n, d) = 0 (n < 0),  1 (n = 0),  sum_{k=1..d} f(n - k(d+1-k), d-k)
// The windowed variant skips the middle of the k-range, where
// k(d+1-k) > n makes every summand vanish; the valid k form a prefix and a
// suffix of 1..d because k(d+1-k) is concave in k.
class GorensteinTable {
  public:
    explicit GorensteinTable(int max_n, bool windowed = true);

    const mpz_class& f(int n, int d) const; // n in [0, max_n], d in [0, max_n]
    mpz_class count(int n) const;           // sum_{d=0..n} f(n, d)

    int max_n() const { return max_n_; }

  private:
    int max_n_;
    std::vector<std::vector<mpz_class>> table_; // table_[n][d]
};

// Number of partitions of n whose corner hook values all agree; equals
// |I_n(132,213)|.
mpz_class gorenstein_count(long long n);
std::vector<mpz_class> gorenstein_count_sequence(long long n_max, bool windowed = true);

// |I_k(123)| by direct characterization: subdiagonal sequences of length
// <= k+1 with entry sum k whose permutation is indecomposable and whose
// non-diagonal entries are strictly decreasing left to right.
mpz_class count_i123(long long k, int bound = 30);

// Degenerate families with closed forms.
enum class ClosedFormFamily {
    Partitions,         // p(k)
    DistinctPartitions, // q(k)
    EqualPartitions,    // d(k), 1 at k = 0 by the |I_0| convention
    Divisors,           // same as EqualPartitions
    OddDivisors,        // 1 at k = 0 by convention
    TriangularChar,     // 1 iff k is triangular
    ConstantOne,
};

mpz_class closed_form(ClosedFormFamily family, long long k);
std::vector<mpz_class> closed_form_sequence(ClosedFormFamily family, long long k_max);

// The unique element of I_k(231, 321): "1" for k = 0, else (k+1) 1 2 .. k.
Permutation unique_avoider_231_321(long long k);

// Experimental: a published three-index recurrence for the 123 total,
// transcribed verbatim (its stray index l read as k).  Kept only for
// side-by-side reporting; it disagrees with brute force at k = 1 and k = 2,
// so it is never used as a counting path.
mpz_class experimental_c123(long long n, long long m, long long k);
mpz_class experimental_total_123(long long k);

} // namespace invenum

#endif
