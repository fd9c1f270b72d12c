#ifndef INVENUM_SERIES_HPP
#define INVENUM_SERIES_HPP

// Exact truncated integer power series and the generating functions used by
// the counting cross-checks.  Coefficients are arbitrary precision; the
// precision K is always explicit and arithmetic takes the minimum precision
// of its operands, never silently extending.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace invenum {

class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t precision);

    std::size_t precision() const { return coeffs_.size(); }
    const mpz_class& coefficient(std::size_t k) const; // throws out_of_range at k >= K
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    void set(std::size_t k, mpz_class value);
    void add_term(std::size_t exponent, const mpz_class& value); // no-op past precision

    static TruncatedSeries monomial(std::size_t exponent, std::size_t precision);

    bool operator==(const TruncatedSeries&) const = default;

  private:
    std::vector<mpz_class> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// 1 / a for a series with constant term 1.
TruncatedSeries reciprocal(const TruncatedSeries& a);

// (sum_{i>=0} x^{i(i+1)/2})^2 — the correction series for the 123 total.
TruncatedSeries triangular_series_squared(std::size_t precision);

// Counting series for the pattern classes with known closed generating
// functions, named by the (sorted) pattern class they count.
TruncatedSeries gf_123_231(std::size_t precision);          // rectangle-missing fountains
TruncatedSeries gf_123_132(std::size_t precision);          // binomial double sum, shifted
TruncatedSeries gf_132_213(std::size_t precision);          // e2 of integer sequences
TruncatedSeries gf_123_132_213(std::size_t precision);      // binomial diagonal sum, shifted
TruncatedSeries gf_123_132_213_231(std::size_t precision);  // two sparse exponent families

// Fountain counting series, evaluated from the continued fraction
// 1/(1 - x/(1 - x^2/(1 - x^3/...))) truncated at depth K.
TruncatedSeries gf_fountain(std::size_t precision);

// Result of aligning a series against a reference count sequence.
struct OffsetReport {
    std::optional<int> offset;              // series[k] == reference[k + offset]
    std::pair<long long, long long> matched_range{0, -1}; // inclusive k range compared
    std::string diff;                       // human-readable failure detail
};

// Finds the unique shift |o| <= 2 with series[k] = reference[k+o] on the
// whole overlap; needs >= 4 overlapping terms and a unique candidate.
OffsetReport pin_offset(const TruncatedSeries& series, std::span<const mpz_class> reference);

} // namespace invenum

#endif
