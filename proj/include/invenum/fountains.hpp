#ifndef INVENUM_FOUNTAINS_HPP
#define INVENUM_FOUNTAINS_HPP

// Fountains of coins: a full bottom row, every higher coin resting on two
// adjacent coins of the row below.  Rows are 0-indexed from the bottom; a
// coin at (r, p) rests on (r-1, p) and (r-1, p+1).  Even-indexed rows are
// the "red" (counted) rows of an even fountain.

#include <compare>
#include <string>
#include <vector>

namespace invenum {

class Fountain {
  public:
    // rows[r] = sorted coin positions of row r; empty vector of rows = the
    // empty fountain.  Throws std::invalid_argument on a support violation,
    // a holed bottom row, an empty intermediate row, or unsorted positions.
    explicit Fountain(std::vector<std::vector<int>> rows = {});

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int bottom_width() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    long long coins() const;

    // Coins in rows 0, 2, 4, ...
    long long even_row_coins() const;

    bool has_coin(int row, int pos) const;

    auto operator<=>(const Fountain&) const = default;

  private:
    std::vector<std::vector<int>> rows_;
};

// A fountain tallied by its even-row ("red") coins only.
struct EvenFountain {
    Fountain fountain;
    long long size = 0; // = fountain.even_row_coins()

    explicit EvenFountain(Fountain f)
        : fountain(std::move(f)), size(fountain.even_row_coins()) {}
    auto operator<=>(const EvenFountain&) const = default;
};

inline constexpr int kDefaultFountainBound = 16;
inline constexpr int kDefaultEvenFountainBound = 10;

// Exhaustive, duplicate-free; k = 0 yields only the empty fountain.
std::vector<Fountain> fountains_with_coins(int k, int bound = kDefaultFountainBound);

// Exhaustive over fountains whose even-row coin total is exactly s.  The
// odd rows are unconstrained beyond the support rule (still finite: each
// row's rightmost position strictly decreases upwards).
std::vector<EvenFountain> even_fountains_of_size(int s, int bound = kDefaultEvenFountainBound);

// Thm-10-style predicate: missing coins relative to the full triangle over
// the bottom width, in diagonal coordinates (u, v) = (p, n - r + 1 - p),
// form a (possibly empty) full product set {1..a} x {1..b}.
bool missing_set_is_rectangle(const Fountain& f);

// Plain-text picture, top row first, each row offset by half a coin width.
// Debugging aid only, not a stability contract.
std::string render(const Fountain& f);

} // namespace invenum

#endif
