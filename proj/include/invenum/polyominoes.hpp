#ifndef INVENUM_POLYOMINOES_HPP
#define INVENUM_POLYOMINOES_HPP

// Parallelogram (staircase) polyominoes encoded as overlapping monotone
// column intervals [b_i, t_i], normalized so the first column starts at 1.

#include <compare>
#include <string>
#include <vector>

namespace invenum {

class ParallelogramPolyomino {
  public:
    struct Column {
        int bottom;
        int top;
        auto operator<=>(const Column&) const = default;
    };

    // Requires: at least one column, b_1 = 1, b and t weakly increasing,
    // b_i <= t_i, and b_{i+1} <= t_i (adjacent columns share an edge).
    explicit ParallelogramPolyomino(std::vector<Column> columns);

    const std::vector<Column>& columns() const { return columns_; }
    long long cells() const;

    auto operator<=>(const ParallelogramPolyomino&) const = default;

  private:
    std::vector<Column> columns_;
};

inline constexpr int kDefaultPolyominoBound = 14;

// Exhaustive over normalized encodings with exactly k cells, k >= 1.
std::vector<ParallelogramPolyomino> polyominoes_with_cells(
    int k, int bound = kDefaultPolyominoBound);

// Column-strip picture, top line first.  Debug aid, not a contract.
std::string render(const ParallelogramPolyomino& p);

} // namespace invenum

#endif
