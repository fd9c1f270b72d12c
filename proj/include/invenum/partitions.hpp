#ifndef INVENUM_PARTITIONS_HPP
#define INVENUM_PARTITIONS_HPP

// Integer partitions (with the equal-hook predicate used by the Gorenstein
// counting chain) and compositions.

#include <compare>
#include <string>
#include <vector>

namespace invenum {

// Weakly decreasing positive parts.  The empty partition (of 0) is allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long long sum() const;
    std::string to_string() const; // "(3,1)"; "()" for empty

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

enum class PartitionMode { All, Distinct, EqualParts };

// Exhaustive, duplicate-free.  Counts are p(k), q(k), d(k); k = 0 yields
// exactly the empty partition in every mode (the equal-parts convention is
// pinned to |I_0| = 1).
std::vector<Partition> partitions_of(long long k, PartitionMode mode = PartitionMode::All);

// True iff rho_i + i is constant over the corner indices i with
// rho_i != rho_{i+1} (sentinel rho_{m+1} = 0).  Empty partition -> true.
bool is_gorenstein(const Partition& rho);

// Ordered sequence of positive integers.
struct Composition {
    std::vector<int> parts;
    auto operator<=>(const Composition&) const = default;
};

// All 2^{s-1} compositions of s >= 1; for s = 0 the empty composition.
std::vector<Composition> compositions_of(int s);

} // namespace invenum

#endif
