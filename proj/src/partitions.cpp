#include "invenum/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace invenum {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long long Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

namespace {

void gen_partitions(long long remaining, int max_part, bool distinct,
                    std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    int first = static_cast<int>(std::min<long long>(remaining, max_part));
    for (int part = first; part >= 1; --part) {
        acc.push_back(part);
        gen_partitions(remaining - part, distinct ? part - 1 : part, distinct, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(long long k, PartitionMode mode) {
    if (k < 0)
        throw std::invalid_argument("partitions_of: negative k");
    std::vector<Partition> out;
    if (mode == PartitionMode::EqualParts) {
        if (k == 0) {
            out.push_back(Partition());
            return out;
        }
        for (long long d = k; d >= 1; --d) {
            if (k % d == 0)
                out.push_back(Partition(std::vector<int>(static_cast<std::size_t>(k / d),
                                                         static_cast<int>(d))));
        }
        return out;
    }
    std::vector<int> acc;
    gen_partitions(k, static_cast<int>(std::min<long long>(k, 1LL << 30)),
                   mode == PartitionMode::Distinct, acc, out);
    return out;
}

bool is_gorenstein(const Partition& rho) {
    const auto& parts = rho.parts();
    const std::size_t m = parts.size();
    long long corner = -1;
    for (std::size_t i = 0; i < m; ++i) {
        const int next = (i + 1 < m) ? parts[i + 1] : 0;
        if (parts[i] != next) {
            const long long value = parts[i] + static_cast<long long>(i) + 1;
            if (corner == -1)
                corner = value;
            else if (corner != value)
                return false;
        }
    }
    return true;
}

namespace {

void gen_compositions(int remaining, std::vector<int>& acc, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition{acc});
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        acc.push_back(part);
        gen_compositions(remaining - part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(int s) {
    if (s < 0)
        throw std::invalid_argument("compositions_of: negative s");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_compositions(s, acc, out);
    return out;
}

} // namespace invenum
