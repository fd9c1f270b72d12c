#include "invenum/fountains.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "invenum/errors.hpp"

namespace invenum {

Fountain::Fountain(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty())
        return;
    const auto& bottom = rows_[0];
    for (std::size_t i = 0; i < bottom.size(); ++i)
        if (bottom[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("bottom row must be 1..n with no holes");
    if (bottom.empty())
        throw std::invalid_argument("nonempty fountain needs a nonempty bottom row");
    for (std::size_t r = 1; r < rows_.size(); ++r) {
        if (rows_[r].empty())
            throw std::invalid_argument("empty row below a stored row");
        std::set<int> below(rows_[r - 1].begin(), rows_[r - 1].end());
        int prev = 0;
        for (int p : rows_[r]) {
            if (p <= prev)
                throw std::invalid_argument("row positions must be strictly increasing");
            prev = p;
            if (!below.count(p) || !below.count(p + 1))
                throw std::invalid_argument("coin at (" + std::to_string(r) + "," +
                                            std::to_string(p) + ") lacks support");
        }
    }
}

long long Fountain::coins() const {
    long long total = 0;
    for (const auto& row : rows_)
        total += static_cast<long long>(row.size());
    return total;
}

long long Fountain::even_row_coins() const {
    long long total = 0;
    for (std::size_t r = 0; r < rows_.size(); r += 2)
        total += static_cast<long long>(rows_[r].size());
    return total;
}

bool Fountain::has_coin(int row, int pos) const {
    if (row < 0 || row >= static_cast<int>(rows_.size()))
        return false;
    const auto& r = rows_[static_cast<std::size_t>(row)];
    return std::binary_search(r.begin(), r.end(), pos);
}

namespace {

std::vector<int> supported_positions(const std::vector<int>& below) {
    std::vector<int> supp;
    for (std::size_t i = 0; i + 1 < below.size(); ++i)
        if (below[i + 1] == below[i] + 1)
            supp.push_back(below[i]);
    return supp;
}

// Enumerate subsets of `supp` (as sorted position lists) whose size is at
// most max_take, invoking fn on each nonempty one.
template <typename Fn>
void for_each_subset(const std::vector<int>& supp, int max_take, Fn&& fn) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (!pick.empty())
            fn(pick);
        if (idx == supp.size() || static_cast<int>(pick.size()) == max_take)
            return;
        for (std::size_t i = idx; i < supp.size(); ++i) {
            pick.push_back(supp[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<Fountain> fountains_with_coins(int k, int bound) {
    if (k < 0)
        throw std::invalid_argument("fountains_with_coins: negative k");
    if (k > bound)
        throw BoundError("fountains_with_coins: k=" + std::to_string(k) +
                         " exceeds oracle bound " + std::to_string(bound));
    std::vector<Fountain> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::vector<int>> rows;
    auto build = [&](auto&& self, long long used) -> void {
        if (used == k)
            out.push_back(Fountain(rows));
        const std::vector<int> supp = supported_positions(rows.back());
        for_each_subset(supp, static_cast<int>(k - used), [&](const std::vector<int>& sub) {
            if (used + static_cast<long long>(sub.size()) <= k) {
                rows.push_back(sub);
                self(self, used + static_cast<long long>(sub.size()));
                rows.pop_back();
            }
        });
    };
    for (int w = 1; w <= k; ++w) {
        std::vector<int> bottom(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i)
            bottom[static_cast<std::size_t>(i)] = i + 1;
        rows = {bottom};
        build(build, w);
    }
    return out;
}

std::vector<EvenFountain> even_fountains_of_size(int s, int bound) {
    if (s < 0)
        throw std::invalid_argument("even_fountains_of_size: negative s");
    if (s > bound)
        throw BoundError("even_fountains_of_size: s=" + std::to_string(s) +
                         " exceeds oracle bound " + std::to_string(bound));
    std::vector<EvenFountain> out;
    if (s == 0) {
        out.emplace_back(Fountain());
        return out;
    }
    std::vector<std::vector<int>> rows;
    auto build = [&](auto&& self, long long evens) -> void {
        if (evens == s)
            out.emplace_back(Fountain(rows));
        const bool next_even = rows.size() % 2 == 0;
        const std::vector<int> supp = supported_positions(rows.back());
        const int max_take = next_even ? static_cast<int>(s - evens)
                                       : static_cast<int>(supp.size());
        for_each_subset(supp, max_take, [&](const std::vector<int>& sub) {
            const long long ne = evens + (next_even ? static_cast<long long>(sub.size()) : 0);
            if (ne <= s) {
                rows.push_back(sub);
                self(self, ne);
                rows.pop_back();
            }
        });
    };
    for (int w = 1; w <= s; ++w) {
        std::vector<int> bottom(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i)
            bottom[static_cast<std::size_t>(i)] = i + 1;
        rows = {bottom};
        build(build, w);
    }
    return out;
}

bool missing_set_is_rectangle(const Fountain& f) {
    if (f.empty())
        return true;
    const int n = f.bottom_width();
    std::set<std::pair<int, int>> missing; // diagonal coordinates (u, v)
    for (int r = 0; r < n; ++r)
        for (int p = 1; p <= n - r; ++p)
            if (!f.has_coin(r, p))
                missing.insert({p, n - r + 1 - p});
    if (missing.empty())
        return true;
    int a = 0, b = 0;
    for (const auto& [u, v] : missing) {
        a = std::max(a, u);
        b = std::max(b, v);
    }
    // coords are >= 1 by construction, so the set is the full product
    // {1..a}x{1..b} exactly when its cardinality is a*b
    return static_cast<long long>(a) * b == static_cast<long long>(missing.size());
}

std::string render(const Fountain& f) {
    std::ostringstream out;
    const auto& rows = f.rows();
    for (std::size_t i = rows.size(); i-- > 0;) {
        const auto& row = rows[i];
        std::string line(static_cast<std::size_t>(i), ' ');
        const int width = row.empty() ? 0 : row.back();
        for (int p = 1; p <= width; ++p) {
            line += std::binary_search(row.begin(), row.end(), p) ? "o " : "  ";
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

} // namespace invenum
