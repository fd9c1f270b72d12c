#include "invenum/polyominoes.hpp"

#include <sstream>
#include <stdexcept>

#include "invenum/errors.hpp"

namespace invenum {

ParallelogramPolyomino::ParallelogramPolyomino(std::vector<Column> columns)
    : columns_(std::move(columns)) {
    if (columns_.empty())
        throw std::invalid_argument("polyomino needs at least one column");
    if (columns_[0].bottom != 1)
        throw std::invalid_argument("first column must start at 1");
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].top < columns_[i].bottom)
            throw std::invalid_argument("column top below bottom");
        if (i > 0) {
            if (columns_[i].bottom < columns_[i - 1].bottom ||
                columns_[i].top < columns_[i - 1].top)
                throw std::invalid_argument("column paths must be weakly increasing");
            if (columns_[i].bottom > columns_[i - 1].top)
                throw std::invalid_argument("adjacent columns must share an edge");
        }
    }
}

long long ParallelogramPolyomino::cells() const {
    long long total = 0;
    for (const auto& c : columns_)
        total += c.top - c.bottom + 1;
    return total;
}

std::vector<ParallelogramPolyomino> polyominoes_with_cells(int k, int bound) {
    if (k < 1)
        throw std::invalid_argument("polyominoes_with_cells: k must be >= 1");
    if (k > bound)
        throw BoundError("polyominoes_with_cells: k=" + std::to_string(k) +
                         " exceeds oracle bound " + std::to_string(bound));
    std::vector<ParallelogramPolyomino> out;
    std::vector<ParallelogramPolyomino::Column> cols;
    auto build = [&](auto&& self, long long used) -> void {
        if (used == k) {
            out.push_back(ParallelogramPolyomino(cols));
            return;
        }
        const auto [pb, pt] = cols.back();
        for (int b = pb; b <= pt; ++b) {
            const int t0 = std::max(b, pt);
            // height t - b + 1 <= k - used
            for (int t = t0; t - b + 1 <= k - used; ++t) {
                cols.push_back({b, t});
                self(self, used + (t - b + 1));
                cols.pop_back();
            }
        }
    };
    for (int t1 = 1; t1 <= k; ++t1) {
        cols = {{1, t1}};
        build(build, t1);
    }
    return out;
}

std::string render(const ParallelogramPolyomino& p) {
    int top = 0;
    for (const auto& c : p.columns())
        top = std::max(top, c.top);
    std::ostringstream out;
    for (int y = top; y >= 1; --y) {
        std::string line;
        for (const auto& c : p.columns())
            line += (c.bottom <= y && y <= c.top) ? '#' : ' ';
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

} // namespace invenum
