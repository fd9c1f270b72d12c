#include "invenum/bijections.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace invenum {

namespace {

struct Grid {
    std::vector<std::set<int>> rows;

    explicit Grid(const Fountain& f) {
        rows.reserve(f.rows().size());
        for (const auto& r : f.rows())
            rows.emplace_back(r.begin(), r.end());
    }
    bool has(int r, int p) const {
        return r >= 0 && r < static_cast<int>(rows.size()) &&
               rows[static_cast<std::size_t>(r)].count(p) > 0;
    }
    void remove(int r, int p) { rows[static_cast<std::size_t>(r)].erase(p); }
};

} // namespace

RemovalTrace coin_removal(const EvenFountain& f) {
    RemovalTrace trace;
    Grid grid(f.fountain);
    const int width = f.fountain.bottom_width();
    for (int start = 1; start <= width; ++start) {
        long long reds = 0;
        if (!grid.has(0, start)) {
            trace.steps.push_back({0, start, 'r', "skip-start"});
        } else {
            int r = 0, p = start;
            for (;;) {
                const bool red = (r % 2 == 0);
                grid.remove(r, p);
                if (red)
                    ++reds;
                if (grid.has(r + 1, p)) {
                    trace.steps.push_back({r, p, red ? 'r' : 'b', "remove-up"});
                    ++r;
                } else if (!red && grid.has(r - 1, p + 1)) {
                    trace.steps.push_back({r, p, 'b', "remove-down"});
                    --r;
                    ++p;
                } else {
                    if (!red && f.fountain.has_coin(r - 1, p + 1))
                        ++trace.removed_below_right_events;
                    trace.steps.push_back({r, p, red ? 'r' : 'b', "remove-stop"});
                    break;
                }
            }
        }
        trace.output.push_back(reds);
    }
    trace.output.push_back(0);
    return trace;
}

std::string RemovalTrace::to_text() const {
    std::ostringstream out;
    for (const auto& s : steps)
        out << s.row << ' ' << s.pos << ' ' << s.color << ' ' << s.action << '\n';
    return out.str();
}

Partition table_to_partition(const Permutation& p) {
    if (!is_indecomposable(p))
        throw std::domain_error("table_to_partition: permutation is decomposable");
    if (contains(p, Permutation({1, 3, 2})))
        throw std::domain_error("table_to_partition: permutation contains 132");
    const SubdiagonalSequence b = inversion_table(p);
    std::vector<int> parts;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] > 0)
            parts.push_back(b[i]);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::string show(const Permutation& p) { return to_string(p); }
std::string show(const Partition& p) { return p.to_string(); }

std::string show(const Fountain& f) {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < f.rows().size(); ++r) {
        if (r)
            out << ';';
        const auto& row = f.rows()[r];
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
    }
    out << ']';
    return out.str();
}

std::string show(const EvenFountain& f) { return show(f.fountain); }

std::string show(const std::vector<long long>& seq) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < seq.size(); ++i)
        out << (i ? "," : "") << seq[i];
    out << ')';
    return out.str();
}

} // namespace invenum
