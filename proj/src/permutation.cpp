#include "invenum/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "invenum/errors.hpp"

namespace invenum {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    if (n < 1)
        throw std::invalid_argument("permutation must have length >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("values must be a rearrangement of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

SubdiagonalSequence::SubdiagonalSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1)
        throw std::invalid_argument("subdiagonal sequence must have length >= 1");
    for (int i = 0; i < n; ++i) {
        if (entries_[static_cast<std::size_t>(i)] < 0 ||
            entries_[static_cast<std::size_t>(i)] > n - 1 - i)
            throw std::invalid_argument("entry b_" + std::to_string(i + 1) +
                                        " exceeds its subdiagonal bound");
    }
}

long long SubdiagonalSequence::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty())
        throw std::invalid_argument("pattern set must be nonempty");
    std::sort(patterns_.begin(), patterns_.end(),
              [](const Permutation& a, const Permutation& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a.values() < b.values();
              });
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

std::string PatternSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i)
            out += ',';
        out += invenum::to_string(patterns_[i]);
    }
    return out;
}

PatternSet PatternSet::reverse_complemented() const {
    std::vector<Permutation> out;
    out.reserve(patterns_.size());
    for (const Permutation& t : patterns_)
        out.push_back(reverse_complement(t));
    return PatternSet(std::move(out));
}

long long inversions(const Permutation& p) {
    const std::size_t n = p.size();
    long long count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[i] > p[j])
                ++count;
    return count;
}

std::vector<Permutation> components(const Permutation& p) {
    std::vector<Permutation> out;
    const std::size_t n = p.size();
    std::size_t start = 0;
    int prefix_max = 0;
    for (std::size_t i = 0; i < n; ++i) {
        prefix_max = std::max(prefix_max, p[i]);
        if (prefix_max == static_cast<int>(i) + 1) {
            std::vector<int> block;
            block.reserve(i + 1 - start);
            for (std::size_t j = start; j <= i; ++j)
                block.push_back(p[j] - static_cast<int>(start));
            out.emplace_back(std::move(block));
            start = i + 1;
        }
    }
    return out;
}

bool is_decomposable(const Permutation& p) { return components(p).size() > 1; }
bool is_indecomposable(const Permutation& p) { return components(p).size() == 1; }

Permutation direct_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> vals(p.values());
    vals.reserve(p.size() + q.size());
    const int shift = static_cast<int>(p.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        vals.push_back(q[i] + shift);
    return Permutation(std::move(vals));
}

Permutation skew_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> vals;
    vals.reserve(p.size() + q.size());
    const int shift = static_cast<int>(q.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        vals.push_back(p[i] + shift);
    for (std::size_t i = 0; i < q.size(); ++i)
        vals.push_back(q[i]);
    return Permutation(std::move(vals));
}

Permutation reverse_complement(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<int> vals(p.size());
    for (int i = 0; i < n; ++i)
        vals[static_cast<std::size_t>(i)] = n + 1 - p[static_cast<std::size_t>(n - 1 - i)];
    return Permutation(std::move(vals));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> vals(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        vals[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(vals));
}

namespace {

// Backtracking match: extend a partial occurrence one pattern position at a
// time, keeping the chosen values consistent with the pattern's relative
// order.  chosen[r] = value at pattern position r.
bool match_from(const Permutation& p, const Permutation& t, std::size_t from,
                std::vector<int>& chosen) {
    const std::size_t r = chosen.size();
    if (r == t.size())
        return true;
    for (std::size_t i = from; i + (t.size() - r) <= p.size(); ++i) {
        const int v = p[i];
        bool ok = true;
        for (std::size_t s = 0; s < r; ++s) {
            if ((t[s] < t[r]) != (chosen[s] < v)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        chosen.push_back(v);
        if (match_from(p, t, i + 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains(const Permutation& p, const Permutation& t) {
    if (t.size() > p.size())
        return false;
    std::vector<int> chosen;
    chosen.reserve(t.size());
    return match_from(p, t, 0, chosen);
}

bool avoids(const Permutation& p, const Permutation& t) { return !contains(p, t); }

bool avoids_all(const Permutation& p, const PatternSet& patterns) {
    for (const Permutation& t : patterns.patterns())
        if (contains(p, t))
            return false;
    return true;
}

SubdiagonalSequence inversion_table(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<int> b(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[j] < p[i])
                ++b[i];
    return SubdiagonalSequence(std::move(b));
}

Permutation permutation_from_table(const SubdiagonalSequence& b) {
    const std::size_t n = b.size();
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> vals;
    vals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // p_i is the (b_i + 1)-th smallest value not yet used
        const auto idx = static_cast<std::size_t>(b[i]);
        vals.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(vals));
}

std::vector<bool> diagonal_flags(const SubdiagonalSequence& b) {
    const int n = static_cast<int>(b.size());
    std::vector<bool> flags(b.size());
    for (int i = 0; i < n; ++i)
        flags[static_cast<std::size_t>(i)] = (b[static_cast<std::size_t>(i)] == n - 1 - i);
    return flags;
}

std::string to_string(const Permutation& p) {
    std::ostringstream out;
    const bool digits = p.size() <= 9;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i && !digits)
            out << ',';
        out << p[i];
    }
    return out.str();
}

Permutation parse_permutation(const std::string& text) {
    if (text.empty())
        throw ParseError("empty permutation");
    std::vector<int> vals;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                vals.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad permutation value '" + tok + "'");
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw ParseError(std::string("bad permutation digit '") + c + "'");
            vals.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(vals));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

PatternSet parse_pattern_set(const std::string& text) {
    std::vector<Permutation> pats;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        pats.push_back(parse_permutation(tok));
    if (pats.empty())
        throw ParseError("empty pattern set");
    return PatternSet(std::move(pats));
}

} // namespace invenum
