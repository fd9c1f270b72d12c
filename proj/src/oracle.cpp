#include "invenum/oracle.hpp"

#include <cassert>
#include <chrono>
#include <numeric>
#include <string>

#include "invenum/errors.hpp"

namespace invenum {

namespace {

void check_bound(long long k, int bound, const char* where) {
    if (k < 0)
        throw std::invalid_argument(std::string(where) + ": negative k");
    if (k > bound)
        throw BoundError(std::string(where) + ": k=" + std::to_string(k) +
                         " exceeds oracle bound " + std::to_string(bound));
}

// Decode an inversion table incrementally is not worth it at these sizes;
// one O(n^2) pass per emitted table.
void emit_tables_of_length(long long k, int n, const std::function<void(const Permutation&)>& fn) {
    // suffix_cap[i] = maximum possible sum of entries i..n-1 (0-based)
    std::vector<long long> suffix_cap(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i)
        suffix_cap[static_cast<std::size_t>(i)] =
            suffix_cap[static_cast<std::size_t>(i) + 1] + (n - 1 - i);
    if (k > suffix_cap[0])
        return;
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, long long remaining) -> void {
        if (i == n) {
            fn(permutation_from_table(SubdiagonalSequence(b)));
            return;
        }
        const int cap = n - 1 - i;
        const long long tail = suffix_cap[static_cast<std::size_t>(i) + 1];
        const int lo = static_cast<int>(std::max<long long>(0, remaining - tail));
        const int hi = static_cast<int>(std::min<long long>(cap, remaining));
        for (int v = lo; v <= hi; ++v) {
            b[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
        b[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, k);
}

} // namespace

void for_each_permutation_with_inversions(
    long long k, int max_length, const std::function<void(const Permutation&)>& fn) {
    if (max_length < 1)
        throw std::invalid_argument("for_each_permutation_with_inversions: max_length < 1");
    for (int n = 1; n <= max_length; ++n)
        emit_tables_of_length(k, n, fn);
}

std::vector<Permutation> permutations_with_inversions(long long k, int max_length, int bound) {
    check_bound(k, bound, "permutations_with_inversions");
    std::vector<Permutation> out;
    for_each_permutation_with_inversions(k, max_length,
                                         [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> indecomposables_with_inversions(long long k, int bound) {
    check_bound(k, bound, "indecomposables_with_inversions");
    std::vector<Permutation> out;
    for_each_permutation_with_inversions(k, static_cast<int>(k) + 1, [&](const Permutation& p) {
        if (is_indecomposable(p))
            out.push_back(p);
    });
    return out;
}

long long count_avoiders(const AvoiderQuery& q) {
    check_bound(q.k, q.bound, "count_avoiders");
    long long count = 0;
    for_each_permutation_with_inversions(
        q.k, static_cast<int>(q.k) + 1, [&](const Permutation& p) {
            if (q.indecomposable_only && !is_indecomposable(p))
                return;
            if (avoids_all(p, q.patterns))
                ++count;
        });
    return count;
}

std::vector<Permutation> enumerate_avoiders(const AvoiderQuery& q) {
    check_bound(q.k, q.bound, "enumerate_avoiders");
    std::vector<Permutation> out;
    for_each_permutation_with_inversions(
        q.k, static_cast<int>(q.k) + 1, [&](const Permutation& p) {
            if (q.indecomposable_only && !is_indecomposable(p))
                return;
            if (avoids_all(p, q.patterns))
                out.push_back(p);
        });
    return out;
}

CountReport avoider_sequence(const PatternSet& patterns, long long k_max, int bound) {
    check_bound(k_max, bound, "avoider_sequence");
    CountReport report;
    report.patterns = patterns.to_string();
    report.method = "oracle";
    const auto start = std::chrono::steady_clock::now();
    for (long long k = 0; k <= k_max; ++k)
        report.terms.push_back(to_mpz(count_avoiders(AvoiderQuery(k, patterns, true, bound))));
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

long long total_123_avoiders(long long k, int bound) {
    check_bound(k, bound, "total_123_avoiders");
    const Permutation incr({1, 2, 3});
    long long count = 0;
    for_each_permutation_with_inversions(
        k, static_cast<int>(k) + 2, [&](const Permutation& p) {
            if (avoids(p, incr)) {
                // a 123-avoider cannot have three components
                assert(components(p).size() <= 2);
                ++count;
            }
        });
    return count;
}

} // namespace invenum
