#include "invenum/fast_counts.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "invenum/count_report.hpp"
#include "invenum/errors.hpp"

namespace invenum {

Avoider321Table::Avoider321Table(int max_n) : max_n_(max_n) {
    if (max_n < 0)
        throw std::invalid_argument("Avoider321Table: negative size");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    // a(j, m) is read later at indices with j + m <= max_n, and is constant
    // for m >= j, so row j only needs min(j, max_n - j) columns (at least 1).
    auto lookup = [&](int n, int m) -> const mpz_class& {
        if (n == 0)
            return one_;
        const int mm = std::min(m, n);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(mm - 1)];
    };
    std::vector<mpz_class> suffix; // suffix[m-1] = sum_{i=m..n} a(n-i, i)
    for (int n = 1; n <= max_n; ++n) {
        const int width = std::max(1, std::min(n, max_n - n));
        suffix.assign(static_cast<std::size_t>(n), 0);
        for (int m = n; m >= 1; --m) {
            mpz_class acc = lookup(n - m, m);
            if (m < n)
                acc += suffix[static_cast<std::size_t>(m)];
            suffix[static_cast<std::size_t>(m - 1)] = std::move(acc);
        }
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(width));
        row[0] = suffix[0]; // a(n, 1)
        for (int m = 2; m <= width; ++m)
            row[static_cast<std::size_t>(m - 1)] =
                row[static_cast<std::size_t>(m - 2)] + suffix[static_cast<std::size_t>(m - 1)];
    }
}

const mpz_class& Avoider321Table::value(int n, int m) const {
    if (n < 0 || m < 1)
        throw std::out_of_range("Avoider321Table::value: bad indices");
    if (n == 0)
        return one_;
    if (n > max_n_)
        throw std::out_of_range("Avoider321Table::value: n exceeds table size");
    const int mm = std::min(m, n); // a(n, m) constant for m >= n
    const auto& row = rows_[static_cast<std::size_t>(n)];
    if (mm > static_cast<int>(row.size()))
        throw std::out_of_range("Avoider321Table::value: column trimmed away; "
                                "build a larger table");
    return row[static_cast<std::size_t>(mm - 1)];
}

mpz_class count_i321(long long k) {
    if (k < 0)
        throw std::invalid_argument("count_i321: negative k");
    Avoider321Table table(static_cast<int>(k));
    return table.value(static_cast<int>(k), 1);
}

std::vector<mpz_class> count_i321_sequence(long long k_max) {
    Avoider321Table table(static_cast<int>(k_max));
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    for (long long k = 0; k <= k_max; ++k)
        out.push_back(table.value(static_cast<int>(k), 1));
    return out;
}

GorensteinTable::GorensteinTable(int max_n, bool windowed) : max_n_(max_n) {
    if (max_n < 0)
        throw std::invalid_argument("GorensteinTable: negative size");
    const std::size_t dim = static_cast<std::size_t>(max_n) + 1;
    table_.assign(dim, std::vector<mpz_class>(dim, mpz_class(0)));
    for (std::size_t d = 0; d < dim; ++d)
        table_[0][d] = 1;
    for (long long n = 1; n <= max_n; ++n) {
        for (long long d = 1; d <= max_n; ++d) {
            mpz_class acc = 0;
            auto arg = [&](long long k) { return n - k * (d + 1 - k); };
            if (!windowed) {
                for (long long k = 1; k <= d; ++k)
                    if (arg(k) >= 0)
                        acc += table_[static_cast<std::size_t>(arg(k))]
                                     [static_cast<std::size_t>(d - k)];
            } else {
                // k(d+1-k) is concave in k, so nonnegative arguments form a
                // prefix and a suffix of 1..d
                long long k = 1;
                for (; k <= d; ++k) {
                    if (arg(k) < 0)
                        break;
                    acc += table_[static_cast<std::size_t>(arg(k))]
                                 [static_cast<std::size_t>(d - k)];
                }
                for (long long k2 = d; k2 > k; --k2) {
                    if (arg(k2) < 0)
                        break;
                    acc += table_[static_cast<std::size_t>(arg(k2))]
                                 [static_cast<std::size_t>(d - k2)];
                }
            }
            table_[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)] = std::move(acc);
        }
    }
}

const mpz_class& GorensteinTable::f(int n, int d) const {
    if (n < 0 || d < 0 || n > max_n_ || d > max_n_)
        throw std::out_of_range("GorensteinTable::f: indices out of range");
    return table_[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
}

mpz_class GorensteinTable::count(int n) const {
    if (n < 0 || n > max_n_)
        throw std::out_of_range("GorensteinTable::count: n out of range");
    mpz_class acc = 0;
    for (int d = 0; d <= n; ++d)
        acc += f(n, d);
    return acc;
}

mpz_class gorenstein_count(long long n) {
    GorensteinTable table(static_cast<int>(n));
    return table.count(static_cast<int>(n));
}

std::vector<mpz_class> gorenstein_count_sequence(long long n_max, bool windowed) {
    GorensteinTable table(static_cast<int>(n_max), windowed);
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n)
        out.push_back(table.count(static_cast<int>(n)));
    return out;
}

mpz_class count_i123(long long k, int bound) {
    if (k < 0)
        throw std::invalid_argument("count_i123: negative k");
    if (k > bound)
        throw BoundError("count_i123: k=" + std::to_string(k) + " exceeds bound " +
                         std::to_string(bound));
    mpz_class count = 0;
    // tables of length n, entries capped at n-1-i, entry sum k, non-diagonal
    // entries strictly decreasing; check indecomposability on the decode
    for (int n = 1; n <= k + 1; ++n) {
        std::vector<int> b(static_cast<std::size_t>(n), 0);
        std::vector<long long> suffix_cap(static_cast<std::size_t>(n) + 1, 0);
        for (int i = n - 1; i >= 0; --i)
            suffix_cap[static_cast<std::size_t>(i)] =
                suffix_cap[static_cast<std::size_t>(i) + 1] + (n - 1 - i);
        if (k > suffix_cap[0])
            continue;
        auto rec = [&](auto&& self, int i, long long remaining, int last_nondiag) -> void {
            if (i == n) {
                if (is_indecomposable(permutation_from_table(SubdiagonalSequence(b))))
                    ++count;
                return;
            }
            const int cap = n - 1 - i;
            const long long tail = suffix_cap[static_cast<std::size_t>(i) + 1];
            const int lo = static_cast<int>(std::max<long long>(0, remaining - tail));
            const int hi = static_cast<int>(std::min<long long>(cap, remaining));
            for (int v = lo; v <= hi; ++v) {
                const bool diagonal = (v == cap);
                if (!diagonal && v >= last_nondiag)
                    continue;
                b[static_cast<std::size_t>(i)] = v;
                self(self, i + 1, remaining - v, diagonal ? last_nondiag : v);
                b[static_cast<std::size_t>(i)] = 0;
            }
        };
        rec(rec, 0, k, n); // non-diagonal entries are < n, so n acts as +inf
    }
    return count;
}

namespace {

bool is_triangular(long long k) {
    long long t = 0;
    for (long long i = 0; t < k; ++i)
        t += i + 1;
    return t == k;
}

std::vector<mpz_class> partition_numbers(long long k_max) {
    // pentagonal-number recurrence
    std::vector<mpz_class> p(static_cast<std::size_t>(k_max) + 1);
    p[0] = 1;
    for (long long n = 1; n <= k_max; ++n) {
        mpz_class acc = 0;
        for (long long j = 1;; ++j) {
            const long long g1 = j * (3 * j - 1) / 2;
            const long long g2 = j * (3 * j + 1) / 2;
            if (g1 > n)
                break;
            const mpz_class& a = p[static_cast<std::size_t>(n - g1)];
            if (j % 2 == 1)
                acc += a;
            else
                acc -= a;
            if (g2 <= n) {
                const mpz_class& bterm = p[static_cast<std::size_t>(n - g2)];
                if (j % 2 == 1)
                    acc += bterm;
                else
                    acc -= bterm;
            }
        }
        p[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return p;
}

std::vector<mpz_class> distinct_partition_numbers(long long k_max) {
    // coefficients of prod_{i=1..k_max} (1 + x^i)
    std::vector<mpz_class> q(static_cast<std::size_t>(k_max) + 1, mpz_class(0));
    q[0] = 1;
    for (long long i = 1; i <= k_max; ++i)
        for (long long n = k_max; n >= i; --n)
            q[static_cast<std::size_t>(n)] += q[static_cast<std::size_t>(n - i)];
    return q;
}

long long divisor_count(long long k, bool odd_only) {
    if (k == 0)
        return 1; // |I_0| convention
    long long count = 0;
    for (long long d = 1; d * d <= k; ++d) {
        if (k % d != 0)
            continue;
        const long long e = k / d;
        if (!odd_only || d % 2 == 1)
            ++count;
        if (e != d && (!odd_only || e % 2 == 1))
            ++count;
    }
    return count;
}

} // namespace

mpz_class closed_form(ClosedFormFamily family, long long k) {
    if (k < 0)
        throw std::invalid_argument("closed_form: negative k");
    switch (family) {
    case ClosedFormFamily::Partitions:
        return partition_numbers(k).back();
    case ClosedFormFamily::DistinctPartitions:
        return distinct_partition_numbers(k).back();
    case ClosedFormFamily::EqualPartitions:
    case ClosedFormFamily::Divisors:
        return to_mpz(divisor_count(k, false));
    case ClosedFormFamily::OddDivisors:
        return to_mpz(divisor_count(k, true));
    case ClosedFormFamily::TriangularChar:
        return mpz_class(is_triangular(k) ? 1 : 0);
    case ClosedFormFamily::ConstantOne:
        return mpz_class(1);
    }
    throw std::invalid_argument("closed_form: unknown family");
}

std::vector<mpz_class> closed_form_sequence(ClosedFormFamily family, long long k_max) {
    if (k_max < 0)
        throw std::invalid_argument("closed_form_sequence: negative k_max");
    switch (family) {
    case ClosedFormFamily::Partitions:
        return partition_numbers(k_max);
    case ClosedFormFamily::DistinctPartitions:
        return distinct_partition_numbers(k_max);
    default: {
        std::vector<mpz_class> out;
        out.reserve(static_cast<std::size_t>(k_max) + 1);
        for (long long k = 0; k <= k_max; ++k)
            out.push_back(closed_form(family, k));
        return out;
    }
    }
}

Permutation unique_avoider_231_321(long long k) {
    if (k < 0)
        throw std::invalid_argument("unique_avoider_231_321: negative k");
    if (k == 0)
        return Permutation({1});
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(k) + 1);
    vals.push_back(static_cast<int>(k) + 1);
    for (int v = 1; v <= k; ++v)
        vals.push_back(v);
    return Permutation(std::move(vals));
}

namespace {

using CKey = std::tuple<long long, long long, long long>;

mpz_class c123_memo(long long n, long long m, long long k, std::map<CKey, mpz_class>& memo) {
    if (n < 0 || k < 0)
        return 0;
    if (n == 0 && k == 0)
        return 1;
    const CKey key{n, m, k};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    mpz_class acc = c123_memo(n - 1, m, k - n + 1, memo);
    const long long top = std::min(n - 2, m - 1);
    for (long long i = 0; i <= top; ++i)
        acc += c123_memo(n - 1, i, k - i, memo);
    memo.emplace(key, acc);
    return acc;
}

} // namespace

mpz_class experimental_c123(long long n, long long m, long long k) {
    std::map<CKey, mpz_class> memo;
    return c123_memo(n, m, k, memo);
}

mpz_class experimental_total_123(long long k) {
    if (k < 0)
        throw std::invalid_argument("experimental_total_123: negative k");
    std::map<CKey, mpz_class> memo;
    mpz_class acc = 0;
    for (long long n = 0; n <= k + 1; ++n)
        acc += c123_memo(n, n, k, memo);
    return acc;
}

} // namespace invenum
