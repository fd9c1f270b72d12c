#include "invenum/catalog.hpp"

#include <chrono>
#include <stdexcept>

#include "invenum/errors.hpp"
#include "invenum/fast_counts.hpp"
#include "invenum/fountains.hpp"
#include "invenum/oracle.hpp"
#include "invenum/series.hpp"

namespace invenum {

namespace {

PatternSet pats(const std::string& text) { return parse_pattern_set(text); }

SequenceFn closed(ClosedFormFamily family) {
    return [family](long long k_max) { return closed_form_sequence(family, k_max); };
}

SequenceFn gf(TruncatedSeries (*builder)(std::size_t)) {
    return [builder](long long k_max) {
        const TruncatedSeries s = builder(static_cast<std::size_t>(k_max) + 1);
        return s.coefficients();
    };
}

std::vector<mpz_class> fountain_object_counts(long long k_max) {
    std::vector<mpz_class> out;
    for (long long k = 0; k <= k_max; ++k)
        out.push_back(to_mpz(static_cast<long long>(
            fountains_with_coins(static_cast<int>(k)).size())));
    return out;
}

std::vector<mpz_class> rectangle_fountain_counts(long long k_max) {
    std::vector<mpz_class> out;
    for (long long k = 0; k <= k_max; ++k) {
        long long count = 0;
        for (const Fountain& f : fountains_with_coins(static_cast<int>(k)))
            if (missing_set_is_rectangle(f))
                ++count;
        out.push_back(to_mpz(count));
    }
    return out;
}

std::vector<mpz_class> i123_counts(long long k_max) {
    std::vector<mpz_class> out;
    for (long long k = 0; k <= k_max; ++k)
        out.push_back(count_i123(k));
    return out;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    auto add = [&](CatalogEntry e) { entries.push_back(std::move(e)); };

    add({pats("132"), closed(ClosedFormFamily::Partitions), std::nullopt, 1 << 20, 0,
         "A000041", OffsetPolicy::IndexAligned, "partition numbers"});
    add({pats("213"), closed(ClosedFormFamily::Partitions), std::nullopt, 1 << 20, 0,
         "A000041", OffsetPolicy::IndexAligned,
         "reverse complement of 132, same counts"});
    add({pats("231"), fountain_object_counts, gf(gf_fountain), kDefaultFountainBound,
         1 << 20, "A005169", OffsetPolicy::IndexAligned, "fountains of coins"});
    add({pats("321"), [](long long k_max) { return count_i321_sequence(k_max); },
         std::nullopt, 1 << 20, 0, "A006958", OffsetPolicy::IndexAligned,
         "parallelogram polyominoes by cells"});
    add({pats("123"), i123_counts, std::nullopt, 30, 0, std::nullopt,
         OffsetPolicy::IndexAligned, "not in the OEIS"});
    add({pats("12"), closed(ClosedFormFamily::TriangularChar), std::nullopt, 1 << 20, 0,
         "A010054", OffsetPolicy::IndexAligned, "decreasing permutations only"});

    add({pats("123,231"), rectangle_fountain_counts, gf(gf_123_231),
         kDefaultFountainBound, 1 << 20, std::nullopt, OffsetPolicy::IndexAligned,
         "rectangle-missing fountains"});
    add({pats("123,132"), std::nullopt, gf(gf_123_132), 0, 1 << 20, "A135278",
         OffsetPolicy::Pinned, "binomial triangle without its first column"});
    add({pats("132,213"),
         [](long long k_max) { return gorenstein_count_sequence(k_max); }, gf(gf_132_213),
         1 << 20, 300, "A117629", OffsetPolicy::IndexAligned,
         "partitions with all corner hooks equal"});
    add({pats("132,231"), closed(ClosedFormFamily::DistinctPartitions), std::nullopt,
         1 << 20, 0, "A000009", OffsetPolicy::IndexAligned, "distinct parts"});
    add({pats("132,321"), closed(ClosedFormFamily::Divisors), std::nullopt, 1 << 20, 0,
         "A000005", OffsetPolicy::IndexAligned, "equal-part partitions = divisors"});
    add({pats("231,321"), closed(ClosedFormFamily::ConstantOne), std::nullopt, 1 << 20, 0,
         std::nullopt, OffsetPolicy::IndexAligned, "unique witness per k"});
    add({pats("231,312"), closed(ClosedFormFamily::TriangularChar), std::nullopt,
         1 << 20, 0, "A010054", OffsetPolicy::IndexAligned,
         "same counts as the class of 12"});
    add({pats("123,321"), std::nullopt, std::nullopt, 0, 0, std::nullopt,
         OffsetPolicy::IndexAligned,
         "oracle only; zero for k >= 7 (avoiders have length <= 4)"});

    add({pats("123,132,231"), closed(ClosedFormFamily::ConstantOne), std::nullopt,
         1 << 20, 0, std::nullopt, OffsetPolicy::IndexAligned, ""});
    add({pats("123,132,213"), std::nullopt, gf(gf_123_132_213), 0, 1 << 20, std::nullopt,
         OffsetPolicy::Pinned, "binomial triangle read by diagonals"});
    add({pats("132,213,231"), closed(ClosedFormFamily::OddDivisors), std::nullopt,
         1 << 20, 0, "A001227", OffsetPolicy::IndexAligned, "odd divisors"});
    add({pats("132,213,321"), closed(ClosedFormFamily::Divisors), std::nullopt, 1 << 20,
         0, "A000005", OffsetPolicy::IndexAligned, "same counts as 132,321"});

    add({pats("123,132,213,231"), std::nullopt, gf(gf_123_132_213_231), 0, 1 << 20,
         "A103451", OffsetPolicy::Pinned,
         "binomial triangle with values > 1 zeroed"});

    return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_entry(const PatternSet& patterns) {
    const std::string key = patterns.to_string();
    for (const CatalogEntry& e : catalog())
        if (e.key() == key)
            return &e;
    return nullptr;
}

Method parse_method(const std::string& name) {
    if (name == "oracle")
        return Method::Oracle;
    if (name == "fast")
        return Method::Fast;
    if (name == "gf")
        return Method::Gf;
    if (name == "all")
        return Method::All;
    throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

std::vector<mpz_class> oracle_terms(const PatternSet& patterns, long long k_max) {
    CountReport r = avoider_sequence(patterns, k_max);
    return std::move(r.terms);
}

} // namespace

CountReport run_count(const PatternSet& patterns, long long k_max, Method method) {
    if (k_max < 0)
        throw std::invalid_argument("run_count: negative k_max");
    const auto start = std::chrono::steady_clock::now();
    CountReport report;
    report.patterns = patterns.to_string();
    const CatalogEntry* entry = find_entry(patterns);

    if (!entry) {
        // uncatalogued class: fall back to the oracle, whatever was asked
        report.method = "oracle";
        report.warnings.push_back("pattern set '" + patterns.to_string() +
                                  "' not in catalog, fell back to oracle");
        report.terms = oracle_terms(patterns, k_max);
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        return report;
    }

    auto need_fast = [&]() -> const SequenceFn& {
        if (!entry->fast)
            throw std::invalid_argument("no fast path for pattern set '" +
                                        patterns.to_string() + "'");
        if (k_max > entry->fast_bound)
            throw BoundError("fast path for '" + patterns.to_string() +
                             "' is bounded at k_max=" + std::to_string(entry->fast_bound));
        return *entry->fast;
    };
    auto need_gf = [&]() -> const SequenceFn& {
        if (!entry->gf)
            throw std::invalid_argument("no generating-function path for pattern set '" +
                                        patterns.to_string() + "'");
        if (k_max > entry->gf_bound)
            throw BoundError("gf path for '" + patterns.to_string() +
                             "' is bounded at k_max=" + std::to_string(entry->gf_bound));
        return *entry->gf;
    };

    switch (method) {
    case Method::Oracle:
        report.method = "oracle";
        report.terms = oracle_terms(patterns, k_max);
        break;
    case Method::Fast:
        report.method = "fast";
        report.terms = need_fast()(k_max);
        break;
    case Method::Gf:
        report.method = "gf";
        report.terms = need_gf()(k_max);
        break;
    case Method::All: {
        report.method = "all";
        report.terms = oracle_terms(patterns, k_max);
        auto compare = [&](const char* name, const std::vector<mpz_class>& other) {
            for (long long k = 0; k <= k_max; ++k) {
                const auto& a = report.terms[static_cast<std::size_t>(k)];
                const auto& b = other[static_cast<std::size_t>(k)];
                if (a != b)
                    report.mismatches.push_back(
                        "k=" + std::to_string(k) + ": oracle " + a.get_str() + " != " +
                        name + " " + b.get_str());
            }
        };
        if (entry->fast && k_max <= entry->fast_bound)
            compare("fast", (*entry->fast)(k_max));
        if (entry->gf && k_max <= entry->gf_bound) {
            std::vector<mpz_class> coeffs = (*entry->gf)(k_max);
            if (entry->offset_policy == OffsetPolicy::IndexAligned) {
                compare("gf", coeffs);
            } else if (coeffs.size() < 4) {
                report.warnings.push_back("gf path skipped: need >= 4 terms to pin a shift");
            } else {
                // constant-shift comparison; gf coefficient(k) = terms(k + o)
                TruncatedSeries s(coeffs.size());
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    s.set(i, coeffs[i]);
                const OffsetReport pin =
                    pin_offset(s, std::span<const mpz_class>(report.terms));
                if (!pin.offset)
                    report.mismatches.push_back("gf offset pin failed: " + pin.diff);
            }
        }
        break;
    }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

} // namespace invenum
