#ifndef INVENUM_OEIS_HPP
#define INVENUM_OEIS_HPP

// OEIS b-file fixtures and the cross-check harness.  Fixture mode is fully
// offline and deterministic; network fetch is opt-in and writes through to
// the fixture cache.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "invenum/catalog.hpp"
#include "invenum/count_report.hpp"

namespace invenum {

struct OeisFixture {
    std::string id;                                    // "A000041"
    std::vector<std::pair<long long, mpz_class>> terms; // (index, value), increasing

    std::optional<mpz_class> value_at(long long index) const;
};

// Parses b-file text: one "index value" pair per line, blank lines and
// '#' comments ignored; indices must be strictly increasing.  Throws
// ParseError with a line number on malformed input.
OeisFixture parse_bfile(const std::string& text, const std::string& id = "");

// Fixture directory resolution: INVENUM_OEIS_DIR, else the compiled-in
// default (the in-repo fixtures/oeis directory).
std::string fixture_directory();

// Loads "b{digits}.txt" for the given id from the fixture directory.
OeisFixture load_fixture(const std::string& id);

// Fetches the b-file from oeis.org and stores it in the fixture cache.
// Throws on any failure; never silently passes.
OeisFixture fetch_bfile(const std::string& id);

enum class OeisSource { Fixture, Network };

// Compares the catalog entry's computed terms (fast path when present,
// otherwise gf coefficients) for k = 0..k_max against the reference
// sequence, honoring the entry's offset policy.  Per-k differences land in
// the report's mismatch list.
CountReport oeis_check(const PatternSet& patterns, long long k_max,
                       OeisSource source = OeisSource::Fixture);
CountReport oeis_check_entry(const CatalogEntry& entry, long long k_max,
                             OeisSource source = OeisSource::Fixture);

} // namespace invenum

#endif
