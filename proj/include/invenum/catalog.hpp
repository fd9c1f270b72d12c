#ifndef INVENUM_CATALOG_HPP
#define INVENUM_CATALOG_HPP

// The sequence catalog: every pattern class the counting results cover,
// bound to its computation paths (exhaustive oracle, fast recurrence or
// closed form, generating function) and, where one exists, its OEIS id.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "invenum/count_report.hpp"
#include "invenum/permutation.hpp"

namespace invenum {

enum class OffsetPolicy {
    IndexAligned, // computed(k) must equal the reference value at index k
    Pinned,       // discover a constant shift |o| <= 2 at runtime
};

// A non-oracle counting path: terms for k = 0..k_max.
using SequenceFn = std::function<std::vector<mpz_class>(long long k_max)>;

struct CatalogEntry {
    PatternSet patterns;
    std::optional<SequenceFn> fast; // recurrence / closed form / object count
    std::optional<SequenceFn> gf;   // generating-function coefficients
    int fast_bound = 1 << 20;       // k_max cap of the fast path
    int gf_bound = 1 << 20;
    std::optional<std::string> oeis_id; // "A000041"
    OffsetPolicy offset_policy = OffsetPolicy::IndexAligned;
    std::string note;

    std::string key() const { return patterns.to_string(); }
};

// The full binding, one entry per pattern class in the catalog.
const std::vector<CatalogEntry>& catalog();

// Entry lookup by canonicalized pattern set; nullopt when uncatalogued.
const CatalogEntry* find_entry(const PatternSet& patterns);

enum class Method { Oracle, Fast, Gf, All };

Method parse_method(const std::string& name); // "oracle" | "fast" | "gf" | "all"

// Terms for k = 0..k_max via the selected path; method All runs every
// available path and records cross-path mismatches in the report.  Unknown
// pattern sets fall back to the oracle (with a note in the report).
CountReport run_count(const PatternSet& patterns, long long k_max, Method method);

} // namespace invenum

#endif
