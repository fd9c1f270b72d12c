#ifndef INVENUM_COUNT_REPORT_HPP
#define INVENUM_COUNT_REPORT_HPP

// Shared result record for counting runs: a per-k sequence of terms tagged
// with the pattern set and computation method, plus any cross-check
// mismatches.  Used by the oracle, the catalog runner and the CLI.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace invenum {

// gmpxx has no long long constructor; counts here always fit in a long
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

struct CountReport {
    std::string patterns;            // canonical pattern-set string, "" = unrestricted
    std::string method;              // "oracle", "fast", "gf", "all", "fixture", ...
    long long k_min = 0;
    std::vector<mpz_class> terms;    // terms[i] = count at k = k_min + i
    std::vector<std::string> mismatches;
    std::vector<std::string> warnings; // non-fatal notes, not part of the JSON schema
    long long elapsed_ms = 0;

    long long k_max() const { return k_min + static_cast<long long>(terms.size()) - 1; }
    bool ok() const { return mismatches.empty(); }

    std::string to_json() const;  // fixed key order, values as decimal strings
    std::string to_csv() const;   // header + one "k,value" row per term
    std::string to_plain() const; // aligned human-readable table
};

} // namespace invenum

#endif
