#include "invenum/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "invenum/errors.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#ifndef INVENUM_DEFAULT_FIXTURE_DIR
#define INVENUM_DEFAULT_FIXTURE_DIR "fixtures/oeis"
#endif

namespace invenum {

std::optional<mpz_class> OeisFixture::value_at(long long index) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), index,
                               [](const auto& term, long long idx) { return term.first < idx; });
    if (it != terms.end() && it->first == index)
        return it->second;
    return std::nullopt;
}

OeisFixture parse_bfile(const std::string& text, const std::string& id) {
    OeisFixture fixture;
    fixture.id = id;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        std::istringstream fields(line);
        long long index = 0;
        std::string value_text;
        if (!(fields >> index >> value_text))
            throw ParseError("expected 'index value'", line_no);
        std::string rest;
        if (fields >> rest && !rest.empty() && rest[0] != '#')
            throw ParseError("trailing content '" + rest + "'", line_no);
        mpz_class value;
        if (value.set_str(value_text, 10) != 0)
            throw ParseError("bad integer '" + value_text + "'", line_no);
        if (!fixture.terms.empty() && index <= fixture.terms.back().first)
            throw ParseError("indices must be strictly increasing", line_no);
        fixture.terms.emplace_back(index, std::move(value));
    }
    return fixture;
}

std::string fixture_directory() {
    if (const char* env = std::getenv("INVENUM_OEIS_DIR"); env && *env)
        return env;
    return INVENUM_DEFAULT_FIXTURE_DIR;
}

namespace {

std::string bfile_name(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A' ||
        !std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad OEIS id '" + id + "'");
    return "b" + id.substr(1) + ".txt";
}

} // namespace

OeisFixture load_fixture(const std::string& id) {
    const std::string path = fixture_directory() + "/" + bfile_name(id);
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("missing OEIS fixture " + path +
                                 " (set INVENUM_OEIS_DIR or fetch with --online)");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str(), id);
}

OeisFixture fetch_bfile(const std::string& id) {
    const std::string name = bfile_name(id);
    httplib::Client client("https://oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get("/" + id + "/" + name);
    if (!res)
        throw std::runtime_error("network fetch of " + id + " failed: " +
                                 httplib::to_string(res.error()));
    if (res->status != 200)
        throw std::runtime_error("network fetch of " + id + " failed: HTTP " +
                                 std::to_string(res->status));
    OeisFixture fixture = parse_bfile(res->body, id);
    const std::string path = fixture_directory() + "/" + name;
    std::ofstream out(path);
    if (out)
        out << res->body; // write-through cache; best effort
    return fixture;
}

CountReport oeis_check_entry(const CatalogEntry& entry, long long k_max, OeisSource source) {
    if (!entry.oeis_id)
        throw std::invalid_argument("pattern set '" + entry.key() + "' has no OEIS id");
    const auto start = std::chrono::steady_clock::now();
    const OeisFixture fixture = source == OeisSource::Fixture ? load_fixture(*entry.oeis_id)
                                                              : fetch_bfile(*entry.oeis_id);
    CountReport report;
    report.patterns = entry.key();
    report.method = source == OeisSource::Fixture ? "fixture" : "network";

    // pick a non-oracle path whose bound covers the requested range
    const SequenceFn* path = nullptr;
    if (entry.fast && k_max <= entry.fast_bound)
        path = &*entry.fast;
    else if (entry.gf && k_max <= entry.gf_bound)
        path = &*entry.gf;
    if (!path)
        throw std::invalid_argument("pattern set '" + entry.key() +
                                    "' has no non-oracle path reaching k_max=" +
                                    std::to_string(k_max));
    report.terms = (*path)(k_max);

    int offset = 0;
    if (entry.offset_policy == OffsetPolicy::Pinned) {
        // discover the constant shift: terms(k) == fixture(k + o)
        std::optional<int> found;
        for (int o = -2; o <= 2 && !found; ++o) {
            long long compared = 0;
            bool all = true;
            for (long long k = 0; k <= k_max; ++k) {
                const auto ref = fixture.value_at(k + o);
                if (!ref)
                    continue;
                ++compared;
                if (*ref != report.terms[static_cast<std::size_t>(k)]) {
                    all = false;
                    break;
                }
            }
            if (all && compared >= 4)
                found = o;
        }
        if (!found) {
            report.mismatches.push_back("no constant shift in [-2,2] aligns computed terms "
                                        "with " + *entry.oeis_id);
            report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
            return report;
        }
        offset = *found;
    }

    long long compared = 0;
    for (long long k = 0; k <= k_max; ++k) {
        const auto ref = fixture.value_at(k + offset);
        if (!ref)
            continue; // outside the b-file's index range (e.g. offset-1 sequences)
        ++compared;
        const auto& got = report.terms[static_cast<std::size_t>(k)];
        if (*ref != got)
            report.mismatches.push_back("k=" + std::to_string(k) + ": computed " +
                                        got.get_str() + " != " + *entry.oeis_id + "(" +
                                        std::to_string(k + offset) + ") = " + ref->get_str());
    }
    if (compared == 0)
        report.mismatches.push_back("fixture " + *entry.oeis_id +
                                    " shares no indices with the computed range");
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

CountReport oeis_check(const PatternSet& patterns, long long k_max, OeisSource source) {
    const CatalogEntry* entry = find_entry(patterns);
    if (!entry)
        throw std::invalid_argument("pattern set '" + patterns.to_string() +
                                    "' is not in the catalog");
    return oeis_check_entry(*entry, k_max, source);
}

} // namespace invenum
