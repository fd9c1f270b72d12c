#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>

#include "invenum/catalog.hpp"
#include "invenum/errors.hpp"
#include "invenum/oeis.hpp"
#include "invenum/verify.hpp"

using namespace invenum;

TEST_CASE("catalog covers every pattern class exactly once") {
    const auto& entries = catalog();
    CHECK(entries.size() == 19);
    std::set<std::string> keys;
    for (const auto& e : entries) {
        CHECK(keys.insert(e.key()).second);
        // every entry needs the oracle plus at least one other path, unless
        // no other route exists for it
        if (e.key() != "123,321")
            CHECK((e.fast.has_value() || e.gf.has_value()));
    }
    CHECK(keys.count("132"));
    CHECK(keys.count("12"));
    CHECK(keys.count("123,132,213,231"));

    REQUIRE(find_entry(parse_pattern_set("321")) != nullptr);
    CHECK(*find_entry(parse_pattern_set("321"))->oeis_id == "A006958");
    CHECK(*find_entry(parse_pattern_set("132,213,231"))->oeis_id == "A001227");
    CHECK_FALSE(find_entry(parse_pattern_set("123"))->oeis_id.has_value());
    CHECK(find_entry(parse_pattern_set("312")) == nullptr);

    // ten distinct OEIS ids ship with the catalog
    std::set<std::string> ids;
    for (const auto& e : entries)
        if (e.oeis_id)
            ids.insert(*e.oeis_id);
    CHECK(ids.size() == 10);
}

TEST_CASE("run_count per method") {
    CHECK(run_count(parse_pattern_set("321"), 4, Method::Fast).terms ==
          std::vector<mpz_class>{1, 1, 2, 4, 9});
    const CountReport all = run_count(parse_pattern_set("132,213"), 4, Method::All);
    CHECK(all.terms == std::vector<mpz_class>{1, 1, 2, 3, 3});
    CHECK(all.mismatches.empty());
    const CountReport gf = run_count(parse_pattern_set("123,231"), 8, Method::Gf);
    CHECK(gf.terms == std::vector<mpz_class>{1, 1, 1, 1, 2, 1, 2, 2, 2});
    const CountReport oracle = run_count(parse_pattern_set("123,321"), 8, Method::Oracle);
    CHECK(oracle.terms == std::vector<mpz_class>{1, 1, 2, 2, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(run_count(parse_pattern_set("123,321"), 8, Method::Fast),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_count(parse_pattern_set("231"), 20, Method::Fast), BoundError);
}

TEST_CASE("run_count skips shift pinning when the range is too short") {
    // pinned-offset comparison needs at least 4 terms; a short range is a
    // warning, not a mismatch
    const CountReport r = run_count(parse_pattern_set("123,132"), 2, Method::All);
    CHECK(r.ok());
    REQUIRE(!r.warnings.empty());
    CHECK(r.terms == std::vector<mpz_class>{1, 1, 2});
    const CountReport r2 = run_count(parse_pattern_set("123,132"), 8, Method::All);
    CHECK(r2.ok());
    CHECK(r2.warnings.empty());
}

TEST_CASE("run_count falls back to the oracle for uncatalogued sets") {
    const CountReport r = run_count(parse_pattern_set("312"), 5, Method::Fast);
    CHECK(r.method == "oracle");
    REQUIRE(!r.warnings.empty());
    // 312 is the inverse image of 231, so the counts coincide
    CHECK(r.terms == run_count(parse_pattern_set("231"), 5, Method::Oracle).terms);
    CHECK(r.ok());
}

TEST_CASE("report formats are stable") {
    CountReport r = run_count(parse_pattern_set("132"), 3, Method::Fast);
    r.elapsed_ms = 0;
    const std::string json = r.to_json();
    CHECK(json.find("\"patterns\"") != std::string::npos);
    CHECK(json.find("\"132\"") != std::string::npos);
    CHECK(json.find("\"method\": \"fast\"") != std::string::npos);
    CHECK(json.find("\"value\": \"3\"") != std::string::npos);
    CHECK(json.find("\"elapsed_ms\": 0") != std::string::npos);
    CountReport r2 = run_count(parse_pattern_set("132"), 3, Method::Fast);
    r2.elapsed_ms = 0;
    CHECK(r.to_json() == r2.to_json()); // byte-stable modulo timing
    CHECK(r.to_csv() == "k,value\n0,1\n1,1\n2,2\n3,3\n");
    CHECK(r.to_plain().find("k=3\t3") != std::string::npos);
}

TEST_CASE("b-file parsing") {
    const OeisFixture f = parse_bfile("0 1\n1 1\n2 2\n", "A000041");
    REQUIRE(f.terms.size() == 3);
    CHECK(f.terms[2].second == 2);
    CHECK(parse_bfile("# comment\n5 7\n").terms.size() == 1);
    CHECK(parse_bfile("").terms.empty());
    CHECK(parse_bfile("\n  \n# x\n").terms.empty());
    CHECK(parse_bfile("3 123456789012345678901234567890\n").terms[0].second ==
          mpz_class("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_bfile("3 1\n2 5\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("1 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("abc\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("1 2 3\n"), ParseError);
    try {
        parse_bfile("0 1\nbroken\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    // negative indices are legal in b-files as long as they increase
    CHECK(parse_bfile("-1 5\n0 6\n").terms[0].first == -1);
}

TEST_CASE("fixture lookups") {
    const OeisFixture f = load_fixture("A000041");
    CHECK(f.value_at(0) == mpz_class(1));
    CHECK(f.value_at(10) == mpz_class(42));
    CHECK_FALSE(f.value_at(-5).has_value());
    CHECK_THROWS(load_fixture("A999999"));
    CHECK_THROWS_AS(load_fixture("bogus"), std::invalid_argument);
}

TEST_CASE("fixture directory override via environment") {
    char tmpl[] = "/tmp/invenum-fixtures-XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    const std::string dir(tmpl);
    {
        std::ofstream out(dir + "/b000041.txt");
        out << "0 7\n1 8\n";
    }
    setenv("INVENUM_OEIS_DIR", dir.c_str(), 1);
    CHECK(fixture_directory() == dir);
    const OeisFixture f = load_fixture("A000041");
    CHECK(f.value_at(0) == mpz_class(7));
    CHECK_THROWS_AS(load_fixture("A000009"), std::runtime_error); // not in override dir
    unsetenv("INVENUM_OEIS_DIR");
    CHECK(load_fixture("A000041").value_at(0) == mpz_class(1)); // back to the in-repo set
}

TEST_CASE("offline OEIS checks per entry") {
    for (const auto& entry : catalog()) {
        if (!entry.oeis_id)
            continue;
        const CountReport r = oeis_check_entry(entry, 20, OeisSource::Fixture);
        INFO(entry.key(), " vs ", *entry.oeis_id);
        CHECK(r.mismatches.empty());
    }
}

TEST_CASE("oeis_check by pattern set") {
    CHECK(oeis_check(parse_pattern_set("132"), 20).ok());
    CHECK(oeis_check(parse_pattern_set("231"), 12).ok());
    CHECK(oeis_check(parse_pattern_set("12"), 10).ok());
    CHECK_THROWS_AS(oeis_check(parse_pattern_set("123"), 10), std::invalid_argument);
    CHECK_THROWS_AS(oeis_check(parse_pattern_set("312"), 10), std::invalid_argument);
}

TEST_CASE("verify_all at a small bound") {
    const VerifyReport r = verify_all(5);
    INFO(r.to_text());
    CHECK(r.ok());
    CHECK(r.failures() == 0);
    bool saw_known_open = false;
    for (const auto& c : r.checks)
        saw_known_open = saw_known_open || c.known_open;
    CHECK(saw_known_open);
    const std::string json = r.to_json();
    CHECK(json.find("\"known_open\": true") != std::string::npos);
    CHECK(json.find("\"failures\": 0") != std::string::npos);

    const VerifyReport r0 = verify_all(0);
    CHECK(r0.ok());
    CHECK_THROWS_AS(verify_all(15), BoundError);
}
