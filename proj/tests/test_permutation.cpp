#include <doctest.h>

#include <algorithm>
#include <vector>

#include "invenum/errors.hpp"
#include "invenum/permutation.hpp"

using namespace invenum;

namespace {

Permutation perm(const std::string& s) { return parse_permutation(s); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// independent pair-counting reference
long long inversions_brute(const Permutation& p) {
    long long c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            c += p[i] > p[j] ? 1 : 0;
    return c;
}

} // namespace

TEST_CASE("construction validates one-line notation") {
    CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK(Permutation({3, 1, 4, 2}).size() == 4);
}

TEST_CASE("inversions: examples and brute-force agreement") {
    CHECK(inversions(perm("1")) == 0);
    CHECK(inversions(perm("231")) == 2);
    CHECK(inversions(perm("4321")) == 6);
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_perms(n)) {
            CHECK(inversions(p) == inversions_brute(p));
            CHECK(inversions(p) == inversion_table(p).sum());
        }
}

TEST_CASE("components factorization") {
    auto comp = components(perm("3214"));
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == perm("321"));
    CHECK(comp[1] == perm("1"));
    CHECK(components(perm("3142")) == std::vector<Permutation>{perm("3142")});
    CHECK(components(perm("1")) == std::vector<Permutation>{perm("1")});
    CHECK(is_decomposable(perm("3214")));
    CHECK(is_indecomposable(perm("3142")));
    // the factorization recombines to the original
    for (const auto& p : all_perms(5)) {
        Permutation rebuilt = components(p)[0];
        for (std::size_t i = 1; i < components(p).size(); ++i)
            rebuilt = direct_sum(rebuilt, components(p)[i]);
        CHECK(rebuilt == p);
    }
}

TEST_CASE("direct and skew sums") {
    CHECK(direct_sum(perm("1"), perm("21")) == perm("132"));
    CHECK(direct_sum(perm("21"), perm("21")) == perm("2143"));
    CHECK(direct_sum(perm("1"), perm("1")) == perm("12"));
    CHECK(skew_sum(perm("1"), perm("1")) == perm("21"));
    CHECK(skew_sum(perm("1"), perm("21")) == perm("321"));
    CHECK(skew_sum(perm("12"), perm("1")) == perm("231"));
    for (const auto& p : all_perms(4))
        for (const auto& q : all_perms(3)) {
            CHECK(inversions(direct_sum(p, q)) == inversions(p) + inversions(q));
            CHECK(inversions(skew_sum(p, q)) ==
                  inversions(p) + inversions(q) +
                      static_cast<long long>(p.size() * q.size()));
        }
}

TEST_CASE("reverse complement and inverse") {
    CHECK(reverse_complement(perm("21")) == perm("21"));
    CHECK(reverse_complement(perm("231")) == perm("312"));
    CHECK(reverse_complement(perm("132")) == perm("213"));
    CHECK(inverse(perm("231")) == perm("312"));
    CHECK(inverse(perm("321")) == perm("321"));
    CHECK(inverse(perm("12")) == perm("12"));
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_perms(n)) {
            CHECK(reverse_complement(reverse_complement(p)) == p);
            CHECK(inverse(inverse(p)) == p);
            CHECK(inversions(reverse_complement(p)) == inversions(p));
            CHECK(inversions(inverse(p)) == inversions(p));
            CHECK(components(reverse_complement(p)).size() == components(p).size());
            CHECK(components(inverse(p)).size() == components(p).size());
        }
}

TEST_CASE("pattern containment") {
    CHECK(contains(perm("3142"), perm("132")));
    CHECK_FALSE(contains(perm("321"), perm("123")));
    CHECK(contains(perm("3142"), perm("3142")));
    CHECK(avoids(perm("2341"), perm("132")));
    CHECK(avoids_all(perm("321"), parse_pattern_set("123,132,231")));
    CHECK_FALSE(avoids_all(perm("231"), parse_pattern_set("123,231")));
    // every nonempty permutation contains the singleton pattern
    for (const auto& p : all_perms(4))
        CHECK(contains(p, perm("1")));
}

TEST_CASE("inversion table round trips") {
    CHECK(inversion_table(perm("3142")).entries() == std::vector<int>{2, 0, 1, 0});
    CHECK(inversion_table(perm("123")).entries() == std::vector<int>{0, 0, 0});
    CHECK(inversion_table(perm("4213")).entries() == std::vector<int>{3, 1, 0, 0});
    CHECK(permutation_from_table(SubdiagonalSequence({2, 0, 1, 0})) == perm("3142"));
    CHECK(permutation_from_table(SubdiagonalSequence({0, 0, 0})) == perm("123"));
    CHECK(permutation_from_table(SubdiagonalSequence({3, 0, 0, 0})) == perm("4123"));
    CHECK_THROWS_AS(SubdiagonalSequence({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(SubdiagonalSequence({0, 0, 1}), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_perms(n))
            CHECK(permutation_from_table(inversion_table(p)) == p);
}

TEST_CASE("diagonal flags") {
    CHECK(diagonal_flags(SubdiagonalSequence({2, 1, 0})) ==
          std::vector<bool>{true, true, true});
    CHECK(diagonal_flags(SubdiagonalSequence({3, 0, 0, 0})) ==
          std::vector<bool>{true, false, false, true});
    CHECK(diagonal_flags(SubdiagonalSequence({0})) == std::vector<bool>{true});
}

TEST_CASE("textual round trips") {
    CHECK(to_string(perm("3142")) == "3142");
    CHECK(parse_permutation("10,1,2,3,4,5,6,7,8,9").size() == 10);
    CHECK(to_string(parse_permutation("10,1,2,3,4,5,6,7,8,9")) == "10,1,2,3,4,5,6,7,8,9");
    CHECK(parse_permutation("1,2,3") == perm("123")); // comma form accepted for small n
    CHECK_THROWS_AS(parse_permutation(""), ParseError);
    CHECK_THROWS_AS(parse_permutation("130"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1,x"), ParseError);
    CHECK_THROWS_AS(parse_permutation("122"), ParseError);
}

TEST_CASE("pattern sets canonicalize") {
    const PatternSet s = parse_pattern_set("213,132,213");
    CHECK(s.patterns().size() == 2);
    CHECK(s.to_string() == "132,213");
    CHECK(parse_pattern_set("12").to_string() == "12");
    CHECK(s.reverse_complemented().to_string() == "132,213"); // rc swaps the pair
    CHECK(parse_pattern_set("231").reverse_complemented().to_string() == "312");
    CHECK(parse_pattern_set("123,321,12").to_string() == "12,123,321");
    CHECK_THROWS_AS(parse_pattern_set(""), ParseError);
}

TEST_CASE("lemma: inversions >= n - components") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_perms(n))
            CHECK(inversions(p) >=
                  static_cast<long long>(p.size()) -
                      static_cast<long long>(components(p).size()));
}
