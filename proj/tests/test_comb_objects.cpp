#include <doctest.h>

#include <set>

#include "invenum/errors.hpp"
#include "invenum/fountains.hpp"
#include "invenum/partitions.hpp"
#include "invenum/polyominoes.hpp"

using namespace invenum;

TEST_CASE("partition generation per mode") {
    CHECK(partitions_of(4, PartitionMode::All).size() == 5);
    CHECK(partitions_of(4, PartitionMode::Distinct).size() == 2);
    CHECK(partitions_of(4, PartitionMode::EqualParts).size() == 3);
    CHECK(partitions_of(0, PartitionMode::All).size() == 1);
    CHECK(partitions_of(0, PartitionMode::Distinct).size() == 1);
    CHECK(partitions_of(0, PartitionMode::EqualParts).size() == 1);
    // p(k) prefix: 1 1 2 3 5 7 11 15 22 30
    const long expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int k = 0; k < 10; ++k) {
        const auto parts = partitions_of(k);
        CHECK(static_cast<long long>(parts.size()) == expect[k]);
        std::set<Partition> dedup(parts.begin(), parts.end());
        CHECK(dedup.size() == parts.size());
        for (const auto& p : parts)
            CHECK(p.sum() == k);
    }
    // distinct-part counts q(k): 1 1 1 2 2 3 4 5 6 8
    const long long expect_q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8};
    for (int k = 0; k < 10; ++k)
        CHECK(static_cast<long long>(partitions_of(k, PartitionMode::Distinct).size()) ==
              expect_q[k]);
}

TEST_CASE("equal-hook corner predicate") {
    CHECK(is_gorenstein(Partition({2, 1})));
    CHECK_FALSE(is_gorenstein(Partition({3, 1})));
    CHECK(is_gorenstein(Partition({7})));
    CHECK(is_gorenstein(Partition()));
    CHECK(is_gorenstein(Partition({3, 2, 1})));
    CHECK_FALSE(is_gorenstein(Partition({2, 1, 1})));
    // hand-counted: 1 1 2 3 3 5 5 5 7 10 5 11 11 11 15 for n = 0..14
    const long expect[] = {1, 1, 2, 3, 3, 5, 5, 5, 7, 10, 5, 11, 11, 11, 15};
    for (int n = 0; n <= 14; ++n) {
        long long count = 0;
        for (const auto& p : partitions_of(n))
            if (is_gorenstein(p))
                ++count;
        CHECK(count == expect[n]);
    }
}

TEST_CASE("compositions") {
    CHECK(compositions_of(3).size() == 4);
    CHECK(compositions_of(1).size() == 1);
    CHECK(compositions_of(0).size() == 1);
    CHECK(compositions_of(0)[0].parts.empty());
    for (int s = 1; s <= 8; ++s)
        CHECK(compositions_of(s).size() == (1u << (s - 1)));
}

TEST_CASE("fountain validation") {
    CHECK_NOTHROW(Fountain({{1, 2, 3}, {1, 2}, {1}}));
    CHECK_THROWS_AS(Fountain({{1, 3}}), std::invalid_argument); // holed bottom
    CHECK_THROWS_AS(Fountain({{2, 3}}), std::invalid_argument); // bottom not at 1
    CHECK_THROWS_AS(Fountain({{1, 2}, {2}}), std::invalid_argument); // no support
    CHECK_THROWS_AS(Fountain({{1, 2, 3}, {1, 2}, {2}}), std::invalid_argument);
    const Fountain f({{1, 2, 3}, {2}});
    CHECK(f.coins() == 4);
    CHECK(f.even_row_coins() == 3);
    CHECK(f.has_coin(1, 2));
    CHECK_FALSE(f.has_coin(1, 1));
    CHECK(Fountain().empty());
}

TEST_CASE("fountain counts match the known prefix") {
    // 1 1 1 2 3 5 9 15 26 45 78
    const long expect[] = {1, 1, 1, 2, 3, 5, 9, 15, 26, 45, 78};
    for (int k = 0; k <= 10; ++k) {
        const auto fs = fountains_with_coins(k);
        CHECK(static_cast<long long>(fs.size()) == expect[k]);
        std::set<Fountain> dedup(fs.begin(), fs.end());
        CHECK(dedup.size() == fs.size());
        for (const auto& f : fs) {
            CHECK(f.coins() == k);
            CHECK(Fountain(f.rows()) == f); // canonical re-encode
        }
    }
    CHECK_THROWS_AS(fountains_with_coins(17), BoundError);
}

TEST_CASE("even fountain counts match the 321-avoider prefix") {
    // 1 1 2 4 9 20 46 105 242 for s = 0..8
    const long expect[] = {1, 1, 2, 4, 9, 20, 46, 105, 242};
    for (int s = 0; s <= 8; ++s) {
        const auto efs = even_fountains_of_size(s, 10);
        CHECK(static_cast<long long>(efs.size()) == expect[s]);
        for (const auto& ef : efs)
            CHECK(ef.size == s);
    }
    CHECK_THROWS_AS(even_fountains_of_size(11), BoundError);
}

TEST_CASE("missing-coin rectangles") {
    CHECK(missing_set_is_rectangle(Fountain({{1, 2, 3}, {2}})));
    CHECK(missing_set_is_rectangle(Fountain({{1, 2, 3}, {1}})));
    CHECK_FALSE(missing_set_is_rectangle(Fountain({{1, 2, 3, 4}})));
    CHECK(missing_set_is_rectangle(Fountain()));
    CHECK(missing_set_is_rectangle(Fountain(std::vector<std::vector<int>>{{1}})));
    CHECK(missing_set_is_rectangle(Fountain({{1, 2}})));
    CHECK_FALSE(missing_set_is_rectangle(Fountain({{1, 2, 3}})));
    // counts per coin number: 1 1 1 1 2 1 2 2 2 3 1 (k = 0..10)
    const long expect[] = {1, 1, 1, 1, 2, 1, 2, 2, 2, 3, 1};
    for (int k = 0; k <= 10; ++k) {
        long long count = 0;
        for (const auto& f : fountains_with_coins(k))
            if (missing_set_is_rectangle(f))
                ++count;
        CHECK(count == expect[k]);
    }
}

TEST_CASE("polyomino generation") {
    CHECK(polyominoes_with_cells(1).size() == 1);
    CHECK(polyominoes_with_cells(2).size() == 2);
    CHECK(polyominoes_with_cells(3).size() == 4);
    // 1 2 4 9 20 46 105 242 557 1285
    const long expect[] = {1, 2, 4, 9, 20, 46, 105, 242, 557, 1285};
    for (int k = 1; k <= 10; ++k) {
        const auto ps = polyominoes_with_cells(k);
        CHECK(static_cast<long long>(ps.size()) == expect[k - 1]);
        std::set<ParallelogramPolyomino> dedup(ps.begin(), ps.end());
        CHECK(dedup.size() == ps.size());
        for (const auto& p : ps) {
            CHECK(p.cells() == k);
            CHECK(ParallelogramPolyomino(p.columns()) == p);
        }
    }
    CHECK_THROWS_AS(polyominoes_with_cells(15), BoundError);
    CHECK_THROWS_AS(polyominoes_with_cells(0), std::invalid_argument);
    CHECK_THROWS_AS(
        ParallelogramPolyomino({{2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(
        ParallelogramPolyomino({ParallelogramPolyomino::Column{1, 2},
                                ParallelogramPolyomino::Column{1, 1}}),
        std::invalid_argument); // top path must stay weakly increasing
    CHECK_THROWS_AS(
        ParallelogramPolyomino({ParallelogramPolyomino::Column{1, 1},
                                ParallelogramPolyomino::Column{3, 3}}),
        std::invalid_argument); // columns must share an edge
}

TEST_CASE("debug renders stay printable") {
    const std::string f = render(Fountain({{1, 2, 3}, {1, 2}, {1}}));
    CHECK(f.find('o') != std::string::npos);
    const std::string p = render(polyominoes_with_cells(3)[0]);
    CHECK(p.find('#') != std::string::npos);
}
