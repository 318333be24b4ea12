#include "doctest.h"

#include "bidik/core/ranking.hpp"

using namespace bidik;

TEST_CASE("rank orders by score descending") {
    const std::vector<double> v{0.92, 0.85, 0.77};
    const std::vector<std::string> ids{"Angga", "RODIAH", "SAGA"};
    const std::vector<double> c1{2, 2, 2};
    const auto r = rank(v, ids, c1);
    REQUIRE(r.size() == 3);
    CHECK(r.rank_of("Angga") == 1);
    CHECK(r.rank_of("RODIAH") == 2);
    CHECK(r.rank_of("SAGA") == 3);
    CHECK(r.rank_of("nobody") == 0);
    for (const auto& e : r.entries) CHECK_FALSE(e.tie_break_applied);
}

TEST_CASE("equal scores with equal C1 fall back to ascending id") {
    const std::vector<double> v{0.5, 0.5};
    const std::vector<std::string> ids{"B01", "A02"};
    const std::vector<double> c1{6, 6};
    const auto r = rank(v, ids, c1);
    CHECK(r.entries[0].id == "A02");
    CHECK(r.entries[0].rank == 1);
    CHECK_FALSE(r.entries[0].tie_break_applied);
    CHECK(r.entries[1].id == "B01");
    CHECK(r.entries[1].rank == 2);
    CHECK(r.entries[1].tie_break_applied);
}

TEST_CASE("equal scores prefer the higher C1 crisp score") {
    const std::vector<double> v{0.5, 0.5, 0.9};
    const std::vector<std::string> ids{"A", "B", "C"};
    const std::vector<double> c1{4, 8, 2};
    const auto r = rank(v, ids, c1);
    CHECK(r.entries[0].id == "C");
    CHECK(r.entries[1].id == "B");
    CHECK(r.entries[2].id == "A");
}

TEST_CASE("scores within 1e-12 are ties; wider gaps are not") {
    const std::vector<std::string> ids{"A", "B"};
    const std::vector<double> c1{2, 10};
    {
        const std::vector<double> v{0.7 + 5e-13, 0.7};
        const auto r = rank(v, ids, c1);
        CHECK(r.entries[0].id == "B");
        CHECK(r.entries[1].tie_break_applied);
    }
    {
        const std::vector<double> v{0.7 + 1e-9, 0.7};
        const auto r = rank(v, ids, c1);
        CHECK(r.entries[0].id == "A");
        CHECK_FALSE(r.entries[1].tie_break_applied);
    }
}

TEST_CASE("single alternative gets rank 1; empty input is empty") {
    const std::vector<double> v{0.3};
    const std::vector<std::string> ids{"X"};
    const auto r = rank(v, ids, v);
    REQUIRE(r.size() == 1);
    CHECK(r.entries[0].rank == 1);
    CHECK(rank({}, std::span<const std::string>{}, {}).size() == 0);
}

TEST_CASE("ranks are 1..n without gaps even with ties") {
    const std::vector<double> v{0.5, 0.5, 0.5, 0.2};
    const std::vector<std::string> ids{"c", "b", "a", "d"};
    const std::vector<double> c1{2, 2, 2, 2};
    const auto r = rank(v, ids, c1);
    for (std::size_t k = 0; k < r.size(); ++k) CHECK(r.entries[k].rank == int(k + 1));
    CHECK(r.entries[0].id == "a");
    CHECK(r.entries[3].id == "d");
}

TEST_CASE("select takes the first min(quota, n) entries") {
    const std::vector<double> v{0.92, 0.85, 0.77};
    const std::vector<std::string> ids{"Angga", "RODIAH", "SAGA"};
    const auto r = rank(v, ids, v);
    const auto top2 = select(r, 2);
    REQUIRE(top2.size() == 2);
    CHECK(top2[0].id == "Angga");
    CHECK(top2[1].id == "RODIAH");
    CHECK(select(r, 0).empty());
    CHECK(select(r, 13).size() == 3);
}

TEST_CASE("quota 13 over 13 alternatives selects all of them") {
    std::vector<double> v;
    std::vector<std::string> ids;
    for (int i = 0; i < 13; ++i) {
        v.push_back(0.5 + 0.01 * i);
        ids.push_back("N" + std::to_string(i));
    }
    const auto r = rank(v, ids, v);
    CHECK(select(r, 13).size() == 13);
}
