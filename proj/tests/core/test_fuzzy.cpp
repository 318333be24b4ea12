#include "doctest.h"

#include <cmath>
#include <limits>
#include <set>

#include "bidik/core/criteria.hpp"
#include "bidik/core/error.hpp"
#include "bidik/core/fuzzy.hpp"
#include "saw_oracle.hpp"

using namespace bidik;

namespace {

const CriterionSpec& criterion(const std::vector<CriterionSpec>& all, const std::string& id) {
    for (const auto& c : all) {
        if (c.id == id) return c;
    }
    throw std::runtime_error("no criterion " + id);
}

}  // namespace

TEST_CASE("fuzzy scale is a bijection onto {2,4,6,8,10}") {
    const FuzzyLevel levels[] = {FuzzyLevel::SR, FuzzyLevel::R, FuzzyLevel::CT, FuzzyLevel::T, FuzzyLevel::ST};
    const int expected[] = {2, 4, 6, 8, 10};
    for (int k = 0; k < 5; ++k) {
        CHECK(crisp_value(levels[k]) == expected[k]);
        CHECK(level_from_crisp(expected[k]) == levels[k]);
    }
    for (int v : {-2, 0, 1, 3, 5, 7, 9, 11, 12}) {
        CHECK_FALSE(level_from_crisp(v).has_value());
    }
    CHECK(level_name(FuzzyLevel::CT) == "CT");
}

TEST_CASE("interval membership is lower-inclusive and upper-exclusive") {
    Interval half{40, 60, 4};
    CHECK(half.contains(40));
    CHECK(half.contains(59.999));
    CHECK_FALSE(half.contains(60));
    CHECK_FALSE(half.contains(39.999));
    CHECK_FALSE(half.contains(std::nan("")));

    Interval closed{85, 100, 10, true};
    CHECK(closed.contains(100));
    CHECK_FALSE(closed.contains(100.0001));

    Interval open_ended{5e6, std::nullopt, 4};
    CHECK(open_ended.contains(1e12));
}

TEST_CASE("built-in tables validate clean over their domains") {
    for (const auto& c : default_criteria()) {
        CAPTURE(c.id);
        CHECK(validate_table(c.table, c.effective_domain()).empty());
    }
    CHECK(validate_criteria(default_criteria()).empty());
}

TEST_CASE("built-in tables hold 19 entries with legal crisp values") {
    std::size_t total = 0;
    for (const auto& c : default_criteria()) {
        total += c.table.entries.size();
        for (const auto& e : c.table.entries) CHECK(is_legal_crisp(e.crisp));
        CHECK(c.kind == CriterionKind::Benefit);
    }
    CHECK(total == 19);
}

TEST_CASE("validate_table reports a constructed overlap") {
    ConversionTable t{{Interval{0, 60, 4}, Interval{50, 100, 6}}, "score"};
    const auto report = validate_table(t, Domain{0, 100, false});
    REQUIRE(report.size() == 1);
    CHECK(report[0].kind == TableIssueKind::Overlap);
    CHECK(report[0].lower == 50);
    CHECK(report[0].upper == 60);
    CHECK(report[0].message == "overlap at [50, 60)");
}

TEST_CASE("validate_table reports a constructed gap") {
    ConversionTable t{{Interval{0, 40, 2}, Interval{60, 100, 6}}, "score"};
    const auto report = validate_table(t, Domain{0, 100, false});
    REQUIRE(report.size() == 1);
    CHECK(report[0].kind == TableIssueKind::Gap);
    CHECK(report[0].lower == 40);
    CHECK(report[0].upper == 60);
    CHECK(report[0].message == "gap at [40, 60)");
}

TEST_CASE("validate_table edge cases") {
    SUBCASE("illegal crisp value") {
        ConversionTable t{{Interval{0, 50, 3}, Interval{50, 100, 6}}, ""};
        const auto report = validate_table(t, Domain{0, 100, false});
        REQUIRE(report.size() == 1);
        CHECK(report[0].kind == TableIssueKind::IllegalCrisp);
    }
    SUBCASE("unsorted entries are reported but coverage is checked on the sorted order") {
        ConversionTable t{{Interval{50, 100, 6}, Interval{0, 50, 4}}, ""};
        const auto report = validate_table(t, Domain{0, 100, false});
        REQUIRE(report.size() == 1);
        CHECK(report[0].kind == TableIssueKind::Unsorted);
    }
    SUBCASE("leading and trailing gaps") {
        ConversionTable t{{Interval{10, 90, 6}}, ""};
        const auto report = validate_table(t, Domain{0, 100, false});
        REQUIRE(report.size() == 2);
        CHECK(report[0].message == "gap at [0, 10)");
        CHECK(report[1].message == "gap at [90, 100)");
    }
    SUBCASE("closed domain needs a closed last interval") {
        ConversionTable t{{Interval{0, 100, 6}}, ""};
        const auto report = validate_table(t, Domain{0, 100, true});
        REQUIRE(report.size() == 1);
        CHECK(report[0].message == "gap at [100, 100]");
    }
    SUBCASE("unbounded domain needs an unbounded last interval") {
        ConversionTable t{{Interval{0, 100, 6}}, ""};
        const auto report = validate_table(t, Domain{0, std::nullopt, false});
        REQUIRE(report.size() == 1);
        CHECK(report[0].message == "gap at [100, inf)");
    }
    SUBCASE("entry after an unbounded one overlaps") {
        ConversionTable t{{Interval{0, std::nullopt, 6}, Interval{10, 20, 4}}, ""};
        const auto report = validate_table(t, Domain{0, std::nullopt, false});
        REQUIRE(report.size() == 1);
        CHECK(report[0].kind == TableIssueKind::Overlap);
    }
    SUBCASE("empty interval") {
        ConversionTable t{{Interval{0, 10, 2}, Interval{10, 10, 4}, Interval{10, 20, 6}}, ""};
        const auto report = validate_table(t, Domain{0, 20, false});
        REQUIRE(!report.empty());
        CHECK(report[0].kind == TableIssueKind::EmptyInterval);
    }
    SUBCASE("no entries is one gap over the whole domain") {
        const auto report = validate_table(ConversionTable{}, Domain{0, 5, false});
        REQUIRE(report.size() == 1);
        CHECK(report[0].kind == TableIssueKind::Gap);
    }
}

TEST_CASE("fuzzify reproduces the published interval tables") {
    const auto all = default_criteria();
    const auto& nilai = criterion(all, "C1");
    const auto& income = criterion(all, "C2");
    const auto& deps = criterion(all, "C3");
    const auto& sem = criterion(all, "C4");

    CHECK(fuzzify(nilai, 39.99) == 2);
    CHECK(fuzzify(nilai, 40) == 4);
    CHECK(fuzzify(nilai, 60) == 6);
    CHECK(fuzzify(nilai, 69) == 6);
    CHECK(fuzzify(nilai, 70) == 8);
    CHECK(fuzzify(nilai, 84) == 8);
    CHECK(fuzzify(nilai, 85) == 10);
    CHECK(fuzzify(nilai, 100) == 10);
    CHECK(fuzzify(nilai, 3.55) == 2);

    CHECK(fuzzify(income, 999'999) == 10);
    CHECK(fuzzify(income, 1'000'000) == 8);
    CHECK(fuzzify(income, 1'500'000) == 8);
    CHECK(fuzzify(income, 2'499'999) == 8);
    CHECK(fuzzify(income, 2'500'000) == 6);
    CHECK(fuzzify(income, 5'000'000) == 4);
    CHECK(fuzzify(income, 50'000'000) == 4);

    CHECK(fuzzify(deps, 1) == 2);
    CHECK(fuzzify(deps, 2) == 4);
    CHECK(fuzzify(deps, 3) == 6);
    CHECK(fuzzify(deps, 4) == 8);
    CHECK(fuzzify(deps, 5) == 10);
    CHECK(fuzzify(deps, 9) == 10);

    CHECK(fuzzify(sem, 2) == 2);
    CHECK(fuzzify(sem, 3) == 4);
    CHECK(fuzzify(sem, 4) == 6);
    CHECK(fuzzify(sem, 5) == 8);
    CHECK(fuzzify(sem, 6) == 10);
}

TEST_CASE("fuzzify rejects values outside the covered domain") {
    const auto all = default_criteria();
    for (double s : {0.0, 1.0, 7.0, 9.0}) {
        CAPTURE(s);
        CHECK_THROWS_AS(fuzzify(criterion(all, "C4"), s), OutOfDomainError);
    }
    CHECK_THROWS_AS(fuzzify(criterion(all, "C3"), 0), OutOfDomainError);
    CHECK_THROWS_AS(fuzzify(criterion(all, "C1"), 100.5), OutOfDomainError);
    CHECK_THROWS_AS(fuzzify(criterion(all, "C1"), -1), OutOfDomainError);
    CHECK_THROWS_AS(fuzzify(criterion(all, "C2"), -1), OutOfDomainError);
    CHECK_THROWS_AS(fuzzify(criterion(all, "C2"), std::nan("")), OutOfDomainError);

    try {
        fuzzify(criterion(all, "C4"), 9, "10145001");
        FAIL("expected OutOfDomainError");
    } catch (const OutOfDomainError& e) {
        CHECK(e.code() == ErrorCode::OutOfDomain);
        CHECK(e.alternative_id() == "10145001");
        CHECK(e.criterion_id() == "C4");
        CHECK(e.raw() == 9);
    }
}

TEST_CASE("boundary scan agrees with an independent transcription of the tables") {
    const auto all = default_criteria();
    using OracleFn = int (*)(double);
    const std::pair<std::string, OracleFn> pairs[] = {
        {"C1", oracle::nilai}, {"C2", oracle::penghasilan}, {"C3", oracle::tanggungan}, {"C4", oracle::semester}};

    for (const auto& [id, expected] : pairs) {
        const auto& c = criterion(all, id);
        std::set<double> probes;
        for (const auto& e : c.table.entries) {
            for (double b : {e.lower, e.upper.value_or(e.lower * 2 + 10)}) {
                probes.insert(b);
                probes.insert(std::nextafter(b, -1e18));
                probes.insert(std::nextafter(b, 1e18));
                probes.insert(b - 0.5);
                probes.insert(b + 0.5);
            }
        }
        for (double raw : probes) {
            CAPTURE(id);
            CAPTURE(raw);
            const int want = expected(raw);
            const auto got = c.table.lookup(raw);
            if (want == 0) {
                CHECK_FALSE(got.has_value());
            } else {
                REQUIRE(got.has_value());
                CHECK(*got == want);
            }
        }
    }
}
