#include "doctest.h"

#include "bidik/core/error.hpp"
#include "bidik/core/pipeline.hpp"
#include "core_properties.hpp"

using namespace bidik;

TEST_CASE("evaluate screens out-of-domain alternatives and ranks the rest") {
    const std::vector<Alternative> alts{
        {"10145001", {3.55, 1'500'000, 4, 4}},
        {"0915110", {3.01, 6'000'000, 4, 6}},
        {"NINE", {3.2, 1'000'000, 2, 9}},
        {"08141156", {3.25, 6'000'000, 4, 4}},
    };
    const auto ev = evaluate(alts, default_criteria(), default_weights(), 2);
    REQUIRE(ev.ineligible.size() == 1);
    CHECK(ev.ineligible[0].id == "NINE");
    CHECK(ev.ineligible[0].criterion_id == "C4");
    CHECK(ev.crisp.to_rows() ==
          std::vector<std::vector<double>>{{2, 8, 8, 6}, {2, 4, 8, 10}, {2, 4, 8, 6}});
    CHECK(std::fabs(ev.scores[0] - 0.92) <= 1e-12);
    CHECK(std::fabs(ev.scores[1] - 0.85) <= 1e-12);
    CHECK(std::fabs(ev.scores[2] - 0.77) <= 1e-12);
    REQUIRE(ev.recipients.size() == 2);
    CHECK(ev.recipients[0].id == "10145001");
    CHECK(ev.recipients[1].id == "0915110");
}

TEST_CASE("evaluate with a what-if weight override") {
    const std::vector<Alternative> alts{
        {"Angga", {3.55, 1'500'000, 4, 4}},
        {"RODIAH", {3.01, 6'000'000, 4, 6}},
        {"SAGA", {3.25, 6'000'000, 4, 4}},
    };
    const auto ev = evaluate(alts, default_criteria(), WeightVector({0.1, 0.1, 0.1, 0.7}), std::nullopt);
    CHECK(std::fabs(ev.scores[0] - 0.72) <= 1e-12);
    CHECK(std::fabs(ev.scores[1] - 0.95) <= 1e-12);
    CHECK(std::fabs(ev.scores[2] - 0.67) <= 1e-12);
    CHECK(ev.ranking.entries[0].id == "RODIAH");
    CHECK(ev.recipients.size() == 3);
}

TEST_CASE("evaluate with nobody eligible returns empty results") {
    const std::vector<Alternative> alts{{"A", {50, 1, 1, 9}}, {"B", {50, 1, 0, 3}}};
    const auto ev = evaluate(alts, default_criteria(), default_weights(), 5);
    CHECK(ev.crisp.empty());
    CHECK(ev.scores.empty());
    CHECK(ev.recipients.empty());
    CHECK(ev.ineligible.size() == 2);
    CHECK(ev.ineligible[1].criterion_id == "C3");
}

TEST_CASE("evaluate validates weights before touching data") {
    CHECK_THROWS_AS(evaluate({}, default_criteria(), WeightVector({0.4, 0.3, 0.1, 0.1}), std::nullopt), Error);
    CHECK_THROWS_AS(evaluate({}, default_criteria(), WeightVector({1.0}), std::nullopt), Error);
}

TEST_CASE("property suite") {
    const int cases = 300;
    for (const auto& r : {props::normalization_range(11, cases), props::scaling_invariance(12, cases),
                          props::permutation_equivariance(13, cases), props::monotonicity(14, cases),
                          props::score_range(15, cases), props::determinism(16, cases),
                          props::oracle_equivalence(17, 1000)}) {
        CAPTURE(r.name);
        CHECK(r.failure == "");
        CHECK(r.cases >= cases);
    }
}
