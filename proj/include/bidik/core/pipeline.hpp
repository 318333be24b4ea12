#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bidik/core/criteria.hpp"
#include "bidik/core/matrix.hpp"
#include "bidik/core/ranking.hpp"

namespace bidik {

/// An alternative rejected during fuzzification, with the first criterion it failed.
struct Ineligible {
    std::string id;
    std::string criterion_id;
    double raw = 0.0;
    std::string reason;

    bool operator==(const Ineligible&) const = default;
};

struct Screening {
    DecisionMatrix crisp;
    std::vector<Ineligible> ineligible;
};

/// Fuzzifies every alternative; those with any out-of-domain value are set
/// aside instead of aborting the batch. Eligible rows keep input order.
Screening screen(std::span<const Alternative> alternatives, std::span<const CriterionSpec> criteria);

struct Evaluation {
    DecisionMatrix crisp;
    NormalizedMatrix normalized;
    std::vector<double> scores;
    Ranking ranking;
    std::vector<RankEntry> recipients;
    std::vector<Ineligible> ineligible;

    bool operator==(const Evaluation&) const = default;
};

/// screen -> normalize -> weighted_sum -> rank -> select. A missing quota
/// selects every eligible alternative. With no eligible alternative the
/// matrices, scores and ranking are empty.
Evaluation evaluate(std::span<const Alternative> alternatives, std::span<const CriterionSpec> criteria,
                    const WeightVector& weights, std::optional<std::size_t> quota);

}  // namespace bidik
