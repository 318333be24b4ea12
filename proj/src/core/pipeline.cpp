#include "bidik/core/pipeline.hpp"

#include "bidik/core/error.hpp"

namespace bidik {

Screening screen(std::span<const Alternative> alternatives, std::span<const CriterionSpec> criteria) {
    Screening out;
    std::vector<std::string> ids;
    for (const auto& c : criteria) {
        ids.push_back(c.id);
    }
    out.crisp = DecisionMatrix({}, std::move(ids));

    for (const auto& alt : alternatives) {
        try {
            auto row = build_matrix(std::span(&alt, 1), criteria);
            out.crisp.append_row(alt.id, row.row(0));
        } catch (const OutOfDomainError& e) {
            out.ineligible.push_back(Ineligible{alt.id, e.criterion_id(), e.raw(), e.what()});
        }
    }
    return out;
}

Evaluation evaluate(std::span<const Alternative> alternatives, std::span<const CriterionSpec> criteria,
                    const WeightVector& weights, std::optional<std::size_t> quota) {
    if (weights.size() != criteria.size()) {
        throw Error(ErrorCode::DimensionMismatch, "weight vector has " + std::to_string(weights.size()) +
                                                      " entries for " + std::to_string(criteria.size()) +
                                                      " criteria");
    }
    require_valid_weights(weights);

    Evaluation ev;
    auto screened = screen(alternatives, criteria);
    ev.crisp = std::move(screened.crisp);
    ev.ineligible = std::move(screened.ineligible);
    ev.normalized = NormalizedMatrix(ev.crisp.alternatives(), ev.crisp.criteria());
    if (ev.crisp.empty()) {
        return ev;
    }
    ev.normalized = normalize(ev.crisp, criteria);
    ev.scores = weighted_sum(ev.normalized, weights);
    ev.ranking = rank(ev.scores, ev.crisp);
    ev.recipients = select(ev.ranking, quota.value_or(ev.ranking.size()));
    return ev;
}

}  // namespace bidik
