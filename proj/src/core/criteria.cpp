#include "bidik/core/criteria.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "bidik/core/error.hpp"
#include "bidik/core/format.hpp"

namespace bidik {

std::string_view to_string(CriterionKind kind) {
    return kind == CriterionKind::Benefit ? "benefit" : "cost";
}

std::optional<CriterionKind> parse_criterion_kind(std::string_view text) {
    if (text == "benefit") {
        return CriterionKind::Benefit;
    }
    if (text == "cost") {
        return CriterionKind::Cost;
    }
    return std::nullopt;
}

double WeightVector::sum() const noexcept {
    double s = 0.0;
    for (double w : weights_) {
        s += w;
    }
    return s;
}

std::vector<std::string> validate_weights(const WeightVector& w) {
    std::vector<std::string> report;
    if (w.size() == 0) {
        report.emplace_back("weight vector is empty");
        return report;
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (!std::isfinite(w[j])) {
            report.push_back("weight " + std::to_string(j + 1) + " is not finite");
        } else if (w[j] < 0.0) {
            report.push_back("weight " + std::to_string(j + 1) + " is negative (" + format_number(w[j]) + ")");
        }
    }
    const double s = w.sum();
    if (!(std::abs(s - 1.0) <= kWeightSumTolerance)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", s);
        report.push_back(std::string("weights sum to ") + buf + ", expected 1");
    }
    return report;
}

void require_valid_weights(const WeightVector& w) {
    auto report = validate_weights(w);
    if (report.empty()) {
        return;
    }
    std::string msg = "invalid weights: ";
    for (std::size_t i = 0; i < report.size(); ++i) {
        msg += (i ? "; " : "") + report[i];
    }
    throw Error(ErrorCode::InvalidWeights, msg);
}

WeightVector weights_of(std::span<const CriterionSpec> criteria) {
    std::vector<double> w;
    w.reserve(criteria.size());
    for (const auto& c : criteria) {
        w.push_back(c.weight);
    }
    return WeightVector(std::move(w));
}

std::vector<CriterionSpec> with_weights(std::span<const CriterionSpec> criteria, const WeightVector& w) {
    if (w.size() != criteria.size()) {
        throw Error(ErrorCode::DimensionMismatch, "weight vector has " + std::to_string(w.size()) +
                                                      " entries for " + std::to_string(criteria.size()) +
                                                      " criteria");
    }
    std::vector<CriterionSpec> out(criteria.begin(), criteria.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j].weight = w[j];
    }
    return out;
}

int fuzzify(const CriterionSpec& criterion, double raw, const std::string& alternative_id) {
    if (auto crisp = criterion.table.lookup(raw)) {
        return *crisp;
    }
    std::string who = alternative_id.empty() ? std::string{} : alternative_id + ": ";
    throw OutOfDomainError(alternative_id, criterion.id, raw,
                           who + criterion.id + " (" + criterion.name + ") value " + format_number(raw) +
                               " is outside the conversion table");
}

std::vector<std::string> validate_criteria(std::span<const CriterionSpec> criteria) {
    std::vector<std::string> report;
    if (criteria.empty()) {
        report.emplace_back("no criteria defined");
    }
    std::set<std::string> seen;
    for (const auto& c : criteria) {
        if (c.id.empty()) {
            report.emplace_back("criterion with empty id");
        } else if (!seen.insert(c.id).second) {
            report.push_back("duplicate criterion id " + c.id);
        }
        for (const auto& issue : validate_table(c.table, c.effective_domain())) {
            report.push_back(c.id + " (" + c.name + "): " + issue.message);
        }
    }
    for (auto& msg : validate_weights(weights_of(criteria))) {
        report.push_back(std::move(msg));
    }
    return report;
}

namespace {

Interval span_of(double lower, std::optional<double> upper, int crisp, bool upper_inclusive = false) {
    return Interval{lower, upper, crisp, upper_inclusive};
}

}  // namespace

std::vector<CriterionSpec> default_criteria() {
    std::vector<CriterionSpec> c(4);

    c[0].id = "C1";
    c[0].name = "Nilai";
    c[0].field = "nilai";
    c[0].weight = 0.40;
    c[0].table.domain_unit = "score 0-100";
    c[0].table.entries = {span_of(0, 40, 2), span_of(40, 60, 4), span_of(60, 70, 6), span_of(70, 85, 8),
                          span_of(85, 100, 10, true)};
    c[0].domain = Domain{0, 100, true};

    c[1].id = "C2";
    c[1].name = "Penghasilan Orangtua";
    c[1].field = "penghasilan";
    c[1].weight = 0.30;
    c[1].table.domain_unit = "rupiah/month";
    c[1].table.entries = {span_of(0, 1'000'000, 10), span_of(1'000'000, 2'500'000, 8),
                          span_of(2'500'000, 5'000'000, 6), span_of(5'000'000, std::nullopt, 4)};
    c[1].domain = Domain{0, std::nullopt, false};

    c[2].id = "C3";
    c[2].name = "Jumlah Tanggungan Orangtua";
    c[2].field = "tanggungan";
    c[2].weight = 0.10;
    c[2].table.domain_unit = "persons";
    c[2].table.entries = {span_of(1, 2, 2), span_of(2, 3, 4), span_of(3, 4, 6), span_of(4, 5, 8),
                          span_of(5, std::nullopt, 10)};
    c[2].domain = Domain{1, std::nullopt, false};

    c[3].id = "C4";
    c[3].name = "Semester";
    c[3].field = "semester";
    c[3].weight = 0.20;
    c[3].table.domain_unit = "semester index";
    c[3].table.entries = {span_of(2, 3, 2), span_of(3, 4, 4), span_of(4, 5, 6), span_of(5, 6, 8),
                          span_of(6, 7, 10)};
    c[3].domain = Domain{2, 7, false};

    return c;
}

WeightVector default_weights() { return weights_of(default_criteria()); }

}  // namespace bidik
