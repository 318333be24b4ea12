#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bidik/core/fuzzy.hpp"

namespace bidik {

enum class CriterionKind { Benefit, Cost };

std::string_view to_string(CriterionKind kind);
std::optional<CriterionKind> parse_criterion_kind(std::string_view text);

/// One criterion C_j with its conversion table and weight.
///
/// `field` names the applicant attribute the criterion reads (nilai,
/// penghasilan, tanggungan, semester). `domain` is the admissible raw range
/// the table is validated against; when absent the table's own hull is used.
struct CriterionSpec {
    std::string id;
    std::string name;
    CriterionKind kind = CriterionKind::Benefit;
    ConversionTable table;
    double weight = 0.0;
    std::string field;
    std::optional<Domain> domain;

    Domain effective_domain() const { return domain.value_or(table.hull()); }

    bool operator==(const CriterionSpec&) const = default;
};

inline constexpr double kWeightSumTolerance = 1e-9;

class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {}

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t j) const { return weights_[j]; }
    std::span<const double> values() const noexcept { return weights_; }
    double sum() const noexcept;

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<double> weights_;
};

/// Human-readable violations; empty iff every weight is >= 0 and the sum is 1 within 1e-9.
std::vector<std::string> validate_weights(const WeightVector& w);

/// Throws Error(InvalidWeights) carrying the joined report when w is invalid.
void require_valid_weights(const WeightVector& w);

WeightVector weights_of(std::span<const CriterionSpec> criteria);

/// Copy of criteria with weights replaced by w; sizes must agree.
std::vector<CriterionSpec> with_weights(std::span<const CriterionSpec> criteria, const WeightVector& w);

/// Crisp score for raw under the criterion's table. Throws OutOfDomainError
/// when raw falls in no interval; alternative_id is attached to the error.
int fuzzify(const CriterionSpec& criterion, double raw, const std::string& alternative_id = {});

/// Problems across a whole criteria set: duplicate ids, table issues, weight issues.
std::vector<std::string> validate_criteria(std::span<const CriterionSpec> criteria);

/// The built-in scholarship criteria:
///   C1 Nilai        [0,40)=2 [40,60)=4 [60,70)=6 [70,85)=8 [85,100]=10   w=0.40
///   C2 Penghasilan  [0,1e6)=10 [1e6,2.5e6)=8 [2.5e6,5e6)=6 [5e6,inf)=4   w=0.30
///   C3 Tanggungan   [1,2)=2 [2,3)=4 [3,4)=6 [4,5)=8 [5,inf)=10           w=0.10
///   C4 Semester     [2,3)=2 [3,4)=4 [4,5)=6 [5,6)=8 [6,7)=10             w=0.20
/// All four are benefit criteria; the income table already maps low income to high scores.
std::vector<CriterionSpec> default_criteria();

WeightVector default_weights();

}  // namespace bidik
