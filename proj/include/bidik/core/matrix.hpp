#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bidik/core/criteria.hpp"

namespace bidik {

/// Raw attribute values of one alternative, aligned to a criteria list.
struct Alternative {
    std::string id;
    std::vector<double> raw;
};

/// Row-major alternatives x criteria grid with row and column identities.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::vector<std::string> alternatives, std::vector<std::string> criteria);
    Matrix(std::vector<std::string> alternatives, std::vector<std::string> criteria,
           std::vector<std::vector<double>> rows);

    std::size_t rows() const noexcept { return alternatives_.size(); }
    std::size_t cols() const noexcept { return criteria_.size(); }
    bool empty() const noexcept { return alternatives_.empty(); }

    const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
    const std::vector<std::string>& criteria() const noexcept { return criteria_; }

    double operator()(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }
    double& operator()(std::size_t i, std::size_t j) { return cells_[i * cols() + j]; }

    std::span<const double> row(std::size_t i) const { return {cells_.data() + i * cols(), cols()}; }
    std::vector<double> column(std::size_t j) const;
    std::vector<std::vector<double>> to_rows() const;

    void append_row(std::string alternative, std::span<const double> values);

    bool operator==(const Matrix&) const = default;

private:
    std::vector<std::string> alternatives_;
    std::vector<std::string> criteria_;
    std::vector<double> cells_;
};

/// Crisp scores x_ij.
using DecisionMatrix = Matrix;
/// Ratings r_ij in (0, 1].
using NormalizedMatrix = Matrix;

/// x_ij = fuzzify(C_j, raw_ij), rows in input order. Propagates
/// OutOfDomainError naming the offending alternative and criterion.
DecisionMatrix build_matrix(std::span<const Alternative> alternatives, std::span<const CriterionSpec> criteria);

/// Benefit column: r = x / max(x). Cost column: r = min(x) / x.
/// Throws DegenerateColumn when a column holds a non-positive or non-finite cell,
/// DimensionMismatch when the criteria do not line up with the columns.
NormalizedMatrix normalize(const DecisionMatrix& matrix, std::span<const CriterionSpec> criteria);

/// V_i = sum_j w_j * r_ij, accumulated in column order.
std::vector<double> weighted_sum(const NormalizedMatrix& normalized, const WeightVector& w);

}  // namespace bidik
