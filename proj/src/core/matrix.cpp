#include "bidik/core/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "bidik/core/error.hpp"
#include "bidik/core/format.hpp"

namespace bidik {

Matrix::Matrix(std::vector<std::string> alternatives, std::vector<std::string> criteria)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      cells_(alternatives_.size() * criteria_.size(), 0.0) {}

Matrix::Matrix(std::vector<std::string> alternatives, std::vector<std::string> criteria,
               std::vector<std::vector<double>> rows)
    : Matrix(std::move(alternatives), std::move(criteria)) {
    if (rows.size() != alternatives_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(rows.size()) + " rows for " +
                                                      std::to_string(alternatives_.size()) + " alternatives");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols()) {
            throw Error(ErrorCode::DimensionMismatch,
                        "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " cells, expected " + std::to_string(cols()));
        }
        std::copy(rows[i].begin(), rows[i].end(), cells_.begin() + static_cast<std::ptrdiff_t>(i * cols()));
    }
}

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
    std::vector<std::vector<double>> out;
    out.reserve(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

void Matrix::append_row(std::string alternative, std::span<const double> values) {
    if (values.size() != cols()) {
        throw Error(ErrorCode::DimensionMismatch, "row for " + alternative + " has " +
                                                      std::to_string(values.size()) + " cells, expected " +
                                                      std::to_string(cols()));
    }
    alternatives_.push_back(std::move(alternative));
    cells_.insert(cells_.end(), values.begin(), values.end());
}

namespace {

std::vector<std::string> criterion_ids(std::span<const CriterionSpec> criteria) {
    std::vector<std::string> ids;
    ids.reserve(criteria.size());
    for (const auto& c : criteria) {
        ids.push_back(c.id);
    }
    return ids;
}

}  // namespace

DecisionMatrix build_matrix(std::span<const Alternative> alternatives, std::span<const CriterionSpec> criteria) {
    DecisionMatrix m({}, criterion_ids(criteria));
    std::vector<double> row(criteria.size());
    for (const auto& alt : alternatives) {
        if (alt.raw.size() != criteria.size()) {
            throw Error(ErrorCode::DimensionMismatch, alt.id + " supplies " + std::to_string(alt.raw.size()) +
                                                          " values for " + std::to_string(criteria.size()) +
                                                          " criteria");
        }
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            row[j] = fuzzify(criteria[j], alt.raw[j], alt.id);
        }
        m.append_row(alt.id, row);
    }
    return m;
}

NormalizedMatrix normalize(const DecisionMatrix& matrix, std::span<const CriterionSpec> criteria) {
    if (criteria.size() != matrix.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(matrix.cols()) +
                                                      " columns for " + std::to_string(criteria.size()) +
                                                      " criteria");
    }
    NormalizedMatrix out(matrix.alternatives(), matrix.criteria());
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
        double lo = 0.0;
        double hi = 0.0;
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            const double x = matrix(i, j);
            if (!std::isfinite(x) || x <= 0.0) {
                throw Error(ErrorCode::DegenerateColumn, "column " + matrix.criteria()[j] + " has non-positive cell " +
                                                             format_number(x) + " at " + matrix.alternatives()[i]);
            }
            lo = i == 0 ? x : std::min(lo, x);
            hi = i == 0 ? x : std::max(hi, x);
        }
        const bool benefit = criteria[j].kind == CriterionKind::Benefit;
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            out(i, j) = benefit ? matrix(i, j) / hi : lo / matrix(i, j);
        }
    }
    return out;
}

std::vector<double> weighted_sum(const NormalizedMatrix& normalized, const WeightVector& w) {
    if (w.size() != normalized.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "weight vector has " + std::to_string(w.size()) +
                                                      " entries for " + std::to_string(normalized.cols()) +
                                                      " criteria");
    }
    require_valid_weights(w);
    std::vector<double> scores(normalized.rows(), 0.0);
    for (std::size_t i = 0; i < normalized.rows(); ++i) {
        double v = 0.0;
        for (std::size_t j = 0; j < normalized.cols(); ++j) {
            v += w[j] * normalized(i, j);
        }
        scores[i] = v;
    }
    return scores;
}

}  // namespace bidik
