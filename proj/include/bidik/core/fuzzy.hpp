#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bidik {

/// The five-level fuzzy scale: SR=2, R=4, CT=6, T=8, ST=10.
enum class FuzzyLevel { SR, R, CT, T, ST };

int crisp_value(FuzzyLevel level) noexcept;
std::optional<FuzzyLevel> level_from_crisp(int crisp) noexcept;
bool is_legal_crisp(int crisp) noexcept;
std::string_view level_name(FuzzyLevel level) noexcept;

/// One row of a conversion table. Half-open [lower, upper); a missing upper
/// means unbounded, and upper_inclusive closes the interval at its upper end.
struct Interval {
    double lower = 0.0;
    std::optional<double> upper;
    int crisp = 0;
    bool upper_inclusive = false;

    bool contains(double raw) const noexcept;
    bool operator==(const Interval&) const = default;
};

/// Admissible range of raw values a table must cover.
struct Domain {
    double lower = 0.0;
    std::optional<double> upper;
    bool upper_inclusive = false;

    bool operator==(const Domain&) const = default;
};

struct ConversionTable {
    std::vector<Interval> entries;
    std::string domain_unit;

    /// Tightest domain spanned by the entries (first lower to last upper).
    Domain hull() const;

    /// Crisp value of the unique entry containing raw, if any.
    std::optional<int> lookup(double raw) const noexcept;

    bool operator==(const ConversionTable&) const = default;
};

enum class TableIssueKind { Unsorted, EmptyInterval, Overlap, Gap, IllegalCrisp };

std::string_view to_string(TableIssueKind kind);

struct TableIssue {
    TableIssueKind kind;
    double lower = 0.0;
    std::optional<double> upper;
    std::string message;
};

using TableReport = std::vector<TableIssue>;

/// Reports every gap, overlap, unsorted pair, and illegal crisp value of
/// table over domain. An empty report means the table is usable.
TableReport validate_table(const ConversionTable& table, const Domain& domain);

}  // namespace bidik
