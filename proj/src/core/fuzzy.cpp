#include "bidik/core/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bidik/core/format.hpp"

namespace bidik {

int crisp_value(FuzzyLevel level) noexcept {
    switch (level) {
        case FuzzyLevel::SR: return 2;
        case FuzzyLevel::R: return 4;
        case FuzzyLevel::CT: return 6;
        case FuzzyLevel::T: return 8;
        case FuzzyLevel::ST: return 10;
    }
    return 0;
}

std::optional<FuzzyLevel> level_from_crisp(int crisp) noexcept {
    switch (crisp) {
        case 2: return FuzzyLevel::SR;
        case 4: return FuzzyLevel::R;
        case 6: return FuzzyLevel::CT;
        case 8: return FuzzyLevel::T;
        case 10: return FuzzyLevel::ST;
        default: return std::nullopt;
    }
}

bool is_legal_crisp(int crisp) noexcept { return level_from_crisp(crisp).has_value(); }

std::string_view level_name(FuzzyLevel level) noexcept {
    switch (level) {
        case FuzzyLevel::SR: return "SR";
        case FuzzyLevel::R: return "R";
        case FuzzyLevel::CT: return "CT";
        case FuzzyLevel::T: return "T";
        case FuzzyLevel::ST: return "ST";
    }
    return "?";
}

bool Interval::contains(double raw) const noexcept {
    if (std::isnan(raw) || raw < lower) {
        return false;
    }
    if (!upper) {
        return true;
    }
    return upper_inclusive ? raw <= *upper : raw < *upper;
}

Domain ConversionTable::hull() const {
    if (entries.empty()) {
        return {};
    }
    Domain d;
    d.lower = entries.front().lower;
    d.upper = entries.front().upper;
    d.upper_inclusive = entries.front().upper_inclusive;
    for (const auto& e : entries) {
        d.lower = std::min(d.lower, e.lower);
        if (!d.upper) {
            continue;
        }
        if (!e.upper) {
            d.upper.reset();
            d.upper_inclusive = false;
        } else if (*e.upper > *d.upper) {
            d.upper = e.upper;
            d.upper_inclusive = e.upper_inclusive;
        } else if (*e.upper == *d.upper) {
            d.upper_inclusive = d.upper_inclusive || e.upper_inclusive;
        }
    }
    return d;
}

std::optional<int> ConversionTable::lookup(double raw) const noexcept {
    for (const auto& e : entries) {
        if (e.contains(raw)) {
            return e.crisp;
        }
    }
    return std::nullopt;
}

std::string_view to_string(TableIssueKind kind) {
    switch (kind) {
        case TableIssueKind::Unsorted: return "unsorted";
        case TableIssueKind::EmptyInterval: return "empty-interval";
        case TableIssueKind::Overlap: return "overlap";
        case TableIssueKind::Gap: return "gap";
        case TableIssueKind::IllegalCrisp: return "illegal-crisp";
    }
    return "?";
}

namespace {

std::string range_text(double lower, std::optional<double> upper, bool upper_inclusive) {
    std::ostringstream os;
    os << '[' << format_number(lower) << ", ";
    if (upper) {
        os << format_number(*upper) << (upper_inclusive ? ']' : ')');
    } else {
        os << "inf)";
    }
    return os.str();
}

TableIssue make_issue(TableIssueKind kind, double lower, std::optional<double> upper,
                      bool upper_inclusive, const std::string& detail = {}) {
    std::string msg = std::string(to_string(kind)) + " at " + range_text(lower, upper, upper_inclusive);
    if (!detail.empty()) {
        msg += ": " + detail;
    }
    return TableIssue{kind, lower, upper, std::move(msg)};
}

}  // namespace

TableReport validate_table(const ConversionTable& table, const Domain& domain) {
    TableReport report;
    const auto& entries = table.entries;

    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (i > 0 && e.lower < entries[i - 1].lower) {
            report.push_back(make_issue(TableIssueKind::Unsorted, e.lower, e.upper, e.upper_inclusive,
                                        "entry " + std::to_string(i) + " starts before entry " +
                                            std::to_string(i - 1)));
        }
        if (e.upper && (*e.upper < e.lower || (*e.upper == e.lower && !e.upper_inclusive))) {
            report.push_back(make_issue(TableIssueKind::EmptyInterval, e.lower, e.upper, e.upper_inclusive));
        }
        if (!is_legal_crisp(e.crisp)) {
            report.push_back(make_issue(TableIssueKind::IllegalCrisp, e.lower, e.upper, e.upper_inclusive,
                                        "crisp " + std::to_string(e.crisp) + " is not in {2,4,6,8,10}"));
        }
    }

    std::vector<Interval> sorted = entries;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Interval& a, const Interval& b) { return a.lower < b.lower; });

    // Coverage sweep. reach == nullopt means coverage already extends to +inf.
    std::optional<double> reach = domain.lower;
    bool reach_inclusive = false;
    bool covered_any = false;

    for (const auto& e : sorted) {
        if (covered_any) {
            if (!reach) {
                report.push_back(make_issue(TableIssueKind::Overlap, e.lower, e.upper, e.upper_inclusive));
                continue;
            }
            if (e.lower < *reach || (e.lower == *reach && reach_inclusive)) {
                std::optional<double> hi = reach;
                bool hi_inclusive = reach_inclusive;
                if (e.upper && *e.upper < *reach) {
                    hi = e.upper;
                    hi_inclusive = e.upper_inclusive;
                }
                report.push_back(make_issue(TableIssueKind::Overlap, e.lower, hi, hi_inclusive));
            }
        }
        if (reach && e.lower > *reach) {
            const double lo = std::max(*reach, domain.lower);
            double hi = e.lower;
            if (domain.upper) {
                hi = std::min(hi, *domain.upper);
            }
            if (lo < hi) {
                report.push_back(make_issue(TableIssueKind::Gap, lo, hi, false));
            }
        }
        if (reach) {
            if (!e.upper) {
                reach.reset();
                reach_inclusive = false;
            } else if (!covered_any || *e.upper > *reach) {
                reach = e.upper;
                reach_inclusive = e.upper_inclusive;
            } else if (*e.upper == *reach) {
                reach_inclusive = reach_inclusive || e.upper_inclusive;
            }
        }
        covered_any = true;
    }

    if (!covered_any) {
        report.push_back(make_issue(TableIssueKind::Gap, domain.lower, domain.upper, domain.upper_inclusive,
                                    "table has no entries"));
        return report;
    }
    if (reach) {
        if (!domain.upper) {
            report.push_back(make_issue(TableIssueKind::Gap, *reach, std::nullopt, false));
        } else if (*reach < *domain.upper) {
            report.push_back(make_issue(TableIssueKind::Gap, *reach, domain.upper, domain.upper_inclusive));
        } else if (*reach == *domain.upper && domain.upper_inclusive && !reach_inclusive) {
            report.push_back(make_issue(TableIssueKind::Gap, *reach, reach, true));
        }
    }
    return report;
}

}  // namespace bidik
