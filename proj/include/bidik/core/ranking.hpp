#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bidik/core/matrix.hpp"

namespace bidik {

/// Scores closer than this are treated as tied.
inline constexpr double kScoreTieTolerance = 1e-12;

struct RankEntry {
    std::string id;
    double score = 0.0;
    int rank = 0;
    /// Set when this entry's position relative to the previous one was decided
    /// by the tie rule rather than by score.
    bool tie_break_applied = false;

    bool operator==(const RankEntry&) const = default;
};

struct Ranking {
    std::vector<RankEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    /// 1-based rank of id, or 0 when absent.
    int rank_of(const std::string& id) const;

    bool operator==(const Ranking&) const = default;
};

/// Total order: score descending; scores within 1e-12 of each other (chained)
/// form a tie group ordered by tie_key descending, then id ascending.
/// tie_key is the C1 crisp score in the default pipeline.
Ranking rank(std::span<const double> scores, std::span<const std::string> ids, std::span<const double> tie_key);

/// Uses column 0 of matrix as the tie key and its row ids as identities.
Ranking rank(std::span<const double> scores, const DecisionMatrix& matrix);

/// First min(quota, n) entries of ranking, in rank order.
std::vector<RankEntry> select(const Ranking& ranking, std::size_t quota);

}  // namespace bidik
