#include "bidik/core/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bidik/core/error.hpp"

namespace bidik {

int Ranking::rank_of(const std::string& id) const {
    for (const auto& e : entries) {
        if (e.id == id) {
            return e.rank;
        }
    }
    return 0;
}

Ranking rank(std::span<const double> scores, std::span<const std::string> ids, std::span<const double> tie_key) {
    const std::size_t n = scores.size();
    if (ids.size() != n || tie_key.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "rank: scores, ids and tie keys differ in length");
    }
    for (double s : scores) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("rank: scores must be finite");
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) {
            return scores[a] > scores[b];
        }
        return ids[a] < ids[b];
    });

    // Tie groups are maximal runs whose neighbouring scores differ by at most the tolerance.
    const auto tie_less = [&](std::size_t a, std::size_t b) {
        if (tie_key[a] != tie_key[b]) {
            return tie_key[a] > tie_key[b];
        }
        return ids[a] < ids[b];
    };
    std::vector<bool> tied_with_previous(n, false);
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && std::abs(scores[order[end - 1]] - scores[order[end]]) <= kScoreTieTolerance) {
            tied_with_previous[end] = true;
            ++end;
        }
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                  order.begin() + static_cast<std::ptrdiff_t>(end), tie_less);
        start = end;
    }

    Ranking out;
    out.entries.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t i = order[pos];
        out.entries.push_back(RankEntry{ids[i], scores[i], static_cast<int>(pos + 1), tied_with_previous[pos]});
    }
    return out;
}

Ranking rank(std::span<const double> scores, const DecisionMatrix& matrix) {
    std::vector<double> key = matrix.cols() > 0 ? matrix.column(0) : std::vector<double>(matrix.rows(), 0.0);
    return rank(scores, matrix.alternatives(), key);
}

std::vector<RankEntry> select(const Ranking& ranking, std::size_t quota) {
    const std::size_t k = std::min(quota, ranking.size());
    return {ranking.entries.begin(), ranking.entries.begin() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace bidik
