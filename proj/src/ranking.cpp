#include "t2hflts/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "t2hflts/errors.hpp"
#include "t2hflts/typered.hpp"

namespace t2h {

CentroidRanking centroid_rank(const std::vector<SampledFOU>& row, double tie_tol) {
    if (row.empty()) throw ValidationError("nothing to rank");
    const int m = int(row.size());
    std::vector<double> centers(row.size());
    for (int a = 0; a < m; ++a) {
        auto [lo, hi] = ekm_centroid(row[std::size_t(a)]);
        centers[std::size_t(a)] = 0.5 * (lo + hi);
    }
    CentroidRanking out;
    out.order.resize(std::size_t(m));
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        if (std::fabs(centers[std::size_t(a)] - centers[std::size_t(b)]) <= tie_tol)
            return a < b;
        return centers[std::size_t(a)] > centers[std::size_t(b)];
    });
    out.centers.reserve(std::size_t(m));
    out.tied.reserve(std::size_t(m));
    for (int k = 0; k < m; ++k) {
        const double c = centers[std::size_t(out.order[std::size_t(k)])];
        out.tied.push_back(k > 0 && std::fabs(c - out.centers.back()) <= tie_tol);
        out.centers.push_back(c);
    }
    return out;
}

void RankMatrix::validate(int m) const {
    if (rows.empty()) throw ValidationError("rank matrix has no rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != m)
            throw ValidationError("rank matrix row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(m));
        std::vector<bool> seen(std::size_t(m), false);
        for (int alt : rows[i]) {
            if (alt < 0 || alt >= m || seen[std::size_t(alt)])
                throw ValidationError("rank matrix row " + std::to_string(i + 1) +
                                      " is not a permutation of the alternatives");
            seen[std::size_t(alt)] = true;
        }
    }
}

double linear_priority(int rank, int m) { return double(m + 1 - rank); }

ScoreTable score(const RankMatrix& r, const std::vector<double>& dmr_weights, int m,
                 const PriorityFn& priority) {
    r.validate(m);
    if (dmr_weights.size() != r.rows.size())
        throw ValidationError("one weight per DMR required");
    const double wsum = std::accumulate(dmr_weights.begin(), dmr_weights.end(), 0.0);
    if (std::fabs(wsum - 1.0) > 1e-9)
        throw ValidationError("DMR weights sum to " + std::to_string(wsum) +
                              ", expected 1");

    ScoreTable table;
    table.entries.resize(std::size_t(m));
    for (int alt = 0; alt < m; ++alt) {
        ScoreEntry& e = table.entries[std::size_t(alt)];
        e.alt = alt;
        // mean DMR weight per rank position this alternative reached
        for (int rank = 1; rank <= m; ++rank) {
            double acc = 0.0;
            int hits = 0;
            for (std::size_t d = 0; d < r.rows.size(); ++d) {
                if (r.rows[d][std::size_t(rank - 1)] == alt) {
                    acc += dmr_weights[d];
                    ++hits;
                }
            }
            if (hits > 0) e.contributions.emplace_back(rank, acc / double(hits));
        }
        double num = 0.0, den = 0.0;
        for (const auto& [rank, c] : e.contributions) {
            num += priority(rank, m) * c;
            den += c;
        }
        if (den <= 0.0)
            throw ValidationError("alternative " + std::to_string(alt + 1) +
                                  " never appears in the rank matrix");
        e.score = num / den;
    }
    return table;
}

FinalRanking final_ranking(const ScoreTable& table, double tie_tol) {
    const int m = int(table.entries.size());
    if (m == 0) throw ValidationError("empty score table");
    FinalRanking out;
    out.order.resize(std::size_t(m));
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        const double sa = table.entries[std::size_t(a)].score;
        const double sb = table.entries[std::size_t(b)].score;
        if (std::fabs(sa - sb) <= tie_tol) return a < b;
        return sa > sb;
    });
    for (int k = 0; k < m; ++k) {
        const double s = table.entries[std::size_t(out.order[std::size_t(k)])].score;
        out.tied.push_back(k > 0 && std::fabs(s - out.scores.back()) <= tie_tol);
        out.scores.push_back(s);
    }
    return out;
}

}  // namespace t2h
