#pragma once

#include <functional>
#include <vector>

#include "t2hflts/trapezoid.hpp"

namespace t2h {

struct CentroidRanking {
    std::vector<int> order;       // alternative indices, best first
    std::vector<double> centers;  // centroid midpoints, aligned with order
    std::vector<bool> tied;       // tied[k]: entry k tied with entry k-1
};

// Order a DMR's aggregated FOUs by descending centroid midpoint.  Ties are
// broken by ascending alternative index and flagged.
CentroidRanking centroid_rank(const std::vector<SampledFOU>& row, double tie_tol = 1e-9);

// rows[i][j] = alternative at rank j+1 in DMR i's ordering
struct RankMatrix {
    std::vector<std::vector<int>> rows;

    int dmr_count() const { return int(rows.size()); }
    // every row must be a permutation of 0..m-1
    void validate(int m) const;
};

struct ScoreEntry {
    int alt = 0;
    double score = 0.0;
    // (rank, mean DMR weight at that rank) for each rank the alternative hit
    std::vector<std::pair<int, double>> contributions;
};

struct ScoreTable {
    std::vector<ScoreEntry> entries;  // indexed by alternative
};

// Priority of a rank position; the default is (m+1)-j for rank j.
using PriorityFn = std::function<double(int rank, int m)>;
double linear_priority(int rank, int m);

ScoreTable score(const RankMatrix& r, const std::vector<double>& dmr_weights, int m,
                 const PriorityFn& priority = linear_priority);

struct FinalRanking {
    std::vector<int> order;
    std::vector<double> scores;  // aligned with order
    std::vector<bool> tied;
};

FinalRanking final_ranking(const ScoreTable& table, double tie_tol = 1e-9);

}  // namespace t2h
