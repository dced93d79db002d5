#pragma once

#include "cag/circle.hpp"

#include <string>
#include <vector>

namespace cag {

/// Result of the minimum circular cover computation. rho == 0 exactly
/// when the family does not cover the circle; otherwise the witness is
/// a covering subfamily of minimum size.
struct CoverResult {
    int rho = 0;
    std::vector<int> witness;              // arc indices, in greedy order
    std::vector<std::string> witness_labels;
};

/// Minimum number of arcs whose union is the whole circle.
///
/// If some arc is the full circle the answer is 1. Otherwise every seed
/// arc is tried in turn: walk counterclockwise from the seed's end,
/// always taking the arc that reaches farthest, until the covered range
/// wraps around to the seed's start. The greedy walk is optimal for a
/// fixed seed, and the true minimum uses some arc, hence the minimum
/// over seeds is exact. Ties go to the lowest arc index.
CoverResult rho(const ArcFamily& fam);

/// Exhaustive minimum over all covering subfamilies. Refuses families
/// with more than 20 arcs (size_limit_error).
int rho_oracle(const ArcFamily& fam);

/// Every covering subfamily of size rho (index sets, each sorted).
/// Empty when the family does not cover. Refuses when the number of
/// size-rho subsets exceeds a sane enumeration budget.
std::vector<std::vector<int>> minimal_total_sets(const ArcFamily& fam);

}  // namespace cag
