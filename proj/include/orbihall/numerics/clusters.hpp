#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace orbihall::numerics {

struct LevelCluster {
  double mean_energy = 0.0;
  std::vector<double> members;
  int first = 0;  // index of the first member in the eigenvalue list
  int degeneracy = 0;
  /// The last cluster of a truncated spectrum may be missing members.
  bool complete = true;
  std::optional<std::pair<int, int>> isotypic_split;  // (even, odd)
};

inline constexpr double kDefaultGapTol = 10.0;
inline constexpr double kDefaultGapFloor = 1e-9;

/// Splits an ascending eigenvalue list into near-degenerate clusters.
///
/// A gap separates two clusters when it exceeds gap_tol times (the largest
/// gap kept inside a cluster + floor). The boundary set is the coarsest one
/// with that property. When all gaps are below gap_tol * floor the list is a
/// single cluster. Throws AmbiguousClustering if no such separation exists or
/// if a within-cluster gap exceeds half the smallest between-cluster gap.
/// The last cluster is marked incomplete when `truncated` is set.
std::vector<LevelCluster> landau_level_clusters(std::span<const double> evals, double gap_tol = kDefaultGapTol,
                                                double floor = kDefaultGapFloor, bool truncated = true);

}  // namespace orbihall::numerics
