#include "orbihall/numerics/clusters.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "orbihall/error.hpp"

namespace orbihall::numerics {

std::vector<LevelCluster> landau_level_clusters(std::span<const double> evals, double gap_tol, double floor,
                                                bool truncated) {
  if (evals.empty()) return {};
  for (std::size_t i = 1; i < evals.size(); ++i) {
    if (evals[i] < evals[i - 1]) throw Error(ErrorCode::InvalidInput, "eigenvalues must be ascending");
  }

  std::vector<double> gaps;
  for (std::size_t i = 1; i < evals.size(); ++i) gaps.push_back(evals[i] - evals[i - 1]);

  double threshold = 0.0;  // gaps >= threshold are boundaries; 0 means none
  const double largest = gaps.empty() ? 0.0 : *std::max_element(gaps.begin(), gaps.end());
  if (largest > gap_tol * floor) {
    std::vector<double> sorted = gaps;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    // coarsest split first; at least one gap must stay inside a cluster
    for (std::size_t j = 1; j < sorted.size(); ++j) {
      if (sorted[j - 1] > gap_tol * (sorted[j] + floor)) {
        threshold = sorted[j - 1];
        break;
      }
    }
    if (threshold == 0.0) {
      throw Error(ErrorCode::AmbiguousClustering, "no gap stands out from the within-cluster spacing");
    }
  }

  std::vector<LevelCluster> clusters;
  LevelCluster current;
  double max_inside = 0.0;
  double min_between = -1.0;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    if (i > 0) {
      const double g = gaps[i - 1];
      if (threshold > 0.0 && g >= threshold) {
        clusters.push_back(std::move(current));
        current = LevelCluster{};
        min_between = min_between < 0.0 ? g : std::min(min_between, g);
      } else {
        max_inside = std::max(max_inside, g);
      }
    }
    if (current.members.empty()) current.first = static_cast<int>(i);
    current.members.push_back(evals[i]);
  }
  clusters.push_back(std::move(current));

  if (min_between > 0.0 && max_inside > 0.5 * min_between) {
    std::ostringstream msg;
    msg << "within-cluster gap " << max_inside << " exceeds half the smallest separation " << min_between;
    throw Error(ErrorCode::AmbiguousClustering, msg.str());
  }

  for (auto& c : clusters) {
    c.degeneracy = static_cast<int>(c.members.size());
    double s = 0.0;
    for (double e : c.members) s += e;
    c.mean_energy = s / static_cast<double>(c.degeneracy);
  }
  if (truncated) clusters.back().complete = false;
  return clusters;
}

}  // namespace orbihall::numerics
