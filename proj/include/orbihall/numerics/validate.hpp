#pragma once

#include <cstdint>
#include <vector>

#include "orbihall/numerics/eigensolver.hpp"
#include "orbihall/orbifold.hpp"

namespace orbihall::numerics {

struct ClusterSummary {
  double mean_energy = 0.0;
  int degeneracy = 0;
  int even = 0;
  int odd = 0;
};

struct PillowcasePrediction {
  std::vector<double> energies;          // E_l for l = 0, 1, 2
  std::int64_t degeneracy = 0;           // torus Landau degeneracy from the |G| = 1 ladder
  std::vector<std::int64_t> even;        // M_l for d = (0,0,0,0)
  std::vector<std::int64_t> odd;         // M_l for d = (1,1,1,1)
};

struct ValidationReport {
  int N = 0;
  std::int64_t flux_quanta = 0;
  std::vector<ClusterSummary> clusters;
  PillowcasePrediction predicted;
  std::vector<double> relative_errors;
  std::vector<double> eigenvalues;
  double commutator_norm = 0.0;
  int eigensolver_iterations = 0;
  bool degeneracies_match = false;
  bool isotypic_match = false;
  bool pass = false;
};

inline constexpr int kValidatedLevels = 3;
inline constexpr double kGroundEnergyTolerance = 0.05;

/// The pillowcase T^2 / Z_2: genus 0 with four cone points of order 2.
OrbifoldSurface pillowcase();

/// Analytic ladder predictions for a pillowcase cover carrying flux_quanta quanta.
PillowcasePrediction predict_pillowcase(int N, std::int64_t flux_quanta);

/// End-to-end comparison of the analytic ladder with the lattice spectrum.
/// Throws InvalidInput for odd flux or a lattice outside the weak-field range.
ValidationReport validate_pillowcase(int N, std::int64_t flux_quanta, const EigensolverOptions& options = {});

}  // namespace orbihall::numerics
