#include "orbihall/numerics/validate.hpp"

#include <cmath>

#include "orbihall/covers.hpp"
#include "orbihall/error.hpp"
#include "orbihall/numerics/clusters.hpp"
#include "orbihall/numerics/lattice.hpp"
#include "orbihall/numerics/symmetry.hpp"
#include "orbihall/spectra.hpp"

namespace orbihall::numerics {

OrbifoldSurface pillowcase() { return OrbifoldSurface(0, {{"p1", 2}, {"p2", 2}, {"p3", 2}, {"p4", 2}}); }

PillowcasePrediction predict_pillowcase(int N, std::int64_t flux_quanta) {
  if (flux_quanta <= 0 || flux_quanta % 2 != 0) {
    throw Error(ErrorCode::InvalidInput, "pillowcase validation needs a positive even flux, got " + std::to_string(flux_quanta));
  }
  const double area = static_cast<double>(N) * N;
  const OrbifoldSurface Y = pillowcase();
  const GaloisCoverData C = build_cover(Y, 2, area, true);
  const OrbifoldLineBundle even_bundle(Y, flux_quanta / 2, {0, 0, 0, 0});
  const OrbifoldLineBundle odd_bundle(Y, flux_quanta / 2 - 2, {1, 1, 1, 1});
  const SpectralLadder even_ladder = spectral_ladder(even_bundle, C);
  const SpectralLadder odd_ladder = spectral_ladder(odd_bundle, C);

  const OrbifoldSurface torus(1, {});
  const GaloisCoverData identity_cover = build_cover(torus, 1, area, true);
  const OrbifoldLineBundle torus_bundle(torus, flux_quanta, {});

  PillowcasePrediction p;
  p.degeneracy = level_multiplicity(torus_bundle, identity_cover, 0);
  for (int l = 0; l < kValidatedLevels; ++l) {
    p.energies.push_back(even_ladder.levels[static_cast<std::size_t>(l)].energy);
    p.even.push_back(*even_ladder.levels[static_cast<std::size_t>(l)].multiplicity);
    p.odd.push_back(*odd_ladder.levels[static_cast<std::size_t>(l)].multiplicity);
  }
  return p;
}

ValidationReport validate_pillowcase(int N, std::int64_t flux_quanta, const EigensolverOptions& options) {
  ValidationReport report;
  report.N = N;
  report.flux_quanta = flux_quanta;
  report.predicted = predict_pillowcase(N, flux_quanta);

  const LatticeModel M = make_lattice_model(N, flux_quanta, Gauge::landau_x, Symmetry::inversion, true);
  const HermitianOperator H = build_magnetic_laplacian(M);
  const SiteUnitary U = inversion_unitary(M);
  report.commutator_norm = commutator_norm(H, U);

  // enough eigenvalues to close the first kValidatedLevels clusters
  const int k = std::min<int>(M.dimension(), static_cast<int>(kValidatedLevels * flux_quanta + 4));
  const EigenPairs eig = spectrum_lowest(H, k, 1e-10, options);
  report.eigenvalues = eig.values;
  report.eigensolver_iterations = eig.iterations;

  const auto clusters = landau_level_clusters(eig.values);
  bool degeneracies = true;
  bool isotypic = true;
  for (int l = 0; l < kValidatedLevels; ++l) {
    if (l >= static_cast<int>(clusters.size()) || !clusters[static_cast<std::size_t>(l)].complete) {
      degeneracies = isotypic = false;
      break;
    }
    const LevelCluster& c = clusters[static_cast<std::size_t>(l)];
    const auto [even, odd] = isotypic_multiplicities(H, U, eig, c);
    report.clusters.push_back({c.mean_energy, c.degeneracy, even, odd});
    const double predicted = report.predicted.energies[static_cast<std::size_t>(l)];
    report.relative_errors.push_back(std::abs(c.mean_energy - predicted) / predicted);
    degeneracies = degeneracies && c.degeneracy == report.predicted.degeneracy;
    isotypic = isotypic && even == report.predicted.even[static_cast<std::size_t>(l)] &&
               odd == report.predicted.odd[static_cast<std::size_t>(l)];
  }
  report.degeneracies_match = degeneracies;
  report.isotypic_match = isotypic;
  report.pass = degeneracies && isotypic && !report.relative_errors.empty() &&
                report.relative_errors.front() <= kGroundEnergyTolerance;
  return report;
}

}  // namespace orbihall::numerics
