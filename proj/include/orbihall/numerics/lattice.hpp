#pragma once

/**
 * @file lattice.hpp
 * @brief Square-lattice magnetic Laplacian on an N x N torus.
 *
 * All Peierls phases are integers modulo N^2, in units of 2 pi / N^2, so that
 * flux bookkeeping and the symmetry lift in symmetry.hpp are exact. A uniform
 * flux of N_phi quanta gives every plaquette the phase N_phi.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include "orbihall/rational.hpp"

namespace orbihall::numerics {

using cplx = std::complex<double>;

enum class Gauge {
  landau_x,  // y-hops carry the vector potential, boundary twist on the x wrap
  landau_y,  // x-hops carry the vector potential, boundary twist on the y wrap
};

enum class Symmetry { none, inversion };

struct LatticeModel {
  int N = 4;
  std::int64_t flux_quanta = 1;
  Gauge gauge = Gauge::landau_x;
  Symmetry symmetry = Symmetry::inversion;
  /// Extra Aharonov-Bohm phases on the wrap-around links, units of 2 pi / N^2.
  std::int64_t twist_x = 0;
  std::int64_t twist_y = 0;

  std::int64_t phase_modulus() const { return static_cast<std::int64_t>(N) * N; }
  int dimension() const { return N * N; }
  int site(int x, int y) const { return x + N * y; }
  double flux_per_plaquette() const { return static_cast<double>(flux_quanta) / static_cast<double>(phase_modulus()); }
};

/// Enforces N >= 4, 1 <= N_phi < N^2/4 when `weak_field` is set, and
/// 0 <= N_phi < N^2 otherwise. Throws InvalidInput.
LatticeModel make_lattice_model(int N, std::int64_t flux_quanta, Gauge gauge = Gauge::landau_x,
                                Symmetry symmetry = Symmetry::inversion, bool weak_field = true);

/// Model with a given flux per plaquette; throws FluxInconsistency when
/// phi * N^2 is not an integer (the wrap-around phases could not close).
LatticeModel model_from_plaquette_flux(int N, const Rational& phi, Gauge gauge = Gauge::landau_x);

/// A directed hop: the matrix element H[to, from] = -exp(2 pi i phase / N^2).
struct Link {
  int from = 0;
  int to = 0;
  std::int64_t phase = 0;
};

/// The 2 N^2 positively oriented links (+x and +y hops).
std::vector<Link> lattice_links(const LatticeModel& M);

/// Sum of link phases around the plaquette with lower-left corner (x, y).
std::int64_t plaquette_phase(const LatticeModel& M, const std::vector<Link>& links, int x, int y);

/// Sparse Hermitian matrix in compressed-row form.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  HermitianOperator(int dimension, std::vector<int> row_ptr, std::vector<int> cols, std::vector<cplx> values);

  int dimension() const noexcept { return n_; }
  const std::vector<int>& row_ptr() const noexcept { return row_ptr_; }
  const std::vector<int>& cols() const noexcept { return cols_; }
  const std::vector<cplx>& values() const noexcept { return values_; }

  /// Entry lookup, zero when absent.
  cplx at(int row, int col) const;
  /// max |H_ij - conj(H_ji)|.
  double hermiticity_defect() const;
  /// Gershgorin bound on the spectrum: max_i sum_j |H_ij|.
  double gershgorin_bound() const;

  static HermitianOperator from_dense_diagonal(const std::vector<double>& diag);

 private:
  int n_ = 0;
  std::vector<int> row_ptr_{0};
  std::vector<int> cols_;
  std::vector<cplx> values_;
};

/// H = 4 I - sum of Peierls-phased nearest-neighbour hops. Certifies every
/// plaquette phase and throws FluxInconsistency if one is off.
HermitianOperator build_magnetic_laplacian(const LatticeModel& M);

cplx phase_to_complex(std::int64_t phase, std::int64_t modulus);

}  // namespace orbihall::numerics
