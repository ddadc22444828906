#include "orbihall/numerics/symmetry.hpp"

#include <cmath>
#include <deque>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "orbihall/error.hpp"
#include "orbihall/rational.hpp"

namespace orbihall::numerics {

namespace {

struct Neighbour {
  int site;
  std::int64_t phase;  // phase of the hop from the owning site to `site`
};

std::vector<std::vector<Neighbour>> adjacency(const LatticeModel& M) {
  std::vector<std::vector<Neighbour>> adj(static_cast<std::size_t>(M.dimension()));
  for (const Link& l : lattice_links(M)) {
    adj[static_cast<std::size_t>(l.from)].push_back({l.to, l.phase});
    adj[static_cast<std::size_t>(l.to)].push_back({l.from, -l.phase});
  }
  return adj;
}

std::int64_t hop_phase(const std::vector<std::vector<Neighbour>>& adj, int from, int to) {
  for (const auto& nb : adj[static_cast<std::size_t>(from)])
    if (nb.site == to) return nb.phase;
  throw Error(ErrorCode::SymmetryBroken, "site map does not preserve the lattice bonds");
}

}  // namespace

void SiteUnitary::apply(const Block& X, Block& Y) const {
  Y.resize(X.rows(), X.cols());
  std::vector<cplx> w(phase.size());
  for (std::size_t s = 0; s < phase.size(); ++s) w[s] = phase_to_complex(phase[s], modulus);
  for (Eigen::Index j = 0; j < X.cols(); ++j)
    for (std::size_t s = 0; s < image.size(); ++s)
      Y(static_cast<Eigen::Index>(s), j) = w[s] * X(image[s], j);
}

SiteUnitary inversion_unitary(const LatticeModel& M) {
  if (M.symmetry != Symmetry::inversion) throw Error(ErrorCode::InvalidInput, "model does not declare inversion symmetry");
  const int N = M.N;
  const int n = M.dimension();
  const std::int64_t mod = M.phase_modulus();

  SiteUnitary U;
  U.modulus = mod;
  U.image.resize(static_cast<std::size_t>(n));
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x) U.image[static_cast<std::size_t>(M.site(x, y))] = M.site((N - x) % N, (N - y) % N);

  const auto adj = adjacency(M);
  // chi(v) = chi(u) + theta(u -> v) - theta(-u -> -v)
  std::vector<std::int64_t> chi(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int iu = U.image[static_cast<std::size_t>(u)];
    for (const auto& nb : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(nb.site)]) continue;
      const int iv = U.image[static_cast<std::size_t>(nb.site)];
      chi[static_cast<std::size_t>(nb.site)] =
          mod_floor(chi[static_cast<std::size_t>(u)] + nb.phase - hop_phase(adj, iu, iv), mod);
      seen[static_cast<std::size_t>(nb.site)] = 1;
      queue.push_back(nb.site);
    }
  }

  for (int u = 0; u < n; ++u) {
    const int iu = U.image[static_cast<std::size_t>(u)];
    for (const auto& nb : adj[static_cast<std::size_t>(u)]) {
      const int iv = U.image[static_cast<std::size_t>(nb.site)];
      const std::int64_t lhs = mod_floor(nb.phase, mod);
      const std::int64_t rhs =
          mod_floor(chi[static_cast<std::size_t>(nb.site)] - chi[static_cast<std::size_t>(u)] + hop_phase(adj, iu, iv), mod);
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "no gauge phase makes inversion commute with H: bond " << u << " -> " << nb.site
            << " violates the cocycle condition";
        throw Error(ErrorCode::SymmetryBroken, msg.str());
      }
    }
  }
  U.phase = std::move(chi);

  const std::int64_t sq = mod_floor(U.phase[0] + U.phase[static_cast<std::size_t>(U.image[0])], mod);
  for (int s = 0; s < n; ++s) {
    if (mod_floor(U.phase[static_cast<std::size_t>(s)] + U.phase[static_cast<std::size_t>(U.image[static_cast<std::size_t>(s)])], mod) != sq) {
      throw Error(ErrorCode::NonInvolutive, "U^2 is not proportional to the identity");
    }
  }
  U.square_phase = sq;
  return U;
}

double commutator_norm(const HermitianOperator& H, const SiteUnitary& U) {
  if (U.dimension() != H.dimension()) throw Error(ErrorCode::DimensionMismatch, "operator and symmetry sizes differ");
  double sum = 0.0;
  for (int a = 0; a < H.dimension(); ++a) {
    const cplx wa = phase_to_complex(U.phase[static_cast<std::size_t>(a)], U.modulus);
    const int ia = U.image[static_cast<std::size_t>(a)];
    for (int p = H.row_ptr()[static_cast<std::size_t>(a)]; p < H.row_ptr()[static_cast<std::size_t>(a) + 1]; ++p) {
      const int b = H.cols()[static_cast<std::size_t>(p)];
      const cplx wb = phase_to_complex(U.phase[static_cast<std::size_t>(b)], U.modulus);
      const cplx conj_entry = wa * H.at(ia, U.image[static_cast<std::size_t>(b)]) * std::conj(wb);
      sum += std::norm(conj_entry - H.values()[static_cast<std::size_t>(p)]);
    }
  }
  return std::sqrt(sum);
}

std::pair<int, int> isotypic_multiplicities(const HermitianOperator& H, const SiteUnitary& U, const EigenPairs& eig,
                                            const LevelCluster& cluster, double tol) {
  const double comm = commutator_norm(H, U);
  if (comm > 1e-10) {
    std::ostringstream msg;
    msg << "symmetry does not commute with H (defect " << comm << ")";
    throw Error(ErrorCode::SymmetryBroken, msg.str());
  }
  if (cluster.first < 0 || cluster.first + cluster.degeneracy > eig.vectors.cols()) {
    throw Error(ErrorCode::InvalidInput, "cluster indices fall outside the computed eigenvectors");
  }
  const Block V = eig.vectors.middleCols(cluster.first, cluster.degeneracy);
  Block UV;
  U.apply(V, UV);
  Eigen::MatrixXcd B = V.adjoint() * UV;
  B /= std::sqrt(U.square_scalar());

  const Eigen::Index d = B.rows();
  const double defect = (B * B - Eigen::MatrixXcd::Identity(d, d)).norm();
  if (defect > tol) {
    std::ostringstream msg;
    msg << "symmetry restricted to the cluster is not an involution (defect " << defect << ")";
    throw Error(ErrorCode::NonInvolutive, msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((0.5 * (B + B.adjoint())).eval(), Eigen::EigenvaluesOnly);
  int even = 0, odd = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double lam = es.eigenvalues()(i);
    if (std::abs(lam - 1.0) <= tol) {
      ++even;
    } else if (std::abs(lam + 1.0) <= tol) {
      ++odd;
    } else {
      throw Error(ErrorCode::NonInvolutive, "restricted symmetry eigenvalue far from +-1");
    }
  }
  return {even, odd};
}

}  // namespace orbihall::numerics
