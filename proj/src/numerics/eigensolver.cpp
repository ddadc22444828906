#include "orbihall/numerics/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "orbihall/error.hpp"

namespace orbihall::numerics {

namespace {

void fill_random(Block& V, int j, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (Eigen::Index i = 0; i < V.rows(); ++i) {
    const double re = u(rng);
    const double im = u(rng);
    V(i, j) = cplx{re, im};
  }
}

// Classical Gram-Schmidt with one reorthogonalization pass. Columns that
// collapse are replaced by fresh random vectors.
void orthonormalize(Block& V, const Kernels& K, std::mt19937_64& rng) {
  const int p = static_cast<int>(V.cols());
  for (int j = 0; j < p; ++j) {
    for (int attempt = 0;; ++attempt) {
      const double before = K.column_norm(V, j);
      for (int pass = 0; pass < 2 && j > 0; ++pass) {
        Eigen::VectorXcd h = K.gram(V, 0, j, V, j, 1).col(0);
        K.subtract_projection(V, j, h, V, j);
      }
      const double after = K.column_norm(V, j);
      if (after > 1e-10 * before && after > 0.0) {
        V.col(j) *= 1.0 / after;
        break;
      }
      if (attempt == 3) throw Error(ErrorCode::ConvergenceFailure, "could not orthonormalize search block");
      fill_random(V, j, rng);
    }
  }
}

void chebyshev_filter(const HermitianOperator& H, Block& X, int degree, double lower, double upper, double anchor,
                      const Kernels& K) {
  const double e = (upper - lower) / 2.0;
  const double c = (upper + lower) / 2.0;
  double sigma = e / (anchor - c);
  const double tau = 2.0 / sigma;
  Block Y, Ynew;
  K.chebyshev_step(H, X, X, c, sigma / e, 0.0, Y);
  for (int i = 2; i <= degree; ++i) {
    const double sigma2 = 1.0 / (tau - sigma);
    K.chebyshev_step(H, Y, X, c, 2.0 * sigma2 / e, -sigma * sigma2, Ynew);
    std::swap(X, Y);
    std::swap(Y, Ynew);
    sigma = sigma2;
  }
  X = std::move(Y);
}

Eigen::MatrixXcd to_dense(const HermitianOperator& H) {
  const int n = H.dimension();
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int p = H.row_ptr()[static_cast<std::size_t>(i)]; p < H.row_ptr()[static_cast<std::size_t>(i) + 1]; ++p)
      D(i, H.cols()[static_cast<std::size_t>(p)]) = H.values()[static_cast<std::size_t>(p)];
  return D;
}

std::vector<double> residual_norms(const HermitianOperator& H, const Block& V, const std::vector<double>& values,
                                   const Kernels& K) {
  Block W;
  K.apply(H, V, W);
  for (int j = 0; j < static_cast<int>(values.size()); ++j) W.col(j) -= values[static_cast<std::size_t>(j)] * V.col(j);
  std::vector<double> r(values.size());
  for (int j = 0; j < static_cast<int>(values.size()); ++j) r[static_cast<std::size_t>(j)] = K.column_norm(W, j);
  return r;
}

EigenPairs dense_lowest(const HermitianOperator& H, int k, const Kernels& K) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(H));
  if (es.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "dense eigensolver failed");
  EigenPairs out;
  out.dense = true;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
  out.vectors = es.eigenvectors().leftCols(k);
  out.residuals = residual_norms(H, out.vectors, out.values, K);
  return out;
}

}  // namespace

EigenPairs dense_spectrum(const HermitianOperator& H) {
  return dense_lowest(H, H.dimension(), Kernels{Execution::serial});
}

EigenPairs spectrum_lowest(const HermitianOperator& H, int k, double tol, const EigensolverOptions& options) {
  const int n = H.dimension();
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidInput, "need 1 <= k <= dimension");
  const Kernels K{options.exec};
  int p = options.block_size > 0 ? options.block_size : std::max(2 * k, k + 16);
  p = std::min(p, n);

  EigenPairs out;
  if (n <= options.dense_threshold || 4 * p >= n) {
    out = dense_lowest(H, k, K);
  } else {
    std::mt19937_64 rng(options.seed);
    Block V(n, p);
    for (int j = 0; j < p; ++j) fill_random(V, j, rng);
    orthonormalize(V, K, rng);
    const double upper = H.gershgorin_bound();

    Block W;
    double worst = 0.0;
    for (int it = 1; it <= options.max_iterations; ++it) {
      // Rayleigh-Ritz on the current block
      K.apply(H, V, W);
      Eigen::MatrixXcd G = K.gram(V, 0, p, W, 0, p);
      G = (0.5 * (G + G.adjoint())).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
      const Eigen::VectorXd theta = es.eigenvalues();
      V = K.combine(V, 0, p, es.eigenvectors());
      W = K.combine(W, 0, p, es.eigenvectors());

      worst = 0.0;
      for (int j = 0; j < k; ++j) W.col(j) -= theta(j) * V.col(j);
      for (int j = 0; j < k; ++j) worst = std::max(worst, K.column_norm(W, j));
      out.iterations = it;
      if (worst <= tol) {
        out.values.assign(theta.data(), theta.data() + k);
        out.vectors = V.leftCols(k);
        break;
      }
      const double lower = std::min(theta(p - 1), 0.99 * upper);
      chebyshev_filter(H, V, options.filter_degree, lower, upper, theta(0), K);
      orthonormalize(V, K, rng);
    }
    if (out.values.empty()) {
      std::ostringstream msg;
      msg << "residual " << worst << " above tolerance " << tol << " after " << options.max_iterations
          << " iterations (k = " << k << ", block = " << p << ")";
      throw Error(ErrorCode::ConvergenceFailure, msg.str());
    }
    out.residuals = residual_norms(H, out.vectors, out.values, K);
  }

  const double worst = out.residuals.empty() ? 0.0 : *std::max_element(out.residuals.begin(), out.residuals.end());
  if (!(worst <= tol)) {
    std::ostringstream msg;
    msg << "final residual " << worst << " above tolerance " << tol;
    throw Error(ErrorCode::ConvergenceFailure, msg.str());
  }
  return out;
}

}  // namespace orbihall::numerics
