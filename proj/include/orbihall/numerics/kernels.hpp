#pragma once

/**
 * @file kernels.hpp
 * @brief Block kernels behind the eigensolver.
 *
 * Every kernel has a serial reference version and an OpenMP version with the
 * same signature. Parallelism is only ever over independent outputs; each
 * output entry is accumulated serially in a fixed order, so both versions
 * return bit-identical results for any thread count.
 */

#include <Eigen/Dense>

#include "orbihall/numerics/lattice.hpp"

namespace orbihall::numerics {

using Block = Eigen::MatrixXcd;

enum class Execution { serial, parallel };

namespace serial {
/// Y = H X
void apply(const HermitianOperator& H, const Block& X, Block& Y);
/// Out = alpha (H Y - shift Y) + beta X
void chebyshev_step(const HermitianOperator& H, const Block& Y, const Block& X, double shift, double alpha,
                    double beta, Block& out);
/// A^H B over column ranges [a0, a0 + na) and [b0, b0 + nb).
Eigen::MatrixXcd gram(const Block& A, int a0, int na, const Block& B, int b0, int nb);
/// V[:, v0:v0+nv] * C
Block combine(const Block& V, int v0, int nv, const Eigen::MatrixXcd& C);
/// dst[:, j] -= V[:, 0:nv] * h
void subtract_projection(const Block& V, int nv, const Eigen::VectorXcd& h, Block& dst, int j);
double column_norm(const Block& X, int j);
}  // namespace serial

namespace parallel {
void apply(const HermitianOperator& H, const Block& X, Block& Y);
void chebyshev_step(const HermitianOperator& H, const Block& Y, const Block& X, double shift, double alpha,
                    double beta, Block& out);
Eigen::MatrixXcd gram(const Block& A, int a0, int na, const Block& B, int b0, int nb);
Block combine(const Block& V, int v0, int nv, const Eigen::MatrixXcd& C);
void subtract_projection(const Block& V, int nv, const Eigen::VectorXcd& h, Block& dst, int j);
double column_norm(const Block& X, int j);
}  // namespace parallel

/// Dispatches to one of the two kernel sets.
struct Kernels {
  Execution exec = Execution::parallel;

  void apply(const HermitianOperator& H, const Block& X, Block& Y) const;
  void chebyshev_step(const HermitianOperator& H, const Block& Y, const Block& X, double shift, double alpha,
                      double beta, Block& out) const;
  Eigen::MatrixXcd gram(const Block& A, int a0, int na, const Block& B, int b0, int nb) const;
  Block combine(const Block& V, int v0, int nv, const Eigen::MatrixXcd& C) const;
  void subtract_projection(const Block& V, int nv, const Eigen::VectorXcd& h, Block& dst, int j) const;
  double column_norm(const Block& X, int j) const;
};

int max_threads();

}  // namespace orbihall::numerics
