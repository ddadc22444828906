#include "orbihall/numerics/kernels.hpp"

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbihall::numerics {

namespace {

// Explicit complex arithmetic: avoids the NaN-recovery path of std::complex
// multiplication and keeps the operation order fixed.
inline void mul_add(cplx& acc, const cplx& a, const cplx& b) {
  const double ar = a.real(), ai = a.imag(), br = b.real(), bi = b.imag();
  acc = {acc.real() + (ar * br - ai * bi), acc.imag() + (ar * bi + ai * br)};
}

inline void conj_mul_add(cplx& acc, const cplx& a, const cplx& b) {
  const double ar = a.real(), ai = -a.imag(), br = b.real(), bi = b.imag();
  acc = {acc.real() + (ar * br - ai * bi), acc.imag() + (ar * bi + ai * br)};
}

inline cplx row_dot(const HermitianOperator& H, int i, const Block& X, int j) {
  const auto& rp = H.row_ptr();
  const auto& cols = H.cols();
  const auto& vals = H.values();
  const cplx* x = X.data() + static_cast<std::ptrdiff_t>(j) * X.rows();
  cplx acc{0.0, 0.0};
  for (int p = rp[static_cast<std::size_t>(i)]; p < rp[static_cast<std::size_t>(i) + 1]; ++p)
    mul_add(acc, vals[static_cast<std::size_t>(p)], x[cols[static_cast<std::size_t>(p)]]);
  return acc;
}

inline void apply_row(const HermitianOperator& H, const Block& X, Block& Y, int i) {
  for (int j = 0; j < X.cols(); ++j) Y(i, j) = row_dot(H, i, X, j);
}

inline void cheb_row(const HermitianOperator& H, const Block& Y, const Block& X, double shift, double alpha,
                     double beta, Block& out, int i) {
  for (int j = 0; j < Y.cols(); ++j) {
    const cplx hy = row_dot(H, i, Y, j);
    const cplx y = Y(i, j);
    const cplx x = X(i, j);
    out(i, j) = {alpha * (hy.real() - shift * y.real()) + beta * x.real(),
                 alpha * (hy.imag() - shift * y.imag()) + beta * x.imag()};
  }
}

inline cplx gram_entry(const Block& A, int a, const Block& B, int b) {
  const std::ptrdiff_t n = A.rows();
  const cplx* pa = A.data() + a * n;
  const cplx* pb = B.data() + b * n;
  cplx acc{0.0, 0.0};
  for (std::ptrdiff_t i = 0; i < n; ++i) conj_mul_add(acc, pa[i], pb[i]);
  return acc;
}

inline void combine_row(const Block& V, int v0, int nv, const Eigen::MatrixXcd& C, Block& out, int i) {
  for (int c = 0; c < C.cols(); ++c) {
    cplx acc{0.0, 0.0};
    for (int k = 0; k < nv; ++k) mul_add(acc, V(i, v0 + k), C(k, c));
    out(i, c) = acc;
  }
}

inline void project_row(const Block& V, int nv, const Eigen::VectorXcd& h, Block& dst, int j, int i) {
  cplx acc{0.0, 0.0};
  for (int k = 0; k < nv; ++k) mul_add(acc, V(i, k), h(k));
  dst(i, j) -= acc;
}

// Fixed-size chunks make the reduction order independent of thread count.
constexpr std::ptrdiff_t kChunk = 1024;

inline double chunk_sumsq(const cplx* x, std::ptrdiff_t begin, std::ptrdiff_t end) {
  double s = 0.0;
  for (std::ptrdiff_t i = begin; i < end; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

}  // namespace

namespace serial {

void apply(const HermitianOperator& H, const Block& X, Block& Y) {
  Y.resize(X.rows(), X.cols());
  for (int i = 0; i < H.dimension(); ++i) apply_row(H, X, Y, i);
}

void chebyshev_step(const HermitianOperator& H, const Block& Y, const Block& X, double shift, double alpha,
                    double beta, Block& out) {
  out.resize(Y.rows(), Y.cols());
  for (int i = 0; i < H.dimension(); ++i) cheb_row(H, Y, X, shift, alpha, beta, out, i);
}

Eigen::MatrixXcd gram(const Block& A, int a0, int na, const Block& B, int b0, int nb) {
  Eigen::MatrixXcd G(na, nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) G(a, b) = gram_entry(A, a0 + a, B, b0 + b);
  return G;
}

Block combine(const Block& V, int v0, int nv, const Eigen::MatrixXcd& C) {
  Block out(V.rows(), C.cols());
  for (int i = 0; i < V.rows(); ++i) combine_row(V, v0, nv, C, out, i);
  return out;
}

void subtract_projection(const Block& V, int nv, const Eigen::VectorXcd& h, Block& dst, int j) {
  for (int i = 0; i < V.rows(); ++i) project_row(V, nv, h, dst, j, i);
}

double column_norm(const Block& X, int j) {
  const std::ptrdiff_t n = X.rows();
  const cplx* x = X.data() + j * n;
  double total = 0.0;
  for (std::ptrdiff_t b = 0; b < n; b += kChunk) total += chunk_sumsq(x, b, std::min(n, b + kChunk));
  return std::sqrt(total);
}

}  // namespace serial

namespace parallel {

void apply(const HermitianOperator& H, const Block& X, Block& Y) {
  Y.resize(X.rows(), X.cols());
  const int n = H.dimension();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) apply_row(H, X, Y, i);
}

void chebyshev_step(const HermitianOperator& H, const Block& Y, const Block& X, double shift, double alpha,
                    double beta, Block& out) {
  out.resize(Y.rows(), Y.cols());
  const int n = H.dimension();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) cheb_row(H, Y, X, shift, alpha, beta, out, i);
}

Eigen::MatrixXcd gram(const Block& A, int a0, int na, const Block& B, int b0, int nb) {
  Eigen::MatrixXcd G(na, nb);
  const int total = na * nb;
#pragma omp parallel for schedule(static)
  for (int t = 0; t < total; ++t) {
    const int a = t / nb, b = t % nb;
    G(a, b) = gram_entry(A, a0 + a, B, b0 + b);
  }
  return G;
}

Block combine(const Block& V, int v0, int nv, const Eigen::MatrixXcd& C) {
  Block out(V.rows(), C.cols());
  const int n = static_cast<int>(V.rows());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) combine_row(V, v0, nv, C, out, i);
  return out;
}

void subtract_projection(const Block& V, int nv, const Eigen::VectorXcd& h, Block& dst, int j) {
  const int n = static_cast<int>(V.rows());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) project_row(V, nv, h, dst, j, i);
}

double column_norm(const Block& X, int j) {
  const std::ptrdiff_t n = X.rows();
  const cplx* x = X.data() + j * n;
  const std::ptrdiff_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < chunks; ++c)
    partial[static_cast<std::size_t>(c)] = chunk_sumsq(x, c * kChunk, std::min(n, (c + 1) * kChunk));
  double total = 0.0;
  for (double p : partial) total += p;
  return std::sqrt(total);
}

}  // namespace parallel

void Kernels::apply(const HermitianOperator& H, const Block& X, Block& Y) const {
  exec == Execution::serial ? serial::apply(H, X, Y) : parallel::apply(H, X, Y);
}

void Kernels::chebyshev_step(const HermitianOperator& H, const Block& Y, const Block& X, double shift, double alpha,
                             double beta, Block& out) const {
  exec == Execution::serial ? serial::chebyshev_step(H, Y, X, shift, alpha, beta, out)
                            : parallel::chebyshev_step(H, Y, X, shift, alpha, beta, out);
}

Eigen::MatrixXcd Kernels::gram(const Block& A, int a0, int na, const Block& B, int b0, int nb) const {
  return exec == Execution::serial ? serial::gram(A, a0, na, B, b0, nb) : parallel::gram(A, a0, na, B, b0, nb);
}

Block Kernels::combine(const Block& V, int v0, int nv, const Eigen::MatrixXcd& C) const {
  return exec == Execution::serial ? serial::combine(V, v0, nv, C) : parallel::combine(V, v0, nv, C);
}

void Kernels::subtract_projection(const Block& V, int nv, const Eigen::VectorXcd& h, Block& dst, int j) const {
  exec == Execution::serial ? serial::subtract_projection(V, nv, h, dst, j)
                            : parallel::subtract_projection(V, nv, h, dst, j);
}

double Kernels::column_norm(const Block& X, int j) const {
  return exec == Execution::serial ? serial::column_norm(X, j) : parallel::column_norm(X, j);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace orbihall::numerics
