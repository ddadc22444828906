#include "orbihall/transport.hpp"

#include <utility>

#include "orbihall/error.hpp"

namespace orbihall {

namespace {

std::vector<std::vector<Rational>> to_rational(const IntMatrix& A, int cols) {
  std::vector<std::vector<Rational>> R(A.size(), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (int j = 0; j < cols; ++j) R[i][static_cast<std::size_t>(j)] = A[i][static_cast<std::size_t>(j)];
  return R;
}

// Row-echelon reduction over Q; returns rank and the determinant of the
// leading square block when the matrix is square.
std::pair<int, Rational> eliminate(std::vector<std::vector<Rational>> R, int cols) {
  const int rows = static_cast<int>(R.size());
  int rank = 0;
  Rational det = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!R[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(R[static_cast<std::size_t>(pivot)], R[static_cast<std::size_t>(rank)]);
      det = -det;
    }
    const auto& prow = R[static_cast<std::size_t>(rank)];
    Rational p = prow[static_cast<std::size_t>(c)];
    det *= p;
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = R[static_cast<std::size_t>(r)];
      Rational f = row[static_cast<std::size_t>(c)] / p;
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  if (rank < rows || rows != cols) det = 0;
  return {rank, det};
}

void check_shape(const IntMatrix& A, std::size_t rows, std::size_t cols, const char* what) {
  if (A.size() != rows) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong number of rows");
  for (const auto& row : A) {
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " is not rectangular");
  }
}

Rational sign_of(SignConvention c) { return c == SignConvention::theorem ? Rational(-1) : Rational(1); }

}  // namespace

std::int64_t integer_determinant(const IntMatrix& A) {
  check_shape(A, A.size(), A.size(), "matrix");
  if (A.empty()) return 1;
  return eliminate(to_rational(A, static_cast<int>(A.size())), static_cast<int>(A.size())).second.to_integer();
}

int integer_rank(const IntMatrix& A, int cols) {
  if (A.empty() || cols == 0) return 0;
  return eliminate(to_rational(A, cols), cols).first;
}

TransportSetup::TransportSetup(std::int64_t group_order, IntMatrix intersection, IntMatrix pushforward)
    : group_order_(group_order), intersection_(std::move(intersection)), pushforward_(std::move(pushforward)) {
  if (group_order_ < 1) throw Error(ErrorCode::InvalidInput, "group order must be >= 1");
  const std::size_t n = intersection_.size();
  check_shape(intersection_, n, n, "intersection matrix");
  if (n % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "intersection matrix must have even size 2 g_X");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (intersection_[i][j] != -intersection_[j][i])
        throw Error(ErrorCode::InvalidInput, "intersection matrix is not antisymmetric");
  std::int64_t det = integer_determinant(intersection_);
  if (det != 1 && det != -1) throw Error(ErrorCode::InvalidInput, "intersection matrix is not unimodular");

  if (pushforward_.size() != n) throw Error(ErrorCode::DimensionMismatch, "pushforward must have 2 g_X rows");
  base_rank_ = n == 0 || pushforward_.empty() ? 0 : static_cast<int>(pushforward_.front().size());
  check_shape(pushforward_, n, static_cast<std::size_t>(base_rank_), "pushforward");
  if (base_rank_ % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "pushforward must have 2 g_Y columns");
  if (integer_rank(pushforward_, base_rank_) != base_rank_) {
    throw Error(ErrorCode::InvalidInput, "pushforward does not have full column rank");
  }
}

TransportSetup::TransportSetup(const GaloisCoverData& cover, IntMatrix intersection, IntMatrix pushforward)
    : TransportSetup(cover.group_order(), std::move(intersection), std::move(pushforward)) {
  if (cover_rank() != 2 * cover.cover_genus()) {
    throw Error(ErrorCode::DimensionMismatch, "intersection matrix size differs from 2 g_X");
  }
  if (base_rank_ != 2 * cover.base().genus()) {
    throw Error(ErrorCode::DimensionMismatch, "pushforward column count differs from 2 g_Y");
  }
}

std::int64_t intersection_pairing(const TransportSetup& S, std::span<const std::int64_t> beta,
                                  std::span<const std::int64_t> delta) {
  const auto gy = static_cast<std::size_t>(S.base_rank());
  if (beta.size() != gy || delta.size() != gy) {
    throw Error(ErrorCode::DimensionMismatch, "cycle vectors must have length 2 g_Y = " + std::to_string(gy));
  }
  const auto gx = static_cast<std::size_t>(S.cover_rank());
  const auto& M = S.pushforward();
  std::vector<std::int64_t> mb(gx, 0), md(gx, 0);
  for (std::size_t i = 0; i < gx; ++i) {
    for (std::size_t j = 0; j < gy; ++j) {
      mb[i] = checked_add(mb[i], checked_mul(M[i][j], beta[j]));
      md[i] = checked_add(md[i], checked_mul(M[i][j], delta[j]));
    }
  }
  const auto& J = S.intersection();
  std::int64_t out = 0;
  for (std::size_t i = 0; i < gx; ++i)
    for (std::size_t j = 0; j < gx; ++j) out = checked_add(out, checked_mul(mb[i], checked_mul(J[i][j], md[j])));
  return out;
}

TransportCoefficients mean_transport(const TransportSetup& S, std::span<const std::int64_t> beta,
                                     std::span<const std::int64_t> delta, SignConvention convention) {
  Rational value = sign_of(convention) * Rational(intersection_pairing(S, beta, delta), S.group_order());
  return {value, value, convention};
}

std::vector<std::vector<TransportCoefficients>> conductance_table(const TransportSetup& S, SignConvention convention) {
  const auto g = static_cast<std::size_t>(S.base_rank());
  std::vector<std::vector<TransportCoefficients>> table(g, std::vector<TransportCoefficients>(g));
  for (std::size_t k = 0; k < g; ++k) {
    for (std::size_t j = 0; j < g; ++j) {
      std::vector<std::int64_t> ek(g, 0), ej(g, 0);
      ek[k] = 1;
      ej[j] = 1;
      table[k][j] = mean_transport(S, ek, ej, convention);
    }
  }
  return table;
}

}  // namespace orbihall
