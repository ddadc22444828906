#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orbihall/covers.hpp"
#include "orbihall/rational.hpp"

namespace orbihall {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

enum class SignConvention { theorem, proof };

/// Intersection form on H_1(X) in a symplectic basis together with the matrix
/// of i_* : H_1(Y) -> H_1(X). Both are supplied by the caller.
class TransportSetup {
 public:
  /// Validates shapes, antisymmetry, unimodularity of the intersection form
  /// and full column rank of the pushforward; throws DimensionMismatch or
  /// InvalidInput.
  TransportSetup(std::int64_t group_order, IntMatrix intersection, IntMatrix pushforward);
  /// Additionally checks the shapes against 2 g_X and 2 g_Y of the cover.
  TransportSetup(const GaloisCoverData& cover, IntMatrix intersection, IntMatrix pushforward);

  std::int64_t group_order() const noexcept { return group_order_; }
  const IntMatrix& intersection() const noexcept { return intersection_; }
  const IntMatrix& pushforward() const noexcept { return pushforward_; }
  int cover_rank() const noexcept { return static_cast<int>(intersection_.size()); }  // 2 g_X
  int base_rank() const noexcept { return base_rank_; }                                // 2 g_Y

 private:
  std::int64_t group_order_;
  IntMatrix intersection_;
  IntMatrix pushforward_;
  int base_rank_ = 0;
};

struct TransportCoefficients {
  Rational charge_transport;  // multiple of e
  Rational conductance;       // multiple of e^2/h
  SignConvention convention = SignConvention::theorem;
};

/// (M beta)^T J_X (M delta).
std::int64_t intersection_pairing(const TransportSetup& S, std::span<const std::int64_t> beta,
                                  std::span<const std::int64_t> delta);

TransportCoefficients mean_transport(const TransportSetup& S, std::span<const std::int64_t> beta,
                                     std::span<const std::int64_t> delta,
                                     SignConvention convention = SignConvention::theorem);

/// mean_transport evaluated on all pairs of standard basis vectors of H_1(Y).
std::vector<std::vector<TransportCoefficients>> conductance_table(const TransportSetup& S,
                                                                  SignConvention convention = SignConvention::theorem);

/// Exact determinant by fraction-free elimination.
std::int64_t integer_determinant(const IntMatrix& A);
int integer_rank(const IntMatrix& A, int cols);

}  // namespace orbihall
