#include "orbihall/covers.hpp"

#include <cmath>

#include "orbihall/error.hpp"

namespace orbihall {

GaloisCoverData build_cover(const OrbifoldSurface& Y, std::int64_t group_order, double cover_volume,
                            bool cyclic_quotient_free) {
  if (!(cover_volume > 0.0) || !std::isfinite(cover_volume)) {
    throw Error(ErrorCode::InvalidInput, "cover volume must be a positive finite number");
  }
  CoverEuler euler = chi_cover(Y, group_order);

  GaloisCoverData C;
  C.base_ = Y;
  C.group_order_ = group_order;
  C.cover_genus_ = euler.cover_genus;
  C.cover_volume_ = cover_volume;
  C.cyclic_quotient_free_ = cyclic_quotient_free;
  for (const auto& p : Y.marked_points()) C.sheet_counts_.push_back(group_order / p.m);
  return C;
}

std::int64_t equivariant_degree(const OrbifoldLineBundle& L, const GaloisCoverData& C) {
  if (!(L.base() == C.base())) throw Error(ErrorCode::BaseMismatch, "bundle and cover live on different orbifolds");
  Rational lifted = deg_orb(L) * C.group_order();
  if (!lifted.is_integer()) {
    throw Error(ErrorCode::NonIntegralEquivariantDegree,
                "|G| * deg_orb = " + lifted.str() + " is not an integer");
  }
  return lifted.num();
}

// ---------------------------------------------------------------------------

EllipticPoint::EllipticPoint(Rational re, Rational tau_coeff, EllipticLattice lattice)
    : lattice_(lattice) {
  if (lattice_.n < 1) throw Error(ErrorCode::InvalidInput, "real period must be a positive integer");
  if (!(lattice_.tau.imag() > 0.0)) throw Error(ErrorCode::InvalidInput, "tau must have positive imaginary part");
  // reduce re mod n and tau_coeff mod 1
  Rational n = lattice_.n;
  re_ = re - n * (re / n).floor();
  tau_coeff_ = tau_coeff - Rational(tau_coeff.floor());
}

std::complex<double> EllipticPoint::value() const {
  return re_.to_double() + tau_coeff_.to_double() * lattice_.tau;
}

EllipticPoint EllipticPoint::operator+(const EllipticPoint& rhs) const {
  if (!(lattice_ == rhs.lattice_)) throw Error(ErrorCode::BaseMismatch, "points on different elliptic curves");
  return EllipticPoint(re_ + rhs.re_, tau_coeff_ + rhs.tau_coeff_, lattice_);
}

EllipticPoint EllipticPoint::scaled(std::int64_t k) const { return EllipticPoint(re_ * k, tau_coeff_ * k, lattice_); }

std::int64_t EllipticDivisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [c, _] : terms) d = checked_add(d, c);
  return d;
}

EllipticPoint EllipticDivisor::abel_jacobi(const EllipticLattice& lattice) const {
  EllipticPoint sum(0, 0, lattice);
  for (const auto& [c, y] : terms) {
    if (!(y.lattice() == lattice)) throw Error(ErrorCode::BaseMismatch, "divisor point on a different curve");
    sum = sum + y.scaled(c);
  }
  return sum;
}

EllipticDivisor pullback_divisor(const EllipticDivisor& D, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "covering degree must be >= 1");
  EllipticDivisor out;
  for (const auto& [c, y] : D.terms) {
    if (y.lattice().n != 1) throw Error(ErrorCode::InvalidInput, "pullback source must be C/(Z + tau Z)");
    EllipticLattice upstairs{n, y.lattice().tau};
    for (std::int64_t j = 0; j < n; ++j) out.terms.emplace_back(c, EllipticPoint(y.re() + j, y.tau_coeff(), upstairs));
  }
  return out;
}

EllipticPoint elliptic_pullback_class(const EllipticPoint& a, std::int64_t n, std::int64_t l) {
  if (a.lattice().n != 1) throw Error(ErrorCode::InvalidInput, "a must be a point of C/(Z + tau Z)");
  if (n < 1 || l < 0 || l >= n) throw Error(ErrorCode::InvalidInput, "need n >= 1 and 0 <= l < n");
  const EllipticLattice& base = a.lattice();
  EllipticPoint cls(a.re(), a.tau_coeff() + Rational(l, n), base);
  EllipticDivisor D;
  D.terms.emplace_back(1, cls);
  D.terms.emplace_back(-1, EllipticPoint(0, 0, base));
  return pullback_divisor(D, n).abel_jacobi(EllipticLattice{n, base.tau});
}

}  // namespace orbihall
