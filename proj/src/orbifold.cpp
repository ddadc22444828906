#include "orbihall/orbifold.hpp"

#include <algorithm>
#include <set>

#include "orbihall/error.hpp"

namespace orbihall {

OrbifoldSurface::OrbifoldSurface(int genus, std::vector<MarkedPoint> marked_points)
    : genus_(genus), points_(std::move(marked_points)) {
  if (genus_ < 0) throw Error(ErrorCode::InvalidInput, "genus must be non-negative");
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (p.m < 2) throw Error(ErrorCode::InvalidInput, "isotropy of '" + p.label + "' must be >= 2");
    if (!seen.insert(p.label).second) throw Error(ErrorCode::InvalidInput, "duplicate marked point label '" + p.label + "'");
  }
}

std::int64_t OrbifoldSurface::isotropy_lcm() const {
  std::int64_t l = 1;
  for (const auto& p : points_) l = lcm_checked(l, p.m);
  return l;
}

OrbifoldLineBundle::OrbifoldLineBundle(OrbifoldSurface base, std::int64_t deg_smooth, std::vector<int> residues)
    : base_(std::move(base)), deg_smooth_(deg_smooth), residues_(std::move(residues)) {
  if (residues_.size() != base_.marked_points().size()) {
    throw Error(ErrorCode::InvalidInput, "need exactly one monodromy residue per marked point");
  }
  for (std::size_t k = 0; k < residues_.size(); ++k) {
    int m = base_.marked_points()[k].m;
    if (residues_[k] < 0 || residues_[k] >= m) {
      throw Error(ErrorCode::InvalidInput, "residue at '" + base_.marked_points()[k].label + "' must lie in [0, " +
                                               std::to_string(m) + ")");
    }
  }
}

OrbifoldLineBundle OrbifoldLineBundle::normalized(OrbifoldSurface base, std::int64_t deg_smooth,
                                                  std::span<const std::int64_t> residues) {
  if (residues.size() != base.marked_points().size()) {
    throw Error(ErrorCode::InvalidInput, "need exactly one monodromy residue per marked point");
  }
  std::vector<int> d(residues.size());
  for (std::size_t k = 0; k < residues.size(); ++k) {
    std::int64_t m = base.marked_points()[k].m;
    deg_smooth = checked_add(deg_smooth, floor_div(residues[k], m));
    d[k] = static_cast<int>(mod_floor(residues[k], m));
  }
  return OrbifoldLineBundle(std::move(base), deg_smooth, std::move(d));
}

OrbifoldLineBundle OrbifoldLineBundle::from_orbifold_degree(OrbifoldSurface base, const Rational& deg_orb,
                                                            std::vector<int> residues) {
  Rational frac = 0;
  if (residues.size() != base.marked_points().size()) {
    throw Error(ErrorCode::InvalidInput, "need exactly one monodromy residue per marked point");
  }
  for (std::size_t k = 0; k < residues.size(); ++k) frac += Rational(residues[k], base.marked_points()[k].m);
  Rational smooth = deg_orb - frac;
  if (!smooth.is_integer()) {
    throw Error(ErrorCode::NonIntegralDegree,
                "deg_orb " + deg_orb.str() + " minus monodromy part " + frac.str() + " is not an integer");
  }
  return OrbifoldLineBundle(std::move(base), smooth.num(), std::move(residues));
}

OrbifoldLineBundle OrbifoldLineBundle::trivial(OrbifoldSurface base) {
  std::vector<int> zeros(base.marked_points().size(), 0);
  return OrbifoldLineBundle(std::move(base), 0, std::move(zeros));
}

std::vector<Monodromy> OrbifoldLineBundle::monodromies() const {
  std::vector<Monodromy> out;
  out.reserve(residues_.size());
  for (std::size_t k = 0; k < residues_.size(); ++k) out.push_back({&base_.marked_points()[k], residues_[k]});
  return out;
}

// ---------------------------------------------------------------------------
// FractionalDivisor

FractionalDivisor::FractionalDivisor(std::int64_t integral_degree, std::vector<Term> terms)
    : integral_(integral_degree), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.m < 2) throw Error(ErrorCode::InvalidInput, "isotropy must be >= 2");
    if (t.m % t.coefficient.den() != 0) {
      throw Error(ErrorCode::InvalidInput, "coefficient " + t.coefficient.str() + " at '" + t.label +
                                               "' has denominator not dividing " + std::to_string(t.m));
    }
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.label < b.label; });
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].label == terms_[i - 1].label) throw Error(ErrorCode::InvalidInput, "duplicate point in divisor");
  }
}

FractionalDivisor FractionalDivisor::of_bundle(const OrbifoldLineBundle& L) {
  std::vector<Term> terms;
  const auto& pts = L.base().marked_points();
  for (std::size_t k = 0; k < pts.size(); ++k) terms.push_back({pts[k].label, pts[k].m, Rational(L.residues()[k], pts[k].m)});
  return FractionalDivisor(L.deg_smooth(), std::move(terms));
}

FractionalDivisor FractionalDivisor::canonical(const OrbifoldSurface& Y) {
  std::vector<Term> terms;
  for (const auto& p : Y.marked_points()) terms.push_back({p.label, p.m, Rational(p.m - 1, p.m)});
  return FractionalDivisor(2 * static_cast<std::int64_t>(Y.genus()) - 2, std::move(terms));
}

Rational FractionalDivisor::degree() const {
  Rational d = integral_;
  for (const auto& t : terms_) d += t.coefficient;
  return d;
}

FractionalDivisor FractionalDivisor::normalized() const {
  std::int64_t integral = integral_;
  std::vector<Term> terms = terms_;
  for (auto& t : terms) {
    std::int64_t whole = t.coefficient.floor();
    integral = checked_add(integral, whole);
    t.coefficient -= whole;
  }
  return FractionalDivisor(integral, std::move(terms));
}

OrbifoldLineBundle FractionalDivisor::to_bundle(const OrbifoldSurface& base) const {
  FractionalDivisor n = normalized();
  std::vector<int> d(base.marked_points().size(), 0);
  for (const auto& t : n.terms_) {
    auto it = std::find_if(base.marked_points().begin(), base.marked_points().end(),
                           [&](const MarkedPoint& p) { return p.label == t.label; });
    if (it == base.marked_points().end() || it->m != t.m) {
      throw Error(ErrorCode::BaseMismatch, "divisor point '" + t.label + "' is not a marked point of the base");
    }
    d[static_cast<std::size_t>(it - base.marked_points().begin())] = static_cast<int>((t.coefficient * t.m).num());
  }
  return OrbifoldLineBundle(base, n.integral_, std::move(d));
}

FractionalDivisor FractionalDivisor::operator+(const FractionalDivisor& rhs) const {
  std::vector<Term> terms = terms_;
  for (const auto& t : rhs.terms_) {
    auto it = std::find_if(terms.begin(), terms.end(), [&](const Term& s) { return s.label == t.label; });
    if (it == terms.end()) {
      terms.push_back(t);
    } else {
      if (it->m != t.m) throw Error(ErrorCode::BaseMismatch, "isotropy mismatch at '" + t.label + "'");
      it->coefficient += t.coefficient;
    }
  }
  return FractionalDivisor(checked_add(integral_, rhs.integral_), std::move(terms));
}

FractionalDivisor FractionalDivisor::scaled(std::int64_t k) const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coefficient *= k;
  return FractionalDivisor(checked_mul(integral_, k), std::move(terms));
}

// ---------------------------------------------------------------------------
// Formula engine

Rational chi_orb(const OrbifoldSurface& Y) {
  Rational chi = 2 - 2 * static_cast<std::int64_t>(Y.genus()) - Y.num_marked();
  for (const auto& p : Y.marked_points()) chi += Rational(1, p.m);
  return chi;
}

CoverEuler chi_cover(const OrbifoldSurface& Y, std::int64_t group_order) {
  if (group_order < 1) throw Error(ErrorCode::InvalidInput, "group order must be >= 1");
  for (const auto& p : Y.marked_points()) {
    if (group_order % p.m != 0) {
      throw Error(ErrorCode::IsotropyMismatch,
                  "isotropy " + std::to_string(p.m) + " at '" + p.label + "' does not divide |G| = " + std::to_string(group_order));
    }
  }
  Rational chi = chi_orb(Y) * group_order;
  if (!chi.is_integer() || chi.num() % 2 != 0 || chi.num() > 2) {
    throw Error(ErrorCode::NonIntegralCover,
                "|G| * chi_orb = " + chi.str() + " is not an even integer <= 2");
  }
  return {chi.num(), 1 - chi.num() / 2};
}

Rational deg_canonical_orb(const OrbifoldSurface& Y) {
  Rational deg = 2 * static_cast<std::int64_t>(Y.genus()) - 2 + Y.num_marked();
  for (const auto& p : Y.marked_points()) deg -= Rational(1, p.m);
  return deg;
}

Rational deg_orb(const OrbifoldLineBundle& L) {
  Rational deg = L.deg_smooth();
  const auto& pts = L.base().marked_points();
  for (std::size_t k = 0; k < pts.size(); ++k) deg += Rational(L.residues()[k], pts[k].m);
  return deg;
}

std::int64_t smooth_degree(const OrbifoldLineBundle& L) {
  Rational deg = deg_orb(L);
  const auto& pts = L.base().marked_points();
  for (std::size_t k = 0; k < pts.size(); ++k) deg -= Rational(L.residues()[k], pts[k].m);
  return deg.to_integer();
}

OrbifoldLineBundle tensor(const OrbifoldLineBundle& a, const OrbifoldLineBundle& b) {
  if (!(a.base() == b.base())) throw Error(ErrorCode::BaseMismatch, "tensor product of bundles on different orbifolds");
  std::int64_t deg = checked_add(a.deg_smooth(), b.deg_smooth());
  std::vector<int> d(a.residues().size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    int m = a.base().marked_points()[k].m;
    int sum = a.residues()[k] + b.residues()[k];
    if (sum >= m) {
      sum -= m;
      deg = checked_add(deg, 1);
    }
    d[k] = sum;
  }
  return OrbifoldLineBundle(a.base(), deg, std::move(d));
}

OrbifoldLineBundle dual(const OrbifoldLineBundle& L) {
  std::vector<std::int64_t> neg(L.residues().begin(), L.residues().end());
  for (auto& d : neg) d = -d;
  return OrbifoldLineBundle::normalized(L.base(), -L.deg_smooth(), neg);
}

OrbifoldLineBundle power(const OrbifoldLineBundle& L, std::int64_t k) {
  OrbifoldLineBundle base = k >= 0 ? L : dual(L);
  std::int64_t e = k >= 0 ? k : -k;
  OrbifoldLineBundle result = OrbifoldLineBundle::trivial(L.base());
  // square-and-multiply keeps large exponents cheap
  while (e > 0) {
    if (e & 1) result = tensor(result, base);
    e >>= 1;
    if (e > 0) base = tensor(base, base);
  }
  return result;
}

OrbifoldLineBundle canonical_bundle(const OrbifoldSurface& Y) {
  std::vector<int> d;
  for (const auto& p : Y.marked_points()) d.push_back(p.m - 1);
  return OrbifoldLineBundle(Y, 2 * static_cast<std::int64_t>(Y.genus()) - 2, std::move(d));
}

OrbifoldLineBundle twist_by_canonical(const OrbifoldLineBundle& L, std::int64_t q) {
  if (q < 0) throw Error(ErrorCode::InvalidInput, "twist exponent q must be >= 0");
  return tensor(L, power(canonical_bundle(L.base()), -q));
}

std::int64_t deg_Lq(const OrbifoldLineBundle& L, std::int64_t q) {
  if (q < 0) throw Error(ErrorCode::InvalidInput, "twist exponent q must be >= 0");
  const auto& Y = L.base();
  std::int64_t deg = L.deg_smooth();
  deg = checked_add(deg, -checked_mul(q, 2 * static_cast<std::int64_t>(Y.genus()) - 2));
  deg = checked_add(deg, -checked_mul(q, Y.num_marked()));
  for (std::size_t k = 0; k < L.residues().size(); ++k) {
    deg = checked_add(deg, floor_div(checked_add(L.residues()[k], q), Y.marked_points()[k].m));
  }
  return deg;
}

std::int64_t riemann_roch_orb(const OrbifoldLineBundle& L) {
  // 1 - g + deg_orb - sum d_j/m_j, evaluated on the fractional divisor
  FractionalDivisor D = FractionalDivisor::of_bundle(L);
  Rational chi = Rational(1 - static_cast<std::int64_t>(L.base().genus())) + D.degree();
  for (const auto& t : D.terms()) chi -= t.coefficient;
  return chi.to_integer();
}

bool h1_vanishes(const OrbifoldLineBundle& L) { return deg_orb(L) > -chi_orb(L.base()); }

}  // namespace orbihall
