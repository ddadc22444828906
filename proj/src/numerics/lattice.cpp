#include "orbihall/numerics/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "orbihall/error.hpp"

namespace orbihall::numerics {

LatticeModel make_lattice_model(int N, std::int64_t flux_quanta, Gauge gauge, Symmetry symmetry, bool weak_field) {
  if (N < 4) throw Error(ErrorCode::InvalidInput, "lattice needs N >= 4");
  const std::int64_t area = static_cast<std::int64_t>(N) * N;
  if (weak_field) {
    if (flux_quanta < 1 || 4 * flux_quanta >= area) {
      throw Error(ErrorCode::InvalidInput, "weak-field regime needs 1 <= N_phi < N^2/4, got N_phi = " +
                                               std::to_string(flux_quanta) + " at N = " + std::to_string(N));
    }
  } else if (flux_quanta < 0 || flux_quanta >= area) {
    throw Error(ErrorCode::InvalidInput, "flux quanta must lie in [0, N^2)");
  }
  LatticeModel M;
  M.N = N;
  M.flux_quanta = flux_quanta;
  M.gauge = gauge;
  M.symmetry = symmetry;
  return M;
}

LatticeModel model_from_plaquette_flux(int N, const Rational& phi, Gauge gauge) {
  Rational total = phi * (static_cast<std::int64_t>(N) * N);
  if (!total.is_integer()) {
    throw Error(ErrorCode::FluxInconsistency, "flux " + phi.str() + " per plaquette gives " + total.str() +
                                                  " quanta on the torus; boundary phases cannot close");
  }
  return make_lattice_model(N, total.num(), gauge, Symmetry::none, false);
}

std::vector<Link> lattice_links(const LatticeModel& M) {
  const int N = M.N;
  const std::int64_t mod = M.phase_modulus();
  const std::int64_t f = M.flux_quanta;
  std::vector<Link> links;
  links.reserve(static_cast<std::size_t>(2 * N * N));
  for (int y = 0; y < N; ++y) {
    for (int x = 0; x < N; ++x) {
      std::int64_t px = 0, py = 0;
      if (M.gauge == Gauge::landau_x) {
        py = f * x;
        if (x == N - 1) px = -f * N * y;
      } else {
        px = -f * y;
        if (y == N - 1) py = f * N * x;
      }
      if (x == N - 1) px += M.twist_x;
      if (y == N - 1) py += M.twist_y;
      links.push_back({M.site(x, y), M.site((x + 1) % N, y), mod_floor(px, mod)});
      links.push_back({M.site(x, y), M.site(x, (y + 1) % N), mod_floor(py, mod)});
    }
  }
  return links;
}

std::int64_t plaquette_phase(const LatticeModel& M, const std::vector<Link>& links, int x, int y) {
  const int N = M.N;
  // links are stored as [x-hop, y-hop] per site in row-major order
  auto xhop = [&](int a, int b) { return links[static_cast<std::size_t>(2 * M.site(a, b))].phase; };
  auto yhop = [&](int a, int b) { return links[static_cast<std::size_t>(2 * M.site(a, b) + 1)].phase; };
  int x1 = (x + 1) % N, y1 = (y + 1) % N;
  return mod_floor(xhop(x, y) + yhop(x1, y) - xhop(x, y1) - yhop(x, y), M.phase_modulus());
}

cplx phase_to_complex(std::int64_t phase, std::int64_t modulus) {
  const std::int64_t p = mod_floor(phase, modulus);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(modulus);
  return {std::cos(angle), std::sin(angle)};
}

HermitianOperator::HermitianOperator(int dimension, std::vector<int> row_ptr, std::vector<int> cols,
                                     std::vector<cplx> values)
    : n_(dimension), row_ptr_(std::move(row_ptr)), cols_(std::move(cols)), values_(std::move(values)) {
  if (row_ptr_.size() != static_cast<std::size_t>(n_) + 1 || cols_.size() != values_.size() ||
      static_cast<std::size_t>(row_ptr_.back()) != cols_.size()) {
    throw Error(ErrorCode::InvalidInput, "malformed compressed-row storage");
  }
}

cplx HermitianOperator::at(int row, int col) const {
  auto b = cols_.begin() + row_ptr_[static_cast<std::size_t>(row)];
  auto e = cols_.begin() + row_ptr_[static_cast<std::size_t>(row) + 1];
  auto it = std::lower_bound(b, e, col);
  if (it == e || *it != col) return {0.0, 0.0};
  return values_[static_cast<std::size_t>(it - cols_.begin())];
}

double HermitianOperator::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int p = row_ptr_[static_cast<std::size_t>(i)]; p < row_ptr_[static_cast<std::size_t>(i) + 1]; ++p) {
      const int j = cols_[static_cast<std::size_t>(p)];
      worst = std::max(worst, std::abs(values_[static_cast<std::size_t>(p)] - std::conj(at(j, i))));
    }
  }
  return worst;
}

double HermitianOperator::gershgorin_bound() const {
  double bound = 0.0;
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int p = row_ptr_[static_cast<std::size_t>(i)]; p < row_ptr_[static_cast<std::size_t>(i) + 1]; ++p)
      s += std::abs(values_[static_cast<std::size_t>(p)]);
    bound = std::max(bound, s);
  }
  return bound;
}

HermitianOperator HermitianOperator::from_dense_diagonal(const std::vector<double>& diag) {
  const int n = static_cast<int>(diag.size());
  std::vector<int> rp(static_cast<std::size_t>(n) + 1), cols(static_cast<std::size_t>(n));
  std::vector<cplx> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rp[static_cast<std::size_t>(i) + 1] = i + 1;
    cols[static_cast<std::size_t>(i)] = i;
    vals[static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(i)];
  }
  return HermitianOperator(n, std::move(rp), std::move(cols), std::move(vals));
}

HermitianOperator build_magnetic_laplacian(const LatticeModel& M) {
  const int N = M.N;
  const int n = M.dimension();
  const std::int64_t mod = M.phase_modulus();
  const std::vector<Link> links = lattice_links(M);

  for (int y = 0; y < N; ++y) {
    for (int x = 0; x < N; ++x) {
      if (plaquette_phase(M, links, x, y) != mod_floor(M.flux_quanta, mod)) {
        throw Error(ErrorCode::FluxInconsistency, "plaquette (" + std::to_string(x) + ", " + std::to_string(y) +
                                                      ") does not carry the uniform flux");
      }
    }
  }

  // Collect (row, col, value) then sort each row by column.
  std::vector<std::vector<std::pair<int, cplx>>> rows(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) rows[static_cast<std::size_t>(s)].emplace_back(s, cplx{4.0, 0.0});
  for (const Link& l : links) {
    const cplx w = phase_to_complex(l.phase, mod);
    rows[static_cast<std::size_t>(l.to)].emplace_back(l.from, -w);
    rows[static_cast<std::size_t>(l.from)].emplace_back(l.to, -std::conj(w));
  }
  std::vector<int> rp(static_cast<std::size_t>(n) + 1, 0), cols;
  std::vector<cplx> vals;
  cols.reserve(static_cast<std::size_t>(5 * n));
  vals.reserve(static_cast<std::size_t>(5 * n));
  for (int s = 0; s < n; ++s) {
    auto& r = rows[static_cast<std::size_t>(s)];
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0 && r[i].first == r[i - 1].first) {
        throw Error(ErrorCode::InvalidInput, "lattice too small: duplicate hop between two sites");
      }
      cols.push_back(r[i].first);
      vals.push_back(r[i].second);
    }
    rp[static_cast<std::size_t>(s) + 1] = static_cast<int>(cols.size());
  }
  return HermitianOperator(n, std::move(rp), std::move(cols), std::move(vals));
}

}  // namespace orbihall::numerics
