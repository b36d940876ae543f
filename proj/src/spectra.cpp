#include "sidi/spectra.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

namespace sidi {

ComplexSpectrum<double> cycle_spectrum(int length, Sign sign) {
  if (length < 1) throw std::invalid_argument("cycle_spectrum: length must be positive");
  ComplexSpectrum<double> z(length);
  const double shift = sign == Sign::Positive ? 0.0 : 1.0;
  for (int k = 0; k < length; ++k) {
    const double angle = (2.0 * k + shift) * std::numbers::pi / length;
    z(k) = {std::cos(angle), std::sin(angle)};
  }
  return z;
}

void sort_by_argument(ComplexSpectrum<double>& spectrum) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  constexpr double kAngleTol = 1e-9;
  auto key_angle = [](const std::complex<double>& z) {
    if (std::abs(z) <= kAngleTol) return 0.0;
    double a = std::arg(z);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi - kAngleTol) a = 0.0;
    return a;
  };
  std::vector<std::complex<double>> v(spectrum.data(), spectrum.data() + spectrum.size());
  std::ranges::stable_sort(v, [&](const auto& a, const auto& b) {
    const double ta = key_angle(a), tb = key_angle(b);
    if (std::abs(ta - tb) > kAngleTol) return ta < tb;
    return std::abs(a) < std::abs(b);
  });
  for (std::size_t i = 0; i < v.size(); ++i) spectrum(static_cast<Eigen::Index>(i)) = v[i];
}

ComplexSpectrum<double> eigenvalues(const SignedDigraph& g, const RootFinderOptions& opt) {
  std::vector<std::complex<double>> all;
  all.reserve(static_cast<std::size_t>(g.n_vertices()));
  for (const SignedDigraph& comp : strong_components(g)) {
    ComplexSpectrum<double> part;
    if (comp.n_vertices() == 1) {
      part = ComplexSpectrum<double>::Zero(1);
    } else if (auto c = as_signed_cycle(comp)) {
      part = cycle_spectrum(c->length, c->sign);
    } else {
      part = poly_roots(char_poly(adjacency_matrix<double>(comp)), opt);
    }
    all.insert(all.end(), part.data(), part.data() + part.size());
  }
  ComplexSpectrum<double> z = Eigen::Map<ComplexSpectrum<double>>(all.data(), static_cast<Eigen::Index>(all.size()));
  sort_by_argument(z);
  return z;
}

ComplexSpectrum<double> eigenvalues_dense(const SignedDigraph& g, const RootFinderOptions& opt) {
  ComplexSpectrum<double> z = poly_roots(char_poly(adjacency_matrix<double>(g)), opt);
  sort_by_argument(z);
  return z;
}

double iota_energy_of_graph(const SignedDigraph& g, const RootFinderOptions& opt) {
  double total = 0.0;
  for (const SignedDigraph& comp : strong_components(g)) {
    if (comp.n_vertices() == 1) continue;
    if (auto c = as_signed_cycle(comp)) {
      total += iota_energy(cycle_spectrum(c->length, c->sign));
    } else {
      total += iota_energy(poly_roots(char_poly(adjacency_matrix<double>(comp)), opt));
    }
  }
  return total;
}

}  // namespace sidi
