#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "sidi/graph.hpp"

namespace sidi {

inline constexpr int kMaxMatrixDimension = 512;

template <typename Scalar>
using ComplexSpectrum = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Real polynomial, coefficients in ascending degree order.
template <typename Scalar>
struct Polynomial {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> coeffs;

  Eigen::Index degree() const { return coeffs.size() - 1; }
  Scalar leading() const { return coeffs(coeffs.size() - 1); }

  template <typename T>
  T operator()(const T& x) const {
    T acc = T(coeffs(degree()));
    for (Eigen::Index k = degree() - 1; k >= 0; --k) acc = acc * x + T(coeffs(k));
    return acc;
  }
};

class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, int iterations, double worst_residual,
                 std::vector<std::complex<double>> partial_roots)
      : std::runtime_error(what),
        iterations_(iterations),
        worst_residual_(worst_residual),
        partial_roots_(std::move(partial_roots)) {}

  int iterations() const { return iterations_; }
  double worst_residual() const { return worst_residual_; }
  const std::vector<std::complex<double>>& partial_roots() const { return partial_roots_; }

 private:
  int iterations_;
  double worst_residual_;
  std::vector<std::complex<double>> partial_roots_;
};

/// det(xI - A), computed from the recurrence on an orthogonally similar upper
/// Hessenberg form of A.
template <typename Derived>
Polynomial<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  static_assert(!Eigen::NumTraits<Scalar>::IsComplex, "char_poly expects a real matrix");

  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix must be square");
  if (a.rows() > kMaxMatrixDimension)
    throw std::invalid_argument("char_poly: matrix dimension exceeds " +
                                std::to_string(kMaxMatrixDimension));
  const Eigen::Index n = a.rows();

  Matrix h = a;
  if (n > 2) {
    Eigen::HessenbergDecomposition<Matrix> hess(h);
    h = hess.matrixH();
  }

  // p[k] = char poly of the leading k x k block of h.
  std::vector<Vector> p(static_cast<std::size_t>(n) + 1);
  p[0] = Vector::Ones(1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Eigen::Index col = k - 1;
    Vector next = Vector::Zero(k + 1);
    next.tail(k) += p[k - 1];
    next.head(k) -= h(col, col) * p[k - 1];
    Scalar sub = Scalar(1);
    for (Eigen::Index i = k - 1; i >= 1; --i) {
      sub *= h(i, i - 1);
      if (sub == Scalar(0)) break;
      const Scalar coef = h(i - 1, col) * sub;
      next.head(i) -= coef * p[i - 1];
    }
    p[k] = std::move(next);
  }
  return Polynomial<Scalar>{std::move(p[n])};
}

struct RootFinderOptions {
  int max_iterations = 1000;
  // Acceptance bound: |p(z)| <= residual_tolerance * (1 + |z|)^degree.
  double residual_tolerance = 1e-10;
  // A root is frozen once its Aberth correction falls below this (relative).
  double step_tolerance = 1e-13;
  // Angular offset of the starting ring.
  double ring_offset = 0.4;
};

/// All complex roots with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration from a deterministic ring. Exact zero roots are split off first.
template <typename Scalar>
ComplexSpectrum<Scalar> poly_roots(const Polynomial<Scalar>& poly, const RootFinderOptions& opt = {}) {
  using Complex = std::complex<Scalar>;
  using std::abs;
  using std::pow;

  if (poly.coeffs.size() < 2) throw std::invalid_argument("poly_roots: degree must be at least 1");
  if (poly.leading() == Scalar(0))
    throw std::invalid_argument("poly_roots: leading coefficient is zero");

  const Eigen::Index degree = poly.degree();
  Polynomial<Scalar> monic{poly.coeffs / poly.leading()};

  Eigen::Index zeros = 0;
  while (zeros < degree && monic.coeffs(zeros) == Scalar(0)) ++zeros;
  Polynomial<Scalar> q{monic.coeffs.tail(degree + 1 - zeros)};
  const Eigen::Index m = q.degree();

  ComplexSpectrum<Scalar> roots = ComplexSpectrum<Scalar>::Zero(degree);
  if (m == 0) return roots;

  Scalar radius = Scalar(0);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Scalar c = abs(q.coeffs(k));
    if (c > Scalar(0)) radius = std::max(radius, Scalar(pow(c, Scalar(1) / Scalar(m - k))));
  }
  if (radius == Scalar(0)) radius = Scalar(1);

  std::vector<Complex> z(static_cast<std::size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k) {
    const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(k) / Scalar(m) +
                         Scalar(opt.ring_offset);
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  // p(x) and p'(x) by Horner.
  auto eval = [&q, m](const Complex& x, Complex& value, Complex& deriv) {
    value = Complex(q.coeffs(m));
    deriv = Complex(0);
    for (Eigen::Index k = m - 1; k >= 0; --k) {
      deriv = deriv * x + value;
      value = value * x + Complex(q.coeffs(k));
    }
  };

  std::vector<char> done(z.size(), 0);
  int iteration = 0;
  for (; iteration < opt.max_iterations; ++iteration) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      Complex value, deriv;
      eval(z[i], value, deriv);
      if (value == Complex(0)) {
        done[i] = 1;
        continue;
      }
      Complex repulsion(0);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
      }
      Complex step;
      if (deriv == Complex(0)) {
        // stationary point: nudge off it
        step = Complex(Scalar(0), Eigen::NumTraits<Scalar>::dummy_precision()) * (Scalar(1) + abs(z[i]));
      } else {
        const Complex ratio = value / deriv;
        step = ratio / (Complex(1) - ratio * repulsion);
      }
      z[i] -= step;
      if (!std::isfinite(abs(z[i]))) break;
      if (abs(step) <= Scalar(opt.step_tolerance) * (Scalar(1) + abs(z[i])))
        done[i] = 1;
      else
        all_done = false;
    }
    if (all_done) break;
  }

  double worst = 0.0;
  bool ok = true;
  for (const Complex& r : z) {
    Complex value, deriv;
    eval(r, value, deriv);
    const double res = static_cast<double>(abs(value));
    const double bound = opt.residual_tolerance *
                         std::pow(1.0 + static_cast<double>(abs(r)), static_cast<double>(m));
    if (!std::isfinite(res) || res > bound) ok = false;
    worst = std::max(worst, std::isfinite(res) ? res : std::numeric_limits<double>::infinity());
  }
  if (!ok) {
    std::vector<std::complex<double>> partial;
    for (const Complex& r : z) partial.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    throw NumericFailure("poly_roots: no convergence after " + std::to_string(iteration) +
                             " iterations (worst residual " + std::to_string(worst) + ")",
                         iteration, worst, std::move(partial));
  }
  for (Eigen::Index k = 0; k < m; ++k) roots(zeros + k) = z[static_cast<std::size_t>(k)];
  return roots;
}

/// Sum of |Re z| over the spectrum.
template <typename Derived>
auto energy(const Eigen::MatrixBase<Derived>& spectrum) {
  return spectrum.real().cwiseAbs().sum();
}

/// Sum of |Im z| over the spectrum.
template <typename Derived>
auto iota_energy(const Eigen::MatrixBase<Derived>& spectrum) {
  return spectrum.imag().cwiseAbs().sum();
}

/// The n roots of x^n - s, evaluated directly.
ComplexSpectrum<double> cycle_spectrum(int length, Sign sign);

/// Spectrum of A(g). The adjacency matrix is block triangular over strong
/// components, so each component is handled separately: singletons give 0,
/// signed cycles use cycle_spectrum, anything else goes through
/// char_poly + poly_roots. Ordered by argument, then modulus.
ComplexSpectrum<double> eigenvalues(const SignedDigraph& g, const RootFinderOptions& opt = {});

/// Spectrum of A(g) from char_poly + poly_roots on the whole matrix, with no
/// structural shortcuts.
ComplexSpectrum<double> eigenvalues_dense(const SignedDigraph& g, const RootFinderOptions& opt = {});

/// Iota energy summed over strong components.
double iota_energy_of_graph(const SignedDigraph& g, const RootFinderOptions& opt = {});

/// Sorts by argument in [0, 2pi) then by modulus. Arguments within 1e-9 of
/// each other (or of 2pi) are treated as equal.
void sort_by_argument(ComplexSpectrum<double>& spectrum);

}  // namespace sidi
