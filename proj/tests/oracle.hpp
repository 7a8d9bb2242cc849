#pragma once

// Test-only reference paths. Nothing here calls into the matrix-free kernels
// or tensor_embed; dense operators are assembled from kron() alone.

#include <cmath>
#include <cstdint>
#include <random>

#include "gyb/braid.hpp"
#include "gyb/enhance.hpp"
#include "gyb/matrix.hpp"
#include "gyb/tensorops.hpp"

namespace gyb::testing {

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix out(dim);
  for (auto& x : out.entries()) x = Complex(gauss(rng), gauss(rng));
  return out;
}

/// Gram-Schmidt on a Gaussian matrix; columns are orthonormal.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix a = random_matrix(dim, rng);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot{};
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(a(r, p)) * a(r, c);
      for (std::size_t r = 0; r < dim; ++r) a(r, c) -= dot * a(r, p);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(a(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) a(r, c) /= norm;
  }
  return a;
}

/// I_{d^left} ⊗ f ⊗ I_{d^right} by two Kronecker products.
inline ComplexMatrix kron_embed(const ComplexMatrix& f, std::size_t d, std::size_t left, std::size_t right) {
  return kron(kron(ComplexMatrix::identity(ipow(d, left)), f), ComplexMatrix::identity(ipow(d, right)));
}

inline std::size_t dense_factors(const GybType& t, int n) {
  return n == 1 ? t.k - t.m : t.k + t.m * static_cast<std::size_t>(n - 2);
}

/// Dense ρ_n(ξ), first letter acting first.
inline ComplexMatrix dense_rep(const GybOperator& op, const BraidWord& b) {
  const auto& t = op.gtype();
  const std::size_t factors = dense_factors(t, b.strands());
  ComplexMatrix out = ComplexMatrix::identity(ipow(t.d, factors));
  for (int g : b.letters()) {
    const std::size_t left = t.m * static_cast<std::size_t>(std::abs(g) - 1);
    const ComplexMatrix& r = g > 0 ? op.r() : op.r_inv();
    out = kron_embed(r, t.d, left, factors - left - t.k) * out;
  }
  return out;
}

/// α^{−w} β^{−n} tr(ρ(ξ) μ^{⊗N}) from dense matrices.
inline Complex dense_invariant(const EgybOperator& s, const BraidWord& b) {
  const auto& t = s.op().gtype();
  const std::size_t factors = dense_factors(t, b.strands());
  const Complex trace = mat_trace(dense_rep(s.op(), b) * tensor_power(s.mu(), factors));
  return std::pow(s.alpha(), -writhe(b)) * std::pow(s.beta(), -b.strands()) * trace;
}

}  // namespace gyb::testing
