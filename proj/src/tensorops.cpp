#include "gyb/tensorops.hpp"

#include <Eigen/Dense>
#include <string>

#include "gyb/errors.hpp"

namespace gyb {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  return {m.entries().data(), n, n};
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i1 = 0; i1 < na; ++i1) {
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const Complex s = a(i1, j1);
      if (s == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < nb; ++i2) {
        for (std::size_t j2 = 0; j2 < nb; ++j2) out(i1 * nb + i2, j1 * nb + j2) = s * b(i2, j2);
      }
    }
  }
  return out;
}

ComplexMatrix tensor_power(const ComplexMatrix& f, std::size_t count) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < count; ++i) out = kron(out, f);
  return out;
}

ComplexMatrix sp(const ComplexMatrix& f, const TensorShape& shape, std::size_t m) {
  if (m == 0 || m >= shape.n) {
    throw InvalidPartialTrace("partial trace over " + std::to_string(m) + " of " +
                              std::to_string(shape.n) + " factors");
  }
  if (!shape.compatible(f)) {
    throw ShapeError("matrix of dim " + std::to_string(f.dim()) + " is not an endomorphism of V^" +
                     std::to_string(shape.n) + " with dim V = " + std::to_string(shape.d));
  }
  const std::size_t traced = ipow(shape.d, m);
  const std::size_t kept = ipow(shape.d, shape.n - m);
  ComplexMatrix out(kept);
  for (std::size_t a = 0; a < kept; ++a) {
    for (std::size_t b = 0; b < kept; ++b) {
      Complex acc{};
      for (std::size_t l = 0; l < traced; ++l) acc += f(a * traced + l, b * traced + l);
      out(a, b) = acc;
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& f) {
  const std::size_t n = f.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(f(i, j));
  }
  return out;
}

Complex mat_trace(const ComplexMatrix& f) {
  Complex acc{};
  for (std::size_t i = 0; i < f.dim(); ++i) acc += f(i, i);
  return acc;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

ComplexMatrix mat_inverse(const ComplexMatrix& a, double tol) {
  const std::size_t n = a.dim();
  if (n == 0) throw ShapeError("cannot invert an empty matrix");
  Eigen::FullPivLU<EigenMatrix> lu(as_eigen(a));
  if (!lu.isInvertible()) throw SingularMatrix("matrix is singular");
  EigenMatrix inv = lu.inverse();
  std::vector<Complex> entries(inv.data(), inv.data() + inv.size());
  ComplexMatrix out(n, std::move(entries));
  const double residual = max_abs_diff(a * out, ComplexMatrix::identity(n));
  if (!(residual <= tol)) {
    throw SingularMatrix("inverse residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return out;
}

Complex trace_inner(const ComplexMatrix& f, const ComplexMatrix& g) {
  if (f.dim() != g.dim()) throw ShapeError("trace inner product: dimension mismatch");
  // tr(f* g) = Σ_ij conj(f_ij) g_ij
  Complex acc{};
  auto ef = f.entries();
  auto eg = g.entries();
  for (std::size_t i = 0; i < ef.size(); ++i) acc += std::conj(ef[i]) * eg[i];
  return acc;
}

std::size_t factor_count(std::size_t dim, std::size_t d) {
  if (d < 2) {
    if (d == 1 && dim == 1) return 0;
    throw ShapeError("factor_count needs d >= 2");
  }
  std::size_t k = 0;
  std::size_t acc = 1;
  while (acc < dim) {
    acc *= d;
    ++k;
  }
  if (acc != dim) {
    throw ShapeError(std::to_string(dim) + " is not a power of " + std::to_string(d));
  }
  return k;
}

ComplexMatrix tensor_embed(const ComplexMatrix& f, std::size_t position, const TensorShape& shape) {
  const std::size_t k = factor_count(f.dim(), shape.d);
  if (position == 0 || position + k - 1 > shape.n) {
    throw ShapeError("cannot place " + std::to_string(k) + " factors at position " +
                     std::to_string(position) + " of " + std::to_string(shape.n));
  }
  const std::size_t left = ipow(shape.d, position - 1);
  const std::size_t right = ipow(shape.d, shape.n - (position - 1) - k);
  const std::size_t mid = f.dim();
  ComplexMatrix out(shape.dim());
  for (std::size_t h = 0; h < left; ++h) {
    for (std::size_t r = 0; r < mid; ++r) {
      for (std::size_t c = 0; c < mid; ++c) {
        const Complex s = f(r, c);
        if (s == Complex{}) continue;
        for (std::size_t l = 0; l < right; ++l) {
          out((h * mid + r) * right + l, (h * mid + c) * right + l) = s;
        }
      }
    }
  }
  return out;
}

double unitarity_residual(const ComplexMatrix& f) {
  return max_abs_diff(f * dagger(f), ComplexMatrix::identity(f.dim()));
}

}  // namespace gyb
