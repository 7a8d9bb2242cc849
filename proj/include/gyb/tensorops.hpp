#pragma once

#include <cstddef>
#include <span>

#include "gyb/matrix.hpp"

namespace gyb {

/// Kronecker product a ⊗ b; row/column index of the result is (i_a, i_b)
/// in lexicographic order.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// f^{⊗count}; the 1×1 identity for count == 0.
ComplexMatrix tensor_power(const ComplexMatrix& f, std::size_t count);

/// Extended operator trace: contracts the last m tensor factors of f, an
/// endomorphism of V^{⊗shape.n}. Result lives on V^{⊗(n−m)}.
///
/// result(a, b) = Σ_l f(a·d^m + l, b·d^m + l)
///
/// Throws InvalidPartialTrace when m == 0 or m >= shape.n, ShapeError when
/// f does not match shape.
ComplexMatrix sp(const ComplexMatrix& f, const TensorShape& shape, std::size_t m);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& f);

Complex mat_trace(const ComplexMatrix& f);

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Inverse via LU with full pivoting. Throws SingularMatrix when the residual
/// ‖A·A⁻¹ − I‖_max exceeds tol.
ComplexMatrix mat_inverse(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// tr(f* ∘ g).
Complex trace_inner(const ComplexMatrix& f, const ComplexMatrix& g);

/// Places f (acting on k = log_d f.dim() factors) on factors
/// position .. position+k−1 (1-based) of V^{⊗shape.n}. Equals
/// kron(I, kron(f, I)) but writes the result directly.
ComplexMatrix tensor_embed(const ComplexMatrix& f, std::size_t position, const TensorShape& shape);

/// Number of factors k with d^k == dim; throws ShapeError if dim is not a power of d.
std::size_t factor_count(std::size_t dim, std::size_t d);

/// ‖f·f* − I‖_max.
double unitarity_residual(const ComplexMatrix& f);

}  // namespace gyb
