#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gyb/matrix.hpp"

namespace gyb {

/// Column-compressed copy of a small dense operator. Exact zeros are dropped,
/// which is what makes the catalog operators (two nonzeros per column) cheap
/// to apply.
class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(const ComplexMatrix& dense);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  struct Entry {
    std::uint32_t row;
    Complex value;
  };
  std::span<const Entry> column(std::size_t c) const noexcept {
    return {values_.data() + col_start_[c], col_start_[c + 1] - col_start_[c]};
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> col_start_;
  std::vector<Entry> values_;
};

/// out = (I_{d^offset} ⊗ op ⊗ I_rest) in, on V^{⊗factors}. op spans
/// log_d(op.dim()) factors starting at the 0-based factor `offset`.
/// `in` and `out` must not alias.
void apply_embedded(const SparseOperator& op, std::size_t d, std::size_t factors, std::size_t offset,
                    std::span<const Complex> in, std::span<Complex> out);

/// One letter of a word: an operator placed on factors offset .. offset+span−1.
struct EmbeddedStep {
  const SparseOperator* op = nullptr;
  std::size_t offset = 0;
};

/// tr(step_L ∘ … ∘ step_1 ∘ (P_1 ⊗ P_2 ⊗ …)) on V^{⊗factors}. The right-hand
/// tensor product P must cover exactly `factors` factors; each P_t spans
/// log_d(P_t.dim()) of them.
struct TraceProblem {
  std::size_t d = 2;
  std::size_t factors = 0;
  std::vector<EmbeddedStep> steps;
  std::vector<ComplexMatrix> right;
};

/// Single-threaded reference: sums ⟨e_b| … |e_b⟩ over all basis vectors in order.
Complex trace_serial(const TraceProblem& problem);

/// OpenMP version of trace_serial. Per-basis-vector diagonal entries are
/// computed in parallel and summed in index order, so the result is
/// bit-identical to trace_serial for any thread count.
Complex trace_omp(const TraceProblem& problem);

/// Applies the steps (first step first) to v.
std::vector<Complex> apply_steps(const TraceProblem& problem, std::vector<Complex> v);

/// (P_1 ⊗ P_2 ⊗ …) e_basis.
std::vector<Complex> product_column(const TraceProblem& problem, std::size_t basis);

/// Validates that the right-hand factors and steps fit the problem; throws ShapeError.
void validate(const TraceProblem& problem);

}  // namespace gyb
