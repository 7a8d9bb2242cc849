#include "gyb/kernels.hpp"

#include <string>

#include "gyb/errors.hpp"
#include "gyb/tensorops.hpp"

namespace gyb {

SparseOperator::SparseOperator(const ComplexMatrix& dense) : dim_(dense.dim()), col_start_(dense.dim() + 1, 0) {
  for (std::size_t c = 0; c < dim_; ++c) {
    col_start_[c] = values_.size();
    for (std::size_t r = 0; r < dim_; ++r) {
      if (dense(r, c) != Complex{}) values_.push_back({static_cast<std::uint32_t>(r), dense(r, c)});
    }
  }
  col_start_[dim_] = values_.size();
}

void apply_embedded(const SparseOperator& op, std::size_t d, std::size_t factors, std::size_t offset,
                    std::span<const Complex> in, std::span<Complex> out) {
  const std::size_t span = factor_count(op.dim(), d);
  const std::size_t high = ipow(d, offset);
  const std::size_t mid = op.dim();
  const std::size_t low = ipow(d, factors - offset - span);
  std::fill(out.begin(), out.end(), Complex{});
  for (std::size_t h = 0; h < high; ++h) {
    const std::size_t base = h * mid;
    for (std::size_t c = 0; c < mid; ++c) {
      const Complex* src = in.data() + (base + c) * low;
      for (const auto& [row, value] : op.column(c)) {
        Complex* dst = out.data() + (base + row) * low;
        for (std::size_t l = 0; l < low; ++l) dst[l] += value * src[l];
      }
    }
  }
}

void validate(const TraceProblem& problem) {
  std::size_t covered = 0;
  for (const auto& f : problem.right) covered += factor_count(f.dim(), problem.d);
  if (covered != problem.factors) {
    throw ShapeError("right-hand product covers " + std::to_string(covered) + " of " +
                     std::to_string(problem.factors) + " factors");
  }
  for (const auto& step : problem.steps) {
    if (step.op == nullptr) throw ShapeError("empty step operator");
    const std::size_t span = factor_count(step.op->dim(), problem.d);
    if (step.offset + span > problem.factors) throw ShapeError("step extends past the last factor");
  }
}

std::vector<Complex> product_column(const TraceProblem& problem, std::size_t basis) {
  // column `basis` of P_1 ⊗ P_2 ⊗ … is the Kronecker product of the factor columns
  std::vector<std::size_t> sub(problem.right.size());
  std::size_t rest = basis;
  for (std::size_t t = problem.right.size(); t-- > 0;) {
    const std::size_t dim = problem.right[t].dim();
    sub[t] = rest % dim;
    rest /= dim;
  }
  std::vector<Complex> v{Complex{1.0}};
  for (std::size_t t = 0; t < problem.right.size(); ++t) {
    const auto& f = problem.right[t];
    std::vector<Complex> next;
    next.reserve(v.size() * f.dim());
    for (const Complex& x : v) {
      for (std::size_t r = 0; r < f.dim(); ++r) next.push_back(x * f(r, sub[t]));
    }
    v = std::move(next);
  }
  return v;
}

std::vector<Complex> apply_steps(const TraceProblem& problem, std::vector<Complex> v) {
  std::vector<Complex> scratch(v.size());
  for (const auto& step : problem.steps) {
    apply_embedded(*step.op, problem.d, problem.factors, step.offset, v, scratch);
    v.swap(scratch);
  }
  return v;
}

namespace {

Complex diagonal_entry(const TraceProblem& problem, std::size_t basis) {
  return apply_steps(problem, product_column(problem, basis))[basis];
}

}  // namespace

Complex trace_serial(const TraceProblem& problem) {
  validate(problem);
  const std::size_t dim = ipow(problem.d, problem.factors);
  Complex acc{};
  for (std::size_t b = 0; b < dim; ++b) acc += diagonal_entry(problem, b);
  return acc;
}

Complex trace_omp(const TraceProblem& problem) {
  validate(problem);
  const std::size_t dim = ipow(problem.d, problem.factors);
  std::vector<Complex> diag(dim);
  const auto count = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < count; ++b) {
    diag[static_cast<std::size_t>(b)] = diagonal_entry(problem, static_cast<std::size_t>(b));
  }
  Complex acc{};
  for (const Complex& x : diag) acc += x;
  return acc;
}

}  // namespace gyb
