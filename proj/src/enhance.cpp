#include "gyb/enhance.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gyb/errors.hpp"
#include "gyb/kernels.hpp"
#include "gyb/tensorops.hpp"

namespace gyb {

EgybOperator make_egyb(GybOperator op, ComplexMatrix mu, Complex alpha, Complex beta, double tol) {
  const auto& t = op.gtype();
  if (mu.dim() != t.d) throw EnhancementError("mu must act on V (dim " + std::to_string(t.d) + ")");
  if (alpha == Complex{} || beta == Complex{}) throw EnhancementError("alpha and beta must be invertible");
  try {
    (void)mat_inverse(mu, tol);
  } catch (const SingularMatrix&) {
    throw EnhancementError("mu is not invertible");
  }

  const ComplexMatrix mu_k = tensor_power(mu, t.k);
  const double commutator = max_abs_diff(mu_k * op.r(), op.r() * mu_k);
  if (!(commutator < tol)) {
    throw EnhancementError("mu^(k) does not commute with R (residual " + std::to_string(commutator) + ")");
  }

  const TensorShape shape{t.d, t.k};
  const ComplexMatrix mu_rest = tensor_power(mu, t.k - t.m);
  EgybOperator s(std::move(op), std::move(mu), alpha, beta);
  s.condition_i_residual_ = commutator;
  s.defect_plus_ = sp(s.op_.r() * mu_k, shape, t.m) - (alpha * beta) * mu_rest;
  s.defect_minus_ = sp(s.op_.r_inv() * mu_k, shape, t.m) - (beta / alpha) * mu_rest;
  return s;
}

EgybOperator catalog_enhancement(OperatorId id, double theta) {
  GybOperator op = build_catalog(id, theta);
  const ComplexMatrix mu = ComplexMatrix::identity(op.gtype().d);
  const Complex quarter_turn = std::polar(1.0, std::numbers::pi / 4);
  switch (id) {
    case OperatorId::Type1: {
      auto s = make_egyb(std::move(op), mu, quarter_turn, 1.0);
      s.p_normalization_ = 0.25;
      return s;
    }
    case OperatorId::Type2:
      return make_egyb(std::move(op), mu, quarter_turn, 1.0);
    case OperatorId::Type3: {
      auto s = make_egyb(std::move(op), mu, 1.0, std::numbers::sqrt2);
      s.p_normalization_ = 1.0 / (2.0 * std::numbers::sqrt2);
      return s;
    }
    case OperatorId::R232: {
      auto s = make_egyb(std::move(op), mu, 1.0, 2.0 * std::numbers::sqrt2);
      s.p_normalization_ = std::numbers::sqrt2;
      return s;
    }
    case OperatorId::Custom: break;
  }
  throw DomainError("custom operators have no catalog enhancement");
}

const ComplexMatrix& defect(const EgybOperator& s, int sign) {
  if (sign == 1) return s.defect_plus();
  if (sign == -1) return s.defect_minus();
  throw DomainError("defect sign must be +1 or -1");
}

bool check_offdiagonal_last(const ComplexMatrix& dft, const TensorShape& shape, double tol) {
  if (!shape.compatible(dft)) throw ShapeError("defect does not match tensor shape");
  const std::size_t d = shape.d;
  for (std::size_t row = 0; row < dft.dim(); ++row) {
    for (std::size_t col = 0; col < dft.dim(); ++col) {
      if (row % d == col % d && std::abs(dft(row, col)) >= tol) return false;
    }
  }
  return true;
}

namespace {

/// tr(ρ_n(ξ) ∘ (μ^{⊗m(n−1)} ⊗ dft)) via the matrix-free kernel.
Complex perpendicular_trace(const EgybOperator& s, const BraidWord& xi, const ComplexMatrix& dft,
                            const SparseOperator& r, const SparseOperator& r_inv) {
  const auto& t = s.op().gtype();
  const auto n = static_cast<std::size_t>(xi.strands());
  TraceProblem problem;
  problem.d = t.d;
  problem.factors = t.k + t.m * (n - 2);
  problem.right.assign(t.m * (n - 1), s.mu());
  problem.right.push_back(dft);
  for (int g : xi.letters()) {
    problem.steps.push_back({g > 0 ? &r : &r_inv, t.m * static_cast<std::size_t>(std::abs(g) - 1)});
  }
  return trace_serial(problem);
}

}  // namespace

PerpendicularSample check_perpendicular_sampled(const EgybOperator& s, int n, int samples, std::size_t max_len,
                                                std::uint64_t seed) {
  if (n < 2) throw DomainError("perpendicularity is sampled on B_n with n >= 2");
  const SparseOperator r(s.op().r());
  const SparseOperator r_inv(s.op().r_inv());

  BraidSampler sampler(seed);
  std::vector<BraidWord> words;
  words.reserve(static_cast<std::size_t>(std::max(samples, 0)));
  for (int i = 0; i < samples; ++i) words.push_back(sampler.next(n, max_len));

  std::vector<double> worst(words.size(), 0.0);
  const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& xi = words[static_cast<std::size_t>(i)];
    const double plus = std::abs(perpendicular_trace(s, xi, s.defect_plus(), r, r_inv));
    const double minus = std::abs(perpendicular_trace(s, xi, s.defect_minus(), r, r_inv));
    worst[static_cast<std::size_t>(i)] = std::max(plus, minus);
  }

  PerpendicularSample out;
  for (std::size_t i = 0; i < worst.size(); ++i) {
    if (!out.witness || worst[i] > out.max_abs_trace) {
      out.max_abs_trace = worst[i];
      out.witness = words[i];
    }
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Strong: return "strong";
    case Verdict::Structural: return "structural";
    case Verdict::SampledOnly: return "sampled-only";
    case Verdict::Failed: return "failed";
  }
  return "failed";
}

EnhancementReport enhancement_report(const EgybOperator& s, const ReportOptions& options) {
  const auto& t = s.op().gtype();
  EnhancementReport report;
  report.condition_i_residual = s.condition_i_residual();
  report.defect_plus_norm = s.defect_plus().max_abs();
  report.defect_minus_norm = s.defect_minus().max_abs();

  const TensorShape defect_shape{t.d, t.k - t.m};
  report.offdiagonal_ok = check_offdiagonal_last(s.defect_plus(), defect_shape, options.tol) &&
                          check_offdiagonal_last(s.defect_minus(), defect_shape, options.tol);
  if (t == GybType{2, 3, 1}) report.outer_diagonal = check_outer_diagonal(s.op(), options.tol);

  for (int n = options.min_strands; n <= options.max_strands; ++n) {
    const std::size_t factors = t.k + t.m * static_cast<std::size_t>(n - 2);
    if (ipow(t.d, factors) > options.max_dim) break;
    const auto sample = check_perpendicular_sampled(s, n, options.samples_per_n, options.max_len,
                                                    options.seed + static_cast<std::uint64_t>(n));
    report.sampled_perp_max = std::max(report.sampled_perp_max, sample.max_abs_trace);
  }

  if (report.defect_plus_norm < options.tol && report.defect_minus_norm < options.tol) {
    report.verdict = Verdict::Strong;
  } else if (report.offdiagonal_ok && report.outer_diagonal.value_or(false)) {
    report.verdict = Verdict::Structural;
  } else if (report.sampled_perp_max < options.tol) {
    report.verdict = Verdict::SampledOnly;
  } else {
    report.verdict = Verdict::Failed;
  }
  return report;
}

}  // namespace gyb
