#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gyb/braid.hpp"
#include "gyb/catalog.hpp"
#include "gyb/matrix.hpp"

namespace gyb {

/// Enhancement tuple S = (R, μ, α, β) with the two partial-trace defects
///
///   defect_± = Sp_{k,m}(R^{±1} ∘ μ^{⊗k}) − α^{±1} β μ^{⊗(k−m)}
///
/// cached at construction. μ^{⊗k} is required to commute with R.
class EgybOperator {
 public:
  const GybOperator& op() const noexcept { return op_; }
  const ComplexMatrix& mu() const noexcept { return mu_; }
  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }
  const ComplexMatrix& defect_plus() const noexcept { return defect_plus_; }
  const ComplexMatrix& defect_minus() const noexcept { return defect_minus_; }
  double condition_i_residual() const noexcept { return condition_i_residual_; }

  /// Scale c with P_S = c·T_S, known only for the catalog enhancements that
  /// come with a normalization (type1, type3, r232).
  std::optional<double> p_normalization() const noexcept { return p_normalization_; }

 private:
  friend EgybOperator make_egyb(GybOperator, ComplexMatrix, Complex, Complex, double);
  friend EgybOperator catalog_enhancement(OperatorId, double);

  EgybOperator(GybOperator op, ComplexMatrix mu, Complex alpha, Complex beta)
      : op_(std::move(op)), mu_(std::move(mu)), alpha_(alpha), beta_(beta) {}

  GybOperator op_;
  ComplexMatrix mu_;
  Complex alpha_;
  Complex beta_;
  ComplexMatrix defect_plus_;
  ComplexMatrix defect_minus_;
  double condition_i_residual_ = 0.0;
  std::optional<double> p_normalization_;
};

/// Throws EnhancementError for a non-invertible μ, zero α or β, a μ of the
/// wrong dimension, or ‖μ^{⊗k}R − Rμ^{⊗k}‖_max >= tol.
EgybOperator make_egyb(GybOperator op, ComplexMatrix mu, Complex alpha, Complex beta,
                       double tol = kDefaultTolerance);

/// The enhancement that accompanies each catalog operator:
/// type1, type2: μ = Id, α = e^{iπ/4}, β = 1
/// type3:        μ = Id, α = 1,        β = √2
/// r232:         μ = Id, α = 1,        β = 2√2
EgybOperator catalog_enhancement(OperatorId id, double theta = 0.0);

const ComplexMatrix& defect(const EgybOperator& s, int sign);

/// True iff dft vanishes (within tol) on every entry whose row and column
/// agree in the last tensor factor.
bool check_offdiagonal_last(const ComplexMatrix& dft, const TensorShape& shape, double tol = kDefaultTolerance);

struct PerpendicularSample {
  double max_abs_trace = 0.0;
  /// Braid attaining the maximum (for reporting a witness).
  std::optional<BraidWord> witness;
};

/// max over `samples` random words ξ ∈ B_n (length <= max_len) and both signs of
/// |tr(ρ_n(ξ) ∘ (μ^{⊗m(n−1)} ⊗ defect_±))|. Requires n >= 2.
PerpendicularSample check_perpendicular_sampled(const EgybOperator& s, int n, int samples, std::size_t max_len,
                                                std::uint64_t seed);

enum class Verdict { Strong, Structural, SampledOnly, Failed };
std::string_view to_string(Verdict v);

struct EnhancementReport {
  double condition_i_residual = 0.0;
  double defect_plus_norm = 0.0;
  double defect_minus_norm = 0.0;
  /// Both defects act off-diagonally on the last factor.
  bool offdiagonal_ok = false;
  /// Outer-diagonality of R and R⁻¹; empty when the check does not apply
  /// (any type other than (2,3,1)).
  std::optional<bool> outer_diagonal;
  double sampled_perp_max = 0.0;
  Verdict verdict = Verdict::Failed;
};

struct ReportOptions {
  int min_strands = 2;
  int max_strands = 4;
  int samples_per_n = 100;
  std::size_t max_len = 12;
  std::uint64_t seed = 20260101;
  double tol = kDefaultTolerance;
  /// Sampled strand counts whose representation space exceeds this are skipped.
  std::size_t max_dim = 2048;
};

EnhancementReport enhancement_report(const EgybOperator& s, const ReportOptions& options = {});

}  // namespace gyb
