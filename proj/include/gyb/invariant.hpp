#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gyb/braid.hpp"
#include "gyb/enhance.hpp"
#include "gyb/kernels.hpp"

namespace gyb {

struct RepOptions {
  /// Largest representation space d^N evaluated without allow_large.
  /// 2048 admits B_10 for (2,3,1) operators and B_6 for (2,3,2).
  std::size_t max_dim = 2048;
  bool allow_large = false;
  /// Use the OpenMP trace kernel (false selects the serial reference).
  bool parallel = true;
};

/// Braid representation ρ_n for an enhancement S on V^{⊗N}, N = k + m(n−2)
/// (N = k − m for n = 1). Generator σ_i acts by R on factors
/// m(i−1)+1 … m(i−1)+k.
class RepContext {
 public:
  /// Throws ResourceCapError when d^N exceeds options.max_dim (unless
  /// allow_large), DomainError for n < 1.
  RepContext(EgybOperator s, int n, const RepOptions& options = {});

  const EgybOperator& enhancement() const noexcept { return s_; }
  int strands() const noexcept { return n_; }
  std::size_t factors() const noexcept { return factors_; }
  std::size_t dim() const noexcept { return dim_; }
  const RepOptions& options() const noexcept { return options_; }

  /// 0-based first factor touched by σ_i (i is 1-based).
  std::size_t generator_offset(int i) const noexcept {
    return s_.op().gtype().m * static_cast<std::size_t>(i - 1);
  }

  /// Trace problem for tr(ρ(b) ∘ μ^{⊗N}); valid while this context lives.
  TraceProblem trace_problem(const BraidWord& b) const;

 private:
  EgybOperator s_;
  int n_;
  std::size_t factors_;
  std::size_t dim_;
  RepOptions options_;
  SparseOperator r_;
  SparseOperator r_inv_;
};

/// ρ(b)v. The first letter of the word acts first. Throws ShapeError on a
/// length mismatch and DomainError when b has the wrong strand count.
std::vector<Complex> rep_apply(const RepContext& ctx, const BraidWord& b, std::span<const Complex> v);

enum class Normalization { Raw, P, Tilde };
std::string_view to_string(Normalization n);

struct InvariantResult {
  Complex value;
  OperatorId operator_id = OperatorId::Custom;
  std::optional<double> theta;
  BraidWord braid;
  int writhe = 0;
  Normalization normalization = Normalization::Raw;
};

/// T_S(ξ) = α^{−w(ξ)} β^{−n} tr(ρ_n(ξ) ∘ μ^{⊗N}).
InvariantResult t_invariant(const EgybOperator& s, const BraidWord& b, const RepOptions& options = {});

/// P_S = c·T_S for the catalog enhancements that carry a normalization;
/// throws DomainError otherwise.
InvariantResult p_invariant(const EgybOperator& s, const BraidWord& b, const RepOptions& options = {});

/// T̃_S = tr(μ)^{2m−k} T_S, multiplicative under disjoint union.
InvariantResult t_tilde(const EgybOperator& s, const BraidWord& b, const RepOptions& options = {});

InvariantResult evaluate(const EgybOperator& s, const BraidWord& b, Normalization normalization,
                         const RepOptions& options = {});

/// tr(μ)^{2m−k}.
Complex multiplicativity_factor(const EgybOperator& s);

/// β^{−n} tr(μ)^{k+m(n−2)}: the value on the n-component unlink.
Complex trivial_link_value(const EgybOperator& s, int n);

/// |x T(σ₁ξ) + x⁻¹ T(σ₁⁻¹ξ) − y T(ξ)|; requires b.strands() >= 2.
double skein_check(const EgybOperator& s, const BraidWord& b, Complex x, Complex y, const RepOptions& options = {});

/// |T(σ₁²ξ) − T(σ₁ξ) + T(ξ) − T(σ₁⁻¹ξ)|; requires a type2 enhancement.
double quartic_check_type2(const EgybOperator& s, const BraidWord& b, const RepOptions& options = {});

/// Max |T(variant) − T(ξ)| over `trials` random conjugations η⁻¹ξη and both
/// stabilizations ξσ_n^{±1}.
double markov_check(const EgybOperator& s, const BraidWord& b, int trials, std::uint64_t seed,
                    const RepOptions& options = {});

/// |T(ξ₁*ξ₂) − tr(μ)^{2m−k} T(ξ₁) T(ξ₂)|.
double multiplicativity_check(const EgybOperator& s, const BraidWord& b1, const BraidWord& b2,
                              const RepOptions& options = {});

/// |T̃(ξ₁*ξ₂) − T̃(ξ₁) T̃(ξ₂)|.
double tilde_multiplicativity_check(const EgybOperator& s, const BraidWord& b1, const BraidWord& b2,
                                    const RepOptions& options = {});

/// |¼ T_{type3}(ξ) − T_{r232}(ξ)|, with the type3 operator at angle theta.
double cross_operator_check(const BraidWord& b, double theta = 0.0, const RepOptions& options = {});

}  // namespace gyb
