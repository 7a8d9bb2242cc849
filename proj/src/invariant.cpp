#include "gyb/invariant.hpp"

#include <cmath>
#include <string>

#include "gyb/errors.hpp"
#include "gyb/tensorops.hpp"

namespace gyb {

namespace {

std::size_t rep_factors(const GybType& t, int n) {
  return n == 1 ? t.k - t.m : t.k + t.m * static_cast<std::size_t>(n - 2);
}

Complex int_power(Complex z, long long e) {
  Complex out{1.0};
  const Complex base = e < 0 ? Complex{1.0} / z : z;
  for (long long i = 0; i < std::llabs(e); ++i) out *= base;
  return out;
}

}  // namespace

RepContext::RepContext(EgybOperator s, int n, const RepOptions& options)
    : s_(std::move(s)), n_(n), factors_(0), dim_(0), options_(options) {
  if (n < 1) throw DomainError("representation needs at least one strand");
  const auto& t = s_.op().gtype();
  factors_ = rep_factors(t, n);
  dim_ = ipow(t.d, factors_);
  if (dim_ > options_.max_dim && !options_.allow_large) {
    throw ResourceCapError("B_" + std::to_string(n) + " acts on a space of dimension " + std::to_string(dim_) +
                           ", above the cap of " + std::to_string(options_.max_dim));
  }
  r_ = SparseOperator(s_.op().r());
  r_inv_ = SparseOperator(s_.op().r_inv());
}

TraceProblem RepContext::trace_problem(const BraidWord& b) const {
  if (b.strands() != n_) {
    throw DomainError("braid on " + std::to_string(b.strands()) + " strands used with B_" + std::to_string(n_));
  }
  TraceProblem problem;
  problem.d = s_.op().gtype().d;
  problem.factors = factors_;
  problem.right.assign(factors_, s_.mu());
  problem.steps.reserve(b.length());
  for (int g : b.letters()) problem.steps.push_back({g > 0 ? &r_ : &r_inv_, generator_offset(std::abs(g))});
  return problem;
}

std::vector<Complex> rep_apply(const RepContext& ctx, const BraidWord& b, std::span<const Complex> v) {
  if (v.size() != ctx.dim()) {
    throw ShapeError("state vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(ctx.dim()));
  }
  const TraceProblem problem = ctx.trace_problem(b);
  return apply_steps(problem, std::vector<Complex>(v.begin(), v.end()));
}

std::string_view to_string(Normalization n) {
  switch (n) {
    case Normalization::Raw: return "raw";
    case Normalization::P: return "P";
    case Normalization::Tilde: return "tilde";
  }
  return "raw";
}

InvariantResult t_invariant(const EgybOperator& s, const BraidWord& b, const RepOptions& options) {
  const RepContext ctx(s, b.strands(), options);
  const TraceProblem problem = ctx.trace_problem(b);
  const Complex trace = options.parallel ? trace_omp(problem) : trace_serial(problem);
  const int w = writhe(b);
  const Complex value = int_power(s.alpha(), -w) * int_power(s.beta(), -b.strands()) * trace;
  return InvariantResult{value, s.op().id(), s.op().theta(), b, w, Normalization::Raw};
}

InvariantResult p_invariant(const EgybOperator& s, const BraidWord& b, const RepOptions& options) {
  const auto scale = s.p_normalization();
  if (!scale) {
    throw DomainError(std::string("no P normalization is known for operator ") + std::string(to_string(s.op().id())));
  }
  InvariantResult out = t_invariant(s, b, options);
  out.value *= *scale;
  out.normalization = Normalization::P;
  return out;
}

Complex multiplicativity_factor(const EgybOperator& s) {
  const auto& t = s.op().gtype();
  return int_power(mat_trace(s.mu()), 2 * static_cast<long long>(t.m) - static_cast<long long>(t.k));
}

InvariantResult t_tilde(const EgybOperator& s, const BraidWord& b, const RepOptions& options) {
  InvariantResult out = t_invariant(s, b, options);
  out.value *= multiplicativity_factor(s);
  out.normalization = Normalization::Tilde;
  return out;
}

InvariantResult evaluate(const EgybOperator& s, const BraidWord& b, Normalization normalization,
                         const RepOptions& options) {
  switch (normalization) {
    case Normalization::P: return p_invariant(s, b, options);
    case Normalization::Tilde: return t_tilde(s, b, options);
    case Normalization::Raw: break;
  }
  return t_invariant(s, b, options);
}

Complex trivial_link_value(const EgybOperator& s, int n) {
  if (n < 1) throw DomainError("trivial link needs at least one component");
  const auto& t = s.op().gtype();
  const auto exponent = static_cast<long long>(t.k) + static_cast<long long>(t.m) * (n - 2);
  return int_power(s.beta(), -n) * int_power(mat_trace(s.mu()), exponent);
}

double skein_check(const EgybOperator& s, const BraidWord& b, Complex x, Complex y, const RepOptions& options) {
  if (b.strands() < 2) throw DomainError("skein triples need at least two strands");
  const Complex plus = t_invariant(s, prepend_sigma1(b, 1), options).value;
  const Complex minus = t_invariant(s, prepend_sigma1(b, -1), options).value;
  const Complex zero = t_invariant(s, b, options).value;
  return std::abs(x * plus + minus / x - y * zero);
}

double quartic_check_type2(const EgybOperator& s, const BraidWord& b, const RepOptions& options) {
  if (s.op().id() != OperatorId::Type2) throw DomainError("the quartic relation applies to the type2 operator");
  if (b.strands() < 2) throw DomainError("skein triples need at least two strands");
  const Complex plus2 = t_invariant(s, prepend_sigma1(b, 2), options).value;
  const Complex plus = t_invariant(s, prepend_sigma1(b, 1), options).value;
  const Complex zero = t_invariant(s, b, options).value;
  const Complex minus = t_invariant(s, prepend_sigma1(b, -1), options).value;
  return std::abs(plus2 - plus + zero - minus);
}

double markov_check(const EgybOperator& s, const BraidWord& b, int trials, std::uint64_t seed,
                    const RepOptions& options) {
  const Complex base = t_invariant(s, b, options).value;
  double worst = 0.0;
  BraidSampler sampler(seed);
  for (int i = 0; i < trials; ++i) {
    const BraidWord eta = sampler.next(b.strands(), 8);
    worst = std::max(worst, std::abs(t_invariant(s, conjugate(b, eta), options).value - base));
  }
  for (int sign : {1, -1}) {
    worst = std::max(worst, std::abs(t_invariant(s, stabilize(b, sign), options).value - base));
  }
  return worst;
}

double multiplicativity_check(const EgybOperator& s, const BraidWord& b1, const BraidWord& b2,
                              const RepOptions& options) {
  const Complex joint = t_invariant(s, juxtapose(b1, b2), options).value;
  const Complex product = t_invariant(s, b1, options).value * t_invariant(s, b2, options).value;
  return std::abs(joint - multiplicativity_factor(s) * product);
}

double tilde_multiplicativity_check(const EgybOperator& s, const BraidWord& b1, const BraidWord& b2,
                                    const RepOptions& options) {
  const Complex joint = t_tilde(s, juxtapose(b1, b2), options).value;
  return std::abs(joint - t_tilde(s, b1, options).value * t_tilde(s, b2, options).value);
}

double cross_operator_check(const BraidWord& b, double theta, const RepOptions& options) {
  const EgybOperator type3 = catalog_enhancement(OperatorId::Type3, theta);
  const EgybOperator r232 = catalog_enhancement(OperatorId::R232);
  return std::abs(0.25 * t_invariant(type3, b, options).value - t_invariant(r232, b, options).value);
}

}  // namespace gyb
