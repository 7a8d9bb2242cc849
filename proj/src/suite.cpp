#include "gyb/suite.hpp"

#include <algorithm>
#include <numbers>

namespace gyb {

namespace {

void record(RelationResult& result, double residual, const BraidWord& b) {
  ++result.samples;
  if (!result.worst || residual > result.max_residual) {
    result.max_residual = std::max(result.max_residual, residual);
    result.worst = b;
  }
}

}  // namespace

std::vector<RelationResult> run_relation_suite(const EgybOperator& s, const SuiteOptions& options) {
  std::vector<RelationResult> out;
  const OperatorId id = s.op().id();
  const int lo = std::max(1, options.min_strands);
  const int hi = std::max(lo, options.max_strands);
  const int skein_lo = std::max(2, lo);
  const int skein_hi = std::max(skein_lo, hi);

  {
    RelationResult markov;
    markov.relation = "markov";
    BraidSampler sampler(options.seed);
    for (int i = 0; i < options.samples; ++i) {
      const auto b = sampler.next(lo, hi, options.max_len);
      record(markov, markov_check(s, b, options.conjugations_per_braid, options.seed + static_cast<std::uint64_t>(i),
                                  options.rep),
             b);
    }
    out.push_back(std::move(markov));
  }

  std::optional<std::pair<Complex, Complex>> skein_xy;
  if (id == OperatorId::Type1) skein_xy = {{1.0, 1.0}};
  if (id == OperatorId::Type3 || id == OperatorId::R232) skein_xy = {{1.0, std::numbers::sqrt2}};
  if (skein_xy) {
    RelationResult skein;
    skein.relation = "skein";
    BraidSampler sampler(options.seed + 1);
    for (int i = 0; i < options.samples; ++i) {
      const auto b = sampler.next(skein_lo, skein_hi, options.max_len);
      record(skein, skein_check(s, b, skein_xy->first, skein_xy->second, options.rep), b);
    }
    out.push_back(std::move(skein));
  }
  if (id == OperatorId::Type2) {
    RelationResult quartic;
    quartic.relation = "quartic";
    BraidSampler sampler(options.seed + 1);
    for (int i = 0; i < options.samples; ++i) {
      const auto b = sampler.next(skein_lo, skein_hi, options.max_len);
      record(quartic, quartic_check_type2(s, b, options.rep), b);
    }
    out.push_back(std::move(quartic));
  }

  {
    RelationResult mult;
    mult.relation = "multiplicativity";
    RelationResult tilde;
    tilde.relation = "tilde_multiplicativity";
    BraidSampler sampler(options.seed + 2);
    const int pair_hi = std::max(1, hi - 1);
    for (int i = 0; i < options.samples; ++i) {
      const auto a = sampler.next(1, pair_hi, options.max_len);
      const auto b = sampler.next(1, pair_hi, options.max_len);
      record(mult, multiplicativity_check(s, a, b, options.rep), juxtapose(a, b));
      record(tilde, tilde_multiplicativity_check(s, a, b, options.rep), juxtapose(a, b));
    }
    out.push_back(std::move(mult));
    out.push_back(std::move(tilde));
  }

  if (id == OperatorId::Type3 || id == OperatorId::R232) {
    RelationResult cross;
    cross.relation = "cross_operator";
    BraidSampler sampler(options.seed + 3);
    const double theta = s.op().theta().value_or(0.0);
    for (int i = 0; i < options.samples; ++i) {
      const auto b = sampler.next(skein_lo, skein_hi, options.max_len);
      record(cross, cross_operator_check(b, theta, options.rep), b);
    }
    for (const auto& link : standard_links()) {
      if (link.braid.strands() <= skein_hi) record(cross, cross_operator_check(link.braid, theta, options.rep), link.braid);
    }
    out.push_back(std::move(cross));
  }
  return out;
}

}  // namespace gyb
