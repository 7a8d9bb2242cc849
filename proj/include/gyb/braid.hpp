#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gyb {

/// Element of B_n as a word in the Artin generators. Letter g > 0 is σ_g,
/// g < 0 is σ_{|g|}⁻¹. An empty word is the identity braid.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws DomainError if strands == 0 or a letter is zero or out of range.
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Whitespace-separated signed integers; strands defaults to 1 + max|g|.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// Letters joined by single spaces ("1 -2 1"); the strand count is not encoded.
std::string format_braid(const BraidWord& b);

/// (#positive letters) − (#negative letters).
int writhe(const BraidWord& b);

/// Word product a·b (letters of a, then letters of b).
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Inverse braid: reversed word with negated letters.
BraidWord inverse(const BraidWord& b);

/// η⁻¹·ξ·η.
BraidWord conjugate(const BraidWord& b, const BraidWord& by);

/// Markov stabilization ξ ↦ ξσ_n^{±1} in B_{n+1}.
BraidWord stabilize(const BraidWord& b, int sign);

/// ξ₁ * ξ₂ in B_{n₁+n₂}: ξ₂ is shifted to act on the last n₂ strands.
BraidWord juxtapose(const BraidWord& b1, const BraidWord& b2);

/// Prepends σ₁^{power} (power may be negative); requires strands >= 2.
BraidWord prepend_sigma1(const BraidWord& b, int power);

/// Permutation of strand positions induced by the braid (0-based).
std::vector<int> braid_permutation(const BraidWord& b);

/// Number of components of the closure.
int closure_components(const BraidWord& b);

/// Seeded random word with exactly `length` letters drawn uniformly from
/// {±1, …, ±(strands−1)}. B₁ has no generators, so strands == 1 always
/// yields the identity. Uses std::mt19937_64 with a fixed mapping from raw
/// 64-bit outputs to letters, so results are stable across platforms.
BraidWord random_braid(int strands, std::size_t length, std::uint64_t seed);

/// Deterministic stream of random braids for property checks. Word lengths
/// are uniform in [0, max_length]; each word comes from random_braid with a
/// seed drawn from the stream.
class BraidSampler {
 public:
  explicit BraidSampler(std::uint64_t seed) : rng_(seed) {}

  BraidWord next(int strands, std::size_t max_length);
  /// Strand count uniform in [min_strands, max_strands].
  BraidWord next(int min_strands, int max_strands, std::size_t max_length);

 private:
  std::mt19937_64 rng_;
};

struct NamedLink {
  std::string name;
  BraidWord braid;
  int components = 1;
};

/// Built-in closures: unknot, hopf+, hopf-, trefoil, figure-eight, and
/// trivialN (the N-component unlink, 1 <= N <= 12).
const std::vector<NamedLink>& standard_links();

/// Looks up a standard or extra link by name.
std::optional<NamedLink> find_link(std::string_view name,
                                   const std::vector<NamedLink>& extra = {});

/// Catalog file: one record per line, `name<TAB>strands<TAB>word`. Blank
/// lines and lines starting with '#' are skipped.
std::vector<NamedLink> parse_catalog(std::string_view text);
std::string format_catalog(const std::vector<NamedLink>& links);

}  // namespace gyb
