#include "gyb/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <random>
#include <sstream>

#include "gyb/errors.hpp"

namespace gyb {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw DomainError("braid needs at least one strand");
  for (int g : letters_) {
    if (g == 0 || std::abs(g) > strands_ - 1) {
      throw DomainError("letter " + std::to_string(g) + " out of range for B_" +
                        std::to_string(strands_));
    }
  }
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  int widest = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("malformed braid letter '" + std::string(token) + "'");
    }
    if (value == 0) throw ParseError("braid letter 0 is not a generator");
    widest = std::max(widest, std::abs(value));
    letters.push_back(value);
  }
  const int n = strands.value_or(std::max(1, widest + 1));
  if (n < 1) throw ParseError("strand count must be positive");
  if (widest > n - 1) {
    throw ParseError("letter " + std::to_string(widest) + " out of range for B_" +
                     std::to_string(n));
  }
  return BraidWord(n, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  for (std::size_t i = 0; i < b.letters().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b.letters()[i]);
  }
  return out;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int g : b.letters()) w += g > 0 ? 1 : -1;
  return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw DomainError("concatenation: strand counts differ");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& g : letters) g = -g;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& by) {
  if (b.strands() != by.strands()) throw DomainError("conjugation: strand counts differ");
  return concat(concat(inverse(by), b), by);
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

BraidWord juxtapose(const BraidWord& b1, const BraidWord& b2) {
  std::vector<int> letters = b1.letters();
  const int shift = b1.strands();
  for (int g : b2.letters()) letters.push_back(g > 0 ? g + shift : g - shift);
  return BraidWord(b1.strands() + b2.strands(), std::move(letters));
}

BraidWord prepend_sigma1(const BraidWord& b, int power) {
  if (b.strands() < 2) throw DomainError("σ₁ needs at least two strands");
  std::vector<int> letters(static_cast<std::size_t>(std::abs(power)), power > 0 ? 1 : -1);
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(b.strands(), std::move(letters));
}

std::vector<int> braid_permutation(const BraidWord& b) {
  // perm[p] = strand currently at position p
  std::vector<int> at(static_cast<std::size_t>(b.strands()));
  for (int i = 0; i < b.strands(); ++i) at[i] = i;
  for (int g : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    std::swap(at[i], at[i + 1]);
  }
  // strand starting at position at[p] ends at position p
  std::vector<int> image(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) image[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
  return image;
}

int closure_components(const BraidWord& b) {
  const auto image = braid_permutation(b);
  std::vector<bool> seen(image.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto i = s; !seen[i]; i = static_cast<std::size_t>(image[i])) seen[i] = true;
  }
  return cycles;
}

BraidWord random_braid(int strands, std::size_t length, std::uint64_t seed) {
  if (strands < 1) throw DomainError("random braid needs at least one strand");
  if (strands == 1) return BraidWord::identity(1);
  std::mt19937_64 rng(seed);
  const auto generators = static_cast<std::uint64_t>(strands - 1);
  std::vector<int> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    // 2(n−1) choices; modulo bias is below 2^-50 for any realistic n
    const std::uint64_t draw = rng() % (2 * generators);
    const int g = static_cast<int>(draw / 2) + 1;
    letters.push_back(draw % 2 == 0 ? g : -g);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidSampler::next(int strands, std::size_t max_length) {
  const std::size_t length = static_cast<std::size_t>(rng_() % (max_length + 1));
  return random_braid(strands, length, rng_());
}

BraidWord BraidSampler::next(int min_strands, int max_strands, std::size_t max_length) {
  if (min_strands < 1 || max_strands < min_strands) throw DomainError("bad strand range");
  const auto span = static_cast<std::uint64_t>(max_strands - min_strands + 1);
  const int strands = min_strands + static_cast<int>(rng_() % span);
  return next(strands, max_length);
}

const std::vector<NamedLink>& standard_links() {
  static const std::vector<NamedLink> links = [] {
    std::vector<NamedLink> out = {
        {"unknot", BraidWord::identity(1), 1},
        {"hopf+", BraidWord(2, {1, 1}), 2},
        {"hopf-", BraidWord(2, {-1, -1}), 2},
        {"trefoil", BraidWord(2, {1, 1, 1}), 1},
        {"figure-eight", BraidWord(3, {1, -2, 1, -2}), 1},
    };
    for (int n = 1; n <= 12; ++n) {
      out.push_back({"trivial" + std::to_string(n), BraidWord::identity(n), n});
    }
    return out;
  }();
  return links;
}

std::optional<NamedLink> find_link(std::string_view name, const std::vector<NamedLink>& extra) {
  for (const auto& link : extra) {
    if (link.name == name) return link;
  }
  for (const auto& link : standard_links()) {
    if (link.name == name) return link;
  }
  return std::nullopt;
}

std::vector<NamedLink> parse_catalog(std::string_view text) {
  std::vector<NamedLink> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError("catalog line " + std::to_string(lineno) + ": expected name<TAB>strands<TAB>word");
    }
    const std::string name = line.substr(0, tab1);
    const std::string strands_text = line.substr(tab1 + 1, tab2 - tab1 - 1);
    int strands = 0;
    auto [ptr, ec] = std::from_chars(strands_text.data(), strands_text.data() + strands_text.size(), strands);
    if (name.empty() || ec != std::errc{} || ptr != strands_text.data() + strands_text.size() || strands < 1) {
      throw ParseError("catalog line " + std::to_string(lineno) + ": bad name or strand count");
    }
    BraidWord braid = parse_braid(std::string_view(line).substr(tab2 + 1), strands);
    const int comps = closure_components(braid);
    out.push_back({name, std::move(braid), comps});
  }
  return out;
}

std::string format_catalog(const std::vector<NamedLink>& links) {
  std::string out;
  for (const auto& link : links) {
    out += link.name + '\t' + std::to_string(link.braid.strands()) + '\t' + format_braid(link.braid) + '\n';
  }
  return out;
}

}  // namespace gyb
