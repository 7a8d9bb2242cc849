#include "gyb/catalog.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>

#include "gyb/errors.hpp"
#include "gyb/tensorops.hpp"

namespace gyb {

namespace {

constexpr Complex kI{0.0, 1.0};

std::mutex& warning_mutex() {
  static std::mutex mu;
  return mu;
}

WarningHandler& warning_handler() {
  static WarningHandler handler = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
  return handler;
}

Complex phase(double x) { return std::polar(1.0, x); }

/// Scaled direct sum (1/√2)(a ⊕ b) of two 4×4 blocks.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double s = 1.0 / std::numbers::sqrt2;
  ComplexMatrix out(8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      out(i, j) = s * a(i, j);
      out(i + 4, j + 4) = s * b(i, j);
    }
  }
  return out;
}

void warn_theta(double theta) {
  if (theta < 0.0 || theta > std::numbers::pi) {
    emit_warning("theta = " + std::to_string(theta) + " is outside [0, pi]");
  }
}

constexpr GybType kType231{2, 3, 1};

}  // namespace

std::string_view to_string(OperatorId id) {
  switch (id) {
    case OperatorId::Type1: return "type1";
    case OperatorId::Type2: return "type2";
    case OperatorId::Type3: return "type3";
    case OperatorId::R232: return "r232";
    case OperatorId::Custom: return "custom";
  }
  return "custom";
}

std::optional<OperatorId> operator_id_from_string(std::string_view name) {
  for (auto id : {OperatorId::Type1, OperatorId::Type2, OperatorId::Type3, OperatorId::R232, OperatorId::Custom}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

GybOperator::GybOperator(GybType gtype, ComplexMatrix r, OperatorId id, std::optional<double> theta, double tol)
    : gtype_(gtype), r_(std::move(r)), id_(id), theta_(theta) {
  if (gtype_.d == 0 || gtype_.k == 0 || gtype_.m == 0) throw DomainError("operator type needs positive d, k, m");
  if (gtype_.m >= gtype_.k) throw DomainError("operator type needs m < k");
  if (r_.dim() != ipow(gtype_.d, gtype_.k)) {
    throw ShapeError("operator matrix of dim " + std::to_string(r_.dim()) + " does not act on V^" +
                     std::to_string(gtype_.k) + " with dim V = " + std::to_string(gtype_.d));
  }
  r_inv_ = mat_inverse(r_, tol);
}

void set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(warning_mutex());
  warning_handler() = std::move(handler);
}

void emit_warning(std::string_view message) {
  std::lock_guard lock(warning_mutex());
  if (warning_handler()) warning_handler()(message);
}

GybOperator build_type1(double theta) {
  warn_theta(theta);
  const Complex e1 = phase(theta);
  const Complex em1 = phase(-theta);
  const Complex e2 = phase(2 * theta);
  const Complex em2 = phase(-2 * theta);
  const ComplexMatrix a{{1, 0, 1, 0}, {0, kI, 0, e1}, {-kI, 0, kI, 0}, {0, -kI * em1, 0, 1}};
  const ComplexMatrix b{{kI, 0, e1, 0}, {0, 1, 0, -e2}, {-kI * em1, 0, 1, 0}, {0, kI * em2, 0, kI}};
  return GybOperator(kType231, direct_sum(a, b), OperatorId::Type1, theta);
}

GybOperator build_type2(double theta) {
  warn_theta(theta);
  const Complex e1 = phase(theta);
  const Complex em1 = phase(-theta);
  const Complex e2 = phase(2 * theta);
  const Complex em2 = phase(-2 * theta);
  const ComplexMatrix a{{1, 0, 1, 0}, {0, kI, 0, e1}, {-1, 0, 1, 0}, {0, em1, 0, kI}};
  const ComplexMatrix b{{kI, 0, e1, 0}, {0, 1, 0, -e2}, {em1, 0, kI, 0}, {0, em2, 0, 1}};
  return GybOperator(kType231, direct_sum(a, b), OperatorId::Type2, theta);
}

GybOperator build_type3(double theta) {
  warn_theta(theta);
  const Complex e1 = phase(theta);
  const Complex em1 = phase(-theta);
  const Complex e2 = phase(2 * theta);
  const Complex em2 = phase(-2 * theta);
  const ComplexMatrix a{{1, 0, 1, 0}, {0, 1, 0, e1}, {-1, 0, 1, 0}, {0, -em1, 0, 1}};
  const ComplexMatrix b{{1, 0, -e1, 0}, {0, 1, 0, -e2}, {em1, 0, 1, 0}, {0, em2, 0, 1}};
  return GybOperator(kType231, direct_sum(a, b), OperatorId::Type3, theta);
}

GybOperator build_r232() {
  const double s = 1.0 / std::numbers::sqrt2;
  ComplexMatrix r(8);
  for (std::size_t i = 0; i < 4; ++i) {
    r(i, i) = s;
    r(i + 4, i + 4) = s;
    r(i, 4 + (3 - i)) = s;   // J block
    r(i + 4, 3 - i) = -s;    // −J block
  }
  return GybOperator(GybType{2, 3, 2}, std::move(r), OperatorId::R232, std::nullopt);
}

GybOperator build_catalog(OperatorId id, double theta) {
  switch (id) {
    case OperatorId::Type1: return build_type1(theta);
    case OperatorId::Type2: return build_type2(theta);
    case OperatorId::Type3: return build_type3(theta);
    case OperatorId::R232:
      if (theta != 0.0) emit_warning("theta is ignored for r232");
      return build_r232();
    case OperatorId::Custom: break;
  }
  throw DomainError("custom operators are loaded from a matrix, not built from the catalog");
}

GybOperator load_custom(ComplexMatrix matrix, GybType gtype, double tol) {
  return GybOperator(gtype, std::move(matrix), OperatorId::Custom, std::nullopt, tol);
}

double verify_gybe(const GybOperator& op) {
  const auto& t = op.gtype();
  const TensorShape space{t.d, t.k + t.m};
  const ComplexMatrix left = tensor_embed(op.r(), 1, space);
  const ComplexMatrix right = tensor_embed(op.r(), t.m + 1, space);
  return max_abs_diff(left * right * left, right * left * right);
}

double verify_far_commutativity(const GybOperator& op) {
  const auto& t = op.gtype();
  double worst = 0.0;
  for (std::size_t j = 4; (j - 2) * t.m < t.k; ++j) {
    const TensorShape space{t.d, t.k + t.m * (j - 2)};
    const ComplexMatrix left = tensor_embed(op.r(), 1, space);
    const ComplexMatrix right = tensor_embed(op.r(), t.m * (j - 2) + 1, space);
    worst = std::max(worst, max_abs_diff(left * right, right * left));
  }
  return worst;
}

double unitarity_residual(const GybOperator& op) { return unitarity_residual(op.r()); }

bool acts_diagonally_on_factor(const ComplexMatrix& f, const TensorShape& shape, std::size_t factor, double tol) {
  if (!shape.compatible(f)) throw ShapeError("matrix does not match tensor shape");
  if (factor >= shape.n) throw ShapeError("factor index out of range");
  const std::size_t stride = ipow(shape.d, shape.n - factor - 1);
  for (std::size_t row = 0; row < f.dim(); ++row) {
    for (std::size_t col = 0; col < f.dim(); ++col) {
      if ((row / stride) % shape.d != (col / stride) % shape.d && std::abs(f(row, col)) >= tol) return false;
    }
  }
  return true;
}

bool check_outer_diagonal(const GybOperator& op, double tol) {
  if (!(op.gtype() == kType231)) throw DomainError("outer-diagonality check applies to type (2,3,1) only");
  const TensorShape shape{2, 3};
  for (const ComplexMatrix* f : {&op.r(), &op.r_inv()}) {
    if (!acts_diagonally_on_factor(*f, shape, 0, tol) || !acts_diagonally_on_factor(*f, shape, 2, tol)) return false;
  }
  return true;
}

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("malformed complex number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty complex number");
  if (text.back() != 'i' && text.back() != 'j') return {parse_real(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  const std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);
  double imag = 0.0;
  if (imag_part.empty() || imag_part == "+") {
    imag = 1.0;
  } else if (imag_part == "-") {
    imag = -1.0;
  } else {
    imag = parse_real(imag_part, text);
  }
  const double real = real_part.empty() ? 0.0 : parse_real(real_part, text);
  return {real, imag};
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

OperatorFile parse_operator_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos && line.front() != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("operator file is empty");
  GybType gtype;
  {
    std::istringstream header(line);
    long long d = 0, k = 0, m = 0;
    std::string extra;
    if (!(header >> d >> k >> m) || (header >> extra) || d < 1 || k < 1 || m < 1) {
      throw ParseError("operator file header must be 'd k m' with positive integers");
    }
    gtype = GybType{static_cast<std::size_t>(d), static_cast<std::size_t>(k), static_cast<std::size_t>(m)};
  }
  const std::size_t dim = ipow(gtype.d, gtype.k);
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t row = 0; row < dim; ++row) {
    if (!next_line()) throw ParseError("operator file has " + std::to_string(row) + " rows, expected " + std::to_string(dim));
    std::istringstream cells(line);
    std::string cell;
    std::size_t count = 0;
    while (cells >> cell) {
      entries.push_back(parse_complex(cell));
      ++count;
    }
    if (count != dim) {
      throw ParseError("operator file row " + std::to_string(row + 1) + " has " + std::to_string(count) +
                       " entries, expected " + std::to_string(dim));
    }
  }
  if (next_line()) throw ParseError("operator file has trailing rows");
  return {gtype, ComplexMatrix(dim, std::move(entries))};
}

std::string format_operator_file(const GybType& gtype, const ComplexMatrix& matrix) {
  std::string out = std::to_string(gtype.d) + ' ' + std::to_string(gtype.k) + ' ' + std::to_string(gtype.m) + '\n';
  for (std::size_t row = 0; row < matrix.dim(); ++row) {
    for (std::size_t col = 0; col < matrix.dim(); ++col) {
      if (col) out += ' ';
      out += format_complex(matrix(row, col));
    }
    out += '\n';
  }
  return out;
}

OperatorFile read_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open operator file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_operator_file(buf.str());
}

}  // namespace gyb
