#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "gyb/matrix.hpp"

namespace gyb {

/// (d, k, m): R acts on V^{⊗k}, dim V = d, neighbouring copies are offset by m factors.
struct GybType {
  std::size_t d = 2;
  std::size_t k = 3;
  std::size_t m = 1;

  friend bool operator==(const GybType&, const GybType&) = default;
};

enum class OperatorId { Type1, Type2, Type3, R232, Custom };

std::string_view to_string(OperatorId id);
/// Accepts "type1", "type2", "type3", "r232", "custom".
std::optional<OperatorId> operator_id_from_string(std::string_view name);

/// An invertible operator on V^{⊗k} tagged with its type and catalog identity.
/// Immutable after construction.
class GybOperator {
 public:
  /// Validates m < k, d^k == r.dim() and invertibility (within tol).
  GybOperator(GybType gtype, ComplexMatrix r, OperatorId id, std::optional<double> theta = std::nullopt,
              double tol = kDefaultTolerance);

  const GybType& gtype() const noexcept { return gtype_; }
  const ComplexMatrix& r() const noexcept { return r_; }
  const ComplexMatrix& r_inv() const noexcept { return r_inv_; }
  OperatorId id() const noexcept { return id_; }
  std::optional<double> theta() const noexcept { return theta_; }
  bool is_catalog() const noexcept { return id_ != OperatorId::Custom; }

 private:
  GybType gtype_;
  ComplexMatrix r_;
  ComplexMatrix r_inv_;
  OperatorId id_;
  std::optional<double> theta_;
};

/// Receives non-fatal diagnostics (e.g. θ outside [0, π]). The default
/// handler prints "warning: ..." to stderr.
using WarningHandler = std::function<void(std::string_view)>;
void set_warning_handler(WarningHandler handler);
void emit_warning(std::string_view message);

/// The three (2,3,1) families, each a direct sum A ⊕ B of 4×4 blocks: A acts
/// on the basis vectors with first index 1, B on those with first index 2.
GybOperator build_type1(double theta);
GybOperator build_type2(double theta);
GybOperator build_type3(double theta);

/// The (2,3,2) operator (1/√2)[[I, J], [−J, I]] with J the 4×4 anti-diagonal.
GybOperator build_r232();

/// Catalog operator by id; theta is ignored (with a warning) for r232.
GybOperator build_catalog(OperatorId id, double theta = 0.0);

/// Wraps a user matrix; only invertibility is checked here.
GybOperator load_custom(ComplexMatrix matrix, GybType gtype, double tol = kDefaultTolerance);

/// ‖(R⊗I_m)(I_m⊗R)(R⊗I_m) − (I_m⊗R)(R⊗I_m)(I_m⊗R)‖_max on V^{⊗(k+m)}.
double verify_gybe(const GybOperator& op);

/// Max over every j >= 4 whose embedded copies R⊗I_m^{⊗(j−2)} and
/// I_m^{⊗(j−2)}⊗R still share a factor ((j−2)·m < k) of the commutator's
/// max entry. Zero when no such j exists.
double verify_far_commutativity(const GybOperator& op);

double unitarity_residual(const GybOperator& op);

/// True iff f(row, col) vanishes (within tol) whenever the row and column
/// multi-indices differ in the given 0-based tensor factor.
bool acts_diagonally_on_factor(const ComplexMatrix& f, const TensorShape& shape, std::size_t factor,
                               double tol = kDefaultTolerance);

/// Requires gtype (2,3,1); true iff both R and R⁻¹ are diagonal on the first
/// and third factors. Throws DomainError for other types.
bool check_outer_diagonal(const GybOperator& op, double tol = kDefaultTolerance);

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" with optional exponents.
Complex parse_complex(std::string_view text);
/// "a+bi" with full round-trip precision.
std::string format_complex(Complex z);

struct OperatorFile {
  GybType gtype;
  ComplexMatrix matrix;
};

/// Text matrix format: first line `d k m`, then d^k lines of d^k entries.
OperatorFile parse_operator_file(std::string_view text);
std::string format_operator_file(const GybType& gtype, const ComplexMatrix& matrix);
OperatorFile read_operator_file(const std::string& path);

}  // namespace gyb
