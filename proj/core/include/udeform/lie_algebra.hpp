#ifndef UDEFORM_LIE_ALGEBRA_HPP
#define UDEFORM_LIE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "udeform/scalar.hpp"

namespace udeform {

enum class NormModel { MaxCoordinate, Frobenius };

/// A d x d matrix with exact rational entries, row-major.
using RationalMatrix = std::vector<std::vector<mpq_class>>;

class LieAlgebraSpec;
using SpecPtr = std::shared_ptr<const LieAlgebraSpec>;

/// Element of the Lie algebra as a coordinate vector over the fixed basis.
struct LieElement {
  std::vector<Scalar> coords;

  static LieElement basis(int dim, int index) {
    LieElement xi;
    xi.coords.assign(dim, Scalar(0));
    xi.coords[index] = Scalar(1);
    return xi;
  }
};

/// Finite-dimensional Lie algebra given by structure constants over the
/// rationals, with an auxiliary norm model and an optional exact matrix
/// embedding. Antisymmetry and the Jacobi identity are validated at
/// construction; an embedding, when present, must reproduce the structure
/// constants under the matrix commutator.
class LieAlgebraSpec {
public:
  struct BracketEntry {
    int i, j, k;
    mpq_class c;  // c^k_{ij}
  };

  /// Validates and constructs; throws AntisymmetryViolation,
  /// JacobiViolation or EmbeddingMismatch.
  static SpecPtr create(int dim, std::vector<std::string> basis_labels,
                        std::vector<BracketEntry> brackets, NormModel norm,
                        std::vector<RationalMatrix> embedding = {},
                        int degree_cap = 24);

  /// Built-in named specs: "abelian:d", "axb", "heis-sl:d".
  static SpecPtr builtin(const std::string& name);

  /// Spec JSON: {"dim":..,"basis":[..],"brackets":[[i,j,k,"p/q"],..],
  /// "norm":"max"|"frobenius","embedding":[..]}.
  static SpecPtr from_json(const std::string& json_text);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  NormModel norm_model() const { return norm_; }
  bool has_embedding() const { return !embedding_.empty(); }
  const std::vector<RationalMatrix>& embedding() const { return embedding_; }
  int degree_cap() const { return degree_cap_; }

  /// [e_i, e_j] as a sparse list of (k, c^k_{ij}).
  const std::vector<std::pair<int, mpq_class>>& bracket_basis(int i, int j) const;

  /// Lie bracket of coordinate vectors.
  LieElement bracket(const LieElement& xi, const LieElement& eta) const;

  /// Norm of a basis vector under the configured norm model.
  double basis_norm(int i) const;

  /// Norm upper/lower bracket of a general element (floats; used by the
  /// numeric modules only).
  double element_norm_upper(const LieElement& xi) const;
  double element_norm_lower(const LieElement& xi) const;

  std::string json() const;

private:
  LieAlgebraSpec() = default;

  int dim_ = 0;
  std::vector<std::string> labels_;
  NormModel norm_ = NormModel::MaxCoordinate;
  std::vector<RationalMatrix> embedding_;
  int degree_cap_ = 24;
  // brackets_[i*dim+j] = sparse [e_i,e_j]
  std::vector<std::vector<std::pair<int, mpq_class>>> brackets_;
};

}  // namespace udeform

#endif
