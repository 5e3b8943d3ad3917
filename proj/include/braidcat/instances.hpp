#ifndef BRAIDCAT_INSTANCES_HPP
#define BRAIDCAT_INSTANCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidcat/opsys.hpp"

namespace braidcat {

// Spectral R-matrix datum on a d-dimensional space: d^2 x d^2 over
// Var::u (and q), with additive or multiplicative parameter.
struct RMatrixDatum {
  long object_dim = 0;
  MatrixRF matrix;
  GroupKind spectral_kind = GroupKind::additive;
};

struct YbeFailure {
  int row = 0, col = 0;
  RatFunc lhs, rhs;
};

// Checks R12(u) R13(u*v) R23(v) = R23(v) R13(u*v) R12(u) symbolically,
// with * the group operation of the spectral kind.
bool ybe_check(const RMatrixDatum& r, YbeFailure* failure = nullptr);

// Yang rational R-matrix R(u) = u I + P on a d-dimensional space.
RMatrixDatum yang_r(long d);

// Trigonometric six-vertex R-matrix, multiplicative parameter,
// polynomial normalized.  Construction aborts unless the transcribed
// convention passes the YBE oracle.
RMatrixDatum six_vertex_r();

struct NamedOperation {
  std::string name;
  Operation op;
};

// Finitely presented candidate pseudo-braided category.
struct Instance {
  std::string name;
  GroupKind kind = GroupKind::point;
  std::vector<std::pair<std::string, long>> objects;
  bool flip_braiding = true;
  std::string rmatrix_object;
  std::optional<RMatrixDatum> rmatrix;
  std::vector<NamedOperation> operations;

  BraidingSpec braiding() const;
  ObjectRef object_ref(const std::string& name) const;  // supports A*B words
  const NamedOperation* find_operation(const std::string& name) const;
};

Instance load_instance(const std::string& path);
Instance parse_instance(const std::string& json_text,
                        const std::string& name);

// c_{B,A}(z2,z1) . c_{A,B}(z1,z2); is_scalar/scalar report whether the
// square is a scalar multiple of the identity.
MatrixRF square_of_braiding(const Instance& inst, const ObjectRef& a,
                            const ObjectRef& b, bool* is_scalar = nullptr,
                            RatFunc* scalar = nullptr);

enum class AlgebraKind { associative, lie };

struct AlgebraReport {
  bool pass = false;
  std::string detail;            // human-readable failure summary
  MatrixRF lhs, rhs;             // the two sides that were compared
};

// Associative: Phi(m; m, id) = Phi(m; id, m) after retree to the
// 3-corolla.  Lie: antisymmetry m + m.mu(sigma1) = 0 and the Jacobi sum
// of the three braid-rotated double compositions.
AlgebraReport check_operad_algebra(const Instance& inst, const Operation& m,
                                   AlgebraKind kind);

}  // namespace braidcat

#endif
