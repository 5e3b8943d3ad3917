#ifndef BRAIDCAT_OPSYS_HPP
#define BRAIDCAT_OPSYS_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidcat/braid.hpp"
#include "braidcat/matrix.hpp"
#include "braidcat/trees.hpp"

namespace braidcat {

// Object of the category: a tensor word over the generating objects.
// A generator is a word of length one; dim is the product of the
// factor dimensions.
struct ObjectRef {
  std::string name;
  long dim = 1;
  std::vector<std::pair<std::string, long>> word;  // (generator, dim)

  static ObjectRef generator(const std::string& name, long dim);
  static ObjectRef tensor_word(
      const std::vector<std::pair<std::string, long>>& factors);

  bool operator==(const ObjectRef& o) const {
    return dim == o.dim && word == o.word;
  }
  bool operator!=(const ObjectRef& o) const { return !(*this == o); }
};

// Braiding datum of an instance: the flip, or a spectral R-matrix on a
// designated generator.  R entries live in Var::u and Var::q.
struct BraidingSpec {
  bool flip = true;
  GroupKind kind = GroupKind::point;
  std::string object;    // R-matrix carrier when !flip
  long object_dim = 0;
  MatrixRF r;            // d^2 x d^2 over u, q
};

// Localized operation: a matrix over K(S_T) attached to a plane tree,
// with one variable z_i per tail.  Column index is mixed radix over the
// input slots, slot 1 most significant.
struct Operation {
  PlaneTree tree;
  std::vector<ObjectRef> inputs;
  ObjectRef output;
  MatrixRF matrix;  // dim(output) x prod dim(inputs)
  GroupKind kind = GroupKind::point;

  int arity() const { return static_cast<int>(inputs.size()); }
  bool operator==(const Operation& o) const;
};

// Validates dimensions, variable usage and equivariance; throws
// InputError naming the offending entry.
Operation make_operation(const PlaneTree& tree,
                         const std::vector<ObjectRef>& inputs,
                         const ObjectRef& output, const MatrixRF& matrix,
                         GroupKind kind);

Operation identity_op(const ObjectRef& x, GroupKind kind);

// Identity operation of arity n on the listed inputs: the corolla with
// the identity matrix, output the concatenated tensor word.
Operation identity_word_op(const std::vector<ObjectRef>& inputs,
                           GroupKind kind);

enum class MarkerRule { first_tail, last_tail };

// Composition map: the outer variable of block i is substituted by the
// block's marker tail, and the result is the outer matrix times the
// Kronecker product of the renamed inner matrices.
Operation compose(const Operation& a, const std::vector<Operation>& subs,
                  MarkerRule rule = MarkerRule::first_tail);

// phi_f maps are identities on matrices after localization; retree
// checks a contraction morphism exists in either direction.
Operation retree(const Operation& op, const PlaneTree& dst);

// Braiding of two single generators evaluated at two variables:
// flip, or P * R(x - y) (additive) resp. P * R(x / y) (multiplicative).
MatrixRF generator_braiding(const BraidingSpec& b,
                            const std::pair<std::string, long>& a,
                            const std::pair<std::string, long>& bfac,
                            const RatFunc& vx, const RatFunc& vy);

// Braiding of tensor words where each factor carries its own variable,
// built by the hexagon recursions from the generator braiding.
// split_b_first selects the other recursion order (used to check that
// both hexagon expansions agree).
MatrixRF word_braiding(const BraidingSpec& b,
                       const std::vector<std::pair<std::string, long>>& wa,
                       const std::vector<RatFunc>& va,
                       const std::vector<std::pair<std::string, long>>& wb,
                       const std::vector<RatFunc>& vb,
                       bool split_b_first = false);

// Spec-level braiding of two words at one variable each.
MatrixRF braiding_of_words(const BraidingSpec& b, const ObjectRef& a,
                           const ObjectRef& bb, Var var_a, Var var_b,
                           bool split_b_first = false);

// Braid action on operations; words act with the rightmost letter
// first, so braid_act(st, op) = braid_act(s, braid_act(t, op)).
Operation braid_act(const BraidWord& w, const Operation& op,
                    const BraidingSpec& b);

// True iff sigma_i^2 acts trivially on every probe operation.
bool factors_through_sn(const std::vector<Operation>& probes,
                        const BraidingSpec& b);

}  // namespace braidcat

#endif
