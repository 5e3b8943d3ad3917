// Localized operation spaces: composition, retree maps, braid actions.

#include "braidcat/opsys.hpp"

#include <algorithm>
#include <numeric>

namespace braidcat {

ObjectRef ObjectRef::generator(const std::string& name, long dim) {
  if (dim < 1) throw InputError("object '" + name + "' needs dim >= 1");
  ObjectRef o;
  o.name = name;
  o.dim = dim;
  o.word = {{name, dim}};
  return o;
}

ObjectRef ObjectRef::tensor_word(
    const std::vector<std::pair<std::string, long>>& factors) {
  if (factors.empty()) throw InputError("tensor word needs >= 1 factor");
  ObjectRef o;
  o.dim = 1;
  for (const auto& [n, d] : factors) {
    if (d < 1) throw InputError("object '" + n + "' needs dim >= 1");
    if (!o.name.empty()) o.name += "*";
    o.name += n;
    o.dim *= d;
  }
  o.word = factors;
  return o;
}

bool Operation::operator==(const Operation& o) const {
  return tree == o.tree && inputs == o.inputs && output == o.output &&
         matrix == o.matrix && kind == o.kind;
}

Operation make_operation(const PlaneTree& tree,
                         const std::vector<ObjectRef>& inputs,
                         const ObjectRef& output, const MatrixRF& matrix,
                         GroupKind kind) {
  const int n = tree.tails();
  if (static_cast<int>(inputs.size()) != n)
    throw InputError("operation: tree has " + std::to_string(n) +
                     " tails but " + std::to_string(inputs.size()) +
                     " inputs were given");
  long cols = 1;
  for (const auto& in : inputs) cols *= in.dim;
  if (matrix.rows() != output.dim || matrix.cols() != cols)
    throw InputError("operation: matrix is " + std::to_string(matrix.rows()) +
                     "x" + std::to_string(matrix.cols()) + ", expected " +
                     std::to_string(output.dim) + "x" + std::to_string(cols));
  std::vector<Var> tail_vars;
  for (int i = 1; i <= n; ++i) tail_vars.push_back(z_var(i));
  for (int r = 0; r < matrix.rows(); ++r)
    for (int c = 0; c < matrix.cols(); ++c) {
      const RatFunc& f = matrix.at(r, c);
      for (int vi = 0; vi < kNumVars; ++vi) {
        Var v = static_cast<Var>(vi);
        if (v == Var::q) continue;
        bool allowed = false;
        for (int i = 1; i <= n; ++i)
          if (v == z_var(i)) { allowed = true; break; }
        if (!allowed && f.uses_var(v))
          throw InputError("operation entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ") uses variable " +
                           var_name(v) + " outside z1..z" + std::to_string(n));
      }
      if (!is_invariant(f, tail_vars, kind))
        throw InputError("operation entry (" + std::to_string(r) + "," +
                         std::to_string(c) + ") = " + f.to_string() +
                         " is not " + group_kind_name(kind) + "-equivariant");
    }
  return Operation{tree, inputs, output, matrix, kind};
}

Operation identity_op(const ObjectRef& x, GroupKind kind) {
  return Operation{unit_tree(), {x}, x,
                   MatrixRF::identity(static_cast<int>(x.dim)), kind};
}

Operation identity_word_op(const std::vector<ObjectRef>& inputs,
                           GroupKind kind) {
  if (inputs.empty()) throw InputError("identity word op needs inputs");
  if (inputs.size() == 1) return identity_op(inputs[0], kind);
  std::vector<std::pair<std::string, long>> factors;
  long dim = 1;
  for (const auto& in : inputs) {
    factors.insert(factors.end(), in.word.begin(), in.word.end());
    dim *= in.dim;
  }
  return Operation{corolla(static_cast<int>(inputs.size())), inputs,
                   ObjectRef::tensor_word(factors),
                   MatrixRF::identity(static_cast<int>(dim)), kind};
}

Operation compose(const Operation& a, const std::vector<Operation>& subs,
                  MarkerRule rule) {
  const int n = a.arity();
  if (static_cast<int>(subs.size()) != n)
    throw InputError("compose: arity mismatch");
  int total = 0;
  std::vector<int> offsets;
  for (int i = 0; i < n; ++i) {
    if (subs[static_cast<std::size_t>(i)].kind != a.kind)
      throw InputError("compose: group kinds differ");
    if (subs[static_cast<std::size_t>(i)].output !=
        a.inputs[static_cast<std::size_t>(i)])
      throw InputError("compose: output of inner operation " +
                       std::to_string(i + 1) + " ('" +
                       subs[static_cast<std::size_t>(i)].output.name +
                       "') does not match outer input ('" +
                       a.inputs[static_cast<std::size_t>(i)].name + "')");
    offsets.push_back(total);
    total += subs[static_cast<std::size_t>(i)].arity();
  }
  if (total > 9)
    throw InputError("compose: result would have " + std::to_string(total) +
                     " tails; z variables stop at z9");

  // Outer variables become the block markers.
  std::map<Var, RatFunc> outer_subst;
  for (int i = 0; i < n; ++i) {
    int k = subs[static_cast<std::size_t>(i)].arity();
    int marker = rule == MarkerRule::first_tail ? offsets[i] + 1
                                                : offsets[i] + k;
    outer_subst[z_var(i + 1)] = RatFunc::variable(z_var(marker));
  }
  MatrixRF outer = a.matrix.substitute(outer_subst);

  // Inner matrices renamed into the grafted tail variables.
  MatrixRF inner = MatrixRF::identity(1);
  for (int i = 0; i < n; ++i) {
    const Operation& s = subs[static_cast<std::size_t>(i)];
    std::map<Var, RatFunc> ren;
    for (int j = 1; j <= s.arity(); ++j)
      ren[z_var(j)] = RatFunc::variable(z_var(offsets[i] + j));
    inner = inner.kron(s.matrix.substitute(ren));
  }

  std::vector<PlaneTree> sub_trees;
  std::vector<ObjectRef> new_inputs;
  for (const auto& s : subs) {
    sub_trees.push_back(s.tree);
    new_inputs.insert(new_inputs.end(), s.inputs.begin(), s.inputs.end());
  }
  return Operation{graft(a.tree, sub_trees), new_inputs, a.output,
                   outer * inner, a.kind};
}

Operation retree(const Operation& op, const PlaneTree& dst) {
  if (dst.tails() != op.tree.tails())
    throw InputError("retree: tail counts differ");
  if (!exists_morphism(op.tree, dst) && !exists_morphism(dst, op.tree))
    throw InputError("retree: no contraction morphism between " +
                     op.tree.encode() + " and " + dst.encode());
  return Operation{dst, op.inputs, op.output, op.matrix, op.kind};
}

MatrixRF generator_braiding(const BraidingSpec& b,
                            const std::pair<std::string, long>& fa,
                            const std::pair<std::string, long>& fb,
                            const RatFunc& vx, const RatFunc& vy) {
  MatrixRF flip = MatrixRF::flip(static_cast<int>(fa.second),
                                 static_cast<int>(fb.second));
  if (b.flip || b.kind == GroupKind::point) return flip;
  if (fa.first != b.object || fb.first != b.object)
    throw InputError("braiding undefined for object pair (" + fa.first +
                     ", " + fb.first + ")");
  RatFunc arg = b.kind == GroupKind::additive ? vx - vy : vx / vy;
  std::map<Var, RatFunc> sub{{Var::u, arg}};
  return flip * b.r.substitute(sub);
}

MatrixRF word_braiding(const BraidingSpec& b,
                       const std::vector<std::pair<std::string, long>>& wa,
                       const std::vector<RatFunc>& va,
                       const std::vector<std::pair<std::string, long>>& wb,
                       const std::vector<RatFunc>& vb,
                       bool split_b_first) {
  if (wa.size() != va.size() || wb.size() != vb.size())
    throw InputError("word_braiding: variable count mismatch");
  auto dim_of = [](const std::vector<std::pair<std::string, long>>& w) {
    long d = 1;
    for (const auto& [n, dd] : w) d *= dd;
    return static_cast<int>(d);
  };
  if (wa.empty() || wb.empty())
    return MatrixRF::identity(dim_of(wa.empty() ? wb : wa));
  if (wa.size() == 1 && wb.size() == 1)
    return generator_braiding(b, wa[0], wb[0], va[0], vb[0]);

  auto head = [](auto const& v) { return std::vector{v[0]}; };
  auto tail = [](auto const& v) {
    return std::decay_t<decltype(v)>(v.begin() + 1, v.end());
  };

  bool split_a = wa.size() > 1 && (!split_b_first || wb.size() == 1);
  if (split_a) {
    // c_{A (x) A', B} = (c_{a1,B} (x) id) . (id_{a1} (x) c_{A',B})
    auto a1 = head(wa), rest = tail(wa);
    auto v1 = head(va), vrest = tail(va);
    MatrixRF left =
        word_braiding(b, a1, v1, wb, vb, split_b_first)
            .kron(MatrixRF::identity(dim_of(rest)));
    MatrixRF right = MatrixRF::identity(static_cast<int>(a1[0].second))
                         .kron(word_braiding(b, rest, vrest, wb, vb,
                                             split_b_first));
    return left * right;
  }
  // c_{A, B (x) B'} = (id_{b1} (x) c_{A,B'}) . (c_{A,b1} (x) id)
  auto b1 = head(wb), rest = tail(wb);
  auto v1 = head(vb), vrest = tail(vb);
  MatrixRF left = MatrixRF::identity(static_cast<int>(b1[0].second))
                      .kron(word_braiding(b, wa, va, rest, vrest,
                                          split_b_first));
  MatrixRF right = word_braiding(b, wa, va, b1, v1, split_b_first)
                       .kron(MatrixRF::identity(dim_of(rest)));
  return left * right;
}

MatrixRF braiding_of_words(const BraidingSpec& b, const ObjectRef& a,
                           const ObjectRef& bb, Var var_a, Var var_b,
                           bool split_b_first) {
  std::vector<RatFunc> va(a.word.size(), RatFunc::variable(var_a));
  std::vector<RatFunc> vb(bb.word.size(), RatFunc::variable(var_b));
  return word_braiding(b, a.word, va, bb.word, vb, split_b_first);
}

namespace {

Operation act_one_letter(int gen, int sign, const Operation& op,
                         const BraidingSpec& b) {
  const int n = op.arity();
  if (gen < 1 || gen >= n)
    throw InputError("braid_act: generator s" + std::to_string(gen) +
                     " needs arity > " + std::to_string(gen));
  const std::size_t i = static_cast<std::size_t>(gen - 1);
  const ObjectRef& wi = op.inputs[i];
  const ObjectRef& wi1 = op.inputs[i + 1];

  // Identity padding on the slots not touched by the crossing.
  long pre = 1, post = 1;
  for (std::size_t k = 0; k < i; ++k) pre *= op.inputs[k].dim;
  for (std::size_t k = i + 2; k < op.inputs.size(); ++k)
    post *= op.inputs[k].dim;

  RatFunc zi = RatFunc::variable(z_var(gen));
  RatFunc zi1 = RatFunc::variable(z_var(gen + 1));
  MatrixRF c;
  if (sign > 0) {
    c = braiding_of_words(b, wi1, wi, z_var(gen), z_var(gen + 1));
  } else {
    std::vector<RatFunc> va(wi.word.size(), zi1);
    std::vector<RatFunc> vb(wi1.word.size(), zi);
    c = word_braiding(b, wi.word, va, wi1.word, vb).inverse();
  }
  MatrixRF factor = MatrixRF::identity(static_cast<int>(pre))
                        .kron(c)
                        .kron(MatrixRF::identity(static_cast<int>(post)));

  std::map<Var, RatFunc> swap_vars{{z_var(gen), zi1}, {z_var(gen + 1), zi}};
  std::vector<ObjectRef> new_inputs = op.inputs;
  std::swap(new_inputs[i], new_inputs[i + 1]);
  return Operation{op.tree, new_inputs, op.output,
                   op.matrix.substitute(swap_vars) * factor, op.kind};
}

}  // namespace

Operation braid_act(const BraidWord& w, const Operation& op,
                    const BraidingSpec& b) {
  if (w.strands != op.arity())
    throw InputError("braid_act: strand count " + std::to_string(w.strands) +
                     " does not match arity " + std::to_string(op.arity()));
  Operation cur = op;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    cur = act_one_letter(it->first, it->second, cur, b);
  return cur;
}

bool factors_through_sn(const std::vector<Operation>& probes,
                        const BraidingSpec& b) {
  for (const Operation& op : probes) {
    for (int g = 1; g < op.arity(); ++g) {
      BraidWord w = braid_identity(op.arity());
      w.push(g, 1);
      w.push(g, 1);
      if (!(braid_act(w, op, b) == op)) return false;
    }
  }
  return true;
}

}  // namespace braidcat
