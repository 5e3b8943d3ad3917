// The axiom-verification engine: bounded sweeps of the pseudo-monoidal
// and pseudo-braided axioms over a finite instance, with seeded random
// sampling and machine-readable counterexamples.

#include "braidcat/coherence.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace braidcat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Deterministic across platforms: raw mt19937_64 output, no std
// distributions.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::size_t pick(std::size_t n) { return n == 0 ? 0 : gen() % n; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(pick(static_cast<std::size_t>(hi - lo + 1)));
  }
};

BraidWord random_word(Rng& rng, int strands, int max_len) {
  BraidWord w = braid_identity(strands);
  int len = rng.range(0, max_len);
  for (int i = 0; i < len && strands > 1; ++i)
    w.push(rng.range(1, strands - 1), rng.range(0, 1) == 0 ? 1 : -1);
  return w;
}

void add_pair(Counterexample& ce, const std::string& k,
              const std::string& v) {
  ce.data.emplace_back(k, v);
}

Counterexample matrix_mismatch(const std::string& what, const MatrixRF& lhs,
                               const MatrixRF& rhs) {
  Counterexample ce;
  ce.description = what;
  auto [i, j] = lhs.first_difference(rhs);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    add_pair(ce, "shape_lhs", std::to_string(lhs.rows()) + "x" +
                                  std::to_string(lhs.cols()));
    add_pair(ce, "shape_rhs", std::to_string(rhs.rows()) + "x" +
                                  std::to_string(rhs.cols()));
    return ce;
  }
  add_pair(ce, "entry_row", std::to_string(i));
  add_pair(ce, "entry_col", std::to_string(j));
  add_pair(ce, "lhs_entry", lhs.at(i, j).to_string());
  add_pair(ce, "rhs_entry", rhs.at(i, j).to_string());
  return ce;
}

struct RecordBuilder {
  CheckRecord rec;
  Clock::time_point t0 = Clock::now();
  RecordBuilder(const std::string& id, const std::string& ref) {
    rec.id = id;
    rec.ref = ref;
    rec.status = "pass";
  }
  void fail(Counterexample ce) {
    if (rec.status != "fail") {
      rec.status = "fail";
      rec.counterexample = std::move(ce);
    }
  }
  CheckRecord done(std::vector<CheckRecord>& out) {
    rec.wall_ms = ms_since(t0);
    out.push_back(rec);
    return rec;
  }
};

// ---- operation pool -----------------------------------------------------

std::vector<ObjectRef> generator_refs(const Instance& inst) {
  std::vector<ObjectRef> refs;
  for (const auto& [n, d] : inst.objects)
    refs.push_back(ObjectRef::generator(n, d));
  return refs;
}

// Generators usable with the instance braiding.
std::vector<ObjectRef> braidable_refs(const Instance& inst) {
  if (inst.flip_braiding) return generator_refs(inst);
  return {ObjectRef::generator(inst.rmatrix_object,
                               inst.rmatrix->object_dim)};
}

Operation braiding_op(const Instance& inst, const ObjectRef& x,
                      const ObjectRef& y) {
  BraidingSpec spec = inst.braiding();
  MatrixRF c = braiding_of_words(spec, x, y, Var::z1, Var::z2);
  std::vector<std::pair<std::string, long>> out_word = y.word;
  out_word.insert(out_word.end(), x.word.begin(), x.word.end());
  return Operation{corolla(2), {x, y}, ObjectRef::tensor_word(out_word), c,
                   inst.kind};
}

std::vector<Operation> build_pool(const Instance& inst,
                                  const CheckConfig& cfg, Rng& rng) {
  std::vector<Operation> pool;
  auto push = [&](const Operation& op) {
    for (const auto& p : pool)
      if (p == op) return;
    if (pool.size() < 32) pool.push_back(op);
  };

  for (const auto& no : inst.operations) push(no.op);
  for (const auto& g : generator_refs(inst)) push(identity_op(g, inst.kind));
  for (const auto& g : braidable_refs(inst)) {
    for (int arity = 2; arity <= cfg.max_arity; ++arity) {
      std::vector<ObjectRef> ins(static_cast<std::size_t>(arity), g);
      push(identity_word_op(ins, inst.kind));
    }
    push(braiding_op(inst, g, g));
  }

  BraidingSpec spec = inst.braiding();
  for (int depth = 0; depth < cfg.max_compose_depth; ++depth) {
    std::size_t snapshot = pool.size();
    for (int trial = 0; trial < cfg.random_samples; ++trial) {
      const Operation& a = pool[rng.pick(snapshot)];
      if (rng.range(0, 1) == 0 && a.arity() >= 2) {
        BraidWord w = random_word(rng, a.arity(), 2);
        try {
          push(braid_act(w, a, spec));
        } catch (const InputError&) {
          // braiding undefined on this input pair; skip the sample
        }
      } else {
        std::vector<Operation> subs;
        int total = 0;
        bool ok = true;
        for (const auto& in : a.inputs) {
          std::vector<const Operation*> cands;
          for (const auto& p : pool)
            if (p.output == in &&
                total + p.arity() <= cfg.max_tree_tails)
              cands.push_back(&p);
          if (cands.empty()) { ok = false; break; }
          const Operation* sub = cands[rng.pick(cands.size())];
          subs.push_back(*sub);
          total += sub->arity();
        }
        if (ok) {
          try {
            push(compose(a, subs));
          } catch (const InputError&) {
          }
        }
      }
    }
  }
  return pool;
}

std::vector<Var> tail_vars(int n) {
  std::vector<Var> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(z_var(i));
  return vs;
}

bool op_is_valid(const Operation& op, std::string* why) {
  try {
    make_operation(op.tree, op.inputs, op.output, op.matrix, op.kind);
    return true;
  } catch (const InputError& e) {
    if (why) *why = e.what();
    return false;
  }
}

// ---- Definition 1 checks ------------------------------------------------

void check_d1b(const Instance& inst, const CheckConfig& cfg,
               const std::vector<Operation>& pool,
               std::vector<CheckRecord>& out) {
  (void)cfg;
  (void)inst;
  RecordBuilder rb("D1.b",
                   "phi_f maps are functorial along contraction morphisms");
  bool tested = false;
  for (const Operation& op : pool) {
    if (op.arity() != 3) continue;
    tested = true;
    // identity morphism
    Operation same = retree(op, op.tree);
    if (!(same == op)) {
      rb.fail(matrix_mismatch("retree along the identity changed the matrix",
                              same.matrix, op.matrix));
      break;
    }
    // chain through a binary tree down to the corolla
    for (const PlaneTree& t : enumerate_trees(3, true)) {
      Operation via = retree(retree(op, t), corolla(3));
      Operation direct = retree(op, corolla(3));
      if (!(via == direct)) {
        Counterexample ce = matrix_mismatch(
            "retree composed along " + t.encode() + " differs", via.matrix,
            direct.matrix);
        add_pair(ce, "tree", t.encode());
        rb.fail(ce);
      }
    }
    break;
  }
  if (!tested) {
    rb.rec.status = "skipped";
    rb.rec.note = "no arity-3 operation available";
  }
  rb.done(out);
}

void check_d1c(const Instance& inst, const CheckConfig& cfg,
               const std::vector<Operation>& pool, Rng& rng,
               std::vector<CheckRecord>& out) {
  RecordBuilder rb("D1.c",
                   "composites remain valid operations (dimensions, "
                   "variables, equivariance)");
  BraidingSpec spec = inst.braiding();
  int done = 0;
  for (int trial = 0; trial < cfg.random_samples * 4 && done < cfg.random_samples;
       ++trial) {
    const Operation& a = pool[rng.pick(pool.size())];
    std::vector<Operation> subs;
    int total = 0;
    bool ok = true;
    for (const auto& in : a.inputs) {
      std::vector<const Operation*> cands;
      for (const auto& p : pool)
        if (p.output == in && total + p.arity() <= cfg.max_tree_tails)
          cands.push_back(&p);
      if (cands.empty()) { ok = false; break; }
      const Operation* sub = cands[rng.pick(cands.size())];
      subs.push_back(*sub);
      total += sub->arity();
    }
    if (!ok) continue;
    ++done;
    Operation c;
    try {
      c = compose(a, subs);
    } catch (const InputError& e) {
      Counterexample ce;
      ce.description = std::string("composition rejected: ") + e.what();
      rb.fail(ce);
      continue;
    }
    std::string why;
    if (!op_is_valid(c, &why)) {
      Counterexample ce;
      ce.description = "composite fails validation: " + why;
      add_pair(ce, "outer_tree", a.tree.encode());
      add_pair(ce, "composite_tree", c.tree.encode());
      rb.fail(ce);
    }
    if (c.arity() >= 2 && rng.range(0, 1) == 0) {
      try {
        Operation acted = braid_act(random_word(rng, c.arity(), 2), c, spec);
        if (!op_is_valid(acted, &why)) {
          Counterexample ce;
          ce.description = "braid image fails validation: " + why;
          rb.fail(ce);
        }
      } catch (const InputError&) {
      }
    }
  }
  if (done == 0) {
    rb.rec.status = "skipped";
    rb.rec.note = "no composable samples";
  } else {
    rb.rec.note = std::to_string(done) + " sampled composites validated";
  }
  rb.done(out);
}

void check_d1d(const Instance& inst, const CheckConfig& cfg,
               const std::vector<Operation>& pool, Rng& rng,
               std::vector<CheckRecord>& out, MarkerRule rule,
               bool* verdict_out) {
  RecordBuilder rb("D1.d",
                   "composition is transitive; id_X is a two-sided unit");
  bool all_ok = true;
  // identity laws on every pool operation
  for (const Operation& op : pool) {
    std::vector<Operation> ids;
    for (const auto& in : op.inputs)
      ids.push_back(identity_op(in, inst.kind));
    Operation left = compose(op, ids, rule);
    if (!(left.matrix == op.matrix) || left.inputs != op.inputs) {
      all_ok = false;
      rb.fail(matrix_mismatch("compose(op, identities) differs from op",
                              left.matrix, op.matrix));
    }
    Operation right = compose(identity_op(op.output, inst.kind), {op}, rule);
    if (!(right.matrix == op.matrix)) {
      all_ok = false;
      rb.fail(matrix_mismatch("compose(id, [op]) differs from op",
                              right.matrix, op.matrix));
    }
  }
  // transitivity on sampled triples
  int done = 0;
  for (int trial = 0; trial < cfg.random_samples * 4 && done < cfg.random_samples;
       ++trial) {
    const Operation& a = pool[rng.pick(pool.size())];
    std::vector<Operation> bs;
    int total = 0;
    bool ok = true;
    for (const auto& in : a.inputs) {
      std::vector<const Operation*> cands;
      for (const auto& p : pool)
        if (p.output == in && total + p.arity() <= cfg.max_tree_tails)
          cands.push_back(&p);
      if (cands.empty()) { ok = false; break; }
      const Operation* sub = cands[rng.pick(cands.size())];
      bs.push_back(*sub);
      total += sub->arity();
    }
    if (!ok) continue;
    // third layer: mostly identities, occasionally a braiding op
    std::vector<std::vector<Operation>> cs;
    for (const auto& b : bs) {
      std::vector<Operation> layer;
      for (const auto& in : b.inputs) {
        std::vector<const Operation*> cands;
        for (const auto& p : pool)
          if (p.output == in && p.arity() <= 2) cands.push_back(&p);
        if (cands.empty() || rng.range(0, 2) != 0) {
          layer.push_back(identity_op(in, inst.kind));
        } else {
          layer.push_back(*cands[rng.pick(cands.size())]);
        }
      }
      cs.push_back(layer);
    }
    int flat = 0;
    for (const auto& layer : cs)
      for (const auto& c : layer) flat += c.arity();
    if (flat > 9 || flat > cfg.max_tree_tails + 4) continue;
    ++done;
    std::vector<Operation> cs_flat;
    for (const auto& layer : cs)
      cs_flat.insert(cs_flat.end(), layer.begin(), layer.end());
    Operation lhs = compose(compose(a, bs, rule), cs_flat, rule);
    std::vector<Operation> composed_bs;
    for (std::size_t i = 0; i < bs.size(); ++i)
      composed_bs.push_back(compose(bs[i], cs[i], rule));
    Operation rhs = compose(a, composed_bs, rule);
    if (!(lhs.matrix == rhs.matrix) || lhs.inputs != rhs.inputs ||
        !(lhs.tree == rhs.tree)) {
      all_ok = false;
      Counterexample ce = matrix_mismatch(
          "Phi(Phi(a,b),c) differs from Phi(a,Phi(b,c))", lhs.matrix,
          rhs.matrix);
      add_pair(ce, "outer_tree", a.tree.encode());
      add_pair(ce, "lhs_tree", lhs.tree.encode());
      add_pair(ce, "rhs_tree", rhs.tree.encode());
      rb.fail(ce);
    }
  }
  rb.rec.note = std::to_string(done) + " sampled transitivity triples";
  if (verdict_out) *verdict_out = all_ok;
  rb.done(out);
}

// ---- Definition 2 checks ------------------------------------------------

std::vector<Operation> braid_probes(const Instance& inst,
                                    const std::vector<Operation>& pool,
                                    int arity) {
  std::vector<Operation> probes;
  for (const Operation& op : pool)
    if (op.arity() == arity) probes.push_back(op);
  (void)inst;
  return probes;
}

void check_d2a(const Instance& inst, const CheckConfig& cfg,
               const std::vector<Operation>& pool, Rng& rng,
               std::vector<CheckRecord>& out) {
  RecordBuilder rb("D2.a", "mu is a braid-group action: mu_1 = id, "
                           "mu_(st) = mu_s mu_t, relations act trivially");
  BraidingSpec spec = inst.braiding();
  int checked = 0;
  for (int n = 2; n <= cfg.max_arity; ++n) {
    std::vector<Operation> probes = braid_probes(inst, pool, n);
    if (probes.size() > 4) probes.resize(4);
    for (const Operation& op : probes) {
      bool defined = true;
      try {
        // mu of the empty word
        if (!(braid_act(braid_identity(n), op, spec) == op)) {
          rb.fail(Counterexample{"mu of the empty word is not the identity",
                                 {}});
        }
        // free cancellation sigma sigma^-1 and sigma^-1 sigma
        for (int g = 1; g < n; ++g) {
          for (int s : {1, -1}) {
            BraidWord w = braid_identity(n);
            w.push(g, s);
            w.push(g, -s);
            Operation back = braid_act(w, op, spec);
            if (!(back == op)) {
              Counterexample ce = matrix_mismatch(
                  "mu(s" + std::to_string(g) + " s" + std::to_string(g) +
                      "^-1) is not the identity",
                  back.matrix, op.matrix);
              rb.fail(ce);
            }
          }
        }
        // braid relations
        for (int g = 1; g + 1 < n; ++g) {
          BraidWord lhs_w = braid_identity(n), rhs_w = braid_identity(n);
          lhs_w.push(g, 1); lhs_w.push(g + 1, 1); lhs_w.push(g, 1);
          rhs_w.push(g + 1, 1); rhs_w.push(g, 1); rhs_w.push(g + 1, 1);
          Operation lhs = braid_act(lhs_w, op, spec);
          Operation rhs = braid_act(rhs_w, op, spec);
          ++checked;
          if (!(lhs == rhs)) {
            Counterexample ce = matrix_mismatch(
                "braid relation fails on an arity-" + std::to_string(n) +
                    " operation",
                lhs.matrix, rhs.matrix);
            add_pair(ce, "lhs_word", braid_word_to_string(lhs_w));
            add_pair(ce, "rhs_word", braid_word_to_string(rhs_w));
            rb.fail(ce);
          }
        }
        // far commutation (needs arity >= 4)
        for (int g = 1; g + 2 < n; ++g) {
          for (int h = g + 2; h < n; ++h) {
            BraidWord lhs_w = braid_identity(n), rhs_w = braid_identity(n);
            lhs_w.push(g, 1); lhs_w.push(h, 1);
            rhs_w.push(h, 1); rhs_w.push(g, 1);
            Operation lhs = braid_act(lhs_w, op, spec);
            Operation rhs = braid_act(rhs_w, op, spec);
            if (!(lhs == rhs))
              rb.fail(matrix_mismatch("far generators fail to commute",
                                      lhs.matrix, rhs.matrix));
          }
        }
        // sampled pair law mu(st) = mu_s mu_t
        for (int i = 0; i < cfg.random_samples / 5 + 1; ++i) {
          BraidWord s = random_word(rng, n, cfg.max_braid_length / 2);
          BraidWord t = random_word(rng, n, cfg.max_braid_length / 2);
          Operation joint = braid_act(braid_multiply(s, t), op, spec);
          Operation split = braid_act(s, braid_act(t, op, spec), spec);
          if (!(joint == split)) {
            Counterexample ce = matrix_mismatch("mu(st) != mu_s mu_t",
                                                joint.matrix, split.matrix);
            add_pair(ce, "sigma", braid_word_to_string(s));
            add_pair(ce, "tau", braid_word_to_string(t));
            rb.fail(ce);
          }
        }
        // random words times their inverses
        for (int i = 0; i < cfg.random_samples / 5 + 1; ++i) {
          BraidWord wrd = random_word(rng, n, cfg.max_braid_length);
          Operation back =
              braid_act(braid_multiply(wrd, braid_invert(wrd)), op, spec);
          if (!(back == op))
            rb.fail(matrix_mismatch("mu(w w^-1) is not the identity",
                                    back.matrix, op.matrix));
        }
      } catch (const InputError&) {
        defined = false;  // braiding undefined on some input pair
      }
      (void)defined;
    }
  }
  rb.rec.note = "relations checked on " + std::to_string(checked) +
                " probe instances; indexing: new slot i holds old input "
                "pi^-1(i)";
  rb.done(out);
}

void check_d2c(const Instance& inst, const CheckConfig& cfg,
               const std::vector<Operation>& pool,
               std::vector<CheckRecord>& out) {
  RecordBuilder rb("D2.c", "mu_sigma commutes with the phi_f maps");
  (void)cfg;
  BraidingSpec spec = inst.braiding();
  bool tested = false;
  for (const Operation& op : pool) {
    if (op.arity() != 3 || !(op.tree == corolla(3))) continue;
    for (const PlaneTree& t : enumerate_trees(3, true)) {
      BraidWord w = braid_identity(3);
      w.push(1, 1);
      w.push(2, 1);
      try {
        Operation path1 = retree(braid_act(w, op, spec), t);
        Operation path2 = braid_act(w, retree(op, t), spec);
        tested = true;
        if (!(path1 == path2)) {
          Counterexample ce = matrix_mismatch(
              "retree and mu_sigma do not commute", path1.matrix,
              path2.matrix);
          add_pair(ce, "tree", t.encode());
          rb.fail(ce);
        }
      } catch (const InputError&) {
      }
    }
    if (tested) break;
  }
  if (!tested) {
    rb.rec.status = "skipped";
    rb.rec.note = "no braidable arity-3 operation";
  } else {
    rb.rec.note = "degenerate under localized phi_f (identity on matrices); "
                  "kept for conformance";
  }
  rb.done(out);
}

void check_d2d(const Instance& inst, std::vector<CheckRecord>& out) {
  RecordBuilder rb("D2.d", "mu_1 in B_1 preserves id_X");
  BraidingSpec spec = inst.braiding();
  for (const auto& g : generator_refs(inst)) {
    Operation id = identity_op(g, inst.kind);
    Operation acted = braid_act(braid_identity(1), id, spec);
    if (!(acted == id))
      rb.fail(matrix_mismatch("mu_1 moved id_" + g.name, acted.matrix,
                              id.matrix));
  }
  rb.done(out);
}

// ---- cabling (Definition 2(b)) ------------------------------------------

struct BlockState {
  ObjectRef out_word;
  std::vector<RatFunc> fvars;  // composite variable per output factor
};

// Act-componentwise-then-compose side of the square.  Inner operations
// must have a known output-factor/tail correspondence, which holds for
// the identity-based inners used by the sampler.
std::pair<std::vector<ObjectRef>, MatrixRF> cabling_path_b(
    const Operation& a, const std::vector<Operation>& inners,
    const std::vector<BraidWord>& inner_words, const BraidWord& outer,
    const BraidingSpec& spec, MarkerRule rule) {
  const int n = a.arity();
  std::vector<Operation> acted;
  std::vector<BlockState> blocks(static_cast<std::size_t>(n));
  std::vector<int> sizes, order;
  int total = 0;
  for (int i = 0; i < n; ++i) {
    const Operation& b = inners[static_cast<std::size_t>(i)];
    acted.push_back(braid_act(inner_words[static_cast<std::size_t>(i)], b,
                              spec));
    // Output factor f sits on tail pi_w(f) for identity-based inners
    // whose factors correspond one-to-one with tails.
    Perm pi = to_permutation(inner_words[static_cast<std::size_t>(i)]);
    BlockState st;
    st.out_word = b.output;
    if (static_cast<int>(b.output.word.size()) == b.arity()) {
      for (std::size_t f = 0; f < b.output.word.size(); ++f)
        st.fvars.push_back(RatFunc::variable(
            z_var(total + pi[f] + 1)));
    } else {
      for (std::size_t f = 0; f < b.output.word.size(); ++f)
        st.fvars.push_back(RatFunc::variable(z_var(total + 1)));
    }
    blocks[static_cast<std::size_t>(i)] = st;
    sizes.push_back(b.arity());
    order.push_back(i);
    total += b.arity();
  }

  long outdim = 1;
  for (const auto& b : inners) outdim *= b.output.dim;
  MatrixRF F = MatrixRF::identity(static_cast<int>(outdim));

  // Letters act rightmost first, mirroring braid_act.
  for (auto it = outer.letters.rbegin(); it != outer.letters.rend(); ++it) {
    auto [g, sign] = *it;
    if (g < 1 || g >= n) throw InputError("cabling: outer letter out of range");
    int off = 0;
    for (int s = 0; s + 1 < g; ++s) off += sizes[static_cast<std::size_t>(s)];
    int kL = sizes[static_cast<std::size_t>(g - 1)];
    int kR = sizes[static_cast<std::size_t>(g)];
    // Variables stay with positions; contents swap.
    std::map<Var, RatFunc> swap_sub;
    for (int j = 0; j < kL; ++j)
      swap_sub[z_var(off + 1 + j)] = RatFunc::variable(z_var(off + kR + 1 + j));
    for (int j = 0; j < kR; ++j)
      swap_sub[z_var(off + kL + 1 + j)] = RatFunc::variable(z_var(off + 1 + j));
    F = F.substitute(swap_sub);
    for (auto& st : blocks)
      for (auto& fv : st.fvars) fv = fv.substitute(swap_sub);

    const int bl = order[static_cast<std::size_t>(g - 1)];
    const int br = order[static_cast<std::size_t>(g)];
    const BlockState& L = blocks[static_cast<std::size_t>(bl)];
    const BlockState& R = blocks[static_cast<std::size_t>(br)];
    MatrixRF c;
    if (sign > 0) {
      c = word_braiding(spec, R.out_word.word, R.fvars, L.out_word.word,
                        L.fvars);
    } else {
      c = word_braiding(spec, L.out_word.word, L.fvars, R.out_word.word,
                        R.fvars)
              .inverse();
    }
    long pre = 1, post = 1;
    for (int s = 0; s + 1 < g; ++s)
      pre *= blocks[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])]
                 .out_word.dim;
    for (int s = g + 1; s < n; ++s)
      post *= blocks[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])]
                  .out_word.dim;
    F = F * MatrixRF::identity(static_cast<int>(pre))
                .kron(c)
                .kron(MatrixRF::identity(static_cast<int>(post)));
    std::swap(order[static_cast<std::size_t>(g - 1)],
              order[static_cast<std::size_t>(g)]);
    std::swap(sizes[static_cast<std::size_t>(g - 1)],
              sizes[static_cast<std::size_t>(g)]);
  }

  // Outer matrix at block markers, inner tensor in the final layout.
  std::map<Var, RatFunc> marker_sub;
  std::vector<ObjectRef> inputs;
  MatrixRF inner_tensor = MatrixRF::identity(1);
  int off = 0;
  for (int s = 0; s < n; ++s) {
    int blk = order[static_cast<std::size_t>(s)];
    const Operation& b = acted[static_cast<std::size_t>(blk)];
    int marker = rule == MarkerRule::first_tail ? off + 1 : off + b.arity();
    marker_sub[z_var(blk + 1)] = RatFunc::variable(z_var(marker));
    std::map<Var, RatFunc> ren;
    for (int j = 1; j <= b.arity(); ++j)
      ren[z_var(j)] = RatFunc::variable(z_var(off + j));
    inner_tensor = inner_tensor.kron(b.matrix.substitute(ren));
    inputs.insert(inputs.end(), b.inputs.begin(), b.inputs.end());
    off += b.arity();
  }
  MatrixRF result = a.matrix.substitute(marker_sub) * F * inner_tensor;
  return {inputs, result};
}

struct CablingSample {
  Operation a;
  std::vector<Operation> inners;
  std::vector<BraidWord> inner_words;
  BraidWord outer;
  std::string label;
};

std::vector<CablingSample> cabling_samples(const Instance& inst,
                                           const CheckConfig& cfg, Rng& rng) {
  std::vector<CablingSample> samples;
  std::vector<ObjectRef> braidable = braidable_refs(inst);
  if (braidable.empty()) return samples;
  const ObjectRef g = braidable[0];

  auto identity_inner = [&](int k) {
    if (k == 1) return identity_op(g, inst.kind);
    return identity_word_op(std::vector<ObjectRef>(static_cast<std::size_t>(k), g),
                            inst.kind);
  };

  std::vector<std::vector<int>> block_shapes = {{1, 1}, {2, 1}, {1, 2}};
  if (cfg.max_tree_tails >= 4) block_shapes.push_back({2, 2});
  std::vector<BraidWord> outers;
  {
    BraidWord e = braid_identity(2);
    outers.push_back(e);
    for (int s : {1, -1}) {
      BraidWord w = braid_identity(2);
      w.push(1, s);
      outers.push_back(w);
      for (int s2 : {1, -1}) {
        BraidWord w2 = w;
        w2.push(1, s2);
        outers.push_back(w2);
      }
    }
  }

  for (const auto& shape : block_shapes) {
    int total = 0;
    for (int k : shape) total += k;
    if (total > cfg.max_tree_tails) continue;
    std::vector<Operation> inners;
    for (int k : shape) inners.push_back(identity_inner(k));
    std::vector<ObjectRef> outs;
    for (const auto& b : inners) outs.push_back(b.output);
    std::vector<Operation> as = {identity_word_op(outs, inst.kind)};
    try {
      as.push_back(braiding_op(inst, outs[0], outs[1]));
    } catch (const InputError&) {
    }
    for (const Operation& a : as) {
      for (const BraidWord& outer : outers) {
        CablingSample s;
        s.a = a;
        s.inners = inners;
        for (int k : shape) {
          BraidWord iw = braid_identity(k);
          // sampled inner braids on 2-tail blocks
          if (k == 2 && rng.range(0, 1) == 0 && !outer.empty())
            iw.push(1, rng.range(0, 1) == 0 ? 1 : -1);
          s.inner_words.push_back(iw);
        }
        s.outer = outer;
        std::ostringstream os;
        os << "blocks (";
        for (std::size_t i = 0; i < shape.size(); ++i)
          os << (i ? "," : "") << shape[i];
        os << "), outer " << braid_word_to_string(outer);
        s.label = os.str();
        samples.push_back(s);
      }
    }
  }
  return samples;
}

void check_d2b(const Instance& inst, const CheckConfig& cfg, Rng& rng,
               std::vector<CheckRecord>& out, MarkerRule rule,
               bool* verdict_out) {
  RecordBuilder rb("D2.b",
                   "cabling square: compose-then-act equals "
                   "act-componentwise-then-compose");
  BraidingSpec spec = inst.braiding();
  std::vector<CablingSample> samples = cabling_samples(inst, cfg, rng);
  bool all_ok = true;
  int run = 0;
  for (const CablingSample& s : samples) {
    std::vector<int> block_sizes;
    for (const auto& b : s.inners) block_sizes.push_back(b.arity());
    try {
      Operation composite = compose(s.a, s.inners, rule);
      BraidWord cabled = cable(s.outer, block_sizes, s.inner_words);
      Operation path_a = braid_act(cabled, composite, spec);
      auto [inputs_b, matrix_b] =
          cabling_path_b(s.a, s.inners, s.inner_words, s.outer, spec, rule);
      ++run;
      if (path_a.inputs != inputs_b) {
        all_ok = false;
        Counterexample ce;
        ce.description = "the two paths permute the inputs differently";
        add_pair(ce, "sample", s.label);
        rb.fail(ce);
        continue;
      }
      if (!(path_a.matrix == matrix_b)) {
        all_ok = false;
        Counterexample ce =
            matrix_mismatch("cabling square does not commute", path_a.matrix,
                            matrix_b);
        add_pair(ce, "sample", s.label);
        add_pair(ce, "cabled_word", braid_word_to_string(cabled));
        rb.fail(ce);
      }
    } catch (const InputError&) {
      // braiding undefined for this sample; not a failure
    }
  }
  if (run == 0) {
    rb.rec.status = "skipped";
    rb.rec.note = "no braidable samples";
  } else {
    rb.rec.note = std::to_string(run) + " samples across block shapes";
  }
  if (verdict_out) *verdict_out = all_ok;
  rb.done(out);
}

// ---- factors through S_n -------------------------------------------------

bool compute_factors_sn(const Instance& inst, int bound) {
  BraidingSpec spec = inst.braiding();
  for (int n = 2; n <= bound; ++n) {
    std::vector<Operation> probes;
    for (const auto& g : braidable_refs(inst)) {
      std::vector<ObjectRef> ins(static_cast<std::size_t>(n), g);
      probes.push_back(identity_word_op(ins, inst.kind));
    }
    for (const auto& no : inst.operations)
      if (no.op.arity() == n) probes.push_back(no.op);
    try {
      if (!factors_through_sn(probes, spec)) return false;
    } catch (const InputError&) {
      // braiding undefined on some pair: treat as not factoring
      return false;
    }
  }
  return true;
}

}  // namespace

void CheckConfig::validate() const {
  if (max_arity < 1 || max_tree_tails < 1 || max_braid_length < 1 ||
      max_compose_depth < 1 || random_samples < 1)
    throw InputError("check config: all bounds must be >= 1");
  if (max_tree_tails > 9)
    throw InputError("check config: max_tree_tails cannot exceed 9");
}

bool CheckReport::all_pass() const {
  if (!instance_valid) return false;
  for (const auto& r : records)
    if (r.status == "fail") return false;
  return true;
}

const CheckRecord* CheckReport::find(const std::string& id) const {
  for (const auto& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

void check_pseudo_monoidal(const Instance& inst, const CheckConfig& cfg,
                           std::vector<CheckRecord>& out) {
  Rng rng(cfg.random_seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Operation> pool = build_pool(inst, cfg, rng);
  check_d1b(inst, cfg, pool, out);
  check_d1c(inst, cfg, pool, rng, out);
  check_d1d(inst, cfg, pool, rng, out, MarkerRule::first_tail, nullptr);
}

void check_braid_action(const Instance& inst, const CheckConfig& cfg,
                        std::vector<CheckRecord>& out) {
  Rng rng(cfg.random_seed ^ 0xc2b2ae3d27d4eb4full);
  std::vector<Operation> pool = build_pool(inst, cfg, rng);
  check_d2a(inst, cfg, pool, rng, out);
  check_d2c(inst, cfg, pool, out);
  check_d2d(inst, out);
}

void check_cabling(const Instance& inst, const CheckConfig& cfg,
                   std::vector<CheckRecord>& out) {
  Rng rng(cfg.random_seed ^ 0x165667b19e3779f9ull);
  check_d2b(inst, cfg, rng, out, MarkerRule::first_tail, nullptr);
}

CheckReport run_suite(const Instance& inst, const CheckConfig& cfg) {
  cfg.validate();
  CheckReport report;
  report.instance_name = inst.name;
  report.config = cfg;

  // Instance validation record.
  {
    RecordBuilder rb("instance", "instance data validates");
    try {
      for (const auto& no : inst.operations) {
        std::string why;
        if (!op_is_valid(no.op, &why))
          throw InputError("operation '" + no.name + "': " + why);
      }
      if (!inst.flip_braiding) {
        if (inst.rmatrix->matrix.determinant().is_zero())
          throw InputError("R-matrix is singular");
      }
      report.instance_valid = true;
    } catch (const InputError& e) {
      report.instance_valid = false;
      Counterexample ce;
      ce.description = e.what();
      rb.fail(ce);
    }
    rb.done(report.records);
  }

  if (report.instance_valid) {
    check_pseudo_monoidal(inst, cfg, report.records);
    check_braid_action(inst, cfg, report.records);
    check_cabling(inst, cfg, report.records);

    {
      RecordBuilder rb("SN", "do the braid actions factor through S_n");
      report.pseudo_tensor = compute_factors_sn(inst, 4);
      rb.rec.note = report.pseudo_tensor
                        ? "yes: pseudo-tensor case (n <= 4)"
                        : "no: genuinely braided (n <= 4)";
      rb.done(report.records);
    }
    {
      // Marker-rule independence: the identity and transitivity laws
      // must hold verbatim under the last-tail marker rule as well.
      RecordBuilder rb("markers",
                       "coherence verdicts independent of the marker rule");
      Rng rng(cfg.random_seed ^ 0x27d4eb2f165667c5ull);
      std::vector<Operation> pool = build_pool(inst, cfg, rng);
      std::vector<CheckRecord> scratch;
      bool first_ok = true, last_ok = true;
      check_d1d(inst, cfg, pool, rng, scratch, MarkerRule::first_tail,
                &first_ok);
      check_d1d(inst, cfg, pool, rng, scratch, MarkerRule::last_tail,
                &last_ok);
      bool cab_first = true, cab_last = true;
      Rng rng2(cfg.random_seed ^ 0x85ebca77c2b2ae63ull);
      Rng rng3 = rng2;
      check_d2b(inst, cfg, rng2, scratch, MarkerRule::first_tail, &cab_first);
      check_d2b(inst, cfg, rng3, scratch, MarkerRule::last_tail, &cab_last);
      if (first_ok != last_ok || cab_first != cab_last) {
        Counterexample ce;
        ce.description = "first-tail and last-tail markers disagree";
        add_pair(ce, "transitivity_first", first_ok ? "pass" : "fail");
        add_pair(ce, "transitivity_last", last_ok ? "pass" : "fail");
        add_pair(ce, "cabling_first", cab_first ? "pass" : "fail");
        add_pair(ce, "cabling_last", cab_last ? "pass" : "fail");
        rb.fail(ce);
      }
      rb.done(report.records);
    }

    // Canonical record order.
    const std::vector<std::string> order = {"instance", "D1.b", "D1.c",
                                            "D1.d",     "D2.a", "D2.b",
                                            "D2.c",     "D2.d", "SN",
                                            "markers"};
    std::stable_sort(report.records.begin(), report.records.end(),
                     [&](const CheckRecord& x, const CheckRecord& y) {
                       auto ix = std::find(order.begin(), order.end(), x.id);
                       auto iy = std::find(order.begin(), order.end(), y.id);
                       return ix < iy;
                     });
  }
  return report;
}

namespace {

nlohmann::ordered_json counterexample_json(const Counterexample& ce) {
  nlohmann::ordered_json j;
  j["description"] = ce.description;
  for (const auto& [k, v] : ce.data) j[k] = v;
  return j;
}

}  // namespace

std::string report_to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["instance"] = report.instance_name;
  j["config"] = {
      {"max_arity", report.config.max_arity},
      {"max_tree_tails", report.config.max_tree_tails},
      {"max_braid_length", report.config.max_braid_length},
      {"max_compose_depth", report.config.max_compose_depth},
      {"random_seed", report.config.random_seed},
      {"random_samples", report.config.random_samples},
  };
  j["valid"] = report.instance_valid;
  j["pseudo_tensor"] = report.pseudo_tensor;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json rec;
    rec["id"] = r.id;
    rec["ref"] = r.ref;
    rec["status"] = r.status;
    if (!r.note.empty()) rec["note"] = r.note;
    if (!r.counterexample.empty())
      rec["counterexample"] = counterexample_json(r.counterexample);
    j["checks"].push_back(rec);
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream os;
  os << "instance: " << report.instance_name << "\n";
  os << "valid: " << (report.instance_valid ? "yes" : "no") << "\n";
  os << "pseudo-tensor (factors through S_n): "
     << (report.pseudo_tensor ? "yes" : "no") << "\n";
  for (const auto& r : report.records) {
    os << "  [" << r.status << "] " << r.id << "  " << r.ref;
    os << "  (" << static_cast<long>(r.wall_ms * 1000) / 1000.0 << " ms)";
    if (!r.note.empty()) os << "\n         " << r.note;
    if (!r.counterexample.empty()) {
      os << "\n         counterexample: " << r.counterexample.description;
      for (const auto& [k, v] : r.counterexample.data)
        os << "\n           " << k << " = " << v;
    }
    os << "\n";
  }
  os << (report.all_pass() ? "RESULT: pass" : "RESULT: fail") << "\n";
  return os.str();
}

}  // namespace braidcat
