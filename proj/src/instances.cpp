// Concrete candidate categories and their oracles.

#include "braidcat/instances.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "braidcat/expr.hpp"

namespace braidcat {

bool ybe_check(const RMatrixDatum& r, YbeFailure* failure) {
  const int d = static_cast<int>(r.object_dim);
  const int d2 = d * d;
  if (r.matrix.rows() != d2 || r.matrix.cols() != d2)
    throw InputError("ybe_check: R must be d^2 x d^2");
  RatFunc uu = RatFunc::variable(Var::u);
  RatFunc vv = RatFunc::variable(Var::v);
  RatFunc mid = r.spectral_kind == GroupKind::multiplicative ? uu * vv
                                                             : uu + vv;
  auto at = [&](const RatFunc& arg) {
    return r.matrix.substitute({{Var::u, arg}});
  };
  MatrixRF Ru = at(uu), Rm = at(mid), Rv = at(vv);
  MatrixRF id = MatrixRF::identity(d);
  MatrixRF p23 = id.kron(MatrixRF::flip(d, d));
  MatrixRF r12 = Ru.kron(id);
  MatrixRF r23 = id.kron(Rv);
  MatrixRF r13 = p23 * Rm.kron(id) * p23;
  MatrixRF lhs = r12 * r13 * r23;
  MatrixRF rhs = r23 * r13 * r12;
  auto [i, j] = lhs.first_difference(rhs);
  if (i < 0) return true;
  if (failure) *failure = YbeFailure{i, j, lhs.at(i, j), rhs.at(i, j)};
  return false;
}

RMatrixDatum yang_r(long d) {
  if (d < 2) throw InputError("yang_r: dimension must be >= 2");
  const int di = static_cast<int>(d);
  MatrixRF m = MatrixRF::identity(di * di).scaled(RatFunc::variable(Var::u)) +
               MatrixRF::flip(di, di);
  return RMatrixDatum{d, m, GroupKind::additive};
}

RMatrixDatum six_vertex_r() {
  // Symmetric convention, cleared of negative powers:
  //   a = q^2 u^2 - 1, b = q (u^2 - 1), c = u (q^2 - 1).
  RatFunc q = RatFunc::variable(Var::q);
  RatFunc u = RatFunc::variable(Var::u);
  RatFunc one(1);
  RatFunc a = q * q * u * u - one;
  RatFunc bb = q * (u * u - one);
  RatFunc c = u * (q * q - one);
  MatrixRF m(4, 4);
  m.at(0, 0) = a;
  m.at(1, 1) = bb;
  m.at(1, 2) = c;
  m.at(2, 1) = c;
  m.at(2, 2) = bb;
  m.at(3, 3) = a;
  RMatrixDatum r{2, m, GroupKind::multiplicative};
  YbeFailure f;
  if (!ybe_check(r, &f))
    throw InputError("six_vertex_r: transcribed convention fails the YBE "
                     "oracle at entry (" + std::to_string(f.row) + "," +
                     std::to_string(f.col) + ")");
  return r;
}

BraidingSpec Instance::braiding() const {
  BraidingSpec b;
  b.kind = kind;
  if (flip_braiding) {
    b.flip = true;
    return b;
  }
  b.flip = false;
  b.object = rmatrix_object;
  b.object_dim = rmatrix->object_dim;
  b.r = rmatrix->matrix;
  return b;
}

ObjectRef Instance::object_ref(const std::string& name) const {
  std::vector<std::pair<std::string, long>> factors;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '*')) {
    bool found = false;
    for (const auto& [n, d] : objects) {
      if (n == part) {
        factors.emplace_back(n, d);
        found = true;
        break;
      }
    }
    if (!found)
      throw InputError("unknown object '" + part + "' in '" + name + "'");
  }
  if (factors.empty()) throw InputError("empty object name");
  if (factors.size() == 1)
    return ObjectRef::generator(factors[0].first, factors[0].second);
  return ObjectRef::tensor_word(factors);
}

const NamedOperation* Instance::find_operation(const std::string& name) const {
  for (const auto& op : operations)
    if (op.name == name) return &op;
  return nullptr;
}

namespace {

using nlohmann::json;

RatFunc parse_entry(const json& j, const std::string& where) {
  if (!j.is_string())
    throw InputError(where + ": matrix entries must be expression strings");
  try {
    return parse_expr(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what() + " in \"" +
                     j.get<std::string>() + "\"");
  }
}

MatrixRF parse_matrix(const json& j, int rows, int cols,
                      const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    throw InputError(where + ": expected flat array of " +
                     std::to_string(rows * cols) + " expression strings");
  MatrixRF m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = parse_entry(j[static_cast<std::size_t>(r * cols + c)],
                               where + " entry (" + std::to_string(r) + "," +
                                   std::to_string(c) + ")");
  return m;
}

}  // namespace

Instance parse_instance(const std::string& json_text,
                        const std::string& name) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError("instance file '" + name + "': " + e.what());
  }
  Instance inst;
  inst.name = name;
  if (!j.contains("group") || !j["group"].is_string())
    throw InputError("instance: missing \"group\"");
  inst.kind = group_kind_by_name(j["group"].get<std::string>());

  if (!j.contains("objects") || !j["objects"].is_array() ||
      j["objects"].empty())
    throw InputError("instance: missing \"objects\" list");
  for (const auto& o : j["objects"]) {
    if (!o.contains("name") || !o.contains("dim"))
      throw InputError("instance: each object needs name and dim");
    std::string oname = o["name"].get<std::string>();
    long dim = o["dim"].get<long>();
    if (dim < 1)
      throw InputError("instance: object '" + oname + "' needs dim >= 1");
    for (const auto& [existing, d] : inst.objects)
      if (existing == oname)
        throw InputError("instance: duplicate object '" + oname + "'");
    if (oname.find('*') != std::string::npos)
      throw InputError("instance: object names may not contain '*'");
    inst.objects.emplace_back(oname, dim);
  }

  if (!j.contains("braiding") || !j["braiding"].is_object())
    throw InputError("instance: missing \"braiding\"");
  const json& br = j["braiding"];
  std::string btype = br.value("type", "");
  if (btype == "flip") {
    inst.flip_braiding = true;
    if (inst.kind != GroupKind::point)
      throw InputError("instance: flip braiding requires the point kind");
  } else if (btype == "rmatrix") {
    inst.flip_braiding = false;
    if (inst.kind == GroupKind::point)
      throw InputError("instance: an R-matrix needs an additive or "
                       "multiplicative group");
    inst.rmatrix_object = br.value("object", "");
    std::string var = br.value("variable", "u");
    if (var != "u")
      throw InputError("instance: braiding variable must be \"u\"");
    long d = 0;
    for (const auto& [n, dd] : inst.objects)
      if (n == inst.rmatrix_object) d = dd;
    if (d == 0)
      throw InputError("instance: braiding object '" + inst.rmatrix_object +
                       "' is not declared");
    if (!br.contains("entries"))
      throw InputError("instance: braiding needs \"entries\"");
    int d2 = static_cast<int>(d * d);
    MatrixRF r = parse_matrix(br["entries"], d2, d2, "braiding");
    for (int row = 0; row < d2; ++row)
      for (int col = 0; col < d2; ++col)
        for (int vi = 0; vi < kNumVars; ++vi) {
          Var v = static_cast<Var>(vi);
          if (v == Var::u || v == Var::q) continue;
          if (r.at(row, col).uses_var(v))
            throw InputError("braiding entry (" + std::to_string(row) + "," +
                             std::to_string(col) + ") may only use u and q");
        }
    RMatrixDatum datum{d, r, inst.kind};
    if (datum.matrix.determinant().is_zero())
      throw InputError("instance: R-matrix is singular over the function "
                       "field");
    inst.rmatrix = datum;
  } else {
    throw InputError("instance: braiding type must be flip or rmatrix");
  }

  if (j.contains("operations")) {
    if (!j["operations"].is_array())
      throw InputError("instance: \"operations\" must be a list");
    for (const auto& o : j["operations"]) {
      std::string oname = o.value("name", "");
      if (oname.empty())
        throw InputError("instance: every operation needs a name");
      std::string where = "operation '" + oname + "'";
      if (!o.contains("tree") || !o.contains("inputs") ||
          !o.contains("output") || !o.contains("matrix"))
        throw InputError(where + ": needs tree, inputs, output, matrix");
      PlaneTree tree = PlaneTree::decode(o["tree"].get<std::string>());
      std::vector<ObjectRef> inputs;
      for (const auto& in : o["inputs"])
        inputs.push_back(inst.object_ref(in.get<std::string>()));
      ObjectRef output = inst.object_ref(o["output"].get<std::string>());
      long cols = 1;
      for (const auto& in : inputs) cols *= in.dim;
      MatrixRF m = parse_matrix(o["matrix"], static_cast<int>(output.dim),
                                static_cast<int>(cols), where);
      try {
        inst.operations.push_back(
            NamedOperation{oname,
                           make_operation(tree, inputs, output, m, inst.kind)});
      } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
      }
    }
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

MatrixRF square_of_braiding(const Instance& inst, const ObjectRef& a,
                            const ObjectRef& b, bool* is_scalar,
                            RatFunc* scalar) {
  BraidingSpec spec = inst.braiding();
  MatrixRF cab = braiding_of_words(spec, a, b, Var::z1, Var::z2);
  MatrixRF cba = braiding_of_words(spec, b, a, Var::z2, Var::z1);
  MatrixRF sq = cba * cab;
  bool sc = sq.is_scalar_identity(scalar);
  if (is_scalar) *is_scalar = sc;
  return sq;
}

AlgebraReport check_operad_algebra(const Instance& inst, const Operation& m,
                                   AlgebraKind kind) {
  if (m.arity() != 2 || m.inputs[0] != m.inputs[1] ||
      m.inputs[0] != m.output)
    throw InputError("algebra check: operation must map (X, X) to X");
  BraidingSpec spec = inst.braiding();
  Operation id = identity_op(m.output, m.kind);
  PlaneTree d3 = corolla(3);
  AlgebraReport rep;

  if (kind == AlgebraKind::associative) {
    Operation lhs = retree(compose(m, {m, id}), d3);
    Operation rhs = retree(compose(m, {id, m}), d3);
    rep.lhs = lhs.matrix;
    rep.rhs = rhs.matrix;
    auto [i, j] = lhs.matrix.first_difference(rhs.matrix);
    rep.pass = i < 0;
    if (!rep.pass) {
      std::ostringstream os;
      os << "associativity fails at entry (" << i << "," << j << "): "
         << lhs.matrix.at(i, j).to_string() << " vs "
         << rhs.matrix.at(i, j).to_string();
      rep.detail = os.str();
    }
    return rep;
  }

  // Lie: antisymmetry, then Jacobi as a vanishing sum over the three
  // braid rotations of the double composition.
  BraidWord s1 = braid_identity(2);
  s1.push(1, 1);
  Operation ms = braid_act(s1, m, spec);
  MatrixRF anti = m.matrix + ms.matrix;
  if (!anti.is_zero()) {
    auto [i, j] = anti.first_difference(MatrixRF(anti.rows(), anti.cols()));
    rep.pass = false;
    rep.lhs = m.matrix;
    rep.rhs = ms.matrix;
    std::ostringstream os;
    os << "antisymmetry fails at entry (" << i << "," << j << "): m + "
       << "mu_sigma1(m) has " << anti.at(i, j).to_string();
    rep.detail = os.str();
    return rep;
  }

  Operation dbl = retree(compose(m, {m, id}), d3);
  BraidWord rot = braid_identity(3);
  rot.push(1, 1);
  rot.push(2, 1);  // the 3-cycle braid
  Operation r1 = braid_act(rot, dbl, spec);
  Operation r2 = braid_act(rot, r1, spec);
  MatrixRF sum = dbl.matrix + r1.matrix + r2.matrix;
  rep.lhs = sum;
  rep.rhs = MatrixRF(sum.rows(), sum.cols());
  rep.pass = sum.is_zero();
  if (!rep.pass) {
    auto [i, j] = sum.first_difference(rep.rhs);
    std::ostringstream os;
    os << "Jacobi sum does not vanish at entry (" << i << "," << j
       << "): " << sum.at(i, j).to_string();
    rep.detail = os.str();
  }
  return rep;
}

}  // namespace braidcat
