#include <doctest.h>

#include <fstream>
#include <sstream>

#include "braidcat/expr.hpp"
#include "braidcat/instances.hpp"

using namespace braidcat;

namespace {

std::string fixture(const std::string& name) {
  return std::string(BRAIDCAT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("ybe_check accepts the identity and flip") {
  RMatrixDatum id{2, MatrixRF::identity(4), GroupKind::additive};
  CHECK(ybe_check(id));
  RMatrixDatum flip{2, MatrixRF::flip(2, 2), GroupKind::additive};
  CHECK(ybe_check(flip));
  RMatrixDatum flipm{2, MatrixRF::flip(2, 2), GroupKind::multiplicative};
  CHECK(ybe_check(flipm));
}

TEST_CASE("yang_r passes the YBE symbolically") {
  RMatrixDatum r = yang_r(2);
  CHECK(ybe_check(r));
  CHECK(ybe_check(yang_r(3)));
  CHECK_THROWS_AS(yang_r(1), InputError);
  // R(0) = P
  MatrixRF at0 = r.matrix.substitute({{Var::u, RatFunc(0)}});
  CHECK(at0 == MatrixRF::flip(2, 2));
  // det R(u) = (u - 1)(u + 1)^3 for d = 2: vanishes only at u = +-1
  RatFunc det = r.matrix.determinant();
  CHECK(det == parse_expr("(u - 1)*(u + 1)^3"));
}

TEST_CASE("perturbing one Yang entry breaks the YBE with a counterexample") {
  RMatrixDatum r = yang_r(2);
  r.matrix.at(1, 2) = r.matrix.at(1, 2) + RatFunc(1);
  YbeFailure f;
  CHECK_FALSE(ybe_check(r, &f));
  CHECK(f.lhs != f.rhs);
}

TEST_CASE("six_vertex_r is gated by the YBE oracle") {
  RMatrixDatum r = six_vertex_r();
  CHECK(r.spectral_kind == GroupKind::multiplicative);
  CHECK(ybe_check(r));
  // entries become multiplicatively equivariant as functions of z1/z2
  std::map<Var, RatFunc> ratio{
      {Var::u, parse_expr("z1") / parse_expr("z2")}};
  MatrixRF c = r.matrix.substitute(ratio);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(is_invariant(c.at(i, j), {Var::z1, Var::z2},
                         GroupKind::multiplicative));
  // q -> 1 specialization is a scalar multiple of the identity
  MatrixRF q1 = r.matrix.substitute({{Var::q, RatFunc(1)}});
  RatFunc scalar;
  CHECK(q1.is_scalar_identity(&scalar));
  CHECK(scalar == parse_expr("u^2 - 1"));
  // invertible over the function field
  CHECK_FALSE(r.matrix.determinant().is_zero());
}

TEST_CASE("square_of_braiding") {
  Instance yang = load_instance(fixture("yang2.json"));
  ObjectRef v = yang.object_ref("V");
  bool is_scalar = false;
  RatFunc scalar;
  square_of_braiding(yang, v, v, &is_scalar, &scalar);
  CHECK(is_scalar);
  CHECK(scalar == parse_expr("1 - (z1 - z2)^2"));

  Instance flip = load_instance(fixture("flip.json"));
  ObjectRef x = flip.object_ref("X");
  MatrixRF sq = square_of_braiding(flip, x, x, &is_scalar, &scalar);
  CHECK(is_scalar);
  CHECK(scalar.is_one());
  CHECK(sq == MatrixRF::identity(9));

  Instance sixv = load_instance(fixture("sixvertex.json"));
  ObjectRef v2 = sixv.object_ref("V");
  MatrixRF sq6 = square_of_braiding(sixv, v2, v2, &is_scalar, &scalar);
  CHECK(is_scalar);
  CHECK_FALSE(scalar.is_one());
  // depends on the ratio z1/z2 only
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(is_invariant(sq6.at(i, j), {Var::z1, Var::z2},
                         GroupKind::multiplicative));
}

TEST_CASE("square_of_braiding on tensor words") {
  Instance yang = load_instance(fixture("yang2.json"));
  ObjectRef vv = yang.object_ref("V*V");
  CHECK(vv.dim == 4);
  bool is_scalar = false;
  RatFunc scalar;
  MatrixRF sq = square_of_braiding(yang, vv, vv, &is_scalar, &scalar);
  CHECK(sq.rows() == 16);
  CHECK(is_scalar);
  CHECK(scalar == parse_expr("(1 - (z1 - z2)^2)^4"));
}

TEST_CASE("load_instance on the shipped fixtures") {
  Instance yang = load_instance(fixture("yang2.json"));
  CHECK(yang.kind == GroupKind::additive);
  CHECK(yang.objects.size() == 1);
  CHECK(yang.objects[0].second == 2);
  CHECK_FALSE(yang.flip_braiding);
  CHECK(yang.rmatrix->object_dim == 2);
  CHECK(yang.find_operation("cvv") != nullptr);
  CHECK(yang.find_operation("nope") == nullptr);
  // declared cvv agrees with the constructed braiding
  MatrixRF c = braiding_of_words(yang.braiding(), yang.object_ref("V"),
                                 yang.object_ref("V"), Var::z1, Var::z2);
  CHECK(yang.find_operation("cvv")->op.matrix == c);

  Instance flip = load_instance(fixture("flip.json"));
  CHECK(flip.kind == GroupKind::point);
  CHECK(flip.flip_braiding);
  CHECK(flip.objects.size() == 3);

  Instance sixv = load_instance(fixture("sixvertex.json"));
  CHECK(sixv.kind == GroupKind::multiplicative);
  CHECK(ybe_check(*sixv.rmatrix));
}

TEST_CASE("load_instance diagnostics") {
  CHECK_THROWS_AS(load_instance(fixture("missing.json")), InputError);
  // truncated file
  CHECK_THROWS_AS(parse_instance("{ \"group\": \"additive\"", "x"),
                  InputError);
  // equivariance diagnostic names the entry
  std::string bad = R"json({
    "group": "additive",
    "objects": [{"name": "V", "dim": 1}],
    "braiding": {"type": "rmatrix", "object": "V", "variable": "u",
                 "entries": ["1"]},
    "operations": [{"name": "m", "tree": "()", "inputs": ["V"],
                    "output": "V", "matrix": ["z1"]}]
  })json";
  CHECK_THROWS_WITH_AS(parse_instance(bad, "bad"),
                       doctest::Contains("not additive-equivariant"),
                       InputError);
  // flip braiding with a non-point group
  std::string badflip = R"json({
    "group": "additive",
    "objects": [{"name": "V", "dim": 2}],
    "braiding": {"type": "flip"}
  })json";
  CHECK_THROWS_AS(parse_instance(badflip, "badflip"), InputError);
  // zero-dimensional objects are rejected
  std::string zerodim = R"json({
    "group": "point",
    "objects": [{"name": "V", "dim": 0}],
    "braiding": {"type": "flip"}
  })json";
  CHECK_THROWS_AS(parse_instance(zerodim, "zerodim"), InputError);
  // singular R-matrix rejected at load
  std::string singular = R"json({
    "group": "additive",
    "objects": [{"name": "V", "dim": 1}],
    "braiding": {"type": "rmatrix", "object": "V", "variable": "u",
                 "entries": ["0"]}
  })json";
  CHECK_THROWS_AS(parse_instance(singular, "singular"), InputError);
}

TEST_CASE("instance loading is deterministic") {
  std::ifstream in(fixture("yang2.json"));
  std::stringstream buf;
  buf << in.rdbuf();
  Instance a = parse_instance(buf.str(), "yang");
  Instance b = parse_instance(buf.str(), "yang");
  REQUIRE(a.operations.size() == b.operations.size());
  for (std::size_t i = 0; i < a.operations.size(); ++i)
    CHECK(a.operations[i].op == b.operations[i].op);
  CHECK(a.rmatrix->matrix == b.rmatrix->matrix);
}

TEST_CASE("associative algebra checks") {
  Instance flip = load_instance(fixture("flip.json"));
  // ground-field multiplication passes
  const NamedOperation* mult = flip.find_operation("mult");
  REQUIRE(mult);
  CHECK(check_operad_algebra(flip, mult->op, AlgebraKind::associative).pass);
  // a deliberately non-associative 2-dim product fails with a
  // counterexample: e1 e1 = e2, e1 e2 = e1, e2 * = 0
  MatrixRF m(2, 4);
  m.at(1, 0) = RatFunc(1);  // e1 e1 -> e2
  m.at(0, 1) = RatFunc(1);  // e1 e2 -> e1
  ObjectRef v = flip.object_ref("V");
  Operation bad = make_operation(corolla(2), {v, v}, v, m, GroupKind::point);
  AlgebraReport rep = check_operad_algebra(flip, bad,
                                           AlgebraKind::associative);
  CHECK_FALSE(rep.pass);
  CHECK(rep.lhs != rep.rhs);
  CHECK(!rep.detail.empty());
}

TEST_CASE("lie algebra checks") {
  Instance flip = load_instance(fixture("flip.json"));
  // the cross-product bracket passes
  const NamedOperation* bracket = flip.find_operation("bracket");
  REQUIRE(bracket);
  AlgebraReport rep = check_operad_algebra(flip, bracket->op,
                                           AlgebraKind::lie);
  CHECK(rep.pass);
  // zero bracket passes on any object
  ObjectRef v = flip.object_ref("V");
  Operation zero = make_operation(corolla(2), {v, v}, v, MatrixRF(2, 4),
                                  GroupKind::point);
  CHECK(check_operad_algebra(flip, zero, AlgebraKind::lie).pass);
  // the non-antisymmetric product fails
  MatrixRF m(2, 4);
  m.at(0, 0) = RatFunc(1);
  Operation bad = make_operation(corolla(2), {v, v}, v, m, GroupKind::point);
  CHECK_FALSE(check_operad_algebra(flip, bad, AlgebraKind::lie).pass);
  // arity constraint
  const NamedOperation* pairv = flip.find_operation("pairv");
  REQUIRE(pairv);
  CHECK_THROWS_AS(check_operad_algebra(flip, pairv->op, AlgebraKind::lie),
                  InputError);
}

TEST_CASE("cross product Lie check against the structure constant oracle") {
  // epsilon_{kij} recomputed independently and fed through the same
  // antisymmetry + Jacobi identities on raw arrays.
  int eps[3][3][3] = {};
  eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
  eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
  // antisymmetry
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(eps[k][i][j] + eps[k][j][i] == 0);
  // Jacobi: sum over cyclic of eps[m][k][l] eps[l][i][j]
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) {
          int s = 0;
          for (int l = 0; l < 3; ++l)
            s += eps[m][l][k] * eps[l][i][j] + eps[m][l][i] * eps[l][j][k] +
                 eps[m][l][j] * eps[l][k][i];
          CHECK(s == 0);
        }
  // and the fixture matrix matches eps
  Instance flip = load_instance(fixture("flip.json"));
  const NamedOperation* bracket = flip.find_operation("bracket");
  REQUIRE(bracket);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(bracket->op.matrix.at(k, i * 3 + j) ==
              RatFunc(Rational(eps[k][i][j])));
}
