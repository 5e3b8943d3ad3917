#include <doctest.h>

#include <set>

#include "braidcat/trees.hpp"

using namespace braidcat;

namespace {

// Independent Catalan / Schroeder-style counts by convolution, used as
// the oracle for the enumerator.
long binary_count(int n) {
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[1] = 1;
  for (int m = 2; m <= n; ++m)
    for (int k = 1; k < m; ++k)
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - k)];
  return c[static_cast<std::size_t>(n)];
}

long all_count(int n) {
  // Trees whose internal vertices have >= 2 children: t(1) = 1,
  // t(m) = sum over compositions of m into >= 2 parts of prod t(parts).
  std::vector<long> t(static_cast<std::size_t>(n) + 1, 0);
  t[1] = 1;
  for (int m = 2; m <= n; ++m) {
    // f[parts][sum]
    std::vector<std::vector<long>> f(
        static_cast<std::size_t>(m) + 1,
        std::vector<long>(static_cast<std::size_t>(m) + 1, 0));
    f[0][0] = 1;
    for (int parts = 1; parts <= m; ++parts)
      for (int sum = 1; sum <= m; ++sum)
        for (int k = 1; k <= sum; ++k)
          f[static_cast<std::size_t>(parts)][static_cast<std::size_t>(sum)] +=
              f[static_cast<std::size_t>(parts - 1)]
               [static_cast<std::size_t>(sum - k)] *
              t[static_cast<std::size_t>(k)];
    for (int parts = 2; parts <= m; ++parts)
      t[static_cast<std::size_t>(m)] +=
          f[static_cast<std::size_t>(parts)][static_cast<std::size_t>(m)];
  }
  return t[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("corolla and encode conventions") {
  CHECK(unit_tree().encode() == "()");
  CHECK(corolla(1) == unit_tree());
  CHECK(corolla(2).encode() == "(()())");
  CHECK(corolla(3).tails() == 3);
  CHECK(corolla(3).internal_edges() == 0);
  CHECK_THROWS_AS(corolla(0), InputError);
}

TEST_CASE("graft basics and unit laws") {
  PlaneTree e = unit_tree();
  PlaneTree c2 = corolla(2);
  CHECK(graft(e, {c2}) == c2);
  CHECK(graft(c2, {e, e}) == c2);
  PlaneTree left = graft(c2, {c2, e});
  CHECK(left.encode() == "((()())())");
  CHECK(left.tails() == 3);
  CHECK_THROWS_AS(graft(c2, {e}), InputError);
}

TEST_CASE("graft associativity, exhaustive over <= 3 tails") {
  std::vector<PlaneTree> small;
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_trees(n, false)) small.push_back(t);
  for (const auto& outer : small) {
    int n = outer.tails();
    // choose subs for outer, then subsubs for the graft
    std::vector<std::size_t> subs_idx(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<PlaneTree> subs;
      for (int i = 0; i < n; ++i) subs.push_back(small[subs_idx[static_cast<std::size_t>(i)]]);
      PlaneTree mid = graft(outer, subs);
      int total = mid.tails();
      if (total <= 4) {
        // subsubs all units except one slot cycling over small trees
        for (int hot = 0; hot < total; ++hot) {
          for (const auto& candidate : small) {
            std::vector<PlaneTree> subsubs(static_cast<std::size_t>(total),
                                           unit_tree());
            subsubs[static_cast<std::size_t>(hot)] = candidate;
            // lhs: graft then graft
            PlaneTree lhs = graft(mid, subsubs);
            // rhs: compose into the inner layer first
            std::vector<PlaneTree> composed;
            int offset = 0;
            for (int i = 0; i < n; ++i) {
              int k = subs[static_cast<std::size_t>(i)].tails();
              std::vector<PlaneTree> slice(
                  subsubs.begin() + offset, subsubs.begin() + offset + k);
              composed.push_back(
                  graft(subs[static_cast<std::size_t>(i)], slice));
              offset += k;
            }
            PlaneTree rhs = graft(outer, composed);
            REQUIRE(lhs == rhs);
          }
        }
      }
      // next index vector
      std::size_t pos = 0;
      while (pos < subs_idx.size()) {
        if (++subs_idx[pos] < small.size()) break;
        subs_idx[pos] = 0;
        ++pos;
      }
      if (pos == subs_idx.size()) break;
    }
  }
}

TEST_CASE("contract") {
  PlaneTree left = graft(corolla(2), {corolla(2), unit_tree()});
  REQUIRE(left.internal_edges() == 1);
  // the unique internal edge is edge 0 in preorder
  CHECK(contract(left, 0) == corolla(3));
  CHECK_THROWS_AS(contract(corolla(3), 0), InputError);
  // contracting a tail edge is an input error
  PlaneTree t = graft(corolla(2), {unit_tree(), corolla(2)});
  REQUIRE(t.internal_edges() == 1);
  CHECK_THROWS_AS(contract(t, 0), InputError);  // edge 0 is the left tail
  CHECK(contract(t, 1) == corolla(3));
}

TEST_CASE("contracting all internal edges in any order gives the corolla") {
  for (const auto& t : enumerate_trees(4, true)) {
    // all orders of contracting down to the corolla
    std::vector<PlaneTree> frontier{t};
    for (int step = 0; step < t.internal_edges(); ++step) {
      std::vector<PlaneTree> next;
      for (const auto& cur : frontier) {
        int m = edge_count(cur);
        for (int e = 0; e < m; ++e)
          if (edge_is_internal(cur, e)) next.push_back(contract(cur, e));
      }
      frontier = next;
      REQUIRE(!frontier.empty());
    }
    for (const auto& cur : frontier) CHECK(cur == corolla(4));
  }
}

TEST_CASE("exists_morphism") {
  PlaneTree d3 = corolla(3);
  for (const auto& t : enumerate_trees(3, true)) {
    CHECK(exists_morphism(t, t));
    CHECK(exists_morphism(t, d3));
    CHECK_FALSE(exists_morphism(d3, t));
  }
  CHECK_THROWS_AS(exists_morphism(corolla(2), corolla(3)), InputError);
  // the two binary 3-trees are incomparable
  auto bins = enumerate_trees(3, true);
  REQUIRE(bins.size() == 2);
  CHECK_FALSE(exists_morphism(bins[0], bins[1]));
  CHECK_FALSE(exists_morphism(bins[1], bins[0]));
}

TEST_CASE("exists_morphism is a partial order with top delta_n") {
  for (int n = 3; n <= 4; ++n) {
    auto trees = enumerate_trees(n, false);
    PlaneTree top = corolla(n);
    for (const auto& a : trees) {
      CHECK(exists_morphism(a, top));
      for (const auto& b : trees) {
        if (exists_morphism(a, b) && exists_morphism(b, a))
          CHECK(a == b);  // antisymmetry
        for (const auto& c : trees) {
          if (exists_morphism(a, b) && exists_morphism(b, c))
            CHECK(exists_morphism(a, c));  // transitivity
        }
      }
    }
  }
}

TEST_CASE("enumerate_trees counts against the convolution oracle") {
  CHECK(enumerate_trees(3, true).size() == 2);
  CHECK(enumerate_trees(4, true).size() == 5);
  CHECK(enumerate_trees(1, false).size() == 1);
  CHECK(enumerate_trees(1, false)[0] == unit_tree());
  for (int n = 1; n <= 6; ++n) {
    CHECK(static_cast<long>(enumerate_trees(n, true).size()) ==
          binary_count(n));
    CHECK(static_cast<long>(enumerate_trees(n, false).size()) ==
          all_count(n));
  }
  CHECK_THROWS_AS(enumerate_trees(0, false), InputError);
  CHECK_THROWS_AS(enumerate_trees(9, false), InputError);
}

TEST_CASE("encode/decode round trip over all trees with <= 5 tails") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    for (const auto& t : enumerate_trees(n, false)) {
      std::string enc = t.encode();
      CHECK(seen.insert(enc).second);  // no duplicates
      CHECK(PlaneTree::decode(enc) == t);
      CHECK(PlaneTree::decode(enc).tails() == n);
    }
  }
  CHECK_THROWS_AS(PlaneTree::decode("(()"), InputError);
  CHECK_THROWS_AS(PlaneTree::decode("()()"), InputError);
}
