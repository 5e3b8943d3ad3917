#ifndef BRAIDCAT_TREES_HPP
#define BRAIDCAT_TREES_HPP

#include <string>
#include <vector>

#include "braidcat/errors.hpp"

namespace braidcat {

// Rooted plane tree with ordered children.  A node with no children is a
// tail (leaf edge); tails are numbered 1..n in planar left-to-right
// order.  The unit e is the bare edge, whose root is itself a tail.
class PlaneTree {
public:
  struct Node {
    std::vector<Node> kids;
    bool is_tail() const { return kids.empty(); }
    bool operator==(const Node& o) const { return kids == o.kids; }
  };

  PlaneTree() : root_{} {}  // the unit e
  explicit PlaneTree(Node root) : root_(std::move(root)) {}

  const Node& root() const { return root_; }
  bool is_unit() const { return root_.is_tail(); }
  int tails() const;
  int internal_edges() const;
  int internal_vertices() const;

  bool operator==(const PlaneTree& o) const { return root_ == o.root_; }
  bool operator!=(const PlaneTree& o) const { return !(*this == o); }

  std::string encode() const;  // balanced-parenthesis preorder encoding
  static PlaneTree decode(std::string_view text);

private:
  Node root_;
};

// The unit tree e (= corolla(1)).
PlaneTree unit_tree();

// n-tail corolla; corolla(1) is the unit e.
PlaneTree corolla(int n);

// Replace tail i of t by subs[i]; strictly associative, unit laws hold
// as structural equalities.
PlaneTree graft(const PlaneTree& t, const std::vector<PlaneTree>& subs);

// Edges are indexed over non-root edges in preorder; contracting a tail
// edge is an input error.
int edge_count(const PlaneTree& t);
bool edge_is_internal(const PlaneTree& t, int edge);
PlaneTree contract(const PlaneTree& t, int edge);

// True iff dst is reachable from src by contracting internal edges.
bool exists_morphism(const PlaneTree& src, const PlaneTree& dst);

// All plane trees with n tails and no unary internal vertices, in
// canonical (encoding) order; binary_only keeps trees whose internal
// vertices all have exactly two children.
std::vector<PlaneTree> enumerate_trees(int n, bool binary_only);

}  // namespace braidcat

#endif
