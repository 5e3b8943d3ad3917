// The strict monoidal 2-operad of plane trees.

#include "braidcat/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace braidcat {

namespace {

using Node = PlaneTree::Node;

int count_tails(const Node& n) {
  if (n.is_tail()) return 1;
  int s = 0;
  for (const auto& k : n.kids) s += count_tails(k);
  return s;
}

int count_internal_edges(const Node& n) {
  int s = 0;
  for (const auto& k : n.kids) {
    if (!k.is_tail()) s += 1 + count_internal_edges(k);
  }
  return s;
}

int count_internal_vertices(const Node& n) {
  if (n.is_tail()) return 0;
  int s = 1;
  for (const auto& k : n.kids) s += count_internal_vertices(k);
  return s;
}

void encode_node(const Node& n, std::string& out) {
  out += '(';
  for (const auto& k : n.kids) encode_node(k, out);
  out += ')';
}

Node decode_node(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(')
    throw InputError("tree encoding: expected '(' at offset " +
                     std::to_string(pos));
  ++pos;
  Node n;
  while (pos < text.size() && text[pos] == '(')
    n.kids.push_back(decode_node(text, pos));
  if (pos >= text.size() || text[pos] != ')')
    throw InputError("tree encoding: expected ')' at offset " +
                     std::to_string(pos));
  ++pos;
  return n;
}

}  // namespace

int PlaneTree::tails() const { return count_tails(root_); }
int PlaneTree::internal_edges() const {
  return root_.is_tail() ? 0 : count_internal_edges(root_);
}
int PlaneTree::internal_vertices() const {
  return count_internal_vertices(root_);
}

std::string PlaneTree::encode() const {
  std::string out;
  encode_node(root_, out);
  return out;
}

PlaneTree PlaneTree::decode(std::string_view text) {
  std::size_t pos = 0;
  Node n = decode_node(text, pos);
  if (pos != text.size())
    throw InputError("tree encoding: trailing input at offset " +
                     std::to_string(pos));
  return PlaneTree(std::move(n));
}

PlaneTree unit_tree() { return PlaneTree(); }

PlaneTree corolla(int n) {
  if (n < 1) throw InputError("corolla arity must be >= 1");
  if (n == 1) return unit_tree();
  Node root;
  root.kids.resize(static_cast<std::size_t>(n));
  return PlaneTree(std::move(root));
}

namespace {

Node graft_node(const Node& n, const std::vector<PlaneTree>& subs,
                std::size_t& next) {
  if (n.is_tail()) return subs[next++].root();
  Node out;
  out.kids.reserve(n.kids.size());
  for (const auto& k : n.kids) out.kids.push_back(graft_node(k, subs, next));
  return out;
}

}  // namespace

PlaneTree graft(const PlaneTree& t, const std::vector<PlaneTree>& subs) {
  if (static_cast<int>(subs.size()) != t.tails())
    throw InputError("graft arity mismatch: tree has " +
                     std::to_string(t.tails()) + " tails, got " +
                     std::to_string(subs.size()) + " subtrees");
  std::size_t next = 0;
  return PlaneTree(graft_node(t.root(), subs, next));
}

namespace {

// Preorder numbering of non-root edges (parent -> kid), tails included.
// Returns false until the target edge has been handled.
bool contract_walk(Node& parent, int& next_id, int target, bool& was_tail) {
  for (std::size_t i = 0; i < parent.kids.size(); ++i) {
    if (next_id == target) {
      Node& kid = parent.kids[i];
      if (kid.is_tail()) {
        was_tail = true;
        return true;
      }
      // Splice kid's children into parent's list at kid's position.
      std::vector<Node> spliced = std::move(kid.kids);
      parent.kids.erase(parent.kids.begin() + static_cast<long>(i));
      parent.kids.insert(parent.kids.begin() + static_cast<long>(i),
                         std::make_move_iterator(spliced.begin()),
                         std::make_move_iterator(spliced.end()));
      was_tail = false;
      return true;
    }
    ++next_id;
    if (contract_walk(parent.kids[i], next_id, target, was_tail)) return true;
  }
  return false;
}

}  // namespace

int edge_count(const PlaneTree& t) {
  std::function<int(const Node&)> walk = [&](const Node& n) -> int {
    int s = 0;
    for (const auto& k : n.kids) s += 1 + walk(k);
    return s;
  };
  return walk(t.root());
}

bool edge_is_internal(const PlaneTree& t, int edge) {
  if (edge < 0 || edge >= edge_count(t)) return false;
  Node root = t.root();
  int next_id = 0;
  bool was_tail = false;
  contract_walk(root, next_id, edge, was_tail);
  return !was_tail;
}

PlaneTree contract(const PlaneTree& t, int edge) {
  if (t.internal_edges() == 0)
    throw InputError("contract: tree has no internal edges");
  if (edge < 0 || edge >= edge_count(t))
    throw InputError("contract: edge id " + std::to_string(edge) +
                     " out of range");
  Node root = t.root();
  int next_id = 0;
  bool was_tail = false;
  contract_walk(root, next_id, edge, was_tail);
  if (was_tail)
    throw InputError("contract: edge " + std::to_string(edge) +
                     " is a tail edge");
  return PlaneTree(std::move(root));
}

bool exists_morphism(const PlaneTree& src, const PlaneTree& dst) {
  if (src.tails() != dst.tails())
    throw InputError("exists_morphism: tail counts differ");
  std::string goal = dst.encode();
  std::set<std::string> seen;
  std::vector<PlaneTree> frontier{src};
  seen.insert(src.encode());
  if (src.encode() == goal) return true;
  while (!frontier.empty()) {
    std::vector<PlaneTree> next;
    for (const auto& t : frontier) {
      int m = edge_count(t);
      for (int e = 0; e < m; ++e) {
        if (!edge_is_internal(t, e)) continue;
        PlaneTree c = contract(t, e);
        std::string enc = c.encode();
        if (enc == goal) return true;
        if (seen.insert(enc).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

namespace {

void gen_trees(int n, bool binary_only, std::vector<PlaneTree>& out) {
  // Compositions of n into parts, each part yielding a child subtree.
  std::function<std::vector<Node>(int)> gen = [&](int m) {
    std::vector<Node> result;
    if (m == 1) result.push_back(Node{});  // tail
    // Root vertex with k >= 2 children of sizes summing to m.
    std::function<void(int, int, std::vector<Node>&)> parts =
        [&](int rem, int depth_parts, std::vector<Node>& acc) {
          if (rem == 0) {
            if (depth_parts >= 2 &&
                (!binary_only || depth_parts == 2)) {
              Node v;
              v.kids = acc;
              result.push_back(std::move(v));
            }
            return;
          }
          if (binary_only && depth_parts >= 2) return;
          for (int part = 1; part <= rem; ++part) {
            if (depth_parts + 1 > m) break;
            for (const Node& child : gen(part)) {
              acc.push_back(child);
              parts(rem - part, depth_parts + 1, acc);
              acc.pop_back();
            }
          }
        };
    if (m >= 2) {
      std::vector<Node> acc;
      parts(m, 0, acc);
    }
    return result;
  };
  for (Node& n0 : gen(n)) out.emplace_back(std::move(n0));
}

}  // namespace

std::vector<PlaneTree> enumerate_trees(int n, bool binary_only) {
  if (n < 1 || n > 8)
    throw InputError("enumerate_trees: tail count must be in 1..8");
  std::vector<PlaneTree> out;
  gen_trees(n, binary_only, out);
  std::sort(out.begin(), out.end(),
            [](const PlaneTree& a, const PlaneTree& b) {
              return a.encode() < b.encode();
            });
  return out;
}

}  // namespace braidcat
