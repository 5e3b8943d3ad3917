// Braid groups: words, Garside left-canonical form, cabling.

#include "braidcat/braid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace braidcat {

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

namespace {

Perm transposition(int n, int i) {  // i is 1-based generator index
  Perm p = perm_identity(n);
  std::swap(p[static_cast<std::size_t>(i - 1)],
            p[static_cast<std::size_t>(i)]);
  return p;
}

Perm delta_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
  return p;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// s_i (1-based) is a prefix of the permutation braid u iff the value i
// sits to the right of the value i+1.
bool in_starting_set(const Perm& u, int i) {
  const Perm inv = perm_inverse(u);
  return inv[static_cast<std::size_t>(i - 1)] > inv[static_cast<std::size_t>(i)];
}

// s_i is a suffix of t iff t has a descent at position i.
bool in_finishing_set(const Perm& t, int i) {
  return t[static_cast<std::size_t>(i - 1)] > t[static_cast<std::size_t>(i)];
}

void check_word(const BraidWord& w) {
  if (w.strands < 1) throw InputError("braid word needs at least one strand");
  for (auto [g, s] : w.letters) {
    if (g < 1 || g >= w.strands)
      throw InputError("generator s" + std::to_string(g) +
                       " out of range for " + std::to_string(w.strands) +
                       " strands");
    if (s != 1 && s != -1) throw InputError("letter sign must be +-1");
  }
}

}  // namespace

BraidWord braid_identity(int strands) {
  BraidWord w;
  w.strands = strands;
  check_word(w);
  return w;
}

BraidWord braid_multiply(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw InputError("braid multiply: strand counts differ");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord braid_invert(const BraidWord& a) {
  BraidWord r;
  r.strands = a.strands;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    r.letters.emplace_back(it->first, -it->second);
  return r;
}

Perm to_permutation(const BraidWord& w) {
  check_word(w);
  Perm p = perm_identity(w.strands);
  for (auto [g, s] : w.letters)
    p = perm_compose(p, transposition(w.strands, g));
  return p;
}

namespace {

// Left-weight an adjacent pair of permutation braids in place.
// Slides available prefix generators of u into t until S(u) <= F(t).
bool left_weight_pair(Perm& t, Perm& u, int n) {
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (in_starting_set(u, i) && !in_finishing_set(t, i)) {
        t = perm_compose(t, transposition(n, i));
        u = perm_compose(transposition(n, i), u);
        moved = true;
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

BraidNormalForm normal_form(const BraidWord& w) {
  check_word(w);
  const int n = w.strands;
  const Perm delta = delta_perm(n);

  BraidNormalForm nf;
  nf.strands = n;
  nf.infimum = 0;
  std::vector<Perm>& fs = nf.factors;

  // Convert letters into Delta power and simple factors.
  for (auto [g, s] : w.letters) {
    Perm sg = transposition(n, g);
    if (s > 0) {
      fs.push_back(sg);
    } else {
      // sigma_g^-1 = Delta^-1 * (Delta sigma_g^-1); pull Delta^-1 front.
      for (auto& f : fs) f = perm_compose(delta, perm_compose(f, delta));
      --nf.infimum;
      fs.push_back(perm_compose(delta, sg));
    }
  }

  // Left-weight by repeated local passes.
  bool changed = true;
  while (changed) {
    changed = false;
    fs.erase(std::remove_if(fs.begin(), fs.end(), is_identity), fs.end());
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      if (left_weight_pair(fs[i], fs[i + 1], n)) changed = true;
    }
    while (!fs.empty() && fs.front() == delta) {
      fs.erase(fs.begin());
      ++nf.infimum;
      changed = true;
    }
  }
  fs.erase(std::remove_if(fs.begin(), fs.end(), is_identity), fs.end());
  return nf;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) return false;
  return normal_form(a) == normal_form(b);
}

Perm nf_permutation(const BraidNormalForm& nf) {
  Perm p = perm_identity(nf.strands);
  Perm delta = delta_perm(nf.strands);
  long k = nf.infimum % 2;
  if (k < 0) k += 2;
  if (k == 1) p = delta;
  for (const Perm& f : nf.factors) p = perm_compose(p, f);
  return p;
}

BraidWord word_of_perm(int strands, const Perm& p) {
  if (static_cast<int>(p.size()) != strands)
    throw InputError("word_of_perm: size mismatch");
  BraidWord w = braid_identity(strands);
  Perm cur = p;
  while (!is_identity(cur)) {
    Perm inv = perm_inverse(cur);
    bool found = false;
    for (int i = 1; i < strands; ++i) {
      // Peel s_i from the left when values i-1, i are out of order.
      if (inv[static_cast<std::size_t>(i - 1)] >
          inv[static_cast<std::size_t>(i)]) {
        w.push(i, 1);
        cur = perm_compose(transposition(strands, i), cur);
        found = true;
        break;
      }
    }
    assert(found && "permutation peeling stalled");
    (void)found;
  }
  return w;
}

namespace {

// Permutation sending the strands of adjacent blocks j, j+1 (1-based)
// past each other; layout holds the current block sizes.
Perm block_swap_perm(const std::vector<int>& layout, int j, int total) {
  int offset = 0;
  for (int i = 0; i + 1 < j; ++i) offset += layout[static_cast<std::size_t>(i)];
  int kj = layout[static_cast<std::size_t>(j - 1)];
  int kj1 = layout[static_cast<std::size_t>(j)];
  Perm p = perm_identity(total);
  for (int r = 0; r < kj; ++r) p[static_cast<std::size_t>(offset + r)] = offset + kj1 + r;
  for (int s = 0; s < kj1; ++s) p[static_cast<std::size_t>(offset + kj + s)] = offset + s;
  return p;
}

}  // namespace

BraidWord cable(const BraidWord& outer, const std::vector<int>& blocks,
                const std::vector<BraidWord>& inners) {
  check_word(outer);
  if (static_cast<int>(blocks.size()) != outer.strands)
    throw InputError("cable: block count must equal outer strand count");
  if (inners.size() != blocks.size())
    throw InputError("cable: need one inner word per block");
  int total = 0;
  std::vector<int> offsets;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] < 1) throw InputError("cable: block sizes must be >= 1");
    if (inners[i].strands != blocks[i])
      throw InputError("cable: inner word " + std::to_string(i + 1) +
                       " has " + std::to_string(inners[i].strands) +
                       " strands, block has " + std::to_string(blocks[i]));
    offsets.push_back(total);
    total += blocks[i];
  }

  // Band part: letters are processed right to left (a word acts with its
  // rightmost letter first), tracking the block layout as it permutes.
  BraidWord bands = braid_identity(total);
  std::vector<int> layout = blocks;
  for (auto it = outer.letters.rbegin(); it != outer.letters.rend(); ++it) {
    auto [g, s] = *it;
    BraidWord band;
    if (s > 0) {
      band = word_of_perm(total, block_swap_perm(layout, g, total));
    } else {
      // Negative crossing: inverse of the positive crossing that ends
      // in the current layout.
      std::vector<int> swapped = layout;
      std::swap(swapped[static_cast<std::size_t>(g - 1)],
                swapped[static_cast<std::size_t>(g)]);
      band = braid_invert(
          word_of_perm(total, block_swap_perm(swapped, g, total)));
    }
    std::swap(layout[static_cast<std::size_t>(g - 1)],
              layout[static_cast<std::size_t>(g)]);
    bands = braid_multiply(band, bands);
  }

  // Inner part: embedded at the original offsets, acting first.
  BraidWord embeds = braid_identity(total);
  for (std::size_t i = 0; i < inners.size(); ++i) {
    for (auto [g, s] : inners[i].letters)
      embeds.push(offsets[i] + g, s);
  }
  return braid_multiply(bands, embeds);
}

BraidWord parse_braid_word(int strands, std::string_view text) {
  BraidWord w = braid_identity(strands);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string body = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      std::string ex = tok.substr(caret + 1);
      if (ex != "-1")
        throw InputError("braid word: only ^-1 is allowed, got '" + tok + "'");
      sign = -1;
      body = tok.substr(0, caret);
    }
    if (body.size() < 2 || body[0] != 's')
      throw InputError("braid word: bad token '" + tok + "'");
    int gen = 0;
    for (std::size_t i = 1; i < body.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(body[i])))
        throw InputError("braid word: bad token '" + tok + "'");
      gen = gen * 10 + (body[i] - '0');
    }
    w.push(gen, sign);
  }
  check_word(w);
  return w;
}

std::string braid_word_to_string(const BraidWord& w) {
  std::string out;
  for (auto [g, s] : w.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(g);
    if (s < 0) out += "^-1";
  }
  return out.empty() ? "(empty)" : out;
}

std::string nf_to_string(const BraidNormalForm& nf) {
  std::string out = "D^" + std::to_string(nf.infimum);
  for (const Perm& f : nf.factors) {
    out += " . [";
    out += braid_word_to_string(word_of_perm(nf.strands, f));
    out += ']';
  }
  return out;
}

}  // namespace braidcat
