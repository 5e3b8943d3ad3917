#ifndef BRAIDCAT_BRAID_HPP
#define BRAIDCAT_BRAID_HPP

#include <string>
#include <vector>

#include "braidcat/errors.hpp"

namespace braidcat {

// 0-based permutation; p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);  // (p o q)[i] = p[q[i]]
Perm perm_inverse(const Perm& p);

// Word in the Artin generators of B_n: letters are (generator index
// 1..n-1, sign +-1).  The empty word is the identity.
struct BraidWord {
  int strands = 1;
  std::vector<std::pair<int, int>> letters;

  void push(int gen, int sign) { letters.emplace_back(gen, sign); }
  bool empty() const { return letters.empty(); }
};

BraidWord braid_identity(int strands);
BraidWord braid_multiply(const BraidWord& a, const BraidWord& b);
BraidWord braid_invert(const BraidWord& a);

// Homomorphism B_n -> S_n; sigma_i maps to the transposition (i, i+1)
// and a word maps to the composite with its leftmost letter outermost,
// so sigma1 sigma2 in B_3 gives the cycle 1 -> 2 -> 3 -> 1.
Perm to_permutation(const BraidWord& w);

// Garside left-canonical form: Delta^infimum followed by left-weighted
// permutation-braid factors.  Unique per group element.
struct BraidNormalForm {
  int strands = 1;
  long infimum = 0;
  std::vector<Perm> factors;

  bool operator==(const BraidNormalForm& o) const {
    return strands == o.strands && infimum == o.infimum &&
           factors == o.factors;
  }
  bool trivial() const { return infimum == 0 && factors.empty(); }
};

BraidNormalForm normal_form(const BraidWord& w);
bool braid_equal(const BraidWord& a, const BraidWord& b);
Perm nf_permutation(const BraidNormalForm& nf);

// Deterministic reduced word for a permutation braid.
BraidWord word_of_perm(int strands, const Perm& p);

// Cabling homomorphism: outer generators become rigid block crossings,
// inner word i is embedded on the strand block at the original offset
// of block i.  Result lives in B_(sum of blocks).
BraidWord cable(const BraidWord& outer, const std::vector<int>& blocks,
                const std::vector<BraidWord>& inners);

// Text grammar: whitespace-separated tokens "s<i>" and "s<i>^-1".
BraidWord parse_braid_word(int strands, std::string_view text);
std::string braid_word_to_string(const BraidWord& w);
std::string nf_to_string(const BraidNormalForm& nf);

}  // namespace braidcat

#endif
