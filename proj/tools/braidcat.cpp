// braidcat: load instance files, run coherence checks, query braids,
// trees and braiding squares.
//
// Exit codes: 0 = checks pass / query answered, 1 = axiom violation
// found (report still emitted), 2 = input error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidcat/coherence.hpp"
#include "braidcat/expr.hpp"

using namespace braidcat;

namespace {

struct CommonFlags {
  int max_arity = 3;
  int braid_len = 4;
  int depth = 2;
  int samples = 25;
  std::uint64_t seed = 1;
  std::string report = "text";
};

void add_config_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--max-arity", f.max_arity, "largest braid-action arity");
  cmd->add_option("--braid-len", f.braid_len, "longest braid word sampled");
  cmd->add_option("--depth", f.depth, "composition closure depth");
  cmd->add_option("--samples", f.samples, "random samples per check");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--report", f.report, "report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

CheckConfig to_config(const CommonFlags& f) {
  CheckConfig cfg;
  cfg.max_arity = f.max_arity;
  cfg.max_braid_length = f.braid_len;
  cfg.max_compose_depth = f.depth;
  cfg.random_samples = f.samples;
  cfg.random_seed = f.seed;
  return cfg;
}

std::vector<int> parse_blocks(const std::string& s) {
  std::vector<int> blocks;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    blocks.push_back(std::stoi(part));
  if (blocks.empty()) throw InputError("--blocks: expected k1,k2,...");
  return blocks;
}

int cmd_check(const std::string& path, const CommonFlags& flags) {
  Instance inst = load_instance(path);
  CheckReport report = run_suite(inst, to_config(flags));
  if (flags.report == "json")
    std::cout << report_to_json(report);
  else
    std::cout << report_to_text(report);
  return report.all_pass() ? 0 : 1;
}

int cmd_ybe(const std::string& path) {
  Instance inst = load_instance(path);
  RMatrixDatum datum;
  if (inst.flip_braiding) {
    // Constant flip as an R-matrix on the first object.
    long d = inst.objects.front().second;
    datum = RMatrixDatum{d, MatrixRF::flip(static_cast<int>(d),
                                           static_cast<int>(d)),
                         GroupKind::additive};
  } else {
    datum = *inst.rmatrix;
  }
  YbeFailure f;
  if (ybe_check(datum, &f)) {
    std::cout << "YBE: pass (" << group_kind_name(datum.spectral_kind)
              << " parameter, dim " << datum.object_dim << ")\n";
    return 0;
  }
  std::cout << "YBE: fail at entry (" << f.row << "," << f.col << ")\n"
            << "  lhs = " << f.lhs.to_string() << "\n"
            << "  rhs = " << f.rhs.to_string() << "\n";
  return 1;
}

int cmd_square(const std::string& path, const std::string& pair) {
  Instance inst = load_instance(path);
  auto comma = pair.find(',');
  if (comma == std::string::npos)
    throw InputError("--pair: expected A,B");
  ObjectRef a = inst.object_ref(pair.substr(0, comma));
  ObjectRef b = inst.object_ref(pair.substr(comma + 1));
  bool is_scalar = false;
  RatFunc scalar;
  MatrixRF sq = square_of_braiding(inst, a, b, &is_scalar, &scalar);
  if (is_scalar) {
    std::cout << "scalar: " << scalar.to_string() << "\n";
    std::cout << "scalar multiple of identity: yes\n";
  } else {
    std::cout << "matrix (" << sq.rows() << "x" << sq.cols() << "):\n";
    for (int i = 0; i < sq.rows(); ++i) {
      for (int j = 0; j < sq.cols(); ++j)
        std::cout << (j ? "  " : "  [") << sq.at(i, j).to_string();
      std::cout << "]\n";
    }
    std::cout << "scalar multiple of identity: no\n";
  }
  return 0;
}

int cmd_braid_nf(int strands, const std::string& word) {
  BraidWord w = parse_braid_word(strands, word);
  BraidNormalForm nf = normal_form(w);
  std::cout << "strands: " << strands << "\n";
  std::cout << "normal form: " << nf_to_string(nf) << "\n";
  Perm p = to_permutation(w);
  std::cout << "permutation:";
  for (std::size_t i = 0; i < p.size(); ++i)
    std::cout << " " << i + 1 << "->" << p[i] + 1;
  std::cout << "\n";
  return 0;
}

int cmd_braid_cable(int strands, const std::string& blocks_s,
                    const std::string& word) {
  std::vector<int> blocks = parse_blocks(blocks_s);
  if (static_cast<int>(blocks.size()) != strands)
    throw InputError("--blocks: need one block size per outer strand");
  BraidWord outer = parse_braid_word(strands, word);
  std::vector<BraidWord> inners;
  for (int k : blocks) inners.push_back(braid_identity(k));
  BraidWord cabled = cable(outer, blocks, inners);
  std::cout << "cabled word (" << cabled.strands << " strands): "
            << braid_word_to_string(cabled) << "\n";
  std::cout << "normal form: " << nf_to_string(normal_form(cabled)) << "\n";
  Perm p = to_permutation(cabled);
  std::cout << "permutation:";
  for (std::size_t i = 0; i < p.size(); ++i)
    std::cout << " " << i + 1 << "->" << p[i] + 1;
  std::cout << "\n";
  return 0;
}

int cmd_trees(int tails, bool binary) {
  std::vector<PlaneTree> trees = enumerate_trees(tails, binary);
  for (const auto& t : trees) std::cout << t.encode() << "\n";
  std::cout << "count: " << trees.size() << "\n";
  return 0;
}

int cmd_algebra(const std::string& path, const std::string& opname,
                const std::string& kind_s) {
  Instance inst = load_instance(path);
  const NamedOperation* no = inst.find_operation(opname);
  if (!no) throw InputError("no operation named '" + opname + "'");
  AlgebraKind kind;
  if (kind_s == "associative")
    kind = AlgebraKind::associative;
  else if (kind_s == "lie")
    kind = AlgebraKind::lie;
  else
    throw InputError("--kind must be associative or lie");
  AlgebraReport rep = check_operad_algebra(inst, no->op, kind);
  std::cout << kind_s << " check on '" << opname
            << "': " << (rep.pass ? "pass" : "fail") << "\n";
  if (!rep.pass) std::cout << "  " << rep.detail << "\n";
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidcat: coherence workbench for braided operadic "
               "categories with rational-function operations"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path, pair, word, blocks_s, opname, kind_s;
  int strands = 2, tails = 3;
  bool binary = false;

  CLI::App* check = app.add_subcommand("check", "run the full axiom suite");
  check->add_option("file", path)->required();
  add_config_flags(check, flags);

  CLI::App* ybe = app.add_subcommand("ybe", "spectral Yang-Baxter check");
  ybe->add_option("file", path)->required();

  CLI::App* square =
      app.add_subcommand("square", "square of the commutativity constraint");
  square->add_option("file", path)->required();
  square->add_option("--pair", pair, "object pair A,B")->required();

  CLI::App* nf = app.add_subcommand("braid-nf", "Garside normal form");
  nf->add_option("--strands", strands)->required();
  nf->add_option("word", word)->required();

  CLI::App* cab = app.add_subcommand("braid-cable", "cable a braid word");
  cab->add_option("--strands", strands)->required();
  cab->add_option("--blocks", blocks_s, "block sizes k1,k2,...")->required();
  cab->add_option("word", word)->required();

  CLI::App* tr = app.add_subcommand("trees-enumerate", "plane trees");
  tr->add_option("--tails", tails)->required();
  tr->add_flag("--binary", binary);

  CLI::App* alg = app.add_subcommand("algebra", "operad-algebra check");
  alg->add_option("file", path)->required();
  alg->add_option("--op", opname)->required();
  alg->add_option("--kind", kind_s, "associative|lie")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path, flags);
    if (ybe->parsed()) return cmd_ybe(path);
    if (square->parsed()) return cmd_square(path, pair);
    if (nf->parsed()) return cmd_braid_nf(strands, word);
    if (cab->parsed()) return cmd_braid_cable(strands, blocks_s, word);
    if (tr->parsed()) return cmd_trees(tails, binary);
    if (alg->parsed()) return cmd_algebra(path, opname, kind_s);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
