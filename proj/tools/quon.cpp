#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "quonlab/json_io.hpp"
#include "quonlab/numberop.hpp"
#include "quonlab/verify.hpp"

namespace {

using namespace quonlab;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitSingular = 3;
constexpr int kExitSizeCap = 4;

/// Parses a weight argument such as "113" (single-character labels) or
/// "1,1,3" into sorted letter indices of the alphabet.
Weight parse_weight(const std::string& arg, const QMatrix<Cplx>& q) {
  std::vector<int> letters;
  if (arg.find(',') != std::string::npos) {
    std::string cur;
    for (char ch : arg + ",") {
      if (ch == ',') {
        if (!cur.empty()) letters.push_back(q.index_of(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
  } else {
    for (char ch : arg) letters.push_back(q.index_of(std::string(1, ch)));
  }
  return Weight::of_word(Word(std::move(letters)).sorted());
}

struct Options {
  std::string q_file;
  std::string mode = "double";
  std::uint64_t seed = 7;
};

int run_gram(const Options& opt, const std::string& weight_arg, bool want_det, bool want_inv) {
  QMatrix<Cplx> q = load_qmatrix_file(opt.q_file);
  Weight w = parse_weight(weight_arg, q);
  if (opt.mode == "exact") {
    QMatrix<GaussianRational> qe = to_exact(q);
    GramBlock<GaussianRational> block = gram_weight(w, qe);
    if (want_det) {
      std::cout << Json(complex_to_json(determinant(block).to_complex())).dump() << "\n";
    } else if (want_inv) {
      InverseResult<GaussianRational> inv = invert(block);
      Json j = block_to_json(inv.block, qe);
      j["residual"] = inv.residual;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << block_to_json(block, qe).dump(2) << "\n";
    }
  } else {
    GramBlock<Cplx> block = gram_weight(w, q);
    if (want_det) {
      std::cout << Json(complex_to_json(determinant(block))).dump() << "\n";
    } else if (want_inv) {
      InverseResult<Cplx> inv = invert(block);
      Json j = block_to_json(inv.block, q);
      j["residual"] = inv.residual;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << block_to_json(block, q).dump(2) << "\n";
    }
  }
  return 0;
}

int run_zagier(const Options& opt, const std::string& kind, const std::string& n_arg,
               const std::string& word_arg) {
  TwistedElement el;
  if (kind == "alpha_comp") {
    std::vector<int> parts;
    std::string cur;
    for (char ch : n_arg + ",") {
      if (ch == ',') {
        if (!cur.empty()) parts.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    el = zagier::alpha_comp(parts);
  } else {
    int n = std::stoi(n_arg);
    std::map<std::string, ZagierKind> kinds = {
        {"alpha", ZagierKind::Alpha},     {"beta", ZagierKind::Beta},
        {"gamma", ZagierKind::Gamma},     {"delta", ZagierKind::Delta},
        {"gamma_bar", ZagierKind::GammaBar}, {"xi", ZagierKind::Xi},
        {"eta", ZagierKind::Eta}};
    auto it = kinds.find(kind);
    if (it == kinds.end()) {
      throw std::invalid_argument("unknown zagier kind '" + kind + "'");
    }
    el = make_zagier(it->second, n);
  }
  if (!word_arg.empty()) {
    if (opt.q_file.empty()) throw std::invalid_argument("--word requires --q");
    QMatrix<Cplx> q = load_qmatrix_file(opt.q_file);
    std::vector<int> letters;
    for (char ch : word_arg) letters.push_back(q.index_of(std::string(1, ch)));
    std::map<Permutation, Cplx> sp = specialize(el, q, Word(std::move(letters)));
    std::cout << specialized_to_json(sp).dump(2) << "\n";
  } else {
    std::cout << element_to_json(el).dump(2) << "\n";
  }
  return 0;
}

int run_number_op(const Options& opt, const std::string& k_label, int max_degree, bool reduced) {
  QMatrix<Cplx> q = load_qmatrix_file(opt.q_file);
  int k = q.index_of(k_label);
  ExpansionMode mode = reduced ? ExpansionMode::Reduced : ExpansionMode::Expanded;
  if (opt.mode == "exact") {
    QMatrix<GaussianRational> qe = to_exact(q);
    NumberOperatorExpansion<GaussianRational> exp = expansion(k, qe, max_degree, mode);
    std::cout << expansion_to_json(exp, qe).dump(2) << "\n";
  } else {
    NumberOperatorExpansion<Cplx> exp = expansion(k, q, max_degree, mode);
    std::cout << expansion_to_json(exp, q).dump(2) << "\n";
  }
  return 0;
}

int run_verify(const Options& opt, const std::string& suite, int samples) {
  VerifyOptions vo;
  vo.seed = opt.seed;
  vo.samples = samples;
  std::vector<std::string> names = suite.empty() ? all_suite_names() : std::vector<std::string>{suite};
  Json report = Json::array();
  bool all_passed = true;
  for (const std::string& name : names) {
    SuiteResult res = run_suite(name, vo);
    all_passed = all_passed && res.passed;
    Json j;
    j["suite"] = res.name;
    j["passed"] = res.passed;
    j["checks"] = res.checks;
    j["max_residual"] = res.max_residual;
    j["seed"] = vo.seed;
    if (!res.notes.empty()) j["notes"] = res.notes;
    report.push_back(std::move(j));
    std::cerr << (res.passed ? "[pass] " : "[FAIL] ") << res.name << " (" << res.checks
              << " checks, max residual " << res.max_residual << ", " << res.seconds << "s)\n";
  }
  std::cout << report.dump(2) << "\n";
  return all_passed ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gram matrices, twisted group algebra, and number operators for multiparametric "
               "quon algebras"};
  app.require_subcommand(1);
  Options opt;

  std::string weight_arg, zagier_kind, zagier_n, zagier_word, nop_k, verify_suite;
  int max_degree = 4, verify_samples = 0;
  bool reduced = false;

  auto add_common = [&](CLI::App* sub, bool need_q) {
    auto* o = sub->add_option("--q", opt.q_file, "path to the q-matrix JSON file");
    if (need_q) o->required();
    sub->add_option("--mode", opt.mode, "arithmetic mode")->check(CLI::IsMember({"double", "exact"}));
    sub->add_option("--seed", opt.seed, "seed for randomized suites");
  };

  CLI::App* gram = app.add_subcommand("gram", "print the Gram block of a weight");
  gram->add_option("weight", weight_arg, "weight, e.g. 113 or 1,1,3")->required();
  add_common(gram, true);

  CLI::App* det = app.add_subcommand("det", "determinant of a weight's Gram block");
  det->add_option("weight", weight_arg)->required();
  add_common(det, true);

  CLI::App* inv = app.add_subcommand("inv", "inverse of a weight's Gram block");
  inv->add_option("weight", weight_arg)->required();
  add_common(inv, true);

  CLI::App* zag = app.add_subcommand("zagier", "print a lifted Zagier-type element");
  zag->add_option("kind", zagier_kind,
                  "alpha|beta|gamma|delta|gamma_bar|xi|eta|alpha_comp")->required();
  zag->add_option("n", zagier_n, "degree (or comma-separated parts for alpha_comp)")->required();
  zag->add_option("--word", zagier_word, "specialize at this word (requires --q)");
  add_common(zag, false);

  CLI::App* nop = app.add_subcommand("number-op", "normally ordered number-operator expansion");
  nop->add_option("k", nop_k, "alphabet letter")->required();
  nop->add_option("--max-degree", max_degree, "truncation degree")->check(CLI::PositiveNumber);
  nop->add_flag("--reduced", reduced, "stabilizer-coset (reduced) form");
  add_common(nop, true);

  CLI::App* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--suite", verify_suite, "suite name (default: all)")
      ->check(CLI::IsMember(quonlab::all_suite_names()));
  ver->add_option("--samples", verify_samples, "override per-suite sample counts");
  add_common(ver, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadArguments;
  }

  try {
    if (gram->parsed()) return run_gram(opt, weight_arg, false, false);
    if (det->parsed()) return run_gram(opt, weight_arg, true, false);
    if (inv->parsed()) return run_gram(opt, weight_arg, false, true);
    if (zag->parsed()) return run_zagier(opt, zagier_kind, zagier_n, zagier_word);
    if (nop->parsed()) return run_number_op(opt, nop_k, max_degree, reduced);
    if (ver->parsed()) return run_verify(opt, verify_suite, verify_samples);
  } catch (const quonlab::SingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const quonlab::SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }
  return kExitBadArguments;
}
