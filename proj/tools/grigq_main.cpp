// grigq: verification toolkit for the finite level quotients of the
// Grigorchuk group. Exit codes: 0 all checks pass, 1 verification failure,
// 2 resource limit, 64 usage error.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grigq/coset.hpp"
#include "grigq/report.hpp"
#include "grigq/tree.hpp"
#include "grigq/word.hpp"

namespace {

int emit(const grigq::Report &report, const std::string &json_path) {
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << report.to_json();
  }
  std::cout << report.to_text();
  if (report.resource_limited) return 2;
  return report.all_pass() ? 0 : 1;
}

std::vector<long long> parse_dims(const std::string &text) {
  std::vector<long long> dims;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    dims.push_back(std::stoll(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return dims;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"verification toolkit for the Grigorchuk group's finite quotients"};
  app.require_subcommand(1);

  int level = 3, nn = 3, kk = 1, max_index = 10;
  std::string family = "thm1", word_text, json_path, strategy = "hlt";
  std::string dims_text, profile_name = "default";
  uint64_t max_cosets = 1000000;
  long long kernel_bound = 0, target = 10;
  uint64_t seed = 1;

  auto add_json = [&](CLI::App *cmd) { cmd->add_option("--json", json_path, "write the report as JSON"); };

  auto *c_order = app.add_subcommand("order", "level quotient order via a stabilizer chain");
  c_order->add_option("--level", level)->required();
  add_json(c_order);

  auto *c_rel = app.add_subcommand("check-relators", "relator families vanish in the quotients");
  c_rel->add_option("--family", family, "thm1|thm4|hopf|lysenok|gamma");
  c_rel->add_option("--level", level, "level, or cutoff for lysenok");
  add_json(c_rel);

  auto *c_enum = app.add_subcommand("enumerate", "coset enumeration certificate");
  c_enum->add_option("--family", family, "thm1|thm4|wreath");
  c_enum->add_option("--level", level);
  c_enum->add_option("--max-cosets", max_cosets);
  c_enum->add_option("--strategy", strategy, "hlt|felsch");
  add_json(c_enum);

  auto *c_abel = app.add_subcommand("abelianization", "invariant factors of the abelianized presentation");
  c_abel->add_option("--family", family, "thm1|thm4");
  c_abel->add_option("--level", level);
  add_json(c_abel);

  auto *c_mult = app.add_subcommand("multiplier", "2-cover multiplicator dimension and independence");
  c_mult->add_option("--level", level)->required();
  add_json(c_mult);

  auto *c_qn = app.add_subcommand("qn", "class-4 commutator quotient images and orders");
  c_qn->add_option("--level", level)->required();
  add_json(c_qn);

  auto *c_pairs = app.add_subcommand("pair-identities", "level-1 decomposition identities");
  c_pairs->add_option("--max-index", max_index);
  add_json(c_pairs);

  auto *c_ker = app.add_subcommand("kernels", "kernel orders of the level restriction maps");
  c_ker->add_option("--level", level)->required();
  add_json(c_ker);

  auto *c_wp = app.add_subcommand("branch-wp", "branch word-problem verdict with trace");
  c_wp->add_option("--word", word_text)->required();
  add_json(c_wp);

  auto *c_inv = app.add_subcommand("invariant-homs", "invariant homomorphism dimension");
  c_inv->add_option("--n", nn)->required();
  c_inv->add_option("--k", kk)->required();
  add_json(c_inv);

  auto *c_lim = app.add_subcommand("limit-bound", "first index exceeding N*M");
  c_lim->add_option("--dims", dims_text)->required();
  c_lim->add_option("--kernel-bound", kernel_bound)->required();
  c_lim->add_option("--target", target)->required();
  add_json(c_lim);

  auto *c_all = app.add_subcommand("report-all", "the full verification battery");
  c_all->add_option("--profile", profile_name, "default|deep");
  c_all->add_option("--seed", seed);
  c_all->add_option("--max-cosets", max_cosets);
  add_json(c_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (c_order->parsed()) return emit(grigq::report_order(level), json_path);
    if (c_rel->parsed()) return emit(grigq::report_check_relators(family, level), json_path);
    if (c_enum->parsed())
      return emit(grigq::report_enumerate(family, level, max_cosets, strategy), json_path);
    if (c_abel->parsed()) return emit(grigq::report_abelianization(family, level), json_path);
    if (c_mult->parsed()) return emit(grigq::report_multiplier(level), json_path);
    if (c_qn->parsed()) return emit(grigq::report_qn(level), json_path);
    if (c_pairs->parsed()) return emit(grigq::report_pair_identities(max_index), json_path);
    if (c_ker->parsed()) return emit(grigq::report_kernels(level), json_path);
    if (c_wp->parsed()) {
      grigq::Report r = grigq::report_branch_wp(word_text);
      grigq::BranchCertificate cert =
          grigq::is_trivial_g(grigq::parse_word(word_text, grigq::Alphabet::abcd));
      int rc = emit(r, json_path);
      // print the recursion trace under the table
      struct Walker {
        static void walk(const grigq::BranchNode *node, int depth) {
          if (!node) return;
          std::cout << std::string(static_cast<size_t>(depth) * 2, ' ') << "'"
                    << node->word << "'"
                    << (node->level1_trivial ? "" : "  <- moves level 1") << "\n";
          walk(node->child0.get(), depth + 1);
          walk(node->child1.get(), depth + 1);
        }
      };
      std::cout << "trace:\n";
      Walker::walk(cert.trace.get(), 1);
      return rc;
    }
    if (c_inv->parsed()) return emit(grigq::report_invariant_homs(nn, kk), json_path);
    if (c_lim->parsed())
      return emit(grigq::report_limit_bound(parse_dims(dims_text), kernel_bound, target),
                  json_path);
    if (c_all->parsed()) {
      grigq::RunProfile profile;
      profile.deep = profile_name == "deep";
      profile.seed = seed;
      profile.max_cosets = max_cosets;
      return emit(grigq::report_all(profile), json_path);
    }
  } catch (const std::bad_alloc &) {
    std::cerr << "resource limit: out of memory\n";
    return 2;
  } catch (const grigq::ResourceLimitError &e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error &e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}
