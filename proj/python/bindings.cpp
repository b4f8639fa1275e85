#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grigq/cohomology.hpp"
#include "grigq/coset.hpp"
#include "grigq/matrix.hpp"
#include "grigq/nilq.hpp"
#include "grigq/pcp.hpp"
#include "grigq/perm.hpp"
#include "grigq/presentation.hpp"
#include "grigq/report.hpp"
#include "grigq/stab.hpp"
#include "grigq/tree.hpp"
#include "grigq/word.hpp"

namespace py = pybind11;
using namespace grigq;

namespace {

FreeWord parse_abcd(const std::string &text) { return parse_word(text, Alphabet::abcd); }

FamilyKind family_kind(const std::string &name) {
  if (name == "gamma") return FamilyKind::gamma;
  if (name == "thm1") return FamilyKind::thm1;
  if (name == "thm4") return FamilyKind::thm4;
  if (name == "lysenok") return FamilyKind::lysenok;
  if (name == "hopf") return FamilyKind::hopf;
  if (name == "omega") return FamilyKind::omega;
  if (name == "upsilon") return FamilyKind::upsilon;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

PYBIND11_MODULE(_grigq, m) {
  m.doc() = "verification toolkit for the finite quotients of the Grigorchuk group";
  m.attr("__version__") = kVersion;

  m.def("free_reduce", [](const std::string &w) { return to_text(free_reduce(parse_abcd(w))); },
        py::arg("word"), "freely reduce a word in the abcd alphabet");
  m.def("reduce_involutive",
        [](const std::string &w) { return to_text(reduce_involutive(parse_abcd(w))); },
        py::arg("word"), "reduce modulo the involution and Klein four-group relations");
  m.def("substitute",
        [](const std::string &w, int k) {
          return to_text(substitute(sigma_lysenok(), parse_abcd(w), k));
        },
        py::arg("word"), py::arg("times") = 1, "apply the Lysenok substitution");
  m.def("relator_family",
        [](const std::string &kind, int n) {
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto &lw : relator_family(family_kind(kind), n).words)
            out.emplace_back(lw.role, to_text(lw.word));
          return out;
        },
        py::arg("kind"), py::arg("n"), "labeled relator words of the named family");

  m.def("act", [](const std::string &w, const std::string &v) {
          return act(parse_abcd(w), Vertex::parse(v)).to_string();
        },
        py::arg("word"), py::arg("vertex"));
  m.def("section", [](const std::string &w, const std::string &v) {
          return to_text(section(parse_abcd(w), Vertex::parse(v)));
        },
        py::arg("word"), py::arg("vertex"));
  m.def("level_perm", [](const std::string &w, int n) { return level_perm_images(parse_abcd(w), n); },
        py::arg("word"), py::arg("level"), "image array of the level permutation");
  m.def("is_trivial", [](const std::string &w) { return is_trivial_g(parse_abcd(w)).verdict; },
        py::arg("word"), "branch word-problem verdict");
  m.def("nucleus_depth", [](const std::string &w) { return nucleus_depth(parse_abcd(w)); },
        py::arg("word"));

  m.def("quotient_order", [](int n) { return quotient_group(n).order().to_string(); },
        py::arg("level"), "order of the level quotient as a decimal string");
  m.def("kernel_order", [](int n) { return kernel_data(n).order.to_string(); }, py::arg("level"));
  m.def("kernel_elementary_abelian", [](int n) { return kernel_data(n).elementary_abelian; },
        py::arg("level"));

  m.def("enumerate_order",
        [](const std::string &presentation, uint64_t max_cosets, const std::string &strategy) {
          EnumResult r = enumerate_cosets(parse_presentation(presentation), max_cosets,
                                          strategy == "felsch" ? TcStrategy::felsch
                                                               : TcStrategy::hlt);
          return r.complete ? py::object(py::int_(r.order)) : py::object(py::none());
        },
        py::arg("presentation"), py::arg("max_cosets") = 1000000, py::arg("strategy") = "hlt",
        "coset-enumeration order, or None on overflow");
  m.def("abelianization",
        [](const std::string &kind, int n) {
          std::vector<std::string> out;
          for (const auto &f :
               abelianization(presentation_from_family(relator_family(family_kind(kind), n))))
            out.push_back(f.to_string());
          return out;
        },
        py::arg("kind"), py::arg("n"));

  m.def("multiplier_report",
        [](int n) {
          MultiplierReport r = multiplier_report(n);
          py::dict d;
          d["h2_dim"] = r.h2_dim;
          d["schur_mod2_rank"] = r.schur_mod2_rank;
          d["def_lower"] = r.def_lower;
          d["def_upper"] = r.def_upper;
          d["relators_independent"] = r.relators_independent;
          d["group_order"] = r.group_order.to_string();
          return d;
        },
        py::arg("level"));

  m.def("qn_generator_order",
        [](int n, const std::string &w) { return qn_order(parse_abcd(w), qn_build(n)); },
        py::arg("level"), py::arg("word"),
        "order of the image of a commutator word in Q_n");
  m.def("verify_pair_identity",
        [](const std::string &family, int index) {
          static const std::map<std::string, PairFamily> fams = {
              {"u", PairFamily::u}, {"v", PairFamily::v}, {"w", PairFamily::w},
              {"t", PairFamily::t}, {"U", PairFamily::U}, {"V", PairFamily::V},
              {"W", PairFamily::W}, {"T", PairFamily::T}};
          return verify_pair_identity(fams.at(family), index);
        },
        py::arg("family"), py::arg("index"));

  m.def("invariant_hom_dim", &invariant_hom_dim, py::arg("n"), py::arg("k"));
  m.def("limit_bound",
        [](const std::vector<long long> &dims, long long kernel_bound, long long target) {
          return limit_bound(LimitSystem{dims, kernel_bound}, target);
        },
        py::arg("dims"), py::arg("kernel_bound"), py::arg("target"));

  m.def("report_all_json", [](bool deep, uint64_t seed) {
          RunProfile p;
          p.deep = deep;
          p.seed = seed;
          return report_all(p).to_json();
        },
        py::arg("deep") = false, py::arg("seed") = 1);
}
