#include "doctest.h"

#include "json.hpp"

#include "grigq/report.hpp"

using namespace grigq;

namespace {

std::string strip_timings(const std::string &json_text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(json_text);
  j.erase("timings");
  return j.dump(2);
}

}  // namespace

TEST_CASE("single-command reports") {
  Report r = report_order(5);
  CHECK(r.all_pass());
  CHECK(r.entries.size() == 1);
  CHECK(r.entries[0].computed == "2^22");

  Report wp = report_branch_wp("(ad)^4");
  CHECK(wp.all_pass());

  Report lim = report_limit_bound({7, 9, 11, 13}, 2, 5);
  CHECK(lim.all_pass());
}

TEST_CASE("reports serialize deterministically") {
  Report r1 = report_abelianization("thm4", 4);
  Report r2 = report_abelianization("thm4", 4);
  CHECK(r1.all_pass());
  std::string j1 = r1.to_json(), j2 = r2.to_json();
  CHECK(strip_timings(j1) == strip_timings(j2));
  // schema sanity
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(j1);
  CHECK(j.contains("command"));
  CHECK(j.contains("parameters"));
  CHECK(j.contains("checks"));
  CHECK(j.contains("timings"));
  CHECK(j.contains("version"));
  for (const auto &c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c.contains("verdict"));
  }
}

TEST_CASE("relator and kernel reports pass") {
  CHECK(report_check_relators("lysenok", 4).all_pass());
  CHECK(report_check_relators("thm1", 4).all_pass());
  CHECK(report_kernels(4).all_pass());
  CHECK(report_enumerate("thm4", 3, 100000, "felsch").all_pass());
  CHECK(report_pair_identities(6).all_pass());
}
