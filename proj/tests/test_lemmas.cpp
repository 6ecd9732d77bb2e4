#include <doctest.h>

#include <json.hpp>

#include "measure/lemmas.hpp"

using namespace cosetlab;
using namespace cosetlab::measure;

TEST_CASE("lemma suite passes on random instances") {
  auto reports = lemma_suite(42, 6, 60);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    INFO(r.lemma_id, " worst slack ", r.worst_slack);
    CHECK(r.instances == 60);
    CHECK(r.worst_slack >= kLemmaSlackFloor);
    CHECK(r.pass);
  }
}

TEST_CASE("lemma suite is deterministic in the seed") {
  auto a = lemma_suite(7, 4, 20);
  auto b = lemma_suite(7, 4, 20);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lemma_id == b[i].lemma_id);
    CHECK(a[i].worst_slack == b[i].worst_slack);
  }
  auto c = lemma_suite(8, 4, 20);
  bool any_diff = false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].worst_slack != c[i].worst_slack) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("lemma report JSON shape") {
  auto reports = lemma_suite(3, 3, 5);
  auto j = nlohmann::json::parse(lemma_reports_json(reports));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  for (const auto& row : j) {
    CHECK(row.contains("lemma_id"));
    CHECK(row.contains("instances"));
    CHECK(row.contains("worst_slack"));
    CHECK(row.contains("pass"));
    CHECK(row["instances"] == 5);
  }
}
