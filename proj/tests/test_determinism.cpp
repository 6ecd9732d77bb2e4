#include <doctest.h>

#include "runner/experiment.hpp"

using cosetlab::runner::run_experiment;

namespace {

void check_replay(const std::string& cfg) {
  auto a = run_experiment(cfg);
  auto b = run_experiment(cfg);
  INFO(cfg);
  CHECK(a.report_json == b.report_json);
  CHECK(!a.report_json.empty());
}

}  // namespace

TEST_CASE("every command replays byte-identically from its seed") {
  check_replay("{\"command\":\"correctness\",\"scheme\":\"duality\",\"seed\":1,\"trials\":20}");
  check_replay("{\"command\":\"correctness\",\"scheme\":\"cp-pke\",\"seed\":2,\"trials\":5}");
  check_replay("{\"command\":\"correctness\",\"scheme\":\"cp-fe\",\"seed\":3,\"trials\":5}");
  check_replay(
      "{\"command\":\"moe\",\"strategy\":\"basis-guesser\",\"seed\":4,\"trials\":30,"
      "\"trace\":true}");
  check_replay("{\"command\":\"moe\",\"variant\":\"coll\",\"strategy\":\"oracle-omniscient\","
               "\"seed\":5,\"trials\":10}");
  check_replay("{\"command\":\"antipiracy\",\"strategy\":\"honest-forwarder\",\"seed\":6,"
               "\"trials\":10}");
  check_replay("{\"command\":\"lemmas\",\"seed\":7,\"dims\":4,\"trials\":10}");
  check_replay("{\"command\":\"bench\",\"seed\":8,\"trials\":3}");
}

TEST_CASE("different seeds give different reports") {
  auto a = run_experiment(
      "{\"command\":\"moe\",\"strategy\":\"basis-guesser\",\"seed\":100,\"trials\":50}");
  auto b = run_experiment(
      "{\"command\":\"moe\",\"strategy\":\"basis-guesser\",\"seed\":101,\"trials\":50}");
  CHECK(a.report_json != b.report_json);
}
