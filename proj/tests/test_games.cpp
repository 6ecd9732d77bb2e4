#include <doctest.h>

#include <json.hpp>

#include "games/antipiracy.hpp"
#include "games/decryptor.hpp"

using namespace cosetlab;
using namespace cosetlab::games;

TEST_CASE("Clopper-Pearson endpoints match reference values") {
  auto ci = clopper_pearson(10, 20);
  CHECK(ci.first == doctest::Approx(0.2720).epsilon(1e-3));
  CHECK(ci.second == doctest::Approx(0.7280).epsilon(1e-3));

  auto zero = clopper_pearson(0, 20);
  CHECK(zero.first == 0.0);
  CHECK(zero.second == doctest::Approx(1.0 - std::pow(0.025, 1.0 / 20)).epsilon(1e-6));

  auto full = clopper_pearson(20, 20);
  CHECK(full.first == doctest::Approx(std::pow(0.025, 1.0 / 20)).epsilon(1e-6));
  CHECK(full.second == 1.0);

  GameReport r = make_report("x", 20, 10, 0);
  CHECK(r.ci_contains(0.5));
  CHECK(!r.ci_contains(0.9));
}

TEST_CASE("report JSON carries the outcome fields") {
  GameReport r = make_report("demo", 40, 10, 2, "[]");
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["game_id"] == "demo");
  CHECK(j["trials"] == 40);
  CHECK(j["wins"] == 10);
  CHECK(j["voided"] == 2);
  CHECK(std::abs(j["win_rate"].get<double>() - 10.0 / 38.0) < 1e-12);
}

TEST_CASE("omniscient adversary wins every MoE game") {
  ByteStream rng(601);
  AdversaryStrategy adv{StrategyKind::OracleOmniscient};
  MoeParams params;
  GameReport single = run_moe(MoeVariant::Single, adv, params, 200, rng);
  CHECK(single.win_rate == 1.0);
  GameReport multi = run_moe(MoeVariant::Multi, adv, params, 200, rng);
  CHECK(multi.win_rate == 1.0);
  GameReport coll = run_moe(MoeVariant::Coll, adv, params, 100, rng);
  CHECK(coll.win_rate == 1.0);
}

TEST_CASE("basis guesser sits at the 4^-c baseline") {
  ByteStream rng(602);
  AdversaryStrategy adv{StrategyKind::BasisGuesser};
  MoeParams params;
  params.coset.count = 1;
  GameReport r = run_moe(MoeVariant::Multi, adv, params, 800, rng);
  CHECK(r.ci_contains(0.25));
}

TEST_CASE("two-copy cheat wins MoE-Multi outright") {
  ByteStream rng(603);
  AdversaryStrategy adv{StrategyKind::TwoCopyCloner};
  GameReport r = run_moe(MoeVariant::Multi, adv, MoeParams{}, 200, rng);
  CHECK(r.win_rate == 1.0);
}

TEST_CASE("duplicate identity query voids every MoE-Coll win") {
  ByteStream rng(604);
  AdversaryStrategy adv{StrategyKind::OracleOmniscient};
  adv.duplicate_id_query = true;
  GameReport r = run_moe(MoeVariant::Coll, adv, MoeParams{}, 100, rng);
  CHECK(r.wins == 0);
}

TEST_CASE("MoE traces replay byte-identically from the seed") {
  MoeParams params;
  params.trace = true;
  AdversaryStrategy adv{StrategyKind::BasisGuesser};
  ByteStream a(605), b(605);
  GameReport ra = run_moe(MoeVariant::Multi, adv, params, 50, a);
  GameReport rb = run_moe(MoeVariant::Multi, adv, params, 50, b);
  CHECK(ra.trace_json == rb.trace_json);
  CHECK(report_json(ra) == report_json(rb));
  CHECK(!ra.trace_json.empty());
}

TEST_CASE("honest forwarder halves the PKE anti-piracy game") {
  ByteStream rng(606);
  AdversaryStrategy adv{StrategyKind::HonestForwarder};
  GameReport r = run_antipiracy(Scheme::CpPke, adv, AntiPiracyParams{}, 100, rng);
  CHECK(r.ci_contains(0.5));
  CHECK(!r.ci_contains(0.9));
}

TEST_CASE("all-guess pirate with two keys lands at 1/8") {
  ByteStream rng(607);
  AdversaryStrategy adv{StrategyKind::AllGuess};
  AntiPiracyParams params;
  params.k = 2;
  GameReport r = run_antipiracy(Scheme::CpPke, adv, params, 200, rng);
  CHECK(r.ci_contains(0.125));
}

TEST_CASE("duplicate keys break anti-piracy completely") {
  ByteStream rng(608);
  AdversaryStrategy adv{StrategyKind::TwoCopyCloner};
  AntiPiracyParams params;
  params.cheat_duplicate = true;
  GameReport r = run_antipiracy(Scheme::CpPke, adv, params, 50, rng);
  CHECK(r.win_rate == 1.0);

  AntiPiracyParams no_cheat;
  CHECK_THROWS_AS(run_antipiracy(Scheme::CpPke, adv, no_cheat, 1, rng), ParameterError);
}

TEST_CASE("FE anti-piracy: honest forwarder and the classical-query rule") {
  ByteStream rng(609);
  AdversaryStrategy adv{StrategyKind::HonestForwarder};
  AntiPiracyParams params;
  GameReport r = run_antipiracy(Scheme::CpFe, adv, params, 50, rng);
  CHECK(r.ci_contains(0.5));

  params.violating_classical_query = true;
  GameReport zero = run_antipiracy(Scheme::CpFe, adv, params, 20, rng);
  CHECK(zero.wins == 0);
}

TEST_CASE("decryptor test oracles") {
  ByteStream rng(610);
  measure::MeasureParams p(0.1, 0.01);

  StrategyRegister always{measure::DensityMatrix(measure::Mat::Identity(1, 1)),
                          {[](int b, uint64_t) { return b; }}};
  CHECK(decryptor_test(always, {1.0}, p, TestMode::PI, rng).value ==
        doctest::Approx(1.0).epsilon(1e-9));

  StrategyRegister coin{measure::DensityMatrix::maximally_mixed(2),
                        {[](int, uint64_t) { return 0; }, [](int, uint64_t) { return 1; }}};
  CHECK(decryptor_test(coin, {1.0}, p, TestMode::PI, rng).value ==
        doctest::Approx(0.5).epsilon(1e-9));

  StrategyRegister partial{measure::DensityMatrix(measure::Mat::Identity(1, 1)),
                           {[](int b, uint64_t r) { return (r & 1) == 0 ? b : 0; }}};
  CHECK(decryptor_test(partial, {0.5, 0.5}, p, TestMode::PI, rng).value ==
        doctest::Approx(0.75).epsilon(1e-9));

  CHECK(std::abs(decryptor_test(partial, {0.5, 0.5}, p, TestMode::API, rng).value - 0.75) <=
        p.epsilon);

  measure::MeasureParams thresh(0.1, 0.01, 0.6);
  CHECK(decryptor_test(partial, {0.5, 0.5}, thresh, TestMode::TI, rng).value == 1.0);
  CHECK(decryptor_test(partial, {0.5, 0.5}, thresh, TestMode::ATI, rng).value == 1.0);
  measure::MeasureParams high(0.1, 0.01, 0.9);
  CHECK(decryptor_test(partial, {0.5, 0.5}, high, TestMode::TI, rng).value == 0.0);
}

TEST_CASE("decryptor mixture validation") {
  StrategyRegister bad{measure::DensityMatrix::maximally_mixed(2),
                       {[](int b, uint64_t) { return b; }}};
  ByteStream rng(611);
  measure::MeasureParams p(0.1, 0.1);
  CHECK_THROWS_AS(decryptor_test(bad, {1.0}, p, TestMode::PI, rng), ParameterError);
  bad.responders.push_back([](int b, uint64_t) { return b; });
  CHECK_THROWS_AS(decryptor_test(bad, {0.5}, p, TestMode::PI, rng), ParameterError);
}
