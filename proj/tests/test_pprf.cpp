#include <doctest.h>

#include <set>

#include "pprf/ggm.hpp"

using namespace cosetlab;
using namespace cosetlab::pprf;

TEST_CASE("keygen determinism and validation") {
  ByteStream a(1), b(1);
  GgmKey k1 = prf_keygen(16, 8, 64, a);
  GgmKey k2 = prf_keygen(16, 8, 64, b);
  CHECK(k1.root_seed == k2.root_seed);

  ByteStream c(2);
  GgmKey k3 = prf_keygen(16, 8, 64, c);
  CHECK(k1.root_seed != k3.root_seed);

  ByteStream d(3);
  CHECK_THROWS_AS(prf_keygen(16, 8, 0, d), ParameterError);
  CHECK_THROWS_AS(prf_keygen(16, 0, 64, d), ParameterError);
}

TEST_CASE("eval determinism and bit balance over the full 8-bit domain") {
  ByteStream rng(5);
  GgmKey k = prf_keygen(16, 8, 64, rng);
  int ones = 0;
  for (uint64_t x = 0; x < 256; ++x) {
    Bytes y1 = prf_eval(k, x);
    Bytes y2 = prf_eval(k, x);
    CHECK(y1 == y2);
    CHECK(y1.size() == 8);
    for (uint8_t byte : y1) ones += __builtin_popcount(byte);
  }
  // 256*64 fair bits: mean 8192, sigma = sqrt(16384)/2 = 64; allow 4 sigma.
  CHECK(ones > 8192 - 4 * 64);
  CHECK(ones < 8192 + 4 * 64);

  CHECK_THROWS_AS(prf_eval(k, 256), ParameterError);
}

TEST_CASE("distinct roots give distinct functions") {
  ByteStream rng(6);
  GgmKey k1 = prf_keygen(16, 8, 64, rng);
  GgmKey k2 = prf_keygen(16, 8, 64, rng);
  int diffs = 0;
  for (uint64_t x = 0; x < 256; ++x)
    if (prf_eval(k1, x) != prf_eval(k2, x)) diffs++;
  CHECK(diffs > 0);
}

TEST_CASE("output length stretching and truncation") {
  ByteStream rng(7);
  GgmKey k = prf_keygen(16, 4, 100, rng);
  Bytes y = prf_eval(k, 3);
  CHECK(y.size() == 13);
  // 100 bits => top 4 bits of the last byte cleared.
  CHECK((y.back() & 0xf0) == 0);
}

TEST_CASE("single-point puncture: copath size and exhaustive correctness") {
  ByteStream rng(8);
  GgmKey k = prf_keygen(16, 8, 32, rng);
  PuncturedKey pk = prf_puncture(k, {0b10110001});
  CHECK(pk.copath.size() == 8);
  for (uint64_t y = 0; y < 256; ++y) {
    if (y == 0b10110001) {
      CHECK_THROWS_AS(eval_punctured(pk, y), PuncturedPointError);
    } else {
      CHECK(eval_punctured(pk, y) == prf_eval(k, y));
    }
  }
}

TEST_CASE("multi-point puncture exhaustive with both expanders") {
  for (const auto& exp : {sha256_expander(), counter_expander()}) {
    ByteStream rng(9);
    GgmKey k = prf_keygen(16, 8, 32, rng);
    std::vector<std::vector<uint64_t>> sets = {
        {0}, {255}, {3, 200}, {1, 2, 3}, {0, 128, 255}};
    for (const auto& s : sets) {
      PuncturedKey pk = prf_puncture(k, s, exp);
      CHECK(pk.copath.size() <= s.size() * 8);
      std::set<uint64_t> punctured(s.begin(), s.end());
      for (uint64_t y = 0; y < 256; ++y) {
        if (punctured.count(y)) {
          CHECK_THROWS_AS(eval_punctured(pk, y, exp), PuncturedPointError);
        } else {
          CHECK(eval_punctured(pk, y, exp) == prf_eval(k, y, exp));
        }
      }
    }
  }
}

TEST_CASE("no copath node is an ancestor of another") {
  ByteStream rng(10);
  GgmKey k = prf_keygen(16, 8, 32, rng);
  PuncturedKey pk = prf_puncture(k, {17, 42, 99});
  for (size_t i = 0; i < pk.copath.size(); ++i) {
    for (size_t j = 0; j < pk.copath.size(); ++j) {
      if (i == j) continue;
      const auto& a = pk.copath[i];
      const auto& b = pk.copath[j];
      if (a.depth >= b.depth) continue;
      // a strictly shallower: it must not be a prefix of b.
      CHECK((b.prefix >> (b.depth - a.depth)) != a.prefix);
    }
  }
}

TEST_CASE("empty puncture set leaves the root as the whole copath") {
  ByteStream rng(11);
  GgmKey k = prf_keygen(16, 8, 32, rng);
  PuncturedKey pk = prf_puncture(k, {});
  REQUIRE(pk.copath.size() == 1);
  CHECK(pk.copath[0].depth == 0);
  for (uint64_t y = 0; y < 256; ++y) CHECK(eval_punctured(pk, y) == prf_eval(k, y));
}

TEST_CASE("depth-0 sibling covers half the domain") {
  ByteStream rng(12);
  GgmKey k = prf_keygen(16, 8, 32, rng);
  PuncturedKey pk = prf_puncture(k, {0b00000001});
  // Right half (leading bit 1) is covered by a single depth-1 node.
  int depth1 = 0;
  for (const auto& node : pk.copath)
    if (node.depth == 1) depth1++;
  CHECK(depth1 == 1);
  for (uint64_t y = 128; y < 144; ++y) CHECK(eval_punctured(pk, y) == prf_eval(k, y));
}

TEST_CASE("serialization round trips preserve all evaluations") {
  ByteStream rng(13);
  GgmKey k = prf_keygen(16, 8, 48, rng);
  GgmKey k2 = deserialize_key(serialize_key(k));
  CHECK(k2.root_seed == k.root_seed);
  CHECK(k2.input_len == k.input_len);
  CHECK(k2.output_len == k.output_len);
  for (uint64_t y = 0; y < 256; y += 7) CHECK(prf_eval(k2, y) == prf_eval(k, y));

  PuncturedKey pk = prf_puncture(k, {5, 250});
  PuncturedKey pk2 = deserialize_punctured(serialize_punctured(pk));
  CHECK(serialize_punctured(pk2) == serialize_punctured(pk));
  for (uint64_t y = 0; y < 256; ++y) {
    if (y == 5 || y == 250) continue;
    CHECK(eval_punctured(pk2, y) == eval_punctured(pk, y));
  }
}

TEST_CASE("64-bit input length works for composite identities") {
  ByteStream rng(14);
  GgmKey k = prf_keygen(16, 64, 256, rng);
  uint64_t composite = (uint64_t(0xdeadbeef) << 32) | 0x1234;
  Bytes y = prf_eval(k, composite);
  CHECK(y.size() == 32);
  PuncturedKey pk = prf_puncture(k, {composite});
  CHECK(pk.copath.size() == 64);
  CHECK_THROWS_AS(eval_punctured(pk, composite), PuncturedPointError);
  CHECK(eval_punctured(pk, composite ^ 1) == prf_eval(k, composite ^ 1));
}
