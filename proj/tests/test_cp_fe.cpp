#include <doctest.h>

#include <set>

#include "cp/cp_fe.hpp"

using namespace cosetlab;
using namespace cosetlab::cp;
using namespace cosetlab::crypto;

namespace {

// Same 8-function family over 3-bit messages as the plain-FE tests; all
// fit the 5-byte encoding bound.
std::vector<Circuit> function_family() {
  return {const_circuit(3, 0), const_circuit(3, 1), bit_circuit(3, 0),
          bit_circuit(3, 1),   bit_circuit(3, 2),   parity_circuit(3),
          xor2_circuit(3, 0, 1),
          Circuit{3, {Gate{GateOp::AND, 1, 2}}}};
}

CpParams fe_params() {
  CpParams p;
  p.id_len = 24;  // id || f is 24 + 40 = 64 bits
  return p;
}

}  // namespace

TEST_CASE("CP-FE decrypts to f(m) and preserves the key state") {
  ByteStream rng(201);
  CpFeInstance inst = cp_fe_setup(fe_params(), 5, 3, rng);
  auto family = function_family();
  int trials = 0;
  for (const auto& f : family) {
    CpFeKey fkey = cp_fe_qkeygen(inst, f, rng);
    for (uint64_t m = 0; m < 8; ++m) {
      if (++trials > 30) return;
      CpCiphertext ct = cp_fe_enc(inst, m, rng);
      sim::StateVector before = fkey.key.joint;
      auto got = cp_fe_dec(fkey, ct, rng);
      REQUIRE(got.has_value());
      CHECK(*got == eval_circuit(f, m));
      CHECK(fkey.key.joint.distance(before) <= 1e-9);
    }
  }
}

TEST_CASE("functional keys embed the function in the identity") {
  ByteStream rng(202);
  CpFeInstance inst = cp_fe_setup(fe_params(), 5, 3, rng);
  auto family = function_family();
  std::set<uint64_t> identities;
  for (const auto& f : family) {
    CpFeKey fkey = cp_fe_qkeygen(inst, f, rng);
    CHECK(fkey.f_bytes == serialize_circuit(f, 5));
    uint64_t f_num = 0;
    for (size_t i = 0; i < fkey.f_bytes.size(); ++i)
      f_num |= uint64_t(fkey.f_bytes[i]) << (8 * i);
    CHECK((fkey.key.id & ((uint64_t(1) << 40) - 1)) == f_num);
    identities.insert(fkey.key.id);
  }
  CHECK(identities.size() == family.size());
}

TEST_CASE("fresh random ids per functional key") {
  ByteStream rng(203);
  CpFeInstance inst = cp_fe_setup(fe_params(), 5, 3, rng);
  Circuit f = parity_circuit(3);
  std::set<uint64_t> ids;
  for (int i = 0; i < 50; ++i) ids.insert(cp_fe_qkeygen(inst, f, rng).key.id >> 40);
  CHECK(ids.size() == 50);
}

TEST_CASE("punctured master key releases keys iff f(m0) = f(m1)") {
  ByteStream rng(204);
  CpFeInstance inst = cp_fe_setup(fe_params(), 5, 3, rng);
  auto family = function_family();
  for (auto [m0, m1] : std::vector<std::pair<uint64_t, uint64_t>>{
           {0b000, 0b001}, {0b101, 0b011}, {0b111, 0b111}}) {
    CpFePmsk pmsk = cp_fe_pmsk(inst, m0, m1);
    for (const auto& f : family) {
      Bytes f_bytes = serialize_circuit(f, 5);
      uint64_t id = rng.uniform_u64(uint64_t(1) << 24);
      auto ck = cp_fe_pmsk_keygen(pmsk, id, f_bytes);
      bool differentiating = eval_circuit(f, m0) != eval_circuit(f, m1);
      if (differentiating) {
        CHECK_FALSE(ck.has_value());
      } else {
        REQUIRE(ck.has_value());
        // Byte agreement with the honestly derived classical key.
        uint64_t identity = cp_fe_identity(inst, id, f_bytes);
        CHECK(*ck == ibefe::ibe_keygen(inst.cmsk, identity));
      }
    }
  }
}

TEST_CASE("wrong-function key states refuse the ciphertext output") {
  ByteStream rng(205);
  CpFeInstance inst = cp_fe_setup(fe_params(), 5, 3, rng);
  CpFeKey fkey = cp_fe_qkeygen(inst, parity_circuit(3), rng);
  CpCiphertext ct = cp_fe_enc(inst, 0b101, rng);
  // Decrypting with a key for a different function still yields that
  // function's value, never another function's.
  auto got = cp_fe_dec(fkey, ct, rng);
  REQUIRE(got.has_value());
  CHECK(*got == eval_circuit(parity_circuit(3), 0b101));
}

TEST_CASE("setup validation") {
  ByteStream rng(206);
  CHECK_THROWS_AS(cp_fe_setup(fe_params(), 0, 3, rng), ParameterError);
  CpParams wide = fe_params();
  wide.id_len = 32;  // 32 + 40 > 64
  CHECK_THROWS_AS(cp_fe_setup(wide, 5, 3, rng), ParameterError);
}
