#include "ibe.hpp"

#include "../common/serial.hpp"

namespace cosetlab::ibefe {

IbeInstance ibe_setup(int id_len, ByteStream& rng, obf::ObfMode mode) {
  if (id_len < 1 || id_len > 64) throw ParameterError("id_len must be in [1,64]");
  pprf::GgmKey msk = pprf::prf_keygen(32, id_len, 256, rng);
  obf::ObfProgram pk = obf::obfuscate(obf::make_pkeygen_desc(msk), mode);
  return IbeInstance{std::move(pk), std::move(msk), id_len};
}

namespace {

IbeSecretKey key_from_coins(const Bytes& coins) {
  return IbeSecretKey{crypto::pke_keygen(coins).sk};
}

}  // namespace

IbeSecretKey ibe_keygen(const pprf::GgmKey& msk, uint64_t id) {
  return key_from_coins(pprf::prf_eval(msk, id));
}

IbeSecretKey ibe_keygen(const IbePuncturedMsk& pmsk, uint64_t id) {
  return key_from_coins(pprf::eval_punctured(pmsk.key, id));
}

IbePuncturedMsk ibe_punc(const pprf::GgmKey& msk, uint64_t id) {
  return IbePuncturedMsk{pprf::prf_puncture(msk, {id})};
}

crypto::PkeCiphertext ibe_enc(const obf::ObfProgram& pk, uint64_t id,
                              const crypto::Plaintext& m, const Bytes& coins) {
  obf::Output out = obf::run(pk, obf::encode_u64_input(id));
  if (out.bot) throw DecodeError("PKeyGen refused the identity");
  Reader r(out.value);
  return crypto::pke_enc(r.u64(), m, coins);
}

std::optional<crypto::Plaintext> ibe_dec(const IbeSecretKey& sk,
                                         const crypto::PkeCiphertext& ct) {
  return crypto::pke_dec(sk.sk, ct);
}

}  // namespace cosetlab::ibefe
