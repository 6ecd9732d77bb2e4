#pragma once

#include <cstdint>
#include <vector>

#include "../common/bytestream.hpp"
#include "../common/errors.hpp"

namespace cosetlab::crypto {

// Boolean circuits over the fixed gate set {XOR, AND, NOT, CONST}, single
// output bit. Wires 0..n_inputs-1 are the inputs; each gate appends one
// wire; the last wire is the output (the last input when there are no
// gates). The canonical encoding is compact (1 header byte + 2 bytes per
// gate) and injective on valid descriptions, which matters because
// serialized circuits double as numeric encryption identities and must
// fit in at most 8 bytes.

enum class GateOp : uint8_t { XOR = 0, AND = 1, NOT = 2, CONST = 3 };

struct Gate {
  GateOp op;
  uint8_t a = 0;  // wire index; for CONST, the constant bit (0/1)
  uint8_t b = 0;  // second wire (XOR/AND only), 0 otherwise

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int n_inputs = 0;       // <= 15
  std::vector<Gate> gates;  // <= 15

  bool operator==(const Circuit&) const = default;
};

// Input bit i of x is taken MSB-first over n_inputs bits, matching the
// BitVector convention.
int eval_circuit(const Circuit& c, uint64_t x);

// Unpadded canonical length in bytes.
size_t circuit_natural_size(const Circuit& c);

// Canonical encoding zero-padded to exactly q_bytes; throws on oversize.
Bytes serialize_circuit(const Circuit& c, size_t q_bytes);
// Strict: rejects non-canonical encodings (bad wires, nonzero spare
// fields, nonzero padding) so the encoding is injective.
Circuit deserialize_circuit(const Bytes& data);

// Convenience builders used across tests and game harnesses.
Circuit const_circuit(int n_inputs, int bit);
Circuit parity_circuit(int n_inputs);       // n-1 gates (0 gates at n=1)
Circuit bit_circuit(int n_inputs, int which);  // single AND(w, w) gate
Circuit xor2_circuit(int n_inputs, int i, int j);

}  // namespace cosetlab::crypto
