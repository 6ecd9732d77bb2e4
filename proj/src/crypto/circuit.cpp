#include "circuit.hpp"

namespace cosetlab::crypto {

namespace {

void validate(const Circuit& c) {
  if (c.n_inputs < 1 || c.n_inputs > 15) throw ParameterError("circuit input width must be in [1,15]");
  if (c.gates.size() > 15) throw ParameterError("circuit has too many gates");
  size_t wires = c.n_inputs;
  for (const auto& g : c.gates) {
    switch (g.op) {
      case GateOp::XOR:
      case GateOp::AND:
        if (g.a >= wires || g.b >= wires) throw DecodeError("gate references a later wire");
        break;
      case GateOp::NOT:
        if (g.a >= wires || g.b != 0) throw DecodeError("malformed NOT gate");
        break;
      case GateOp::CONST:
        if (g.a > 1 || g.b != 0) throw DecodeError("malformed CONST gate");
        break;
      default:
        throw DecodeError("unknown gate op");
    }
    wires++;
  }
}

}  // namespace

int eval_circuit(const Circuit& c, uint64_t x) {
  validate(c);
  std::vector<uint8_t> wires;
  wires.reserve(c.n_inputs + c.gates.size());
  for (int i = 0; i < c.n_inputs; ++i)
    wires.push_back(static_cast<uint8_t>((x >> (c.n_inputs - 1 - i)) & 1));
  for (const auto& g : c.gates) {
    switch (g.op) {
      case GateOp::XOR:
        wires.push_back(wires[g.a] ^ wires[g.b]);
        break;
      case GateOp::AND:
        wires.push_back(wires[g.a] & wires[g.b]);
        break;
      case GateOp::NOT:
        wires.push_back(wires[g.a] ^ 1);
        break;
      case GateOp::CONST:
        wires.push_back(g.a);
        break;
    }
  }
  return wires.back();
}

size_t circuit_natural_size(const Circuit& c) { return 1 + 2 * c.gates.size(); }

Bytes serialize_circuit(const Circuit& c, size_t q_bytes) {
  validate(c);
  Bytes out;
  out.push_back(static_cast<uint8_t>((c.n_inputs << 4) | c.gates.size()));
  for (const auto& g : c.gates) {
    out.push_back(static_cast<uint8_t>((static_cast<uint8_t>(g.op) << 6) | g.a));
    out.push_back(g.b);
  }
  if (out.size() > q_bytes) throw ParameterError("circuit exceeds the size bound");
  out.resize(q_bytes, 0);
  return out;
}

Circuit deserialize_circuit(const Bytes& data) {
  if (data.empty()) throw DecodeError("empty circuit encoding");
  Circuit c;
  c.n_inputs = data[0] >> 4;
  int ng = data[0] & 0xf;
  size_t need = 1 + 2 * static_cast<size_t>(ng);
  if (data.size() < need) throw DecodeError("truncated circuit encoding");
  for (int i = 0; i < ng; ++i) {
    Gate g;
    uint8_t b0 = data[1 + 2 * i];
    g.op = static_cast<GateOp>(b0 >> 6);
    g.a = b0 & 0x3f;
    g.b = data[2 + 2 * i];
    c.gates.push_back(g);
  }
  for (size_t i = need; i < data.size(); ++i)
    if (data[i] != 0) throw DecodeError("nonzero circuit padding");
  validate(c);
  return c;
}

Circuit const_circuit(int n_inputs, int bit) {
  Circuit c{n_inputs, {}};
  c.gates.push_back(Gate{GateOp::CONST, static_cast<uint8_t>(bit & 1), 0});
  return c;
}

Circuit parity_circuit(int n_inputs) {
  if (n_inputs < 1) throw ParameterError("parity needs at least one input");
  Circuit c{n_inputs, {}};
  uint8_t acc = 0;
  for (int i = 1; i < n_inputs; ++i) {
    uint8_t next = static_cast<uint8_t>(n_inputs + c.gates.size());
    c.gates.push_back(Gate{GateOp::XOR, acc, static_cast<uint8_t>(i)});
    acc = next;
  }
  return c;
}

Circuit bit_circuit(int n_inputs, int which) {
  if (which < 0 || which >= n_inputs) throw ParameterError("bit index out of range");
  Circuit c{n_inputs, {}};
  c.gates.push_back(
      Gate{GateOp::AND, static_cast<uint8_t>(which), static_cast<uint8_t>(which)});
  return c;
}

Circuit xor2_circuit(int n_inputs, int i, int j) {
  if (i < 0 || j < 0 || i >= n_inputs || j >= n_inputs)
    throw ParameterError("bit index out of range");
  Circuit c{n_inputs, {}};
  c.gates.push_back(Gate{GateOp::XOR, static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
  return c;
}

}  // namespace cosetlab::crypto
