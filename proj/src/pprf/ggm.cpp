#include "ggm.hpp"

#include <algorithm>
#include <set>

#include "../common/serial.hpp"

namespace cosetlab::pprf {

namespace {

Bytes stretch(const Bytes& seed, int output_len, const Expander& exp) {
  int out_bytes = (output_len + 7) / 8;
  Bytes out;
  Bytes cur = seed;
  while (static_cast<int>(out.size()) < out_bytes) {
    auto [l, r] = exp(cur);
    out.insert(out.end(), l.begin(), l.end());
    cur = r;
  }
  out.resize(out_bytes);
  // Clear unused high bits of the final byte so outputs are canonical.
  int spare = out_bytes * 8 - output_len;
  if (spare > 0) out.back() &= static_cast<uint8_t>(0xff >> spare);
  return out;
}

void check_input(int input_len, uint64_t x) {
  if (input_len < 1 || input_len > 64) throw ParameterError("input_len must be in [1,64]");
  if (input_len < 64 && (x >> input_len) != 0)
    throw ParameterError("prf input has bits beyond input_len");
}

// Bit i of x, MSB-first over input_len bits.
inline int path_bit(uint64_t x, int input_len, int i) {
  return (x >> (input_len - 1 - i)) & 1;
}

Bytes descend(Bytes seed, uint64_t x, int input_len, int from_depth, const Expander& exp) {
  for (int i = from_depth; i < input_len; ++i) {
    auto [l, r] = exp(seed);
    seed = path_bit(x, input_len, i) ? std::move(r) : std::move(l);
  }
  return seed;
}

}  // namespace

Expander sha256_expander() {
  return [](const Bytes& seed) {
    Bytes l = seed, r = seed;
    l.push_back('L');
    r.push_back('R');
    Bytes lh = sha256(l), rh = sha256(r);
    lh.resize(seed.size());
    rh.resize(seed.size());
    return std::make_pair(lh, rh);
  };
}

Expander counter_expander() {
  return [](const Bytes& seed) {
    Bytes l = seed, r = seed;
    for (auto& b : l) b = static_cast<uint8_t>(b + 1);
    for (auto& b : r) b = static_cast<uint8_t>(b + 2);
    return std::make_pair(l, r);
  };
}

GgmKey prf_keygen(int security_bytes, int input_len, int output_len, ByteStream& rng) {
  if (security_bytes < 1) throw ParameterError("security_bytes must be >= 1");
  if (input_len < 1 || input_len > 64) throw ParameterError("input_len must be in [1,64]");
  if (output_len < 1) throw ParameterError("output_len must be >= 1");
  return GgmKey{rng.bytes(security_bytes), input_len, output_len};
}

Bytes prf_eval(const GgmKey& k, uint64_t x, const Expander& exp) {
  check_input(k.input_len, x);
  Bytes leaf = descend(k.root_seed, x, k.input_len, 0, exp);
  return stretch(leaf, k.output_len, exp);
}

PuncturedKey prf_puncture(const GgmKey& k, const std::vector<uint64_t>& points,
                          const Expander& exp) {
  std::set<uint64_t> pts;
  for (uint64_t p : points) {
    check_input(k.input_len, p);
    pts.insert(p);
  }
  PuncturedKey pk;
  pk.punctured_points.assign(pts.begin(), pts.end());
  pk.input_len = k.input_len;
  pk.output_len = k.output_len;

  // Recursive cover: emit a subtree root iff no punctured leaf lies below
  // it; otherwise recurse into both children. Emitted nodes are maximal, so
  // none is an ancestor of another and the copath stays O(|S| * depth).
  struct Walker {
    const std::set<uint64_t>& pts;
    int input_len;
    const Expander& exp;
    std::vector<CopathNode>& out;

    bool subtree_has_point(uint64_t prefix, int depth) const {
      int rem = input_len - depth;
      uint64_t lo = prefix << rem;
      uint64_t hi = rem >= 64 ? ~uint64_t(0) : lo + ((uint64_t(1) << rem) - 1);
      auto it = pts.lower_bound(lo);
      return it != pts.end() && *it <= hi;
    }

    void walk(uint64_t prefix, int depth, const Bytes& seed) {
      if (!subtree_has_point(prefix, depth)) {
        out.push_back(CopathNode{prefix, depth, seed});
        return;
      }
      if (depth == input_len) return;  // punctured leaf, dropped
      auto [l, r] = exp(seed);
      walk(prefix << 1, depth + 1, l);
      walk((prefix << 1) | 1, depth + 1, r);
    }
  };
  Walker{pts, k.input_len, exp, pk.copath}.walk(0, 0, k.root_seed);
  return pk;
}

Bytes eval_punctured(const PuncturedKey& pk, uint64_t x, const Expander& exp) {
  check_input(pk.input_len, x);
  if (std::binary_search(pk.punctured_points.begin(), pk.punctured_points.end(), x))
    throw PuncturedPointError("input is a punctured point");
  for (const auto& node : pk.copath) {
    int rem = pk.input_len - node.depth;
    uint64_t x_prefix = rem >= 64 ? 0 : (x >> rem);
    if (x_prefix != node.prefix) continue;
    Bytes leaf = descend(node.seed, x, pk.input_len, node.depth, exp);
    return stretch(leaf, pk.output_len, exp);
  }
  throw PuncturedPointError("no copath node covers the input");
}

Bytes serialize_key(const GgmKey& k) {
  Writer w;
  w.u8(1);
  w.u8(static_cast<uint8_t>(k.input_len));
  w.u32(static_cast<uint32_t>(k.output_len));
  w.blob(k.root_seed);
  return w.take();
}

GgmKey deserialize_key(const Bytes& data) {
  Reader r(data);
  if (r.u8() != 1) throw DecodeError("unknown key version");
  GgmKey k;
  k.input_len = r.u8();
  k.output_len = static_cast<int>(r.u32());
  k.root_seed = r.blob();
  if (!r.done()) throw DecodeError("trailing bytes in key record");
  return k;
}

Bytes serialize_punctured(const PuncturedKey& pk) {
  Writer w;
  w.u8(2);
  w.u8(static_cast<uint8_t>(pk.input_len));
  w.u32(static_cast<uint32_t>(pk.output_len));
  w.u32(static_cast<uint32_t>(pk.punctured_points.size()));
  for (uint64_t p : pk.punctured_points) w.u64(p);
  w.u32(static_cast<uint32_t>(pk.copath.size()));
  for (const auto& node : pk.copath) {
    w.u64(node.prefix);
    w.u8(static_cast<uint8_t>(node.depth));
    w.blob(node.seed);
  }
  return w.take();
}

PuncturedKey deserialize_punctured(const Bytes& data) {
  Reader r(data);
  if (r.u8() != 2) throw DecodeError("unknown punctured key version");
  PuncturedKey pk;
  pk.input_len = r.u8();
  pk.output_len = static_cast<int>(r.u32());
  uint32_t np = r.u32();
  for (uint32_t i = 0; i < np; ++i) pk.punctured_points.push_back(r.u64());
  uint32_t nc = r.u32();
  for (uint32_t i = 0; i < nc; ++i) {
    CopathNode node;
    node.prefix = r.u64();
    node.depth = r.u8();
    node.seed = r.blob();
    pk.copath.push_back(std::move(node));
  }
  if (!r.done()) throw DecodeError("trailing bytes in punctured key record");
  return pk;
}

}  // namespace cosetlab::pprf
