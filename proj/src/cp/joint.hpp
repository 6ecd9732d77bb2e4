#pragma once

#include "../sim/statevector.hpp"

namespace cosetlab::cp {

// Helpers for the joint state of c coset registers of n qubits each.
// Register 0 occupies the most significant n bits of the joint index,
// matching the MSB-first bit convention.

sim::StateVector tensor_states(const std::vector<sim::StateVector>& states);

// Applies H^{x n} to every register i with bit i of mask set.
sim::StateVector block_hadamard(const sim::StateVector& joint, int n, int c, uint64_t mask);

// Extracts register r of a product state. Throws SamplingError when the
// joint state is entangled across the requested cut (reconstruction check
// at 1e-9).
sim::StateVector factor_register(const sim::StateVector& joint, int n, int c, int r);

// Register value of a joint index.
inline uint64_t register_bits(uint64_t joint_index, int n, int c, int r) {
  return (joint_index >> (n * (c - 1 - r))) & ((uint64_t(1) << n) - 1);
}

}  // namespace cosetlab::cp
