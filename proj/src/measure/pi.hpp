#pragma once

#include "density.hpp"

namespace cosetlab::measure {

// Projective implementation of a binary POVM: the measurement onto the
// eigenspaces of the accept element, whose outcome is the acceptance
// probability itself. Eigenvalues are clustered at 1e-7 so numerically
// coincident eigenspaces share one projector.
struct PiMeasurement {
  struct Outcome {
    double p;       // in [0, 1]
    Mat projector;  // onto the clustered eigenspace
  };
  std::vector<Outcome> outcomes;  // p strictly increasing; projectors sum to I
  int dim() const { return static_cast<int>(outcomes.at(0).projector.rows()); }
};

inline constexpr double kPiClusterTol = 1e-7;

PiMeasurement pi(const BinaryPOVM& e);

struct ProjectiveResult {
  double outcome;
  double probability;
  DensityMatrix post;
};

// Samples an eigenvalue p with probability Tr[Pi_p rho] and collapses.
ProjectiveResult apply_projective(const PiMeasurement& m, const DensityMatrix& rho,
                                  ByteStream& rng);

// Accept probability of the two-step experiment: sum_p p * Tr[Pi_p rho].
double pi_accept_probability(const PiMeasurement& m, const DensityMatrix& rho);

}  // namespace cosetlab::measure
