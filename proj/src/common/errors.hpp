#pragma once

#include <stdexcept>
#include <string>

namespace cosetlab {

// Error taxonomy mirrored by the C API status codes (see include/cosetlab/cosetlab.h).

struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct RandomnessError : std::runtime_error {
  explicit RandomnessError(const std::string& what) : std::runtime_error(what) {}
};

struct PuncturedPointError : std::runtime_error {
  explicit PuncturedPointError(const std::string& what) : std::runtime_error(what) {}
};

struct IntegrityError : std::runtime_error {
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

struct DecodeError : std::runtime_error {
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

struct SamplingError : std::runtime_error {
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cosetlab
