#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kge {

// Embedding tables are row-major so that one entity/relation row is contiguous.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using ConstRow = Eigen::Map<const Eigen::RowVectorXd>;
using MutableRow = Eigen::Map<Eigen::RowVectorXd>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad configuration value or unsupported model/regularizer combination.
struct config_error : error {
  using error::error;
};

/// Malformed input file, unknown vocabulary token, bad magic bytes.
struct data_error : error {
  using error::error;
};

/// Operation applied to an object in the wrong state (e.g. double augmentation).
struct state_error : error {
  using error::error;
};

/// Non-finite value where a finite one is required.
struct numeric_error : error {
  using error::error;
};

/// Caller violated an operation precondition.
struct contract_error : error {
  using error::error;
};

}  // namespace kge
