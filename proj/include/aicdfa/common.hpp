#pragma once

#include <stdexcept>
#include <string>

namespace aicdfa {

inline constexpr const char* kVersion = "0.1.0";

// Error categories map 1:1 onto CLI exit codes.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumerical = 3;

}  // namespace aicdfa
