#pragma once

#include <stdexcept>

namespace rrbin {

/// Malformed or unusable input data (ingestion, file formats).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent configuration, e.g. a null table built under other settings.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace rrbin
