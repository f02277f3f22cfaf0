#pragma once

#include <stdexcept>
#include <string>

namespace tcvol {

// Invalid parameters or model specification (CLI exit code 2).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data, e.g. bad CSV (CLI exit code 3).
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical degeneracy, e.g. non-positive normalisation (CLI exit code 4).
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tcvol
