#pragma once

#include <stdexcept>
#include <string>

namespace cgq {

// Malformed or out-of-contract input: bad dimensions, non-physical state,
// unknown preset, unreadable file. CLI maps this to exit code 2.
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A structurally valid request with no feasible answer, e.g. an assignment
// asked for a state outside the channel's image. CLI maps this to exit code 3.
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cgq
