#pragma once

#include <stdexcept>
#include <string>

namespace sumlab {

// Domain violations (bad preconditions, mismatched structures, refused inputs).
// CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured work/universe cap would be exceeded.  Always a refusal up
// front, never a partial result.
class cap_exceeded : public domain_error {
public:
    explicit cap_exceeded(const std::string& what) : domain_error(what) {}
};

}  // namespace sumlab
