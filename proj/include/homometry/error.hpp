#pragma once

#include <stdexcept>
#include <string>

namespace homometry {

// Invalid input to a library operation (bad argument, empty set, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A search that should succeed (a witness for a claimed property) came back
// empty. Mapped to its own CLI exit code.
class ClaimFalsified : public std::runtime_error {
public:
    explicit ClaimFalsified(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homometry
