#pragma once

#include <stdexcept>
#include <string>

namespace hcs {

/// A query fell outside the domain of an operation (e.g. an interval that
/// misses the Cantor approximation).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An address has entries outside the valid range for its scheme.
struct AddressError : std::runtime_error {
    explicit AddressError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// A construction would exceed a configured resource cap, or the finite data
/// is too shallow to realize a required refinement.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hcs
