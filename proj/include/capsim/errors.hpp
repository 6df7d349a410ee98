#pragma once

#include <stdexcept>
#include <string>

namespace capsim {

/// Invalid argument to a numerical routine (outside its mathematical domain).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Cholesky factorization hit a non-positive pivot on a matrix that was
/// expected to be positive definite.
class DecompositionError : public std::runtime_error {
public:
    DecompositionError(const std::string& what, int pivot)
        : std::runtime_error(what), pivot_index(pivot) {}
    int pivot_index;
};

/// A caller violated an interface contract (e.g. asked for predicted-channel
/// selection on a draw that carries no predictions).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Subset enumeration would exceed the configured relay-count cap.
class EnumerationCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid configuration input.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, std::string key_in = {}, int line_in = 0)
        : std::runtime_error(what), key(std::move(key_in)), line(line_in) {}
    std::string key;
    int line;  // 1-based; 0 when not tied to a specific line
};

}  // namespace capsim
