#ifndef MSP_ERRORS_HPP
#define MSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msp {

// Invalid data fed to an operation: out-of-range tokens, shape mismatches,
// malformed or truncated files, corpora too short to window.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configuration violates its declared invariants (dimensions, divisibility).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A search or numerical procedure cannot proceed: rejection sampling
// exhausted its retry budget, enumeration space above cap, degenerate input
// to a statistic.
class SearchError : public std::runtime_error {
public:
    explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

// Command-line misuse. Kept in the library so the CLI layer and tests share
// one exit-code mapping.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace msp

#endif
