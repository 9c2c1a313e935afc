#pragma once

#include <stdexcept>
#include <string>

namespace dualcore {

// Violated precondition / contract of a public operation (CLI exit code 1).
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document or string (CLI exit code 2).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; always a bug (CLI exit code 3).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw contract_error(what);
}

inline void check_invariant(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace dualcore
