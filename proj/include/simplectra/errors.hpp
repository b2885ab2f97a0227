#pragma once

#include <stdexcept>
#include <string>

namespace simplectra {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   input_error / precondition_error / not_applicable_error -> exit 2
//   resource_cap_error                                      -> exit 3
//   numeric_error                                           -> exit 2
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad faces, parse failures, out-of-range ids, bad parameters.
class input_error : public error {
public:
    explicit input_error(const std::string& what) : error(what) {}
};

// A theorem or operation precondition is violated (named in the message).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// The operation is well-formed but has nothing to act on (e.g. no usable links).
class not_applicable_error : public error {
public:
    explicit not_applicable_error(const std::string& what) : error(what) {}
};

// Desk-scale caps (matrix size, exhaustive-search size) exceeded.
class resource_cap_error : public error {
public:
    explicit resource_cap_error(const std::string& what) : error(what) {}
};

// Numerical linear algebra failed to converge.
class numeric_error : public error {
public:
    explicit numeric_error(const std::string& what) : error(what) {}
};

} // namespace simplectra
