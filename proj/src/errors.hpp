#ifndef OPMFP_ERRORS_HPP
#define OPMFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opmfp {

/// Structural problem in an instance document: malformed JSON, schema
/// violation, shape mismatch, unknown label references. Maps to the
/// usage/parse exit class (2) at the CLI boundary.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was invoked on the wrong backend (finite vs real-vector).
class BackendError : public std::invalid_argument {
public:
    explicit BackendError(const std::string& what) : std::invalid_argument(what) {}
};

/// Runtime failure while evaluating a coupled map: division by zero in an
/// expression, or a table lookup on a pair the table does not cover.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace opmfp

#endif
