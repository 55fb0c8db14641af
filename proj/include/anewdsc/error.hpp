#pragma once

#include <stdexcept>
#include <string>

namespace anewdsc {

enum class ErrorKind {
    invalid_input,
    precision_cap,
    iteration_cap,
    degenerate_interval,
};

/// Every failure the solver can report. The kind distinguishes precondition
/// violations of the input (invalid_input) from resource caps that usually
/// indicate a non-square-free polynomial.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace anewdsc
