#pragma once

#include <stdexcept>
#include <string>

namespace contactlie {

// A documented precondition of an operation does not hold. `name` identifies
// which one, e.g. "not-abelian" or "theta-not-cocycle".
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string name, const std::string& detail)
        : std::invalid_argument(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Two independent computations of the same quantity disagree.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A structural statement that must hold for every valid input was found false.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed JSON input; `path` is a JSON pointer to the offending node.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& detail)
        : std::runtime_error(path + ": " + detail), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace contactlie
