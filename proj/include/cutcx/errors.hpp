#pragma once

#include <stdexcept>
#include <string>

namespace cutcx {

/// Invalid input: out-of-range parameters, malformed facet lists.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The complex has no facets and the requested quantity is undefined.
class VoidComplexError : public std::runtime_error {
public:
    VoidComplexError() : std::runtime_error("void complex") {}
    explicit VoidComplexError(const std::string& what) : std::runtime_error("void complex: " + what) {}
};

/// A projected face count or enumeration size exceeds the configured cap.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two distinct classes M_alpha, M_beta matched the same facet.
class ClassificationConflict : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A structural consequence of the shelling theorem failed to hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cutcx
