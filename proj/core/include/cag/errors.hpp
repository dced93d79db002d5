#pragma once

#include <stdexcept>
#include <string>

namespace cag {

/// Input failed to parse or violated a precondition.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A brute-force oracle refused an instance above its size limit.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration hit its cap; the result would be partial, not wrong,
/// so callers decide whether a capped answer is acceptable.
class saturation_error : public std::runtime_error {
public:
    explicit saturation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A proved bound failed on a concrete instance. This never indicates
/// bad input; it indicates a bug in the library itself.
class bound_violation_error : public std::logic_error {
public:
    explicit bound_violation_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cag
