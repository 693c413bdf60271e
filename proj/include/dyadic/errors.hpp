#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

/// Raised when a dense materialization would exceed the supported
/// resolution; callers should switch to the closed-form path.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when two independent computation paths disagree on a value
/// that must match exactly. Carries the level at which the mismatch
/// was detected (-1 when no single level is responsible).
class validation_error : public std::runtime_error {
public:
    validation_error(const std::string& what, long level = -1)
        : std::runtime_error(what), level_(level) {}

    long level() const noexcept { return level_; }

private:
    long level_;
};

} // namespace dyadic
