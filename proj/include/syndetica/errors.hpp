#pragma once

#include <stdexcept>
#include <string>

namespace syndetica {

/// Raised when a verdict would need data outside the analysis window.
/// Callers must treat this as "inconclusive", never as a refutation.
class insufficient_window_error : public std::runtime_error {
public:
    explicit insufficient_window_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Raised when a truncated point cannot be materialized because the base
/// sequence does not cover a required index. Carries the offending
/// coordinate and component.
class coverage_error : public std::runtime_error {
public:
    coverage_error(const std::string& what, std::int64_t coord, int component)
        : std::runtime_error(what), coord_(coord), component_(component) {}

    std::int64_t coord() const noexcept { return coord_; }
    int component() const noexcept { return component_; }

private:
    std::int64_t coord_;
    int component_;
};

}  // namespace syndetica
