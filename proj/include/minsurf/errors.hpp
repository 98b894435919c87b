#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

/// Analysis-level failure with a stable machine-readable code
/// ("unsupported genus", "flat", "end point", "multivalued", ...).
class AnalysisError : public std::runtime_error {
public:
    AnalysisError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace minsurf
