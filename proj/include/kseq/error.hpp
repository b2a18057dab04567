#pragma once

#include <stdexcept>
#include <string>

namespace kseq {

// Every failure the library reports carries a short machine-readable kind
// ("arity", "index", "pole", "order", "range", "inverse", "shape",
// "degenerate", "roots", "degenerate-spectrum", "unknown-identity", ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace kseq
