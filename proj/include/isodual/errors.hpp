#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace isodual {

/// All validation failures carry a short machine-readable name (stable, no
/// spaces) next to the human-readable message.  The CLI prints the name on
/// stderr and exits 2; tests match on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

} // namespace isodual
