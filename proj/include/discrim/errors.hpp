#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace discrim {

/*
 * A caller-side contract violation: non-generic input, a permutation that does
 * not act strongly, degenerate Pappus parameters, and so on. `code` is a stable
 * machine-readable tag; `indices` optionally carries a 0-based witness set.
 */
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string code, const std::string& message, std::vector<std::size_t> indices = {})
        : std::invalid_argument(message), code_(std::move(code)), indices_(std::move(indices)) {}

    const std::string& code() const noexcept { return code_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    std::string code_;
    std::vector<std::size_t> indices_;
};

}  // namespace discrim
