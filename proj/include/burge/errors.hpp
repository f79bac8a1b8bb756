#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burge {

/// Malformed textual input. `column` is 1-based; 0 when no position applies.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::string input, std::size_t column)
        : std::invalid_argument(what), input_(std::move(input)), column_(column) {}

    const std::string& input() const noexcept { return input_; }
    std::size_t column() const noexcept { return column_; }

    /// Two-line rendering with a caret under the offending column.
    std::string pretty() const;

private:
    std::string input_;
    std::size_t column_;
};

/// An enumeration or scan would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace burge
