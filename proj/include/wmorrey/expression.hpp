#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wmorrey {

/// Compiled arithmetic expression over named variables.
///
/// Grammar: numbers, variables, + - * / ^ (right associative), unary minus,
/// parentheses, and calls abs sqrt exp log sin cos tanh sign pow min max.
class Expression {
public:
    /// Throws ConfigError on syntax errors or unknown names.
    static Expression parse(const std::string& text, const std::vector<std::string>& variables);

    /// `values` follows the order of `variables` given to parse.
    double operator()(const std::vector<double>& values) const { return eval_(values); }
    const std::string& text() const { return text_; }

private:
    std::string text_;
    std::function<double(const std::vector<double>&)> eval_;
};

}  // namespace wmorrey
