#include "wmorrey/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>

#include <fmt/core.h>

#include "wmorrey/grid.hpp"

namespace wmorrey {

namespace {

using Fn = std::function<double(const std::vector<double>&)>;

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    Fn parse() {
        Fn e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(fmt::format("expression '{}': {} at column {}", s_, what, pos_ + 1));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Fn expr() {
        Fn lhs = term();
        for (;;) {
            if (eat('+')) {
                Fn rhs = term();
                lhs = [lhs, rhs](const auto& v) { return lhs(v) + rhs(v); };
            } else if (eat('-')) {
                Fn rhs = term();
                lhs = [lhs, rhs](const auto& v) { return lhs(v) - rhs(v); };
            } else {
                return lhs;
            }
        }
    }

    Fn term() {
        Fn lhs = unary();
        for (;;) {
            if (eat('*')) {
                Fn rhs = unary();
                lhs = [lhs, rhs](const auto& v) { return lhs(v) * rhs(v); };
            } else if (eat('/')) {
                Fn rhs = unary();
                lhs = [lhs, rhs](const auto& v) { return lhs(v) / rhs(v); };
            } else {
                return lhs;
            }
        }
    }

    Fn unary() {
        if (eat('-')) {
            Fn x = unary();
            return [x](const auto& v) { return -x(v); };
        }
        if (eat('+')) return unary();
        return power();
    }

    Fn power() {
        Fn base = primary();
        if (eat('^')) {
            Fn ex = unary();
            return [base, ex](const auto& v) { return std::pow(base(v), ex(v)); };
        }
        return base;
    }

    Fn primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            Fn e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double value = std::strtod(begin, &end);
            if (end == begin) fail("malformed number");
            pos_ += static_cast<std::size_t>(end - begin);
            return [value](const auto&) { return value; };
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (eat('(')) return call(name);
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it != vars_.end()) {
                const auto k = static_cast<std::size_t>(it - vars_.begin());
                return [k](const auto& v) { return v[k]; };
            }
            if (name == "pi") return [](const auto&) { return std::numbers::pi; };
            if (name == "e") return [](const auto&) { return std::numbers::e; };
            pos_ = start;
            fail(fmt::format("unknown name '{}'", name));
        }
        fail("unexpected character");
    }

    Fn call(const std::string& name) {
        std::vector<Fn> args;
        if (!eat(')')) {
            do {
                args.push_back(expr());
            } while (eat(','));
            if (!eat(')')) fail("expected ')' after arguments");
        }
        auto unary_fn = [&](double (*f)(double)) -> Fn {
            if (args.size() != 1) fail(fmt::format("{} takes one argument", name));
            Fn a = args[0];
            return [a, f](const auto& v) { return f(a(v)); };
        };
        auto binary_fn = [&](auto f) -> Fn {
            if (args.size() != 2) fail(fmt::format("{} takes two arguments", name));
            Fn a = args[0], b = args[1];
            return [a, b, f](const auto& v) { return f(a(v), b(v)); };
        };
        if (name == "abs") return unary_fn([](double x) { return std::abs(x); });
        if (name == "sqrt") return unary_fn([](double x) { return std::sqrt(x); });
        if (name == "exp") return unary_fn([](double x) { return std::exp(x); });
        if (name == "log") return unary_fn([](double x) { return std::log(x); });
        if (name == "sin") return unary_fn([](double x) { return std::sin(x); });
        if (name == "cos") return unary_fn([](double x) { return std::cos(x); });
        if (name == "tanh") return unary_fn([](double x) { return std::tanh(x); });
        if (name == "sign")
            return unary_fn([](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); });
        if (name == "pow") return binary_fn([](double a, double b) { return std::pow(a, b); });
        if (name == "min") return binary_fn([](double a, double b) { return std::min(a, b); });
        if (name == "max") return binary_fn([](double a, double b) { return std::max(a, b); });
        fail(fmt::format("unknown function '{}'", name));
    }

    std::string s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text, const std::vector<std::string>& variables) {
    Expression e;
    e.text_ = text;
    e.eval_ = Parser(text, variables).parse();
    return e;
}

}  // namespace wmorrey
