#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace unirep {

/// Environment for expression evaluation: integer-valued variables.
using ExprEnv = std::map<std::string, long long>;

/// Small integer expression language used by the expected-value tables:
/// literals, variables, + - * / % with unary - and !, comparisons,
/// && and ||, min/max/abs, parentheses. Booleans are 0/1; division
/// truncates toward zero. Unknown variables raise std::out_of_range.
class IntExpr {
public:
    static IntExpr parse(std::string_view text);
    long long eval(const ExprEnv& env) const;
    bool truthy(const ExprEnv& env) const { return eval(env) != 0; }
    const std::string& source() const { return source_; }

    IntExpr() = default;

    struct Node; // implementation detail, defined in expr.cpp

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

} // namespace unirep
