#include "unirep/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace unirep {

struct IntExpr::Node {
    enum class Op {
        literal, variable,
        add, sub, mul, div, mod, neg, lnot,
        eq, ne, lt, le, gt, ge,
        land, lor,
        fn_min, fn_max, fn_abs
    };
    Op op;
    long long value = 0;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = IntExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression error at offset " + std::to_string(pos) + " in '" +
                                    std::string(text) + "': " + what);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool consume(std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    NodePtr parse_or() {
        NodePtr lhs = parse_and();
        while (consume("||"))
            lhs = make(Node::Op::lor, lhs, parse_and());
        return lhs;
    }
    NodePtr parse_and() {
        NodePtr lhs = parse_cmp();
        while (consume("&&"))
            lhs = make(Node::Op::land, lhs, parse_cmp());
        return lhs;
    }
    NodePtr parse_cmp() {
        NodePtr lhs = parse_sum();
        skip_ws();
        if (consume("=="))
            return make(Node::Op::eq, lhs, parse_sum());
        if (consume("!="))
            return make(Node::Op::ne, lhs, parse_sum());
        if (consume("<="))
            return make(Node::Op::le, lhs, parse_sum());
        if (consume(">="))
            return make(Node::Op::ge, lhs, parse_sum());
        // avoid eating the first char of "<=" handled above
        if (peek() == '<' && text.substr(pos, 2) != "<=") {
            ++pos;
            return make(Node::Op::lt, lhs, parse_sum());
        }
        if (peek() == '>' && text.substr(pos, 2) != ">=") {
            ++pos;
            return make(Node::Op::gt, lhs, parse_sum());
        }
        return lhs;
    }
    NodePtr parse_sum() {
        NodePtr lhs = parse_prod();
        for (;;) {
            if (consume("+"))
                lhs = make(Node::Op::add, lhs, parse_prod());
            else if (peek() == '-' ) {
                ++pos;
                lhs = make(Node::Op::sub, lhs, parse_prod());
            } else
                return lhs;
        }
    }
    NodePtr parse_prod() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (consume("*"))
                lhs = make(Node::Op::mul, lhs, parse_unary());
            else if (consume("/"))
                lhs = make(Node::Op::div, lhs, parse_unary());
            else if (consume("%"))
                lhs = make(Node::Op::mod, lhs, parse_unary());
            else
                return lhs;
        }
    }
    NodePtr parse_unary() {
        if (consume("-"))
            return make(Node::Op::neg, parse_unary());
        if (consume("!"))
            return make(Node::Op::lnot, parse_unary());
        return parse_atom();
    }
    NodePtr parse_atom() {
        skip_ws();
        if (consume("(")) {
            NodePtr inner = parse_or();
            if (!consume(")"))
                fail("missing ')'");
            return inner;
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            auto n = std::make_shared<Node>();
            n->op = Node::Op::literal;
            n->value = std::stoll(std::string(text.substr(start, pos - start)));
            return n;
        }
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string word(text.substr(start, pos - start));
            if (consume("(")) {
                Node::Op fn;
                if (word == "min")
                    fn = Node::Op::fn_min;
                else if (word == "max")
                    fn = Node::Op::fn_max;
                else if (word == "abs")
                    fn = Node::Op::fn_abs;
                else
                    fail("unknown function '" + word + "'");
                NodePtr first = parse_or();
                NodePtr second;
                if (fn != Node::Op::fn_abs) {
                    if (!consume(","))
                        fail("expected ',' in " + word + "()");
                    second = parse_or();
                }
                if (!consume(")"))
                    fail("missing ')' after " + word + "()");
                return make(fn, first, second);
            }
            auto n = std::make_shared<Node>();
            n->op = Node::Op::variable;
            n->name = std::move(word);
            return n;
        }
        fail("expected literal, variable or '('");
    }
};

long long eval_node(const Node& n, const ExprEnv& env) {
    switch (n.op) {
    case Node::Op::literal: return n.value;
    case Node::Op::variable: {
        auto it = env.find(n.name);
        if (it == env.end())
            throw std::out_of_range("unbound table variable '" + n.name + "'");
        return it->second;
    }
    case Node::Op::add: return eval_node(*n.lhs, env) + eval_node(*n.rhs, env);
    case Node::Op::sub: return eval_node(*n.lhs, env) - eval_node(*n.rhs, env);
    case Node::Op::mul: return eval_node(*n.lhs, env) * eval_node(*n.rhs, env);
    case Node::Op::div: {
        const long long d = eval_node(*n.rhs, env);
        if (d == 0)
            throw std::domain_error("division by zero in table expression");
        return eval_node(*n.lhs, env) / d;
    }
    case Node::Op::mod: {
        const long long d = eval_node(*n.rhs, env);
        if (d == 0)
            throw std::domain_error("modulo by zero in table expression");
        return eval_node(*n.lhs, env) % d;
    }
    case Node::Op::neg: return -eval_node(*n.lhs, env);
    case Node::Op::lnot: return eval_node(*n.lhs, env) == 0 ? 1 : 0;
    case Node::Op::eq: return eval_node(*n.lhs, env) == eval_node(*n.rhs, env) ? 1 : 0;
    case Node::Op::ne: return eval_node(*n.lhs, env) != eval_node(*n.rhs, env) ? 1 : 0;
    case Node::Op::lt: return eval_node(*n.lhs, env) < eval_node(*n.rhs, env) ? 1 : 0;
    case Node::Op::le: return eval_node(*n.lhs, env) <= eval_node(*n.rhs, env) ? 1 : 0;
    case Node::Op::gt: return eval_node(*n.lhs, env) > eval_node(*n.rhs, env) ? 1 : 0;
    case Node::Op::ge: return eval_node(*n.lhs, env) >= eval_node(*n.rhs, env) ? 1 : 0;
    case Node::Op::land: return (eval_node(*n.lhs, env) != 0 && eval_node(*n.rhs, env) != 0) ? 1 : 0;
    case Node::Op::lor: return (eval_node(*n.lhs, env) != 0 || eval_node(*n.rhs, env) != 0) ? 1 : 0;
    case Node::Op::fn_min: return std::min(eval_node(*n.lhs, env), eval_node(*n.rhs, env));
    case Node::Op::fn_max: return std::max(eval_node(*n.lhs, env), eval_node(*n.rhs, env));
    case Node::Op::fn_abs: return std::llabs(eval_node(*n.lhs, env));
    }
    throw std::logic_error("unreachable expression op");
}

} // namespace

IntExpr IntExpr::parse(std::string_view text) {
    Parser p{text};
    IntExpr out;
    out.root_ = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing characters");
    out.source_ = std::string(text);
    return out;
}

long long IntExpr::eval(const ExprEnv& env) const {
    if (!root_)
        throw std::logic_error("evaluating empty expression");
    return eval_node(*root_, env);
}

} // namespace unirep
