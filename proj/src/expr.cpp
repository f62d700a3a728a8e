#include "lambdalie/expr.hpp"

#include <cctype>

namespace lambdalie {

ExprPtr Expr::num(const Rational& q) {
    auto e = std::make_shared<Expr>();
    e->kind = Num;
    e->value = q;
    return e;
}

ExprPtr Expr::sym(std::string n) {
    auto e = std::make_shared<Expr>();
    e->kind = Sym;
    e->name = std::move(n);
    return e;
}

ExprPtr Expr::node(Kind k, std::vector<ExprPtr> kids) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            if (accept('+'))
                lhs = Expr::node(Expr::Add, {lhs, term()});
            else if (accept('-'))
                lhs = Expr::node(Expr::Sub, {lhs, term()});
            else
                return lhs;
        }
    }
    ExprPtr term() {
        ExprPtr lhs = unary();
        while (true) {
            if (accept('*'))
                lhs = Expr::node(Expr::Mul, {lhs, unary()});
            else if (accept('/'))
                lhs = Expr::node(Expr::Div, {lhs, unary()});
            else
                return lhs;
        }
    }
    ExprPtr unary() {
        if (accept('-')) return Expr::node(Expr::Neg, {unary()});
        if (accept('+')) return unary();
        return power();
    }
    ExprPtr power() {
        ExprPtr base = primary();
        if (accept('^')) {
            ExprPtr ex = accept('-') ? Expr::node(Expr::Neg, {primary()}) : primary();
            return Expr::node(Expr::Pow, {base, ex});
        }
        return base;
    }
    ExprPtr primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprPtr a = expr();
            expect(',');
            ExprPtr b = expr();
            expect(']');
            return Expr::node(Expr::Bracket, {a, b});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Expr::num(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "ad" && peek() == '(') {
                expect('(');
                ExprPtr w = expr();
                expect(')');
                ExprPtr k;
                if (accept('^')) k = primary();
                expect('(');
                ExprPtr v = expr();
                expect(')');
                return Expr::node(Expr::Ad, {w, k, v});
            }
            return Expr::sym(name);
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string expr_str(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Num:
            return e->value.get_str();
        case Expr::Sym:
            return e->name;
        case Expr::Add:
            return "(" + expr_str(e->kids[0]) + " + " + expr_str(e->kids[1]) + ")";
        case Expr::Sub:
            return "(" + expr_str(e->kids[0]) + " - " + expr_str(e->kids[1]) + ")";
        case Expr::Neg:
            return "-" + expr_str(e->kids[0]);
        case Expr::Mul:
            return expr_str(e->kids[0]) + "*" + expr_str(e->kids[1]);
        case Expr::Div:
            return expr_str(e->kids[0]) + "/" + expr_str(e->kids[1]);
        case Expr::Pow:
            return expr_str(e->kids[0]) + "^" + expr_str(e->kids[1]);
        case Expr::Bracket:
            return "[" + expr_str(e->kids[0]) + ", " + expr_str(e->kids[1]) + "]";
        case Expr::Ad:
            return "ad(" + expr_str(e->kids[0]) + ")" + (e->kids[1] ? "^" + expr_str(e->kids[1]) : "") + "(" +
                   expr_str(e->kids[2]) + ")";
    }
    return "?";
}

bool is_scalar_name(const std::string& name, const ScalarEnv& env) {
    return env.count(name) || name == "lambda" || name == "t" || name == "alpha";
}

bool is_scalar_expr(const ExprPtr& e, const ScalarEnv& env) {
    switch (e->kind) {
        case Expr::Num:
            return true;
        case Expr::Sym:
            return is_scalar_name(e->name, env);
        case Expr::Bracket:
        case Expr::Ad:
            return false;
        default:
            for (const auto& k : e->kids)
                if (k && !is_scalar_expr(k, env)) return false;
            return true;
    }
}

ParamScalar eval_scalar(const ExprPtr& e, const ScalarEnv& env) {
    switch (e->kind) {
        case Expr::Num:
            return ParamScalar(e->value);
        case Expr::Sym: {
            auto it = env.find(e->name);
            if (it != env.end()) return it->second;
            if (e->name == "lambda") return ParamScalar::lambda();
            if (e->name == "t") return ParamScalar::t();
            if (e->name == "alpha") return ParamScalar::alpha();
            throw EvalError("unknown scalar symbol '" + e->name + "'");
        }
        case Expr::Add:
            return eval_scalar(e->kids[0], env) + eval_scalar(e->kids[1], env);
        case Expr::Sub:
            return eval_scalar(e->kids[0], env) - eval_scalar(e->kids[1], env);
        case Expr::Neg:
            return -eval_scalar(e->kids[0], env);
        case Expr::Mul:
            return eval_scalar(e->kids[0], env) * eval_scalar(e->kids[1], env);
        case Expr::Div:
            return eval_scalar(e->kids[0], env) / eval_scalar(e->kids[1], env);
        case Expr::Pow:
            return eval_scalar(e->kids[0], env).pow(eval_integer(e->kids[1], env));
        default:
            throw EvalError("not a scalar expression: " + expr_str(e));
    }
}

ParamScalar eval_scalar(const std::string& text, const ScalarEnv& env) {
    return eval_scalar(parse_expr(text), env);
}

long eval_integer(const ExprPtr& e, const ScalarEnv& env) {
    ParamScalar v = eval_scalar(e, env);
    if (!v.is_constant()) throw EvalError("exponent is not a number: " + expr_str(e));
    Rational q = v.constant_value();
    if (q.get_den() != 1) throw EvalError("exponent is not an integer: " + expr_str(e));
    return q.get_num().get_si();
}

}  // namespace lambdalie
