#pragma once
// Expression trees for scalar, operator and bracket-word formulas.
//
// Grammar: sums, products, quotients, integer powers, parentheses,
// super brackets [a, b] and iterated adjoints ad(w)^k(v).

#include "lambdalie/param_scalar.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambdalie {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum Kind { Num, Sym, Add, Sub, Neg, Mul, Div, Pow, Bracket, Ad };
    Kind kind;
    Rational value;    // Num
    std::string name;  // Sym
    std::vector<ExprPtr> kids;

    static ExprPtr num(const Rational& q);
    static ExprPtr sym(std::string n);
    static ExprPtr node(Kind k, std::vector<ExprPtr> kids);
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ExprPtr parse_expr(const std::string& text);
std::string expr_str(const ExprPtr& e);

using ScalarEnv = std::map<std::string, ParamScalar>;

// lambda, t and alpha are free parameters unless env binds them
bool is_scalar_name(const std::string& name, const ScalarEnv& env);
bool is_scalar_expr(const ExprPtr& e, const ScalarEnv& env);
ParamScalar eval_scalar(const ExprPtr& e, const ScalarEnv& env = {});
ParamScalar eval_scalar(const std::string& text, const ScalarEnv& env = {});
long eval_integer(const ExprPtr& e, const ScalarEnv& env);

// Generic evaluation into an algebra.  Ctx supplies
//   T symbol(const std::string&), T from_scalar(const ParamScalar&),
//   T add(T, T), T scale(const ParamScalar&, T), T mul(T, T), T bracket(T, T).
template <class T, class Ctx>
T eval_in(const ExprPtr& e, Ctx& ctx, const ScalarEnv& env) {
    if (is_scalar_expr(e, env)) return ctx.from_scalar(eval_scalar(e, env));
    switch (e->kind) {
        case Expr::Sym:
            return ctx.symbol(e->name);
        case Expr::Add:
            return ctx.add(eval_in<T>(e->kids[0], ctx, env), eval_in<T>(e->kids[1], ctx, env));
        case Expr::Sub:
            return ctx.add(eval_in<T>(e->kids[0], ctx, env),
                           ctx.scale(ParamScalar(-1), eval_in<T>(e->kids[1], ctx, env)));
        case Expr::Neg:
            return ctx.scale(ParamScalar(-1), eval_in<T>(e->kids[0], ctx, env));
        case Expr::Mul: {
            if (is_scalar_expr(e->kids[0], env))
                return ctx.scale(eval_scalar(e->kids[0], env), eval_in<T>(e->kids[1], ctx, env));
            if (is_scalar_expr(e->kids[1], env))
                return ctx.scale(eval_scalar(e->kids[1], env), eval_in<T>(e->kids[0], ctx, env));
            return ctx.mul(eval_in<T>(e->kids[0], ctx, env), eval_in<T>(e->kids[1], ctx, env));
        }
        case Expr::Div: {
            if (!is_scalar_expr(e->kids[1], env)) throw EvalError("division by a non-scalar");
            return ctx.scale(ParamScalar(1) / eval_scalar(e->kids[1], env), eval_in<T>(e->kids[0], ctx, env));
        }
        case Expr::Pow: {
            long k = eval_integer(e->kids[1], env);
            if (k < 1) throw EvalError("non-scalar raised to a power below 1");
            T base = eval_in<T>(e->kids[0], ctx, env);
            T acc = base;
            for (long i = 1; i < k; ++i) acc = ctx.mul(acc, base);
            return acc;
        }
        case Expr::Bracket:
            return ctx.bracket(eval_in<T>(e->kids[0], ctx, env), eval_in<T>(e->kids[1], ctx, env));
        case Expr::Ad: {
            long k = e->kids[1] ? eval_integer(e->kids[1], env) : 1;
            if (k < 0) throw EvalError("negative ad power");
            T w = eval_in<T>(e->kids[0], ctx, env);
            T v = eval_in<T>(e->kids[2], ctx, env);
            for (long i = 0; i < k; ++i) v = ctx.bracket(w, v);
            return v;
        }
        default:
            throw EvalError("cannot evaluate " + expr_str(e));
    }
}

}  // namespace lambdalie
