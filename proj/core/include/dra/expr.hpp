#pragma once

#include "dra/context.hpp"

namespace dra {

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

// Expression grammar: generators z[i,j], t[i]; Cartan atoms h[i], theta[i];
// rational literals; + - * / and parentheses. '*' is the circle product;
// division is only defined by coefficient-valued subexpressions.
ZEl parse_expression(const std::string& src, const AlgebraContext& ctx,
                     Backend backend = Backend::Rewrite);

enum class VarStyle { Theta, H };

std::string to_text(const CoeffFrac& c, VarStyle style = VarStyle::Theta);
std::string to_text(const ZEl& x, VarStyle style = VarStyle::Theta);
std::string to_latex(const CoeffFrac& c, VarStyle style = VarStyle::H);
std::string to_latex(const ZEl& x, VarStyle style = VarStyle::H);

std::string to_json(const ZEl& x);
ZEl from_json(const std::string& text);

// "default" | "stord" | "@path/to/order/file" (one generator per line,
// earliest first).
TotalOrder order_from_spec(const std::string& spec, int n);

}  // namespace dra
