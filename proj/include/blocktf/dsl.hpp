#ifndef BLOCKTF_DSL_HPP
#define BLOCKTF_DSL_HPP

#include <string>

#include "blocktf/blockdiag.hpp"
#include "blocktf/errors.hpp"
#include "blocktf/signal.hpp"

namespace blocktf {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    int length = 1;
};

// Reported syntax failure; parsing never aborts the process.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, SourceSpan span)
        : Error(message + " at line " + std::to_string(span.line) + " col " + std::to_string(span.column)),
          span_(span) {}
    const SourceSpan& span() const { return span_; }

  private:
    SourceSpan span_;
};

// Block-diagram text format (.bdg). Whitespace-insensitive, `#` starts a
// line comment:
//   expr     := tfLit
//             | "ser"  "[" expr ("," expr)* "]"
//             | "summ" "[" expr ("," expr)* "]"
//             | "pick" "(" expr ")" "[" expr ("," expr)* "]"
//             | "fb"   "(" expr "," expr ")"
//   tfLit    := "tf" "(" coeffs ";" coeffs ")"
//   coeffs   := rational ("," rational)*      -- ascending degree
//   rational := ["+"|"-"] (int | int "/" int | decimal)
// Decimals are read as exact rationals (0.05 -> 1/20).
BlockExpr parse_block(const std::string& text);

// Canonical text: minimal whitespace, non-integral rationals as p/q;
// parse_block(print_block(e)) is structurally e. The printer never folds
// algebra.
std::string print_block(const BlockExpr& e);

// Signal literal syntax used by the CLI:
//   signal := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := rational | "step" | "t" ["^" int] | "exp" "(" rational ")"
//           | "sin" "(" rational ")" | "cos" "(" rational ")"
//           | "delay" "(" rational "," signal ")"
// A term admits at most one sin/cos factor, and delay(...) may only be
// scaled by rational constants (the catalog has no t^n * g(t-T) forms).
Signal parse_signal(const std::string& text);

} // namespace blocktf

#endif
