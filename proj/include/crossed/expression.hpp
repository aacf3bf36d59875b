#ifndef CROSSED_EXPRESSION_HPP_
#define CROSSED_EXPRESSION_HPP_

#include <memory>
#include <string>
#include <variant>

#include "crossed/instance.hpp"

namespace crossed {

  using Value = std::variant<Scalar, Ell1Element>;

  // Lazily built objects an expression may need.
  class EvalContext {
   public:
    explicit EvalContext(Instance const& inst, double tol = kDefaultTol)
        : _inst(inst), _tol(tol) {}

    Instance const& instance() const noexcept {
      return _inst;
    }
    double tol() const noexcept {
      return _tol;
    }
    Ell1Space const& space();
    NullIdeal const& null();

   private:
    Instance const&            _inst;
    double                     _tol;
    std::unique_ptr<Ell1Space> _space;
    std::unique_ptr<NullIdeal> _null;
  };

  // Grammar:
  //   expr    := term (("+" | "-") term)*
  //   term    := unary ("*" unary)*
  //   unary   := "-" unary | primary
  //   primary := number ["i"] | "i" | name | name "(" args ")" | "(" expr ")"
  // Names are element literals of the instance. Functions: conv(f, g),
  // star(f), norm1(f) (alias norm), qnorm(f), seminorm(f, rep ids...).
  // A product of two elements is their convolution. Throws
  // Error(EvalError) with the column of the offending token.
  Value evaluate(std::string const& expression, EvalContext& ctx);

  // Elements print as "label=value" pairs over ell^1 coordinates, "0" when
  // zero.
  std::string format_value(Value const& v, EvalContext& ctx);

}  // namespace crossed

#endif  // CROSSED_EXPRESSION_HPP_
