#include "crossed/expression.hpp"

#include <cctype>
#include <charconv>

namespace crossed {

  Ell1Space const& EvalContext::space() {
    if (!_space) {
      _space = std::make_unique<Ell1Space>(_inst.action, _tol);
    }
    return *_space;
  }

  NullIdeal const& EvalContext::null() {
    if (!_null) {
      _null = std::make_unique<NullIdeal>(null_ideal(space(), _tol));
    }
    return *_null;
  }

  namespace {

    class Parser {
     public:
      Parser(std::string const& src, EvalContext& ctx) : _src(src), _ctx(ctx) {}

      Value parse() {
        Value v = expr();
        skip();
        if (_pos < _src.size()) {
          fail("unexpected '" + std::string(1, _src[_pos]) + "'");
        }
        return v;
      }

     private:
      [[noreturn]] void fail(std::string const& what, std::size_t at) const {
        throw Error(Errc::EvalError, "column " + std::to_string(at + 1) + ": " + what);
      }
      [[noreturn]] void fail(std::string const& what) const {
        fail(what, _pos);
      }

      void skip() {
        while (_pos < _src.size() && std::isspace(static_cast<unsigned char>(_src[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip();
        if (_pos < _src.size() && _src[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      Ell1Element const& as_element(Value const& v, std::size_t at) const {
        if (auto const* f = std::get_if<Ell1Element>(&v)) {
          return *f;
        }
        fail("expected an element, got a scalar", at);
      }

      Value add(Value const& a, Value const& b, double sign, std::size_t at) const {
        if (a.index() != b.index()) {
          fail("cannot add a scalar and an element", at);
        }
        if (auto const* x = std::get_if<Scalar>(&a)) {
          return *x + sign * std::get<Scalar>(b);
        }
        return std::get<Ell1Element>(a) + sign * std::get<Ell1Element>(b);
      }

      Value mul(Value const& a, Value const& b) const {
        auto const* x = std::get_if<Scalar>(&a);
        auto const* y = std::get_if<Scalar>(&b);
        if (x && y) {
          return *x * *y;
        }
        if (x) {
          return *x * std::get<Ell1Element>(b);
        }
        if (y) {
          return *y * std::get<Ell1Element>(a);
        }
        return convolve(std::get<Ell1Element>(a), std::get<Ell1Element>(b), _ctx.tol());
      }

      Value expr() {
        Value v = term();
        while (true) {
          skip();
          std::size_t at = _pos;
          if (accept('+')) {
            v = add(v, term(), 1.0, at);
          } else if (accept('-')) {
            v = add(v, term(), -1.0, at);
          } else {
            return v;
          }
        }
      }

      Value term() {
        Value v = unary();
        while (accept('*')) {
          v = mul(v, unary());
        }
        return v;
      }

      Value unary() {
        if (accept('-')) {
          return mul(Scalar(-1.0), unary());
        }
        return primary();
      }

      std::string name() {
        std::size_t start = _pos;
        while (_pos < _src.size()
               && (std::isalnum(static_cast<unsigned char>(_src[_pos])) || _src[_pos] == '_')) {
          ++_pos;
        }
        return _src.substr(start, _pos - start);
      }

      Value primary() {
        skip();
        std::size_t at = _pos;
        if (_pos >= _src.size()) {
          fail("unexpected end of expression");
        }
        char c = _src[_pos];
        if (accept('(')) {
          Value v = expr();
          expect(')');
          return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
          double      x   = 0.0;
          auto        res = std::from_chars(_src.data() + _pos, _src.data() + _src.size(), x);
          if (res.ec != std::errc()) {
            fail("malformed number");
          }
          _pos = static_cast<std::size_t>(res.ptr - _src.data());
          if (_pos < _src.size() && _src[_pos] == 'i'
              && (_pos + 1 == _src.size() || !std::isalnum(static_cast<unsigned char>(_src[_pos + 1])))) {
            ++_pos;
            return Scalar(0.0, x);
          }
          return Scalar(x, 0.0);
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') {
          fail("unexpected '" + std::string(1, c) + "'");
        }
        std::string id = name();
        skip();
        if (_pos < _src.size() && _src[_pos] == '(') {
          return call(id, at);
        }
        if (auto const* f = _ctx.instance().element(id)) {
          return *f;
        }
        if (id == "i") {
          return Scalar(0.0, 1.0);
        }
        fail("unknown element \"" + id + "\"", at);
      }

      Value call(std::string const& fn, std::size_t at) {
        expect('(');
        if (fn == "seminorm") {
          std::size_t arg_at = _pos;
          Value       f      = expr();
          std::vector<CovariantRep> family;
          while (accept(',')) {
            skip();
            std::size_t id_at = _pos;
            std::string id    = name();
            auto const* r     = _ctx.instance().representation(id);
            if (r == nullptr) {
              fail("unknown representation \"" + id + "\"", id_at);
            }
            family.push_back(*r);
          }
          expect(')');
          if (family.empty()) {
            family = _ctx.instance().all_representations();
          }
          if (family.empty()) {
            fail("the instance has no representations", at);
          }
          return Scalar(seminorm_family(as_element(f, arg_at), family));
        }

        std::vector<std::pair<Value, std::size_t>> args;
        if (!accept(')')) {
          do {
            skip();
            std::size_t arg_at = _pos;
            args.emplace_back(expr(), arg_at);
          } while (accept(','));
          expect(')');
        }
        auto arity = [&](std::size_t n) {
          if (args.size() != n) {
            fail(fn + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"), at);
          }
        };
        if (fn == "conv") {
          arity(2);
          return convolve(as_element(args[0].first, args[0].second),
                          as_element(args[1].first, args[1].second),
                          _ctx.tol());
        }
        if (fn == "star") {
          arity(1);
          if (auto const* z = std::get_if<Scalar>(&args[0].first)) {
            return std::conj(*z);
          }
          return involution(std::get<Ell1Element>(args[0].first));
        }
        if (fn == "norm1" || fn == "norm") {
          arity(1);
          if (auto const* z = std::get_if<Scalar>(&args[0].first)) {
            return Scalar(std::abs(*z));
          }
          return Scalar(ell1_norm(std::get<Ell1Element>(args[0].first)));
        }
        if (fn == "qnorm") {
          arity(1);
          Ell1Element const& f = as_element(args[0].first, args[0].second);
          return Scalar(quotient_ell1_norm(f, _ctx.space(), _ctx.null().basis, _ctx.tol()).value);
        }
        fail("unknown function \"" + fn + "\"", at);
      }

      std::string const& _src;
      EvalContext&       _ctx;
      std::size_t        _pos = 0;
    };

  }  // namespace

  Value evaluate(std::string const& expression, EvalContext& ctx) {
    return Parser(expression, ctx).parse();
  }

  std::string format_value(Value const& v, EvalContext& ctx) {
    if (auto const* z = std::get_if<Scalar>(&v)) {
      return format_scalar(*z);
    }
    Ell1Space const& space = ctx.space();
    Vector           x     = space.coordinates(std::get<Ell1Element>(v));
    std::string      out;
    for (std::size_t k = 0; k < space.dim(); ++k) {
      if (std::abs(x(static_cast<Eigen::Index>(k))) > ctx.tol()) {
        out += (out.empty() ? "" : ", ") + space.coordinate_label(k) + "="
               + format_scalar(x(static_cast<Eigen::Index>(k)));
      }
    }
    return out.empty() ? "0" : out;
  }

}  // namespace crossed
