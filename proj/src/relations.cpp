#include "gelfand/relations.hpp"

#include <cctype>
#include <stdexcept>

namespace gelfand {

std::size_t GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) {
      return k;
    }
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

QPolyMatrix evaluate(GeneratorSet const& gens, WordSum const& expr) {
  std::size_t const d   = gens.dimension();
  QPolyMatrix       sum(d, d);
  for (auto const& term : expr) {
    QPolyMatrix prod = QPolyMatrix::identity(d);
    for (auto g : term.word) {
      if (g >= gens.matrices.size()) {
        throw std::invalid_argument("word refers to generator "
                                    + std::to_string(g) + " of "
                                    + std::to_string(gens.matrices.size()));
      }
      prod = prod * gens.matrices[g];
    }
    sum += term.coefficient * prod;
  }
  return sum;
}

namespace {

// Either a scalar (times the identity) or a matrix.
struct Value {
  bool        scalar = true;
  QPoly       s;
  QPolyMatrix m;
};

class Parser {
 public:
  Parser(GeneratorSet const& gens, std::string_view text)
      : _gens(gens), _text(text) {}

  QPolyMatrix run() {
    Value v = expr();
    skip_space();
    if (_pos != _text.size()) {
      fail("unexpected '" + std::string(1, _text[_pos]) + "'");
    }
    return as_matrix(v);
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw std::invalid_argument("malformed expression '" + std::string(_text)
                                + "' at " + std::to_string(_pos) + ": "
                                + what);
  }

  void skip_space() {
    while (_pos < _text.size()
           && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
  }

  bool accept(char c) {
    skip_space();
    if (_pos < _text.size() && _text[_pos] == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  QPolyMatrix as_matrix(Value const& v) const {
    if (!v.scalar) {
      return v.m;
    }
    return v.s * QPolyMatrix::identity(_gens.dimension());
  }

  Value add(Value a, Value const& b, bool subtract) const {
    if (a.scalar && b.scalar) {
      a.s = subtract ? a.s - b.s : a.s + b.s;
      return a;
    }
    QPolyMatrix lhs = as_matrix(a);
    QPolyMatrix rhs = as_matrix(b);
    return {false, QPoly(), subtract ? lhs - rhs : lhs + rhs};
  }

  Value mul(Value const& a, Value const& b) const {
    if (a.scalar && b.scalar) {
      return {true, a.s * b.s, {}};
    }
    if (a.scalar) {
      return {false, QPoly(), a.s * b.m};
    }
    if (b.scalar) {
      return {false, QPoly(), b.s * a.m};
    }
    return {false, QPoly(), a.m * b.m};
  }

  Value expr() {
    bool  negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Value v = term();
    if (negate) {
      v = mul(Value{true, QPoly(-1), {}}, v);
    }
    while (true) {
      if (accept('+')) {
        v = add(std::move(v), term(), false);
      } else if (accept('-')) {
        v = add(std::move(v), term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (accept('*')) {
      v = mul(v, factor());
    }
    return v;
  }

  Value factor() {
    Value base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = _pos;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
      if (start == _pos) {
        fail("expected exponent");
      }
      int   e = std::stoi(std::string(_text.substr(start, _pos - start)));
      Value r{true, QPoly(1), {}};
      for (int k = 0; k < e; ++k) {
        r = mul(r, base);
      }
      return r;
    }
    return base;
  }

  Value primary() {
    skip_space();
    if (_pos == _text.size()) {
      fail("unexpected end of input");
    }
    char c = _text[_pos];
    if (c == '(') {
      ++_pos;
      Value v = expr();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = _pos;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
      BigInt n(std::string(_text.substr(start, _pos - start)), 10);
      return {true, QPoly(n), {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = _pos;
      while (_pos < _text.size()
             && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                 || _text[_pos] == '_')) {
        ++_pos;
      }
      std::string_view name = _text.substr(start, _pos - start);
      if (name == "q") {
        return {true, QPoly::q(), {}};
      }
      for (std::size_t k = 0; k < _gens.names.size(); ++k) {
        if (_gens.names[k] == name) {
          return {false, QPoly(), _gens.matrices[k]};
        }
      }
      fail("unknown generator '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  GeneratorSet const& _gens;
  std::string_view    _text;
  std::size_t         _pos = 0;
};

RelationResult compare(QPolyMatrix const& lhs, QPolyMatrix const& rhs) {
  auto mismatch = first_mismatch(lhs, rhs);
  return {!mismatch.has_value(), std::move(mismatch)};
}

}  // namespace

QPolyMatrix evaluate(GeneratorSet const& gens, std::string_view expr) {
  return Parser(gens, expr).run();
}

RelationResult check_relation(GeneratorSet const& gens,
                              WordSum const&      lhs,
                              WordSum const&      rhs) {
  return compare(evaluate(gens, lhs), evaluate(gens, rhs));
}

RelationResult check_relation(GeneratorSet const& gens,
                              std::string_view    lhs,
                              std::string_view    rhs) {
  return compare(evaluate(gens, lhs), evaluate(gens, rhs));
}

std::vector<RelationInstance> hecke_relations(std::size_t n) {
  std::vector<RelationInstance> out;
  auto T = [](std::size_t i) { return "T" + std::to_string(i); };
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back({"quadratic i=" + std::to_string(i),
                   "(" + T(i) + " - q)*(" + T(i) + " + 1)", "0"});
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      out.push_back({"commute i=" + std::to_string(i)
                         + " j=" + std::to_string(j),
                     T(i) + "*" + T(j), T(j) + "*" + T(i)});
    }
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.push_back({"braid i=" + std::to_string(i),
                   T(i) + "*" + T(i + 1) + "*" + T(i),
                   T(i + 1) + "*" + T(i) + "*" + T(i + 1)});
  }
  return out;
}

std::vector<RelationInstance> qrook_extra_relations(std::size_t n) {
  std::vector<RelationInstance> out;
  auto T = [](std::size_t i) { return "T" + std::to_string(i); };
  auto P = [](std::size_t i) { return "P" + std::to_string(i); };
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::string tag = " i=" + std::to_string(i) + " j=" + std::to_string(j);
      out.push_back({"TP=qP" + tag, T(i) + "*" + P(j), "q*" + P(j)});
      out.push_back({"PT=qP" + tag, P(j) + "*" + T(i), "q*" + P(j)});
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      out.push_back({"TP=PT i=" + std::to_string(i) + " j=" + std::to_string(j),
                     T(i) + "*" + P(j), P(j) + "*" + T(i)});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back({"idempotent i=" + std::to_string(i), P(i) + "*" + P(i),
                   P(i)});
  }
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back({"P-recursion i=" + std::to_string(i), P(i + 1),
                   P(i) + "*" + T(i) + "*" + P(i) + " - (q - 1)*" + P(i)});
  }
  return out;
}

}  // namespace gelfand
