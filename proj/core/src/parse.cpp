#include "oreaut/parse.hpp"

#include <cctype>
#include <limits>

#include "oreaut/errors.hpp"

namespace oreaut {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  std::size_t pos() {
    skip_ws();
    return i_;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(i_, w.size()) == w) {
      i_ += w.size();
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip_ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++i_;
    }
    return v;
  }
  long long signed_number() {
    bool neg = accept('-');
    std::uint64_t v = number();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) fail("number too large");
    return neg ? -static_cast<long long>(v) : static_cast<long long>(v);
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos()); }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::vector<long long> int_list(Lexer& lx) {
  lx.expect('[');
  std::vector<long long> v;
  if (lx.accept(']')) return v;
  do {
    v.push_back(lx.signed_number());
  } while (lx.accept(','));
  lx.expect(']');
  return v;
}

std::vector<unsigned> reduce_coords(const std::vector<long long>& v, unsigned p) {
  std::vector<unsigned> c;
  for (long long x : v) {
    long long r = x % static_cast<long long>(p);
    c.push_back(static_cast<unsigned>(r < 0 ? r + p : r));
  }
  return c;
}

class ExprParser {
 public:
  ExprParser(std::string_view s, std::string_view vars) : lx_(s), vars_(vars) {}

  std::unique_ptr<Expr> parse() {
    if (lx_.at_end()) lx_.fail("empty expression");
    auto e = expr();
    if (!lx_.at_end()) lx_.fail("unexpected character");
    return e;
  }

 private:
  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->pos = pos;
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (;;) {
      std::size_t pos = lx_.pos();
      Expr::Kind k;
      if (lx_.accept('+'))
        k = Expr::Kind::Add;
      else if (lx_.accept('-'))
        k = Expr::Kind::Sub;
      else
        return lhs;
      auto n = node(k, pos);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(term());
      lhs = std::move(n);
    }
  }

  bool starts_primary() {
    char c = lx_.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '[' ||
           (c != '\0' && vars_.find(c) != std::string_view::npos);
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      std::size_t pos = lx_.pos();
      if (!lx_.accept('*') && !starts_primary()) return lhs;
      auto n = node(Expr::Kind::Mul, pos);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(unary());
      lhs = std::move(n);
    }
  }

  std::unique_ptr<Expr> unary() {
    std::size_t pos = lx_.pos();
    if (lx_.accept('-')) {
      auto n = node(Expr::Kind::Neg, pos);
      n->kids.push_back(unary());
      return n;
    }
    if (lx_.accept('+')) return unary();
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = primary();
    std::size_t pos = lx_.pos();
    if (lx_.accept('^')) {
      auto n = node(Expr::Kind::Pow, pos);
      n->exponent = lx_.number();
      n->kids.push_back(std::move(base));
      return n;
    }
    return base;
  }

  std::unique_ptr<Expr> primary() {
    std::size_t pos = lx_.pos();
    char c = lx_.peek();
    if (c == '(') {
      lx_.accept('(');
      auto e = expr();
      lx_.expect(')');
      return e;
    }
    if (c == '[') {
      auto n = node(Expr::Kind::Literal, pos);
      std::vector<long long> v = int_list(lx_);
      for (long long x : v) {
        if (x < 0) throw ParseError("negative element coordinate", pos);
        n->coords.push_back(static_cast<unsigned>(x));
      }
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = node(Expr::Kind::Int, pos);
      std::uint64_t v = lx_.number();
      if (v > static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) lx_.fail("number too large");
      n->value = static_cast<long long>(v);
      return n;
    }
    if (c != '\0' && vars_.find(c) != std::string_view::npos) {
      lx_.accept(c);
      auto n = node(Expr::Kind::Var, pos);
      n->var = c;
      return n;
    }
    lx_.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  Lexer lx_;
  std::string_view vars_;
};

Elem literal(const Field& F, const std::vector<unsigned>& coords, std::size_t pos) {
  if (coords.size() > F.m()) throw ParseError("element literal has more than " + std::to_string(F.m()) + " coordinates", pos);
  std::vector<unsigned> c;
  for (unsigned x : coords) c.push_back(x % F.p());
  return F.from_coords(c);
}

Poly eval_poly(const FieldPtr& F, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int:
      return Poly::constant(F, F->from_int(e.value));
    case Expr::Kind::Literal:
      return Poly::constant(F, literal(*F, e.coords, e.pos));
    case Expr::Kind::Var:
      if (e.var != 'x') throw ParseError(std::string("unknown variable '") + e.var + "'", e.pos);
      return Poly::x(F);
    case Expr::Kind::Add:
      return eval_poly(F, *e.kids[0]) + eval_poly(F, *e.kids[1]);
    case Expr::Kind::Sub:
      return eval_poly(F, *e.kids[0]) - eval_poly(F, *e.kids[1]);
    case Expr::Kind::Neg:
      return -eval_poly(F, *e.kids[0]);
    case Expr::Kind::Mul:
      return eval_poly(F, *e.kids[0]) * eval_poly(F, *e.kids[1]);
    case Expr::Kind::Pow: {
      if (e.exponent > 4096) throw ParseError("exponent too large", e.pos);
      return eval_poly(F, *e.kids[0]).pow(e.exponent);
    }
  }
  throw ParseError("bad expression", e.pos);
}

bool whole_bracket(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (a >= b || s[a] != '[' || s[b - 1] != ']') return false;
  int depth = 0;
  for (std::size_t i = a; i < b; ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (depth == 0 && i + 1 < b) return false;
  }
  return true;
}

}  // namespace

FieldPtr parse_field(std::string_view text) {
  Lexer lx(text);
  if (!lx.accept_word("GF") && !lx.accept_word("gf") && !lx.accept_word("F_")) lx.fail("expected GF(...)");
  lx.expect('(');
  std::size_t npos = lx.pos();
  std::uint64_t p = lx.number();
  unsigned m = 1;
  if (lx.accept('^')) {
    std::uint64_t mm = lx.number();
    if (mm == 0 || mm > 64) lx.fail("bad extension degree");
    m = static_cast<unsigned>(mm);
  } else if (!is_prime(p)) {
    std::vector<std::uint64_t> f = prime_factors(p);
    if (f.size() != 1) throw ParseError(std::to_string(p) + " is not a prime power", npos);
    std::uint64_t q = p;
    p = f[0];
    m = 0;
    while (q > 1) {
      q /= p;
      ++m;
    }
  }
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime", npos);
  if (p > 1000000) throw ParseError("characteristic too large", npos);
  std::vector<unsigned> modulus;
  auto read_mod = [&]() {
    std::size_t mpos = lx.pos();
    do {
      long long c = lx.signed_number();
      long long r = c % static_cast<long long>(p);
      modulus.push_back(static_cast<unsigned>(r < 0 ? r + static_cast<long long>(p) : r));
    } while (lx.accept(','));
    if (modulus.size() != m + 1)
      throw ParseError("modulus needs " + std::to_string(m + 1) + " coefficients", mpos);
  };
  if (lx.accept(',') || lx.accept(';')) {
    if (!lx.accept_word("mod=")) lx.fail("expected mod=");
    read_mod();
  }
  lx.expect(')');
  if (modulus.empty() && (lx.accept(',') || lx.accept(';') || lx.peek() == 'm')) {
    if (!lx.accept_word("mod=")) lx.fail("expected mod=");
    read_mod();
  }
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  if (modulus.empty()) return Field::make(static_cast<unsigned>(p), m);
  return Field::make(static_cast<unsigned>(p), modulus);
}

Elem parse_element(const Field& F, std::string_view text) {
  Lexer lx(text);
  if (lx.at_end()) lx.fail("empty element");
  Elem r;
  if (lx.peek() == '[') {
    std::size_t pos = lx.pos();
    std::vector<long long> v = int_list(lx);
    if (v.size() > F.m()) throw ParseError("element has more than " + std::to_string(F.m()) + " coordinates", pos);
    r = F.from_coords(reduce_coords(v, F.p()));
  } else {
    r = F.from_int(lx.signed_number());
  }
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  return r;
}

std::unique_ptr<Expr> parse_expr(std::string_view text, std::string_view variables) {
  return ExprParser(text, variables).parse();
}

Poly parse_poly(const FieldPtr& F, std::string_view text) {
  if (whole_bracket(text)) {
    Lexer lx(text);
    lx.expect('[');
    std::vector<Elem> c;
    if (!lx.accept(']')) {
      do {
        std::size_t pos = lx.pos();
        if (lx.peek() == '[') {
          std::vector<long long> v = int_list(lx);
          if (v.size() > F->m()) throw ParseError("element has more than " + std::to_string(F->m()) + " coordinates", pos);
          c.push_back(F->from_coords(reduce_coords(v, F->p())));
        } else {
          c.push_back(F->from_int(lx.signed_number()));
        }
      } while (lx.accept(','));
      lx.expect(']');
    }
    if (!lx.at_end()) lx.fail("unexpected trailing input");
    return Poly(F, std::move(c));
  }
  auto e = parse_expr(text, "x");
  return eval_poly(F, *e);
}

namespace {

std::string join_terms(const Poly& f, const char* sep) {
  if (f.is_zero()) return "0";
  const Field& F = f.F();
  std::string out;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    Elem c = f[k];
    if (c == 0) continue;
    std::string t;
    if (k == 0) {
      t = F.format(c);
      // a lone "[..]" would read back as a coefficient vector
      if (f.degree() == 0 && !F.in_prime_field(c)) t = "(" + t + ")";
    } else {
      if (c != 1) t = F.format(c) + "*";
      t += "x";
      if (k > 1) t += "^" + std::to_string(k);
    }
    if (!out.empty()) out += sep;
    out += t;
  }
  return out;
}

}  // namespace

std::string format_poly(const Poly& f) { return join_terms(f, " + "); }
std::string format_poly_compact(const Poly& f) { return join_terms(f, "+"); }

}  // namespace oreaut
