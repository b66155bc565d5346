#include "ncq/dsl/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace ncq::dsl {

ParseError::ParseError(const std::string& message, SourceLoc loc)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message),
      message_(message),
      loc_(loc) {}

namespace {

constexpr std::uint32_t kMaxExponent = 1000;
constexpr std::size_t kMaxOrder = 64;

struct Token {
  enum class Kind { Ident, Integer, Symbol, End };
  Kind kind;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourceLoc loc;
  std::size_t k = 0;
  auto advance = [&] {
    if (src[k] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
    ++k;
  };
  while (k < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[k]);
    if (std::isspace(c)) {
      advance();
    } else if (c == '#') {
      while (k < src.size() && src[k] != '\n') advance();
    } else if (std::isalpha(c) || c == '_') {
      Token t{Token::Kind::Ident, {}, loc};
      while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
        t.text += src[k];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::isdigit(c)) {
      Token t{Token::Kind::Integer, {}, loc};
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
        t.text += src[k];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::string_view("+-*/^()[],;=").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), loc});
      advance();
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", loc);
    }
  }
  out.push_back({Token::Kind::End, {}, loc});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End:
      return "end of input";
    case Token::Kind::Integer:
      return "integer '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  SystemSpec file() {
    SystemSpec spec;
    bool have_generators = false;
    while (peek().kind != Token::Kind::End) statement(spec, have_generators);
    if (!have_generators) throw ParseError("missing 'generators' statement", peek().loc);
    return spec;
  }

  Expr standalone_expression() {
    Expr e = expr();
    if (peek().kind != Token::Kind::End) throw ParseError("unexpected " + describe(peek()), peek().loc);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool is_symbol(char c) const {
    return peek().kind == Token::Kind::Symbol && peek().text[0] == c;
  }

  bool accept(char c) {
    if (!is_symbol(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "', found " + describe(peek()), peek().loc);
  }

  const Token& identifier() {
    if (peek().kind != Token::Kind::Ident)
      throw ParseError("expected identifier, found " + describe(peek()), peek().loc);
    return take();
  }

  mpz_class integer() {
    if (peek().kind != Token::Kind::Integer)
      throw ParseError("expected integer, found " + describe(peek()), peek().loc);
    return mpz_class(take().text);
  }

  mpq_class rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      SourceLoc den_loc = peek().loc;
      den = integer();
      if (den == 0) throw ParseError("zero denominator", den_loc);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  void statement(SystemSpec& spec, bool& have_generators) {
    const Token& kw = peek();
    if (kw.kind != Token::Kind::Ident)
      throw ParseError("expected statement keyword, found " + describe(kw), kw.loc);
    SourceLoc loc = kw.loc;
    std::string word = take().text;
    if (word == "generators") {
      if (have_generators) throw ParseError("duplicate 'generators' statement", loc);
      have_generators = true;
      do {
        spec.generator_locs.push_back(peek().loc);
        spec.generators.push_back(identifier().text);
      } while (accept(','));
    } else if (word == "param") {
      ParamDecl p;
      p.loc = peek().loc;
      p.name = identifier().text;
      expect('=');
      bool negative = accept('-');
      p.value = rational();
      if (negative) p.value = -p.value;
      spec.params.push_back(std::move(p));
    } else if (word == "def") {
      DefDecl d;
      d.loc = peek().loc;
      d.name = identifier().text;
      expect('=');
      d.value = expr();
      spec.defs.push_back(std::move(d));
    } else if (word == "comm") {
      RelationDecl r;
      r.loc = peek().loc;
      expect('[');
      r.lhs_loc = peek().loc;
      r.lhs = identifier().text;
      expect(',');
      r.rhs_loc = peek().loc;
      r.rhs = identifier().text;
      expect(']');
      expect('=');
      r.value = expr();
      spec.relations.push_back(std::move(r));
    } else if (word == "central") {
      spec.central.push_back(expr());
    } else if (word == "order") {
      if (spec.order) throw ParseError("duplicate 'order' statement", loc);
      SourceLoc nloc = peek().loc;
      mpz_class n = integer();
      if (n > kMaxOrder) throw ParseError("order exceeds " + std::to_string(kMaxOrder), nloc);
      spec.order = static_cast<std::size_t>(n.get_ui());
    } else {
      throw ParseError("unknown statement '" + word + "'", loc);
    }
    expect(';');
  }

  // expr := ("+"|"-")? term (("+"|"-") term)*
  Expr expr() {
    SourceLoc loc = peek().loc;
    Expr lhs;
    if (accept('-')) {
      lhs = Expr::make_neg(term(), loc);
    } else {
      accept('+');
      lhs = term();
    }
    while (is_symbol('+') || is_symbol('-')) {
      SourceLoc oloc = peek().loc;
      auto kind = take().text[0] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = Expr::make_binary(kind, std::move(lhs), term(), oloc);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (is_symbol('*')) {
      SourceLoc oloc = take().loc;
      lhs = Expr::make_binary(Expr::Kind::Mul, std::move(lhs), factor(), oloc);
    }
    return lhs;
  }

  Expr factor() {
    Expr b = base();
    if (is_symbol('^')) {
      SourceLoc oloc = take().loc;
      SourceLoc nloc = peek().loc;
      mpz_class k = integer();
      if (k > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), nloc);
      return Expr::make_pow(std::move(b), static_cast<std::uint32_t>(k.get_ui()), oloc);
    }
    return b;
  }

  Expr base() {
    const Token& t = peek();
    SourceLoc loc = t.loc;
    if (t.kind == Token::Kind::Integer) return Expr::make_number(rational(), loc);
    if (t.kind == Token::Kind::Ident) {
      std::string name = take().text;
      if (name == "i") return Expr::make_imag(loc);
      if (name == "e") return Expr::make_eps(loc);
      return Expr::make_ident(std::move(name), loc);
    }
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    throw ParseError("expected expression, found " + describe(t), loc);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void collect_idents(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == Expr::Kind::Ident) out.push_back(&e);
  for (const auto& a : e.args) collect_idents(a, out);
}

enum class NameKind { Generator, Param, Def };

std::map<std::string, NameKind> name_table(const SystemSpec& spec) {
  std::map<std::string, NameKind> names;
  for (const auto& g : spec.generators) names.emplace(g, NameKind::Generator);
  for (const auto& p : spec.params) names.emplace(p.name, NameKind::Param);
  for (const auto& d : spec.defs) names.emplace(d.name, NameKind::Def);
  return names;
}

void check_idents(const std::map<std::string, NameKind>& names, const Expr& e) {
  std::vector<const Expr*> ids;
  collect_idents(e, ids);
  for (const Expr* id : ids)
    if (!names.count(id->name)) throw ParseError("undeclared identifier '" + id->name + "'", id->loc);
}

void validate(const SystemSpec& spec) {
  std::map<std::string, NameKind> names;
  auto declare = [&](const std::string& name, NameKind kind, SourceLoc loc) {
    if (name == "i" || name == "e") throw ParseError("'" + name + "' is reserved", loc);
    if (!names.emplace(name, kind).second) throw ParseError("duplicate name '" + name + "'", loc);
  };
  for (std::size_t k = 0; k < spec.generators.size(); ++k)
    declare(spec.generators[k], NameKind::Generator, spec.generator_locs[k]);
  for (const auto& p : spec.params) declare(p.name, NameKind::Param, p.loc);
  for (const auto& d : spec.defs) declare(d.name, NameKind::Def, d.loc);

  for (const auto& d : spec.defs) check_idents(names, d.value);
  for (const auto& c : spec.central) check_idents(names, c);

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& r : spec.relations) {
    auto need_generator = [&](const std::string& n, SourceLoc loc) {
      auto it = names.find(n);
      if (it == names.end()) throw ParseError("undeclared identifier '" + n + "'", loc);
      if (it->second != NameKind::Generator) throw ParseError("'" + n + "' is not a generator", loc);
    };
    need_generator(r.lhs, r.lhs_loc);
    need_generator(r.rhs, r.rhs_loc);
    if (r.lhs == r.rhs) throw ParseError("commutator of '" + r.lhs + "' with itself", r.loc);
    auto key = std::minmax(r.lhs, r.rhs);
    if (!pairs.emplace(key.first, key.second).second)
      throw ParseError("duplicate relation for [" + r.lhs + ", " + r.rhs + "]", r.loc);
    check_idents(names, r.value);
  }

  // defs must form a DAG
  std::map<std::string, const DefDecl*> defs;
  for (const auto& d : spec.defs) defs.emplace(d.name, &d);
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::function<void(const DefDecl&)> visit = [&](const DefDecl& d) {
    state[d.name] = 1;
    std::vector<const Expr*> ids;
    collect_idents(d.value, ids);
    for (const Expr* id : ids) {
      auto it = defs.find(id->name);
      if (it == defs.end()) continue;
      int s = state[id->name];
      if (s == 1) throw ParseError("cyclic definition through '" + id->name + "'", id->loc);
      if (s == 0) visit(*it->second);
    }
    state[d.name] = 2;
  };
  for (const auto& d : spec.defs)
    if (state[d.name] == 0) visit(d);
}

}  // namespace

SystemSpec parse_system(std::string_view text) {
  SystemSpec spec = Parser(text).file();
  validate(spec);
  return spec;
}

Expr parse_expression(std::string_view text) { return Parser(text).standalone_expression(); }

void validate_expression(const SystemSpec& spec, const Expr& expr) {
  check_idents(name_table(spec), expr);
}

}  // namespace ncq::dsl
