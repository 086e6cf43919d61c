#include "dra/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dra {

namespace {

struct Token {
  enum Kind { Num, Gen, Coeff, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  GeneratorId gen;
  CoeffFrac coeff;
  Rat num;
  int line = 1, col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& src, const AlgebraContext& ctx) : src_(src), ctx_(ctx) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  int index_arg(char close) {
    skip_ws();
    int start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
    if (start == pos_) fail("expected an index");
    int v = std::stoi(src_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != close) fail(std::string("expected '") + close + "'");
    bump();
    return v;
  }

  void check_range(int v) {
    if (v < 1 || v > ctx_.n())
      fail("index " + std::to_string(v) + " out of range for n = " + std::to_string(ctx_.n()));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    skip_ws();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = src_[pos_];
    auto simple = [&](Token::Kind k) {
      tok_.kind = k;
      bump();
    };
    switch (c) {
      case '+': simple(Token::Plus); return;
      case '-': simple(Token::Minus); return;
      case '*': simple(Token::Star); return;
      case '/': simple(Token::Slash); return;
      case '^': simple(Token::Caret); return;
      case '(': simple(Token::LParen); return;
      case ')': simple(Token::RParen); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      tok_.kind = Token::Num;
      tok_.num = Rat(src_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      int start = pos_;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) bump();
      std::string word = src_.substr(start, pos_ - start);
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != '[') fail("expected '[' after " + word);
      bump();
      if (word == "z") {
        int i = index_arg(',');
        int j = index_arg(']');
        check_range(i);
        check_range(j);
        if (i == j) fail("z indices must differ; use t[i] for the diagonal");
        tok_.kind = Token::Gen;
        tok_.gen = {i, j};
      } else if (word == "t") {
        int i = index_arg(']');
        check_range(i);
        tok_.kind = Token::Gen;
        tok_.gen = {i, i};
      } else if (word == "h") {
        int i = index_arg(']');
        check_range(i);
        tok_.kind = Token::Coeff;
        tok_.coeff = CoeffFrac::h_var(i, ctx_.n());
      } else if (word == "theta") {
        int i = index_arg(']');
        check_range(i);
        tok_.kind = Token::Coeff;
        tok_.coeff = CoeffFrac::theta(i, ctx_.n());
      } else {
        fail("unknown symbol '" + word + "'");
      }
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& src_;
  const AlgebraContext& ctx_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& src, const AlgebraContext& ctx, Backend backend)
      : lex_(src, ctx), ctx_(ctx), backend_(backend) {}

  ZEl run() {
    ZEl e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::End) throw ParseError("trailing input", t.line, t.col);
    return e;
  }

 private:
  ZEl expr() {
    ZEl acc = term();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Plus) {
        lex_.take();
        acc += term();
      } else if (t.kind == Token::Minus) {
        lex_.take();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ZEl term() {
    ZEl acc = factor();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Star) {
        lex_.take();
        acc = ctx_.mul(acc, factor(), backend_);
      } else if (t.kind == Token::Slash) {
        Token slash = lex_.take();
        ZEl rhs = factor();
        if (rhs.terms.size() != 1 || !rhs.terms.begin()->first.empty())
          throw ParseError("division is only defined by coefficients", slash.line, slash.col);
        acc = acc.right_mul(rhs.terms.begin()->second.inverse());
      } else {
        return acc;
      }
    }
  }

  ZEl factor() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Minus) {
      lex_.take();
      return -factor();
    }
    ZEl base = atom();
    while (lex_.peek().kind == Token::Caret) {
      Token caret = lex_.take();
      Token e = lex_.take();
      if (e.kind != Token::Num || e.num.get_den() != 1 || e.num < 0)
        throw ParseError("exponent must be a nonnegative integer", caret.line, caret.col);
      long p = e.num.get_num().get_si();
      ZEl acc = ctx_.one();
      for (long k = 0; k < p; ++k) acc = ctx_.mul(acc, base, backend_);
      base = acc;
    }
    return base;
  }

  ZEl atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Num: return ZEl::coefficient(CoeffFrac::constant(ctx_.n(), t.num));
      case Token::Gen: return ctx_.generator(t.gen);
      case Token::Coeff: return ZEl::coefficient(t.coeff);
      case Token::LParen: {
        ZEl e = expr();
        Token close = lex_.take();
        if (close.kind != Token::RParen)
          throw ParseError("expected ')'", close.line, close.col);
        return e;
      }
      default: throw ParseError("expected a value", t.line, t.col);
    }
  }

  Lexer lex_;
  const AlgebraContext& ctx_;
  Backend backend_;
};

std::string poly_to_text(const ThetaPoly& p, VarStyle style, const char* open, const char* close,
                         const char* pw) {
  // In h-style, substitute theta_k = h_k - k first.
  ThetaPoly q = p;
  if (style == VarStyle::H) {
    std::vector<ThetaPoly> images;
    for (int k = 1; k <= p.n; ++k)
      images.push_back(ThetaPoly::theta(k, p.n) - ThetaPoly::constant(p.n, Rat(k)));
    q = p.substitute(images);
  }
  const char* var = style == VarStyle::H ? "h" : "theta";
  std::ostringstream os;
  bool first = true;
  for (auto it = q.terms.rbegin(); it != q.terms.rend(); ++it) {
    const auto& [e, coef] = *it;
    Rat a = coef;
    if (!first) os << (a >= 0 ? "+" : "-");
    else if (a < 0) os << "-";
    first = false;
    Rat mag = a >= 0 ? a : Rat(-a);
    bool has_var = false;
    for (int k = 0; k < q.n; ++k)
      if (e[k]) has_var = true;
    if (mag != 1 || !has_var) os << mag.get_str();
    bool started = (mag != 1 || !has_var);
    for (int k = 0; k < q.n; ++k) {
      if (!e[k]) continue;
      if (started) os << "*";
      started = true;
      os << var << open << k + 1 << close;
      if (e[k] > 1) os << pw << e[k];
    }
  }
  if (q.terms.empty()) os << "0";
  return os.str();
}

std::string factor_to_text(const LinearFactor& f, VarStyle style, const char* open,
                           const char* close) {
  return poly_to_text(f.as_poly(), style, open, close, "^");
}

}  // namespace

ZEl parse_expression(const std::string& src, const AlgebraContext& ctx, Backend backend) {
  return Parser(src, ctx, backend).run();
}

std::string to_text(const CoeffFrac& c, VarStyle style) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool want_scale = c.scale() != 1;
  bool num_is_one = c.num() == ThetaPoly::constant(c.n(), Rat(1));
  bool num_is_munus_one = c.num() == ThetaPoly::constant(c.n(), Rat(-1));
  if (num_is_munus_one) os << "-";
  if (want_scale) os << c.scale().get_str();
  if (!num_is_one && !num_is_munus_one)
    os << (want_scale ? "*(" : "(") << poly_to_text(c.num(), style, "[", "]", "^") << ")";
  else if (!want_scale)
    os << "1";
  for (const auto& f : c.den()) os << "/(" << factor_to_text(f, style, "[", "]") << ")";
  return os.str();
}

std::string to_text(const ZEl& x, VarStyle style) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    if (w.empty()) {
      os << to_text(c, style);
      continue;
    }
    for (size_t k = 0; k < w.size(); ++k) os << (k ? "*" : "") << to_string(w[k]);
    if (!c.is_one()) os << " * " << to_text(c, style);
  }
  return os.str();
}

std::string to_latex(const CoeffFrac& c, VarStyle style) {
  if (c.is_zero()) return "0";
  std::ostringstream num;
  bool num_one = c.num() == ThetaPoly::constant(c.n(), Rat(1)) && c.scale() == 1;
  if (c.scale() != 1) num << "\\tfrac{" << c.scale().get_num().get_str() << "}{"
                          << c.scale().get_den().get_str() << "}";
  if (!num_one) num << poly_to_text(c.num(), style, "_{", "}", "^");
  else num << "1";
  if (c.den().empty()) return num.str();
  std::ostringstream den;
  for (const auto& f : c.den()) den << "(" << factor_to_text(f, style, "_{", "}") << ")";
  return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

std::string to_latex(const ZEl& x, VarStyle style) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    for (const auto& g : w) {
      if (g.is_t()) os << "t_{" << g.row << "}";
      else os << "z_{" << g.row << g.col << "}";
      os << " ";
    }
    if (w.empty() || !c.is_one()) os << "\\, " << to_latex(c, style);
  }
  return os.str();
}

std::string to_json(const ZEl& x) {
  nlohmann::json root;
  root["n"] = x.n;
  auto terms = nlohmann::json::array();
  for (const auto& [w, c] : x.terms) {
    nlohmann::json term;
    auto mono = nlohmann::json::array();
    for (const auto& g : w) mono.push_back({g.row, g.col});
    term["monomial"] = mono;
    nlohmann::json coeff;
    auto num = nlohmann::json::array();
    for (const auto& [e, q] : c.num().terms) num.push_back({e, rat_to_string(q)});
    coeff["num"] = num;
    auto den = nlohmann::json::array();
    for (const auto& f : c.den()) den.push_back({f.a, rat_to_string(f.c)});
    coeff["den"] = den;
    coeff["scale"] = rat_to_string(c.scale());
    term["coeff"] = coeff;
    terms.push_back(term);
  }
  root["terms"] = terms;
  return root.dump();
}

ZEl from_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text);
  int n = root.at("n").get<int>();
  ZEl out(n);
  for (const auto& term : root.at("terms")) {
    std::vector<GeneratorId> w;
    for (const auto& g : term.at("monomial"))
      w.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
    const auto& cj = term.at("coeff");
    ThetaPoly num(n);
    for (const auto& t : cj.at("num"))
      num.add_term(t.at(0).get<std::vector<int>>(), rat_from_string(t.at(1).get<std::string>()));
    std::vector<LinearFactor> den;
    for (const auto& t : cj.at("den")) {
      LinearFactor f(n);
      auto a = t.at(0).get<std::vector<long>>();
      f.a = a;
      f.c = rat_from_string(t.at(1).get<std::string>());
      den.push_back(f);
    }
    Rat scale = rat_from_string(cj.at("scale").get<std::string>());
    out.add_term(w, CoeffFrac::from_parts(std::move(num), std::move(den), scale));
  }
  return out;
}

TotalOrder order_from_spec(const std::string& spec, int n) {
  if (spec.empty() || spec == "default") return TotalOrder::default_order(n);
  if (spec == "stord") return TotalOrder::stord(n);
  if (spec[0] != '@') throw Error("unknown order: " + spec + " (use default, stord or @file)");
  std::ifstream in(spec.substr(1));
  if (!in) throw Error("cannot open order file " + spec.substr(1));
  std::vector<GeneratorId> seq;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    int i = 0, j = 0;
    if (std::sscanf(line.c_str() + first, "z[%d,%d]", &i, &j) == 2) {
      seq.push_back({i, j});
    } else if (std::sscanf(line.c_str() + first, "t[%d]", &i) == 1) {
      seq.push_back({i, i});
    } else {
      throw ParseError("bad generator in order file", lineno, 1);
    }
  }
  return TotalOrder::custom(n, std::move(seq), "file");
}

}  // namespace dra
