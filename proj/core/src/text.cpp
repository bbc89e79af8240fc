#include "tame2/text.hpp"

#include <cctype>

#include "tame2/engine.hpp"

namespace tame2 {

namespace {

struct Token {
  enum class Kind { LParen, RParen, Comma, Plus, Minus, Star, Slash, Caret, Integer, Ident, End };
  Kind kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto single = [&](Token::Kind k) {
      out.push_back({k, std::string(1, c), i});
      ++i;
    };
    switch (c) {
      case '(':
        single(Token::Kind::LParen);
        continue;
      case ')':
        single(Token::Kind::RParen);
        continue;
      case ',':
        single(Token::Kind::Comma);
        continue;
      case '+':
        single(Token::Kind::Plus);
        continue;
      case '-':
        single(Token::Kind::Minus);
        continue;
      case '*':
        single(Token::Kind::Star);
        continue;
      case '/':
        single(Token::Kind::Slash);
        continue;
      case '^':
        single(Token::Kind::Caret);
        continue;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Integer, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

// Recursive-descent evaluation over K(R); X and Y only when vars_allowed.
class Parser {
 public:
  Parser(const std::string& text, Ring ring, bool vars_allowed, std::string extra_var = "")
      : ring_(std::move(ring)),
        field_(fraction_field_of(ring_)),
        vars_(vars_allowed),
        extra_var_(std::move(extra_var)),
        toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind == k) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(Token::Kind k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) throw ParseError("trailing input", peek().pos);
  }

  BiPoly parse_expr() {
    BiPoly acc = parse_term();
    while (true) {
      if (accept(Token::Kind::Plus)) {
        acc = acc + parse_term();
      } else if (accept(Token::Kind::Minus)) {
        acc = acc - parse_unsigned_term();
      } else {
        return acc;
      }
    }
  }

  BiPoly parse_term() {
    bool neg = false;
    if (accept(Token::Kind::Minus)) {
      neg = true;
    } else {
      accept(Token::Kind::Plus);
    }
    BiPoly t = parse_unsigned_term();
    return neg ? -t : t;
  }

  BiPoly parse_unsigned_term() {
    BiPoly acc = parse_factor();
    while (true) {
      if (accept(Token::Kind::Star)) {
        acc = acc * parse_factor();
      } else if (peek().kind == Token::Kind::Slash) {
        size_t pos = peek().pos;
        ++i_;
        BiPoly d = parse_factor();
        if (!d.is_constant()) {
          throw ParseError("division by an expression involving X or Y", pos);
        }
        Coeff dc = d.coeff(0, 0);
        if (dc.is_zero()) throw ParseError("division by zero", pos);
        acc = acc.scaled(dc.inv());
      } else {
        return acc;
      }
    }
  }

  BiPoly parse_factor() {
    BiPoly b = parse_base();
    if (accept(Token::Kind::Caret)) {
      if (peek().kind != Token::Kind::Integer) {
        throw ParseError("expected a natural-number exponent", peek().pos);
      }
      Token t = take();
      unsigned long e = std::stoul(t.text);
      if (e > 256) throw ParseError("exponent too large", t.pos);
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  BiPoly parse_base() {
    Token t = peek();
    if (accept(Token::Kind::LParen)) {
      BiPoly e = parse_expr();
      expect(Token::Kind::RParen, "')'");
      return e;
    }
    if (t.kind == Token::Kind::Integer) {
      take();
      return BiPoly::constant(Coeff::from_int(field_, Int(t.text)));
    }
    if (t.kind == Token::Kind::Ident) {
      take();
      if (t.text == "X" || t.text == "Y") {
        if (!vars_) throw ParseError("variable " + t.text + " not allowed here", t.pos);
        return t.text == "X" ? BiPoly::var_x(field_) : BiPoly::var_y(field_);
      }
      if (!extra_var_.empty() && t.text == extra_var_) {
        return BiPoly::var_x(field_);  // stand-in variable for polynomial arguments
      }
      return BiPoly::constant(generator_value(t));
    }
    throw ParseError("expected an expression", t.pos);
  }

  Coeff generator_value(const Token& t) const {
    Ring base = fraction_base_of(field_);
    switch (base->kind()) {
      case RingKind::UnivarPoly:
        if (t.text == base->gen_name(0)) {
          return embed_in_fraction_field(Coeff::from_upoly(base, UPoly::variable()));
        }
        break;
      case RingKind::BivarPoly:
        if (t.text == base->gen_name(0)) {
          return embed_in_fraction_field(Coeff::from_mpoly(base, MPoly2::gen(0)));
        }
        if (t.text == base->gen_name(1)) {
          return embed_in_fraction_field(Coeff::from_mpoly(base, MPoly2::gen(1)));
        }
        break;
      case RingKind::QuadSqrtMinus5:
        if (t.text == "r5") {
          return embed_in_fraction_field(Coeff::quad(base, 0, 1));
        }
        break;
      default:
        break;
    }
    throw ParseError("unknown generator '" + t.text + "' for ring " + ring_->name(), t.pos);
  }

  /// Convert a parsed fraction-field polynomial into the target ring,
  /// reporting the first non-member coefficient.
  BiPoly into_ring(const BiPoly& p, size_t err_pos) const {
    if (same_ring(ring_, field_)) return p;
    BiPoly out(ring_);
    for (const auto& [e, c] : p.terms()) {
      auto v = try_into_ring(c, ring_);
      if (!v) {
        std::string hint;
        if (ring_->kind() == RingKind::CuspidalCubic) {
          hint = "; only combinations of powers >= 2 of " + ring_->gen_name(0) +
                 " lie in the cuspidal ring";
        }
        throw ParseError("coefficient " + c.str() + " does not lie in " + ring_->name() + hint,
                         err_pos);
      }
      out = out + BiPoly::monomial(e.i, e.j, *v);
    }
    return out;
  }

  const Ring& ring() const { return ring_; }
  const Ring& field() const { return field_; }

 private:
  Ring ring_, field_;
  bool vars_;
  std::string extra_var_;
  std::vector<Token> toks_;
  size_t i_ = 0;
};

}  // namespace

PolyMap parse_map(const std::string& text, const Ring& ring) {
  Parser p(text, ring, true);
  p.expect(Token::Kind::LParen, "'(' opening the map");
  BiPoly f1 = p.parse_expr();
  p.expect(Token::Kind::Comma, "',' between the components");
  BiPoly f2 = p.parse_expr();
  p.expect(Token::Kind::RParen, "')' closing the map");
  p.expect_end();
  return PolyMap(p.into_ring(f1, 0), p.into_ring(f2, 0));
}

Coeff parse_coeff(const std::string& text, const Ring& ring) {
  Parser p(text, ring, false);
  BiPoly e = p.parse_expr();
  p.expect_end();
  BiPoly r = p.into_ring(e, 0);
  if (!r.is_constant()) throw ParseError("expected a coefficient expression", 0);
  return r.coeff(0, 0);
}

std::vector<Coeff> parse_poly_in_t(const std::string& text, const Ring& ring) {
  Parser p(text, ring, false, "T");
  BiPoly e = p.parse_expr();
  p.expect_end();
  std::vector<Coeff> out;
  for (const auto& [exp, c] : e.terms()) {
    if (exp.j != 0) throw ParseError("unexpected variable in polynomial argument", 0);
    auto v = try_into_ring(c, ring);
    if (!v) {
      throw ParseError("coefficient " + c.str() + " does not lie in " + ring->name(), 0);
    }
    while (out.size() <= static_cast<size_t>(exp.i)) out.push_back(Coeff::zero(ring));
    out[static_cast<size_t>(exp.i)] = *v;
  }
  return out;
}

PrimeSpec parse_prime_spec(const std::string& text, const Ring& ring) {
  // Strip one optional level of parentheses holding a comma list.
  std::string body = text;
  size_t first = body.find_first_not_of(" \t");
  size_t last = body.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty prime specification", 0);
  body = body.substr(first, last - first + 1);
  std::vector<std::string> parts;
  if (body.front() == '(' && body.back() == ')') {
    std::string inner = body.substr(1, body.size() - 2);
    int depth = 0;
    std::string cur;
    for (char c : inner) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  } else {
    parts.push_back(body);
  }
  std::vector<Coeff> gens;
  gens.reserve(parts.size());
  for (const std::string& s : parts) gens.push_back(parse_coeff(s, ring));
  if (gens.size() == 1) {
    if (gens.front().is_zero()) return PrimeSpec::zero_ideal(ring);
    return PrimeSpec::element(gens.front());
  }
  return PrimeSpec::generators(std::move(gens));
}

Ring ring_from_flag(const std::string& flag) {
  auto fail = [&]() -> Ring {
    throw ParseError("unknown ring '" + flag + "'", 0);
  };
  std::string name = flag;
  bool frac = false;
  if (name.size() > 5 && name.substr(name.size() - 5) == "_frac") {
    frac = true;
    name = name.substr(0, name.size() - 5);
  }
  std::string loc_arg;
  size_t loc = name.find("_loc:");
  if (loc != std::string::npos) {
    loc_arg = name.substr(loc + 5);
    name = name.substr(0, loc);
  }
  Ring base;
  if (name == "Q") {
    base = RingDescriptor::rationals();
  } else if (name == "Z") {
    base = RingDescriptor::integers();
  } else if (name == "Qz") {
    base = RingDescriptor::univar("z");
  } else if (name == "Qw") {
    base = RingDescriptor::univar("w");
  } else if (name == "Qt") {
    base = RingDescriptor::univar("t");
  } else if (name == "Qzw") {
    base = RingDescriptor::bivar("z", "w");
  } else if (name == "Zr5") {
    base = RingDescriptor::quad_sqrt_minus5();
  } else if (name == "cusp") {
    base = RingDescriptor::cuspidal_cubic();
  } else if (name.rfind("Fp:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(name.substr(3));
    } catch (const std::exception&) {
      return fail();
    }
    base = RingDescriptor::prime_field(p);
  } else {
    return fail();
  }
  if (!loc_arg.empty()) {
    Coeff mult = parse_coeff(loc_arg, base);
    base = RingDescriptor::localized(base, mult);
  }
  if (frac) base = fraction_field_of(base);
  return base;
}

}  // namespace tame2
