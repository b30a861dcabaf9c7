#pragma once

// Text forms for symbols and operator words.
//
//   symbol := term (('+' | '-') term)*      leading sign allowed
//   term   := coeff ['*' mono] | mono
//   coeff  := digits ['/' digits]
//   mono   := 'z' ['^' digits] | 'zbar' ['^' digits]
//
// Whitespace is ignored. Example: "zbar^2 + 3*z - 1/2*z^3".
//
//   word   := item ((',' | whitespace) item)*
//   item   := 'W' | 'W*' | 'T[' symbol ']' | 'B[' symbol ']'
//
// B[s] expands to W T[s]. The word is written left to right as the
// operator product, so the rightmost item acts first.

#include "slantlab/operators.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slantlab {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class SymbolParser {
 public:
  explicit SymbolParser(std::string_view text) : text_(text) {}

  HarmonicSymbol parse_all() {
    HarmonicSymbol s = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return s;
  }

  /// Parses a sum and stops at the first character that cannot continue it.
  HarmonicSymbol parse_sum() {
    AnalyticPoly analytic, coanalytic;
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      parse_term(sign, analytic, coanalytic);
      first = false;
    }
    return HarmonicSymbol(std::move(analytic), std::move(coanalytic));
  }

  std::size_t position() const { return pos_; }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(int sign, AnalyticPoly& analytic, AnalyticPoly& coanalytic) {
    skip_ws();
    Rational coeff = sign;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t dpos = pos_;
        den = digits();
        if (den.empty()) throw ParseError("expected denominator", dpos);
        if (Integer(den) == 0) throw ParseError("zero denominator", dpos);
      }
      coeff *= make_rational_str(num, den);
      has_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        analytic.add_term(0, coeff);
        return;
      }
    }
    if (peek() != 'z') throw ParseError(has_coeff ? "expected z or zbar after '*'" : "expected a term", pos_);
    ++pos_;
    bool bar = false;
    if (text_.substr(pos_, 3) == "bar") {
      bar = true;
      pos_ += 3;
    }
    Degree n = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') throw ParseError("negative exponent", pos_);
      std::size_t epos = pos_;
      std::string e = digits();
      if (e.empty()) throw ParseError("expected exponent", epos);
      if (e.size() > 9) throw ParseError("exponent too large", epos);
      n = static_cast<Degree>(std::stoul(e));
    }
    if (bar) coanalytic.add_term(n, coeff);
    else analytic.add_term(n, coeff);
  }

  static Rational make_rational_str(const std::string& num, const std::string& den) {
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string format_monomial(const Rational& c, Degree n, const char* var) {
  std::string mono = n == 0 ? "" : (n == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(n));
  Rational mag = abs(c);
  if (mono.empty()) return to_string(mag);
  if (mag == 1) return mono;
  return to_string(mag) + "*" + mono;
}

}  // namespace detail

inline HarmonicSymbol parse_symbol(std::string_view text) { return detail::SymbolParser(text).parse_all(); }

/// Parses a symbol that must be analytic (no zbar terms).
inline AnalyticPoly parse_poly(std::string_view text) {
  HarmonicSymbol s = parse_symbol(text);
  if (!s.is_analytic()) throw ParseError("expected an analytic polynomial (no zbar terms)", 0);
  return s.analytic();
}

/// Canonical text: analytic terms by ascending degree, then zbar terms.
/// The zero symbol prints as "0".
inline std::string format_symbol(const HarmonicSymbol& s) {
  std::string out;
  auto emit = [&](const Rational& c, Degree n, const char* var) {
    bool neg = c < 0;
    if (out.empty()) out = neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += detail::format_monomial(c, n, var);
  };
  for (const auto& [n, c] : s.analytic().terms()) emit(c, n, "z");
  for (const auto& [n, c] : s.coanalytic().terms()) emit(c, n, "zbar");
  return out.empty() ? "0" : out;
}

inline std::string format_poly(const AnalyticPoly& p) { return format_symbol(HarmonicSymbol(p)); }

inline OperatorExpr parse_word(std::string_view text) {
  std::vector<Primitive> word;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    char ch = text[pos];
    if (ch == 'W') {
      ++pos;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        word.emplace_back(SlantAdjoint{});
      } else {
        word.emplace_back(Slant{});
      }
    } else if (ch == 'T' || ch == 'B') {
      ++pos;
      if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' after " + std::string(1, ch), pos);
      std::size_t close = text.find(']', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated '['", pos);
      HarmonicSymbol sym;
      try {
        sym = parse_symbol(text.substr(pos + 1, close - pos - 1));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in symbol: ") + e.what(), pos + 1 + e.position());
      }
      if (ch == 'B') word.emplace_back(Slant{});
      word.emplace_back(Toeplitz{std::move(sym)});
      pos = close + 1;
    } else {
      throw ParseError("unexpected '" + std::string(1, ch) + "' in operator word", pos);
    }
    skip();
  }
  return OperatorExpr(std::move(word));
}

inline std::string format_word(const OperatorExpr& e) {
  std::string out;
  for (const auto& p : e.word()) {
    if (!out.empty()) out += " ";
    if (std::holds_alternative<Slant>(p)) out += "W";
    else if (std::holds_alternative<SlantAdjoint>(p)) out += "W*";
    else out += "T[" + format_symbol(std::get<Toeplitz>(p).symbol) + "]";
  }
  return out;
}

}  // namespace slantlab
