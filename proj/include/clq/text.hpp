#pragma once

#include <algorithm>
#include <charconv>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clq/octonion.hpp"
#include "clq/tensor.hpp"

namespace clq {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

namespace detail {

/// Shortest fixed-notation representation that round-trips.
inline std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, ptr);
}

inline std::string blade_name(const Signature& sig, BladeMask mask) {
  if (mask == 0) return "1";
  std::string s(1, sig.prefix);
  for (int i = 0; i < sig.count; ++i)
    if (mask & (1u << i)) {
      const int digit = i + sig.index_base;
      if (digit > 9) throw std::domain_error("blade_name: index beyond single digit");
      s += static_cast<char>('0' + digit);
    }
  return s;
}

/// Cursor over the input; understands ASCII and the UTF-8 minus/otimes.
struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  // +1 / -1, or 0 when no sign present.
  int read_sign() {
    skip_ws();
    if (accept("+")) return +1;
    if (accept("-") || accept("\xE2\x88\x92")) return -1;  // U+2212
    return 0;
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && s[pos] >= '0' && s[pos] <= '9';
  }
  // Plain decimal literal (no exponent; 'e' starts a blade name).
  double read_number() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    }
    if (pos == start) throw ParseError("expected number", pos);
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data() + start, s.data() + pos, v);
    if (ec != std::errc{} || p != s.data() + pos)
      throw ParseError("malformed number", start);
    return v;
  }
};

inline BladeMask read_blade(Scanner& sc, const Signature& sig) {
  sc.skip_ws();
  if (sc.pos < sc.s.size() && sc.s[sc.pos] == '1') {
    ++sc.pos;
    return 0;
  }
  if (sc.pos >= sc.s.size() || sc.s[sc.pos] != sig.prefix)
    throw ParseError(std::string("expected blade starting with '") + sig.prefix + "'", sc.pos);
  ++sc.pos;
  BladeMask mask = 0;
  int prev = -1;
  bool any = false;
  while (sc.pos < sc.s.size() && sc.s[sc.pos] >= '0' && sc.s[sc.pos] <= '9') {
    const int idx = (sc.s[sc.pos] - '0') - sig.index_base;
    if (idx < 0 || idx >= sig.count)
      throw ParseError("generator index out of range", sc.pos);
    if (idx <= prev)
      throw ParseError("generator indices must be strictly ascending", sc.pos);
    prev = idx;
    mask |= static_cast<BladeMask>(1u << idx);
    ++sc.pos;
    any = true;
  }
  if (!any) throw ParseError("expected generator indices", sc.pos);
  return mask;
}

}  // namespace detail

/// term := [sign] coefficient? blade | [sign] coefficient;
/// blade := "1" | prefix digit+ (strictly ascending indices);
/// terms joined by "+" / "-" (ASCII or U+2212).
inline Multivector parse_multivector(std::string_view text, const Signature& sig) {
  detail::Scanner sc{text};
  Multivector::Terms terms;
  bool first = true;
  while (!sc.done()) {
    int sign = sc.read_sign();
    if (sign == 0) {
      if (!first) throw ParseError("expected '+' or '-' between terms", sc.pos);
      sign = +1;
    }
    sc.skip_ws();
    double coeff = 1.0;
    BladeMask mask = 0;
    const bool has_number =
        sc.peek_digit() || (sc.pos < sc.s.size() && sc.s[sc.pos] == '.');
    if (has_number) {
      coeff = sc.read_number();  // a bare "1" is the scalar term either way
      sc.skip_ws();
      if (sc.pos < sc.s.size() && sc.s[sc.pos] == sig.prefix)
        mask = detail::read_blade(sc, sig);
    } else {
      mask = detail::read_blade(sc, sig);
    }
    terms[mask] += sign * coeff;
    first = false;
  }
  if (first) throw ParseError("empty expression", 0);
  return Multivector(sig, std::move(terms));
}

/// Canonical text: terms sorted by (grade, mask), fixed-notation
/// coefficients, ASCII operators. Zero formats as "0".
inline std::string format_multivector(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<std::pair<int, BladeMask>, double>> items;
  for (const auto& [m, c] : a.terms())
    items.push_back({{std::popcount(static_cast<unsigned>(m)), m}, c});
  std::sort(items.begin(), items.end());
  std::string out;
  bool first = true;
  for (const auto& [key, c] : items) {
    const auto [grade, mask] = key;
    const bool neg = c < 0.0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const double mag = std::abs(c);
    if (mask == 0)
      out += detail::format_double(mag);
    else
      out += detail::format_double(mag) + " " + detail::blade_name(a.signature(), mask);
    first = false;
  }
  return out;
}

/// monomial := [sign] coefficient? blade ("⊗" blade)*, ASCII fallback "(x)".
/// A bare coefficient counts as a multiple of the identity tuple.
inline TensorElement parse_tensor(std::string_view text,
                                  const std::vector<Signature>& factors) {
  detail::Scanner sc{text};
  TensorElement::Terms terms;
  const int n = static_cast<int>(factors.size());
  auto at_separator = [&] {
    sc.skip_ws();
    return sc.s.substr(sc.pos, 3) == "\xE2\x8A\x97" ||  // U+2297
           sc.s.substr(sc.pos, 3) == "(x)";
  };
  bool first = true;
  while (!sc.done()) {
    int sign = sc.read_sign();
    if (sign == 0) {
      if (!first) throw ParseError("expected '+' or '-' between terms", sc.pos);
      sign = +1;
    }
    sc.skip_ws();
    double coeff = 1.0;
    bool have_coeff = false;
    if (sc.peek_digit() || (sc.pos < sc.s.size() && sc.s[sc.pos] == '.')) {
      // A leading number is a coefficient, except a lone "1" directly
      // followed by a tensor separator: that is the unit blade.
      const std::size_t save = sc.pos;
      const double num = sc.read_number();
      const bool lone_one = sc.s.substr(save, sc.pos - save) == "1";
      if (lone_one && at_separator()) {
        sc.pos = save;
      } else {
        coeff = num;
        have_coeff = true;
      }
    }
    sc.skip_ws();
    BladeTuple k;
    k.n = static_cast<std::uint8_t>(n);
    const bool has_blades =
        sc.pos < sc.s.size() &&
        (sc.s[sc.pos] == factors[0].prefix || sc.s[sc.pos] == '1');
    if (has_blades) {
      k.m[0] = detail::read_blade(sc, factors[0]);
      for (int i = 1; i < n; ++i) {
        if (!(sc.accept("\xE2\x8A\x97") || sc.accept("(x)")))
          throw ParseError("expected tensor separator", sc.pos);
        k.m[i] = detail::read_blade(sc, factors[i]);
      }
    } else if (!have_coeff) {
      throw ParseError("expected term", sc.pos);
    }
    terms[k] += sign * coeff;
    first = false;
  }
  if (first) throw ParseError("empty expression", 0);
  return TensorElement(factors, std::move(terms));
}

inline std::string format_tensor(const TensorElement& a) {
  if (a.is_zero()) return "0";
  using SortKey = std::vector<std::pair<int, BladeMask>>;
  std::vector<std::pair<SortKey, std::pair<BladeTuple, double>>> items;
  for (const auto& [k, c] : a.terms()) {
    SortKey key;
    for (int i = 0; i < k.n; ++i)
      key.push_back({std::popcount(static_cast<unsigned>(k.m[i])), k.m[i]});
    items.push_back({std::move(key), {k, c}});
  }
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string out;
  bool first = true;
  for (const auto& [key, term] : items) {
    const auto& [k, c] = term;
    const bool neg = c < 0.0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += detail::format_double(std::abs(c));
    out += " ";
    for (int i = 0; i < k.n; ++i) {
      if (i) out += "\xE2\x8A\x97";
      out += detail::blade_name(a.factors()[i], k.m[i]);
    }
    first = false;
  }
  return out;
}

/// "re,im;re,im;..." — one complex pair per amplitude.
inline std::vector<std::complex<double>> parse_amplitudes(std::string_view text) {
  std::vector<std::complex<double>> amps;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    const std::size_t comma = part.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("expected 're,im' pair", start);
    auto read = [&](std::string_view v, std::size_t off) {
      detail::Scanner sc{v};
      int sign = sc.read_sign();
      if (sign == 0) sign = +1;
      const double x = sc.read_number();
      if (!sc.done()) throw ParseError("trailing characters in number", off + sc.pos);
      return sign * x;
    };
    amps.emplace_back(read(part.substr(0, comma), start),
                      read(part.substr(comma + 1), start + comma + 1));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (amps.empty()) throw ParseError("no amplitudes", 0);
  return amps;
}

/// "l0 + l1 o1 + ... + l7 o7"; zero components are omitted, zero prints "0".
inline std::string format_octonion(const Octonion& o) {
  std::string out;
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    const double v = o.c[k];
    if (v == 0.0) continue;
    if (first)
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    out += detail::format_double(std::abs(v));
    if (k > 0) out += " o" + std::to_string(k);
    first = false;
  }
  return first ? "0" : out;
}

inline Octonion parse_octonion(std::string_view text) {
  detail::Scanner sc{text};
  Octonion o;
  bool first = true;
  while (!sc.done()) {
    int sign = sc.read_sign();
    if (sign == 0) {
      if (!first) throw ParseError("expected '+' or '-' between terms", sc.pos);
      sign = +1;
    }
    sc.skip_ws();
    double coeff = 1.0;
    if (sc.peek_digit() || (sc.pos < sc.s.size() && sc.s[sc.pos] == '.'))
      coeff = sc.read_number();
    sc.skip_ws();
    int unit = 0;
    if (sc.pos < sc.s.size() && sc.s[sc.pos] == 'o') {
      ++sc.pos;
      if (sc.pos >= sc.s.size() || sc.s[sc.pos] < '1' || sc.s[sc.pos] > '7')
        throw ParseError("expected octonion unit index 1..7", sc.pos);
      unit = sc.s[sc.pos] - '0';
      ++sc.pos;
    }
    o.c[unit] += sign * coeff;
    first = false;
  }
  if (first) throw ParseError("empty expression", 0);
  return o;
}

inline std::string format_amplitudes(std::span<const std::complex<double>> amps) {
  std::string out;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i) out += ";";
    const double re = amps[i].real() == 0.0 ? 0.0 : amps[i].real();
    const double im = amps[i].imag() == 0.0 ? 0.0 : amps[i].imag();
    out += (re < 0 ? "-" : "") + detail::format_double(std::abs(re));
    out += ",";
    out += (im < 0 ? "-" : "") + detail::format_double(std::abs(im));
  }
  return out;
}

}  // namespace clq
