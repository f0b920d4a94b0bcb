#include "pancake/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "pancake/errors.hpp"

namespace pancake {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<Rat> parse_decimal(std::string_view s) {
  // [+-]? digits [. digits?]? | [+-]? . digits, with optional e/E exponent.
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';

  std::string int_part, frac_part;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;

  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (digits.empty() || digits.size() > 6) return std::nullopt;
    exp10 = std::stol(digits);
    if (eneg) exp10 = -exp10;
  }
  if (i != s.size()) return std::nullopt;

  mpz_class num(int_part.empty() ? std::string("0") : int_part);
  for (char c : frac_part) {
    num *= 10;
    num += c - '0';
  }
  long shift = exp10 - static_cast<long>(frac_part.size());
  mpz_class den(1);
  mpz_class ten(10);
  if (shift >= 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    num *= scale;
  } else {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  Rat q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

}  // namespace

std::optional<Rat> try_parse_rat(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
    bool nn = false, dn = false;
    if (!ns.empty() && (ns[0] == '+' || ns[0] == '-')) {
      nn = ns[0] == '-';
      ns.remove_prefix(1);
    }
    if (!ds.empty() && (ds[0] == '+' || ds[0] == '-')) {
      dn = ds[0] == '-';
      ds.remove_prefix(1);
    }
    if (!all_digits(ns) || !all_digits(ds)) return std::nullopt;
    mpz_class num{std::string(ns)}, den{std::string(ds)};
    if (den == 0) return std::nullopt;
    Rat q(num, den);
    q.canonicalize();
    if (nn != dn) q = -q;
    return q;
  }
  return parse_decimal(s);
}

Rat parse_rat(std::string_view s) {
  auto q = try_parse_rat(s);
  if (!q) throw ConfigParseError("not a rational or decimal literal: '" + std::string(s) + "'");
  return *q;
}

double to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  // Avoid the two spellings of zero.
  std::string s(buf);
  if (s.find_first_of("123456789") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

}  // namespace pancake
