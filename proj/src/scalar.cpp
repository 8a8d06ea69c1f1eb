#include "switchopt/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <limits>

namespace switchopt {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0)
      throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view digits = int_part;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
      digits.remove_prefix(1);
    if ((digits.empty() && frac_part.empty()) || (!digits.empty() && !valid_integer(digits)) ||
        (!frac_part.empty() && !valid_integer(frac_part)) ||
        (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+')))
      throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
    mpz_class whole = digits.empty() ? mpz_class(0) : parse_integer(digits);
    mpz_class frac = frac_part.empty() ? mpz_class(0) : parse_integer(frac_part);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  if (!valid_integer(text))
    throw InvalidArgument("malformed number '" + std::string(text) + "'");
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{})
    throw Error("failed to format double");
  return std::string(buf.data(), end);
}

bool terminating_decimal(const Rational& value, std::string& out) {
  mpz_class den = value.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1)
    return false;
  unsigned places = std::max(twos, fives);
  if (places == 0) {
    out = value.get_num().get_str();
    return true;
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = value.get_num() * scale / value.get_den();
  bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= places)
    digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  out = negative ? "-" + digits : digits;
  return true;
}

double log10_abs(const Rational& v) {
  if (sgn(v) == 0)
    return -std::numeric_limits<double>::infinity();
  long num_exp = 0, den_exp = 0;
  double num = mpz_get_d_2exp(&num_exp, v.get_num_mpz_t());
  double den = mpz_get_d_2exp(&den_exp, v.get_den_mpz_t());
  return std::log10(std::fabs(num / den)) + static_cast<double>(num_exp - den_exp) * std::log10(2.0);
}

}  // namespace switchopt
