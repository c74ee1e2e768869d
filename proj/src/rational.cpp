#include "arbor/rational.hpp"

#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  Rational r{mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);

  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  const std::size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
  Rational r{n, d};
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const mpz_class& value) {
  if (!value.fits_slong_p()) throw InvariantError("integer " + value.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(value.get_si());
}

std::int64_t ceil_to_int64(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return to_int64(q);
}

}  // namespace arbor
