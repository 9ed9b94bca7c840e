#include "toricquiver/matrix.hpp"

#include <stdexcept>

namespace toricquiver {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer: '" + text + "'");
  // mpz_class rejects a leading '+'
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

MatQ to_rational(const MatZ& a) {
  MatQ out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = Rational(a(r, c));
  return out;
}

MatZ to_integer(const MatQ& a) {
  MatZ out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c).get_den() != 1) throw std::domain_error("matrix entry is not integral: " + a(r, c).get_str());
      out(r, c) = a(r, c).get_num();
    }
  return out;
}

}  // namespace toricquiver
