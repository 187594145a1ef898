#include "bfc/rational.hpp"

#include <cctype>

#include "bfc/error.hpp"

namespace bfc {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer_text(num)) throw InputError("bad rational: " + text);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(num), 1);
  } else {
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_text(den) || den[0] == '-')
      throw InputError("bad rational: " + text);
    Integer d(den);
    if (d == 0) throw InputError("rational with zero denominator: " + text);
    q = Rational(Integer(num), d);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow2(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p, 1) : Rational(1, p);
}

Integer ipow(unsigned long base, unsigned long exp) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
  return p;
}

std::string decimal_ceil(const Rational& q, int digits) {
  if (digits < 0) throw InputError("digits must be >= 0");
  Integer scale = ipow(10, static_cast<unsigned long>(digits));
  // ceil(q * 10^digits)
  Integer num = q.get_num() * scale;
  Integer scaled;
  mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());

  bool negative = scaled < 0;
  Integer mag = negative ? Integer(-scaled) : scaled;
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, std::string(digits + 1 - s.size(), '0'));
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (s.find('.') != std::string::npos) {
    auto last = s.find_last_not_of('0');
    if (s[last] == '.') last--;
    s.erase(last + 1);
  }
  return negative ? "-" + s : s;
}

}  // namespace bfc
