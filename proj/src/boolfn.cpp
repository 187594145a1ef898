#include "bfc/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "bfc/error.hpp"

namespace bfc {

namespace {

std::size_t word_count(int arity) {
  return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6));
}

void check_arity(int arity) {
  if (arity < 0 || arity > kMaxArity)
    throw InputError("arity out of range [0, " + std::to_string(kMaxArity) +
                     "]: " + std::to_string(arity));
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BooleanFunction BooleanFunction::from_bits(int arity,
                                           const std::vector<bool>& bits) {
  check_arity(arity);
  if (bits.size() != (std::size_t{1} << arity))
    throw InputError("truth table length " + std::to_string(bits.size()) +
                     " does not match arity " + std::to_string(arity));
  std::vector<std::uint64_t> words(word_count(arity), 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) words[i >> 6] |= std::uint64_t{1} << (i & 63);
  return BooleanFunction(arity, std::move(words));
}

BooleanFunction BooleanFunction::from_table_value(int arity,
                                                  std::uint64_t table) {
  check_arity(arity);
  if (arity > 6) throw InputError("from_table_value requires arity <= 6");
  if (arity < 6) {
    const std::uint64_t mask = (std::uint64_t{1} << (1 << arity)) - 1;
    if (table & ~mask) throw InputError("table value exceeds 2^(2^arity)");
  }
  return BooleanFunction(arity, {table});
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  check_arity(arity);
  std::vector<std::uint64_t> words(word_count(arity), 0);
  if (value) {
    for (auto& w : words) w = ~std::uint64_t{0};
    if (arity < 6) words[0] = (std::uint64_t{1} << (1 << arity)) - 1;
  }
  return BooleanFunction(arity, std::move(words));
}

BooleanFunction BooleanFunction::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InputError("expected \"n:BITS\" or \"n:0xHEX\": " + text);
  int arity = 0;
  try {
    std::size_t used = 0;
    arity = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("bad arity in truth-table text: " + text);
  }
  check_arity(arity);
  const std::string body = text.substr(colon + 1);
  const std::uint64_t n_bits = std::uint64_t{1} << arity;

  if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) {
    const std::string hex = body.substr(2);
    const std::size_t expected = std::max<std::uint64_t>(1, n_bits / 4);
    if (hex.size() != expected)
      throw InputError("hex table must have " + std::to_string(expected) +
                       " digits: " + text);
    std::vector<bool> bits(n_bits, false);
    // Most significant nibble first: digit j covers bit indices
    // 4*(expected-1-j) .. +3 of the table integer.
    for (std::size_t j = 0; j < hex.size(); ++j) {
      const int v = hex_digit(hex[j]);
      if (v < 0) throw InputError("bad hex digit in truth table: " + text);
      const std::uint64_t base = 4 * (hex.size() - 1 - j);
      for (int b = 0; b < 4; ++b) {
        const std::uint64_t idx = base + b;
        if (idx < n_bits)
          bits[idx] = (v >> b) & 1;
        else if ((v >> b) & 1)
          throw InputError("hex table has bits beyond 2^n: " + text);
      }
    }
    return from_bits(arity, bits);
  }

  if (body.size() != n_bits)
    throw InputError("bit string must have length " + std::to_string(n_bits) +
                     ": " + text);
  std::vector<bool> bits(n_bits, false);
  for (std::uint64_t i = 0; i < n_bits; ++i) {
    if (body[i] == '1')
      bits[i] = true;
    else if (body[i] != '0')
      throw InputError("bit string must be over {0,1}: " + text);
  }
  return from_bits(arity, bits);
}

std::string BooleanFunction::to_text() const {
  std::string s = std::to_string(arity_) + ":";
  for (std::uint64_t i = 0; i < size(); ++i) s += evaluate(i) ? '1' : '0';
  return s;
}

std::string BooleanFunction::to_hex_text() const {
  const std::uint64_t n_bits = size();
  const std::size_t digits = std::max<std::uint64_t>(1, n_bits / 4);
  std::string hex(digits, '0');
  static const char* kDigits = "0123456789abcdef";
  for (std::size_t j = 0; j < digits; ++j) {
    int v = 0;
    const std::uint64_t base = 4 * (digits - 1 - j);
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t idx = base + b;
      if (idx < n_bits && evaluate(idx)) v |= 1 << b;
    }
    hex[j] = kDigits[v];
  }
  return std::to_string(arity_) + ":0x" + hex;
}

bool BooleanFunction::is_constant() const {
  const std::uint64_t c = ones_count();
  return c == 0 || c == size();
}

std::uint64_t BooleanFunction::ones_count() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

Assignment Assignment::fix(int coord, bool value) {
  return Assignment{}.set(coord, value);
}

Assignment& Assignment::set(int coord, bool value) {
  if (coord < 1 || coord > kMaxArity)
    throw InputError("assignment coordinate out of range: " +
                     std::to_string(coord));
  const std::uint32_t bit = std::uint32_t{1} << (coord - 1);
  support |= bit;
  if (value)
    values |= bit;
  else
    values &= ~bit;
  return *this;
}

std::uint64_t flip_block(int arity, std::uint64_t x, std::uint64_t block) {
  check_arity(arity);
  const std::uint64_t full = (std::uint64_t{1} << arity) - 1;
  if (block & ~full)
    throw InputError("block contains a coordinate beyond the arity");
  return x ^ block;
}

BooleanFunction restrict_function(const BooleanFunction& f,
                                  const Assignment& a) {
  const std::uint32_t full =
      static_cast<std::uint32_t>((std::uint64_t{1} << f.arity()) - 1);
  if (a.support & ~full)
    throw InputError("assignment fixes a coordinate beyond the arity");
  if (a.values & ~a.support)
    throw InputError("assignment values outside its support");
  const int h = std::popcount(a.support);
  const int m = f.arity() - h;

  // Positions of surviving coordinates, in order.
  std::vector<int> survivors;
  survivors.reserve(m);
  for (int i = 0; i < f.arity(); ++i)
    if (!((a.support >> i) & 1)) survivors.push_back(i);

  std::vector<bool> bits(std::size_t{1} << m, false);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << m); ++y) {
    std::uint64_t x = a.values;
    for (int j = 0; j < m; ++j)
      if ((y >> j) & 1) x |= std::uint64_t{1} << survivors[j];
    bits[y] = f.evaluate(x);
  }
  return BooleanFunction::from_bits(m, bits);
}

BooleanFunction compose_blockwise(const BooleanFunction& outer,
                                  const BooleanFunction& inner) {
  const int b = outer.arity();
  const int m = inner.arity();
  if (b * m > kMaxArity)
    throw InputError("composed arity " + std::to_string(b * m) +
                     " exceeds the cap of " + std::to_string(kMaxArity));
  const int n = b * m;
  const std::uint64_t inner_mask = (std::uint64_t{1} << m) - 1;
  std::vector<bool> bits(std::size_t{1} << n, false);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::uint64_t y = 0;
    for (int j = 0; j < b; ++j)
      if (inner.evaluate((x >> (j * m)) & inner_mask))
        y |= std::uint64_t{1} << j;
    bits[x] = outer.evaluate(y);
  }
  return BooleanFunction::from_bits(n, bits);
}

BooleanFunction decision_tree_complete(int depth) {
  if (depth < 1) throw InputError("tree depth must be >= 1");
  const std::uint64_t n = (std::uint64_t{1} << depth) - 1;
  if (n > kMaxArity)
    throw InputError("tree on " + std::to_string(n) +
                     " variables exceeds the arity cap");
  std::vector<bool> bits(std::size_t{1} << n, false);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    // Walk from the root; vertex v queries x_v, branching to 2v on 1 and
    // 2v+1 on 0. The bit queried at the last level is the value.
    std::uint64_t v = 1;
    bool bit = false;
    for (int level = 0; level < depth; ++level) {
      bit = (x >> (v - 1)) & 1;
      v = 2 * v + (bit ? 0 : 1);
    }
    bits[x] = bit;
  }
  return BooleanFunction::from_bits(static_cast<int>(n), bits);
}

std::int64_t MultilinearCoeffs::evaluate(std::uint64_t x) const {
  // Sum of a_S over S subseteq x, iterating submasks.
  const std::uint32_t m = static_cast<std::uint32_t>(x);
  std::int64_t total = coeffs_[0];
  for (std::uint32_t s = m; s != 0; s = (s - 1) & m) total += coeffs_[s];
  return total;
}

int MultilinearCoeffs::degree() const {
  int deg = 0;
  for (std::uint32_t s = 0; s < coeffs_.size(); ++s)
    if (coeffs_[s] != 0) deg = std::max(deg, std::popcount(s));
  return deg;
}

std::optional<int> MultilinearCoeffs::degree_in_var(int i) const {
  if (i < 1 || i > arity_)
    throw InputError("coordinate out of range: " + std::to_string(i));
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  int deg = -1;
  for (std::uint32_t s = 0; s < coeffs_.size(); ++s)
    if ((s & bit) && coeffs_[s] != 0) deg = std::max(deg, std::popcount(s));
  if (deg < 0) return std::nullopt;
  return deg;
}

std::uint32_t MultilinearCoeffs::relevant_mask() const {
  std::uint32_t mask = 0;
  for (std::uint32_t s = 0; s < coeffs_.size(); ++s)
    if (coeffs_[s] != 0) mask |= s;
  return mask;
}

MultilinearCoeffs mobius_expand(const BooleanFunction& f) {
  const std::uint64_t n_points = f.size();
  std::vector<std::int64_t> a(n_points);
  for (std::uint64_t x = 0; x < n_points; ++x) a[x] = f.evaluate(x);
  for (int i = 0; i < f.arity(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t s = 0; s < n_points; ++s)
      if (s & bit) a[s] -= a[s ^ bit];
  }
  return MultilinearCoeffs(f.arity(), std::move(a));
}

Rational FourierCoeffs::value(std::uint32_t subset) const {
  Rational q(num_[subset], 1);
  return q / pow2(arity_);
}

int FourierCoeffs::degree() const {
  int deg = 0;
  for (std::uint32_t s = 0; s < num_.size(); ++s)
    if (num_[s] != 0) deg = std::max(deg, std::popcount(s));
  return deg;
}

bool FourierCoeffs::parseval_holds(const BooleanFunction& f) const {
  // sum_S (num_S / 2^n)^2 == ones/2^n  <=>  sum num_S^2 == 2^n * ones
  Integer lhs = 0;
  for (auto v : num_) lhs += Integer(v) * Integer(v);
  Integer rhs = Integer(1) << arity_;
  rhs *= Integer(static_cast<unsigned long>(f.ones_count()));
  return lhs == rhs;
}

FourierCoeffs fourier_expand(const BooleanFunction& f) {
  const std::uint64_t n_points = f.size();
  std::vector<std::int64_t> a(n_points);
  for (std::uint64_t x = 0; x < n_points; ++x) a[x] = f.evaluate(x);
  for (int i = 0; i < f.arity(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t s = 0; s < n_points; ++s)
      if (!(s & bit)) {
        const std::int64_t u = a[s];
        const std::int64_t v = a[s | bit];
        a[s] = u + v;
        a[s | bit] = u - v;
      }
  }
  return FourierCoeffs(f.arity(), std::move(a));
}

}  // namespace bfc
