#include "bfc/measures.hpp"

#include <algorithm>
#include <bit>

#include "bfc/error.hpp"
#include "bfc/packing.hpp"

namespace bfc {

namespace {

void check_measure_arity(const BooleanFunction& f) {
  if (f.arity() > kMaxMeasureArity)
    throw CapabilityError("block-sensitivity search is limited to arity " +
                          std::to_string(kMaxMeasureArity));
}

// Minimal sensitive blocks of f at x: sensitive blocks none of whose proper
// nonempty subsets are sensitive. Packing minimal blocks is enough: every
// sensitive block contains a minimal one.
std::vector<std::uint32_t> minimal_sensitive_blocks(const BooleanFunction& f,
                                                    std::uint64_t x,
                                                    std::vector<char>& sens,
                                                    std::vector<char>& has) {
  const std::uint32_t full =
      static_cast<std::uint32_t>((std::uint64_t{1} << f.arity()) - 1);
  const bool fx = f.evaluate(x);
  sens[0] = 0;
  has[0] = 0;
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t b = 1; b <= full; ++b) {
    sens[b] = f.evaluate(x ^ b) != fx;
    // has[b]: some nonempty subset of b (b included) is sensitive
    char sub = 0;
    for (std::uint32_t m = b; m != 0 && !sub; m &= m - 1)
      sub |= has[b ^ (m & -m)];
    has[b] = sens[b] | sub;
    if (sens[b] && !sub) minimal.push_back(b);
  }
  return minimal;
}

}  // namespace

bool BlockCollection::validate(const BooleanFunction& f) const {
  std::uint32_t seen = 0;
  const bool fx = f.evaluate(base_input);
  for (auto b : blocks) {
    if (b == 0 || (b & seen)) return false;
    if (b >= f.size()) return false;
    if (f.evaluate(base_input ^ b) == fx) return false;
    seen |= b;
  }
  return true;
}

int degree(const BooleanFunction& f) { return mobius_expand(f).degree(); }

std::optional<int> degree_in_var(const BooleanFunction& f, int i) {
  return mobius_expand(f).degree_in_var(i);
}

std::uint64_t sensitive_input_count(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.arity())
    throw InputError("coordinate out of range: " + std::to_string(i));
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (f.evaluate(x) != f.evaluate(x ^ bit)) ++count;
  return count;
}

Rational influence(const BooleanFunction& f, int i) {
  Rational q(static_cast<unsigned long>(sensitive_input_count(f, i)), 1);
  return q / pow2(f.arity());
}

Rational total_influence(const BooleanFunction& f) {
  Rational total = 0;
  for (int i = 1; i <= f.arity(); ++i) total += influence(f, i);
  return total;
}

int sensitivity_at(const BooleanFunction& f, std::uint64_t x) {
  const bool fx = f.evaluate(x);
  int s = 0;
  for (int i = 0; i < f.arity(); ++i)
    if (f.evaluate(x ^ (std::uint64_t{1} << i)) != fx) ++s;
  return s;
}

int sensitivity(const BooleanFunction& f) {
  int s = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x)
    s = std::max(s, sensitivity_at(f, x));
  return s;
}

int block_sensitivity_at(const BooleanFunction& f, std::uint64_t x) {
  check_measure_arity(f);
  const std::size_t n_masks = f.size();
  std::vector<char> sens(n_masks), has(n_masks);
  std::vector<std::int8_t> best(n_masks);
  const auto minimal = minimal_sensitive_blocks(f, x, sens, has);
  return max_set_packing_value(f.arity(), minimal, best);
}

BsResult block_sensitivity(const BooleanFunction& f) {
  check_measure_arity(f);
  const std::size_t n_masks = f.size();
  std::vector<char> sens(n_masks), has(n_masks);
  std::vector<std::int8_t> best(n_masks);

  int value = 0;
  std::uint64_t arg = 0;
  std::vector<std::uint32_t> arg_blocks;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto minimal = minimal_sensitive_blocks(f, x, sens, has);
    const int v = max_set_packing_value(f.arity(), minimal, best);
    if (v > value) {
      value = v;
      arg = x;
      arg_blocks = minimal;
    }
  }
  BsResult result;
  result.value = value;
  result.witness.base_input = arg;
  if (value > 0)
    result.witness.blocks = max_set_packing(f.arity(), arg_blocks).chosen;
  return result;
}

Rational w_measure(const BooleanFunction& f) {
  const auto coeffs = mobius_expand(f);
  Rational w = 0;
  for (int i = 1; i <= f.arity(); ++i)
    if (auto d = coeffs.degree_in_var(i)) w += pow2(-*d);
  return w;
}

std::optional<int> s_index(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.arity())
    throw InputError("coordinate out of range: " + std::to_string(i));
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  std::vector<int> s_at(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) s_at[x] = sensitivity_at(f, x);
  std::optional<int> v;
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (f.evaluate(x) != f.evaluate(x ^ bit))
      v = std::max(v.value_or(0), s_at[x] + s_at[x ^ bit]);
  return v;
}

Rational s_measure(const BooleanFunction& f) {
  Rational s = 0;
  for (int i = 1; i <= f.arity(); ++i)
    if (auto v = s_index(f, i)) s += pow2(-*v);
  return s;
}

TopMonomialPacking max_disjoint_top_monomials(const MultilinearCoeffs& c) {
  TopMonomialPacking result;
  const int d = c.degree();
  if (d == 0) return result;
  std::vector<std::uint32_t> tops;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << c.arity()); ++s)
    if (std::popcount(s) == d && c.coeff(s) != 0) tops.push_back(s);
  auto packing = max_set_packing(c.arity(), tops);
  result.count = packing.count;
  result.monomials = std::move(packing.chosen);
  for (auto m : result.monomials) result.union_mask |= m;
  return result;
}

TopMonomialPacking max_disjoint_top_monomials(const BooleanFunction& f) {
  return max_disjoint_top_monomials(mobius_expand(f));
}

std::vector<std::uint32_t> extend_to_maximal(
    const MultilinearCoeffs& c, std::vector<std::uint32_t> collection) {
  const int d = c.degree();
  std::uint32_t used = 0;
  for (auto m : collection) used |= m;
  if (d == 0) return collection;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << c.arity()); ++s)
    if (std::popcount(s) == d && c.coeff(s) != 0 && !(s & used)) {
      collection.push_back(s);
      used |= s;
    }
  return collection;
}

MeasureReport analyze(const BooleanFunction& f) {
  check_measure_arity(f);
  MeasureReport r;
  r.arity = f.arity();
  const auto coeffs = mobius_expand(f);
  r.degree = coeffs.degree();
  for (int i = 1; i <= f.arity(); ++i) {
    if (auto d = coeffs.degree_in_var(i)) {
      r.deg_i[i] = *d;
      r.relevant.push_back(i);
      r.influence_i[i] = influence(f, i);
      r.w_value += pow2(-*d);
      if (auto s = s_index(f, i)) {
        r.s_i[i] = *s;
        r.s_value += pow2(-*s);
      }
    }
  }
  r.total_influence = total_influence(f);
  r.sensitivity = sensitivity(f);
  auto bs = block_sensitivity(f);
  r.block_sensitivity = bs.value;
  r.bs_witness = std::move(bs.witness);
  return r;
}

}  // namespace bfc
