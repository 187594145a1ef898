#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bfc/boolfn.hpp"
#include "bfc/rational.hpp"

namespace bfc {

/// Whole-report measures (global block sensitivity included) are limited to
/// this arity; the per-input search is a subset DP.
inline constexpr int kMaxMeasureArity = 12;

/// Disjoint blocks, each sensitive for f at base_input.
struct BlockCollection {
  std::uint64_t base_input = 0;
  std::vector<std::uint32_t> blocks;

  /// Re-checks disjointness and per-block sensitivity by direct evaluation.
  bool validate(const BooleanFunction& f) const;
};

struct BsResult {
  int value = 0;
  BlockCollection witness;
};

/// A maximum pairwise-disjoint collection of full-degree monomials.
/// union_mask covers count * degree coordinates. A maximum collection is
/// automatically maximal: it meets every full-degree monomial.
struct TopMonomialPacking {
  int count = 0;
  std::uint32_t union_mask = 0;
  std::vector<std::uint32_t> monomials;
};

int degree(const BooleanFunction& f);
std::optional<int> degree_in_var(const BooleanFunction& f, int i);

Rational influence(const BooleanFunction& f, int i);
Rational total_influence(const BooleanFunction& f);
/// Number of inputs x with f(x) != f(x^i); influence = count / 2^n.
std::uint64_t sensitive_input_count(const BooleanFunction& f, int i);

int sensitivity_at(const BooleanFunction& f, std::uint64_t x);
int sensitivity(const BooleanFunction& f);

int block_sensitivity_at(const BooleanFunction& f, std::uint64_t x);
BsResult block_sensitivity(const BooleanFunction& f);

/// W(f) = sum over relevant i of 2^(-deg_i(f)).
Rational w_measure(const BooleanFunction& f);

/// s_i(f) = max over x sensitive in i of s_x(f) + s_{x^i}(f); nullopt when i
/// is irrelevant (the defining set is empty, so no value is invented).
std::optional<int> s_index(const BooleanFunction& f, int i);
/// S(f) = sum over relevant i of 2^(-s_i(f)).
Rational s_measure(const BooleanFunction& f);

TopMonomialPacking max_disjoint_top_monomials(const MultilinearCoeffs& c);
TopMonomialPacking max_disjoint_top_monomials(const BooleanFunction& f);
/// Greedily augments a disjoint collection of full-degree monomials until no
/// further full-degree monomial is disjoint from its union. A maximum
/// collection comes back unchanged.
std::vector<std::uint32_t> extend_to_maximal(
    const MultilinearCoeffs& c, std::vector<std::uint32_t> collection);

struct MeasureReport {
  int arity = 0;
  int degree = 0;
  std::map<int, int> deg_i;             // relevant coordinates only
  std::vector<int> relevant;            // ascending
  std::map<int, Rational> influence_i;  // relevant coordinates only
  Rational total_influence = 0;
  int sensitivity = 0;
  int block_sensitivity = 0;
  BlockCollection bs_witness;
  Rational w_value = 0;
  Rational s_value = 0;
  std::map<int, int> s_i;  // relevant coordinates only
};

/// Full report; throws CapabilityError above kMaxMeasureArity.
MeasureReport analyze(const BooleanFunction& f);

}  // namespace bfc
