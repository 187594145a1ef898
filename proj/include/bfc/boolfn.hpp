#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfc/rational.hpp"

namespace bfc {

/// Hard cap on arity: whole-table operations on 2^20 bits are the practical
/// ceiling for exact computation.
inline constexpr int kMaxArity = 20;

/// A Boolean function {0,1}^n -> {0,1} stored as a packed truth table.
/// Input x = (x_1..x_n) maps to index sum x_i * 2^(i-1), so the input mask
/// (bit i-1 holding x_i) *is* the table index. Arity 0 denotes a constant.
/// Immutable after construction.
class BooleanFunction {
 public:
  static BooleanFunction from_bits(int arity, const std::vector<bool>& bits);
  /// Low 2^arity bits of `table` (arity <= 6).
  static BooleanFunction from_table_value(int arity, std::uint64_t table);
  static BooleanFunction constant(int arity, bool value);

  /// Parses "n:BITSTRING" (index order, length 2^n) or "n:0xHEX"
  /// (most-significant nibble first). Round-trips with to_text / to_hex_text.
  static BooleanFunction parse(const std::string& text);
  std::string to_text() const;
  std::string to_hex_text() const;

  int arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }
  bool evaluate(std::uint64_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1;
  }
  bool is_constant() const;
  std::uint64_t ones_count() const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }

 private:
  BooleanFunction(int arity, std::vector<std::uint64_t> words)
      : arity_(arity), words_(std::move(words)) {}

  int arity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A partial assignment: coordinates in `support` are fixed to the matching
/// bits of `values`.
struct Assignment {
  std::uint32_t support = 0;
  std::uint32_t values = 0;

  static Assignment fix(int coord, bool value);
  Assignment& set(int coord, bool value);
};

/// x with every coordinate of `block` flipped. Involution. Throws InputError
/// if block reaches outside [1..arity].
std::uint64_t flip_block(int arity, std::uint64_t x, std::uint64_t block);

/// The restriction obtained by fixing the assignment's coordinates.
/// Surviving coordinates are renumbered densely, preserving order.
BooleanFunction restrict_function(const BooleanFunction& f,
                                  const Assignment& a);

/// result(x^(1),..,x^(b)) = outer(inner(x^(1)),..,inner(x^(b))) on
/// arity(outer) * arity(inner) variables, block j owning coordinates
/// ((j-1)m+1 .. jm).
BooleanFunction compose_blockwise(const BooleanFunction& outer,
                                  const BooleanFunction& inner);

/// Complete binary decision tree of the given depth querying a distinct
/// coordinate at each vertex (heap order, root = x_1; the last queried bit is
/// the output). Degree = depth, all 2^depth - 1 variables relevant.
BooleanFunction decision_tree_complete(int depth);

/// Exact integer coefficients of the unique multilinear polynomial agreeing
/// with f on {0,1}^n, indexed by subset mask.
class MultilinearCoeffs {
 public:
  explicit MultilinearCoeffs(int arity, std::vector<std::int64_t> coeffs)
      : arity_(arity), coeffs_(std::move(coeffs)) {}

  int arity() const { return arity_; }
  std::int64_t coeff(std::uint32_t subset) const { return coeffs_[subset]; }
  /// Polynomial value at a 0/1 point given as a mask.
  std::int64_t evaluate(std::uint64_t x) const;
  int degree() const;
  /// Largest |S| with i in S and a_S != 0; nullopt when x_i does not appear.
  std::optional<int> degree_in_var(int i) const;
  std::uint32_t relevant_mask() const;

 private:
  int arity_;
  std::vector<std::int64_t> coeffs_;
};

MultilinearCoeffs mobius_expand(const BooleanFunction& f);

/// Exact Walsh coefficients of the 0/1-valued f over the +-1 cube with the
/// convention 0 -> +1, 1 -> -1: fhat(S) = 2^-n sum_x f(x) (-1)^|S & x|.
/// Stored as integer numerators over the common denominator 2^n.
class FourierCoeffs {
 public:
  explicit FourierCoeffs(int arity, std::vector<std::int64_t> numerators)
      : arity_(arity), num_(std::move(numerators)) {}

  int arity() const { return arity_; }
  std::int64_t numerator(std::uint32_t subset) const { return num_[subset]; }
  Rational value(std::uint32_t subset) const;
  int degree() const;
  /// Parseval: sum_S fhat(S)^2 == E[f^2], exact.
  bool parseval_holds(const BooleanFunction& f) const;

 private:
  int arity_;
  std::vector<std::int64_t> num_;
};

FourierCoeffs fourier_expand(const BooleanFunction& f);

}  // namespace bfc
