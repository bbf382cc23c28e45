#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/scalar.hpp"

namespace blowup {

enum class VarBlock : uint8_t { W, X, Y, T };

struct VarInfo {
  std::string name;
  VarBlock block;
  int bideg_w;  // contribution to the w-degree
  int bideg_x;  // contribution to the x/y-degree
};

/// Variable layout shared by all polynomials of one computation. Variables are
/// stored w-block first, then the x-block (column-major x11, x21, x31, x12, ...),
/// then y1..yL, then the elimination variable t last when present.
class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

class RingContext {
 public:
  static RingPtr w_ring(FieldContext field);
  /// Rees ambient ring k[w1..w3, x_{ij}, y_l(, t)] with i in 1..3, j in 1..ncols.
  static RingPtr rees_ring(FieldContext field, int ncols, int nys, bool with_t);
  /// Ring k[w1..w3, x_{1,1}..x_{1,m}(, t)] for a plain generator basis.
  static RingPtr basis_ring(FieldContext field, int m, bool with_t);
  /// Ring of nvars generic indeterminates named z1..zn (comparison targets).
  static RingPtr generic_ring(FieldContext field, int nvars);
  /// Same ring with t appended / removed.
  static RingPtr with_elim_var(const RingPtr& r);
  static RingPtr without_elim_var(const RingPtr& r);
  /// Keep the first nkeep variables.
  static RingPtr truncate(const RingPtr& r, int nkeep);
  /// Arbitrary variable list (quotients by linear forms drop one variable).
  static RingPtr custom(FieldContext field, std::vector<VarInfo> vars);

  const FieldContext& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const VarInfo& var(int i) const { return vars_[i]; }
  const std::vector<VarInfo>& vars() const { return vars_; }
  int index_of(const std::string& name) const;  // -1 if absent
  int t_index() const { return t_index_; }      // -1 if no elimination variable

  bool same_layout(const RingContext& o) const;

  static constexpr int kMaxVars = 32;

 private:
  RingContext(FieldContext f, std::vector<VarInfo> vars);

  FieldContext field_;
  std::vector<VarInfo> vars_;
  std::map<std::string, int> index_;
  int t_index_ = -1;
};

/// Exponent vector over a ring of at most kMaxVars variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : n_(static_cast<uint8_t>(nvars)) {}

  static Monomial variable(int nvars, int i, int exp = 1);

  int nvars() const { return n_; }
  int exp(int i) const { return e_[i]; }
  void set_exp(int i, int v);
  int degree() const { return deg_; }
  int degree(int lo, int hi) const;  // degree within the variable range [lo, hi)

  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // *this / o, requires o | *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const;
  size_t hash() const;

  /// Deterministic storage/printing order: graded reverse lexicographic over
  /// the whole variable list. Returns <0, 0, >0 like memcmp (positive: a > b).
  static int canonical_cmp(const Monomial& a, const Monomial& b);

 private:
  std::array<uint8_t, RingContext::kMaxVars> e_{};
  uint8_t n_ = 0;
  uint16_t deg_ = 0;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Total multiplicative well-order on monomials: plain lex, plain grevlex, or a
/// block order given by contiguous variable ranges each with an inner order.
class MonomialOrder {
 public:
  enum class Inner : uint8_t { Lex, Grevlex };
  struct Block {
    int lo, hi;
    Inner inner;
  };

  static MonomialOrder lex(int nvars);
  static MonomialOrder grevlex(int nvars);
  /// Block order that eliminates the contiguous range [lo, hi): that block is
  /// compared first (lex inside), the remaining variables by grevlex.
  static MonomialOrder elimination(int nvars, int lo, int hi);

  /// +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;

  const std::vector<Block>& blocks() const { return blocks_; }
  std::string key() const;

 private:
  std::vector<Block> blocks_;
};

}  // namespace blowup
