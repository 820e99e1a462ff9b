#pragma once

// Hom and Ext^1 for finite-dimensional representations of quivers without
// relations.  Path algebras are hereditary, so both groups come out of a
// single linear map
//
//   D : (+)_v Hom(M_v, N_v) -> (+)_arrows Hom(M_tail, N_head),
//   D(f)_a = N_a f_tail - f_head M_a,
//
// with Hom = ker D and Ext^1 = coker D.  Everything is exact arithmetic over
// a small prime field.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace cquiver {

/// Dense matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int prime() const { return p_; }

  int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  /// Stores `value` reduced into [0, p).
  void set(int r, int c, long long value);
  void add(int r, int c, long long value);

  static FpMatrix identity(int size, int p);

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<int> data_;
};

/// Rank by Gaussian elimination mod p.  The pivot is the first nonzero entry
/// found scanning the remaining submatrix row by row.
int rank_mod_p(FpMatrix m);

bool is_prime(int p);

struct Arrow {
  std::string name;
  int tail = 0;  // vertex position
  int head = 0;
};

enum class QuiverShape { LinearWindow, Cyclic };

/// Either the linear window lo..hi with arrows i-1 -> i, or the cyclic
/// quiver on 0..m-1 with arrows a_i : (i-1 mod m) -> (i mod m), i = 1..m.
class QuiverSpec {
 public:
  static QuiverSpec linear(std::int64_t lo, std::int64_t hi);
  static QuiverSpec cyclic(int m);

  QuiverShape shape() const { return shape_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  int period() const { return m_; }

  int num_vertices() const;
  /// Lattice label of a vertex position (lo + pos for windows, pos for cyclic).
  std::int64_t label(int pos) const;
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// Position of the arrow with the given name, or -1.
  int arrow_index(const std::string& name) const;

  friend bool operator==(const QuiverSpec& a, const QuiverSpec& b) {
    return a.shape_ == b.shape_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.m_ == b.m_;
  }

 private:
  QuiverSpec() = default;

  QuiverShape shape_ = QuiverShape::LinearWindow;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  int m_ = 0;
  std::vector<Arrow> arrows_;
};

/// A representation: a dimension per vertex and a dims(head) x dims(tail)
/// matrix per arrow.
struct RepSpec {
  QuiverSpec quiver;
  int prime = 2;
  std::vector<int> dims;
  std::vector<FpMatrix> mats;

  /// Zero representation with the given dimension vector.
  static RepSpec zero(const QuiverSpec& q, std::vector<int> dims, int prime = 2);

  /// Throws std::invalid_argument("malformed representation") on shape errors.
  void validate() const;

  /// Same modules read over another prime; entries are reduced mod the new p.
  RepSpec with_prime(int p) const;
};

RepSpec direct_sum(const RepSpec& a, const RepSpec& b);

struct HomExt {
  int hom = 0;
  int ext = 0;
  friend bool operator==(const HomExt&, const HomExt&) = default;
};

/// Throws std::invalid_argument with "quiver mismatch" or
/// "malformed representation".
HomExt hom_ext_dims(const RepSpec& m, const RepSpec& n);

/// <dM, dN> = sum_v dM_v dN_v - sum_a dM_tail dN_head.
long long euler_form(const QuiverSpec& q, std::span<const int> dm, std::span<const int> dn);

/// Integer interval on the lattice; either end may be infinite.
struct DiscreteInterval {
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

  std::int64_t lo = 0;
  std::int64_t hi = 0;

  DiscreteInterval() = default;
  /// Throws std::invalid_argument unless lo <= hi.
  DiscreteInterval(std::int64_t lo, std::int64_t hi);

  static DiscreteInterval left_ray(std::int64_t d) { return {kNegInf, d}; }
  static DiscreteInterval right_ray(std::int64_t c) { return {c, kPosInf}; }

  bool lo_infinite() const { return lo == kNegInf; }
  bool hi_infinite() const { return hi == kPosInf; }
  bool finite() const { return !lo_infinite() && !hi_infinite(); }

  DiscreteInterval shifted(std::int64_t k) const;

  friend bool operator==(const DiscreteInterval&, const DiscreteInterval&) = default;

  /// "[lo,hi]" with "(-inf" / "+inf)" for rays.
  std::string str() const;
};

/// One-dimensional on window ∩ I with identity maps inside the support.
RepSpec interval_to_rep(const QuiverSpec& window, const DiscreteInterval& iv, int prime = 2);

/// dim Ext^1(T_I, T_J) for the linearly oriented lattice (arrows i-1 -> i).
/// Nonzero exactly when I starts strictly left of J, J starts no later than
/// one step past the end of I, and I ends strictly before J.  Right rays are
/// projective and left rays injective, so they give 0 in the first and
/// second slot respectively.
int interval_ext(const DiscreteInterval& i, const DiscreteInterval& j);

}  // namespace cquiver
