#include "cquiver/ext.hpp"

#include <algorithm>
#include <stdexcept>

namespace cquiver {

namespace {

int mod(long long value, int p) {
  const long long r = value % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  // p is prime, so a^(p-2) is the inverse.
  long long result = 1;
  long long base = a;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FpMatrix::FpMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
}

void FpMatrix::set(int r, int c, long long value) {
  data_[static_cast<std::size_t>(r) * cols_ + c] = mod(value, p_);
}

void FpMatrix::add(int r, int c, long long value) {
  auto& slot = data_[static_cast<std::size_t>(r) * cols_ + c];
  slot = mod(static_cast<long long>(slot) + value, p_);
}

FpMatrix FpMatrix::identity(int size, int p) {
  FpMatrix m(size, size, p);
  for (int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

int rank_mod_p(FpMatrix m) {
  const int p = m.prime();
  int rank = 0;
  int pivot_row = 0;
  while (pivot_row < m.rows()) {
    int pr = -1;
    int pc = -1;
    for (int r = pivot_row; r < m.rows() && pr < 0; ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        if (m.at(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr < 0) break;
    if (pr != pivot_row) {
      for (int c = 0; c < m.cols(); ++c) {
        const int tmp = m.at(pr, c);
        m.set(pr, c, m.at(pivot_row, c));
        m.set(pivot_row, c, tmp);
      }
    }
    const int inv = inverse_mod(m.at(pivot_row, pc), p);
    for (int c = 0; c < m.cols(); ++c) {
      m.set(pivot_row, c, static_cast<long long>(m.at(pivot_row, c)) * inv);
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      const int factor = m.at(r, pc);
      if (factor == 0) continue;
      for (int c = 0; c < m.cols(); ++c) {
        m.add(r, c, -static_cast<long long>(factor) * m.at(pivot_row, c));
      }
    }
    ++rank;
    ++pivot_row;
  }
  return rank;
}

QuiverSpec QuiverSpec::linear(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("linear window needs lo <= hi");
  QuiverSpec q;
  q.shape_ = QuiverShape::LinearWindow;
  q.lo_ = lo;
  q.hi_ = hi;
  for (std::int64_t i = lo + 1; i <= hi; ++i) {
    const int head = static_cast<int>(i - lo);
    q.arrows_.push_back({"a" + std::to_string(i), head - 1, head});
  }
  return q;
}

QuiverSpec QuiverSpec::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic quiver needs m >= 1");
  QuiverSpec q;
  q.shape_ = QuiverShape::Cyclic;
  q.m_ = m;
  for (int i = 1; i <= m; ++i) {
    q.arrows_.push_back({"a" + std::to_string(i), (i - 1) % m, i % m});
  }
  return q;
}

int QuiverSpec::num_vertices() const {
  return shape_ == QuiverShape::Cyclic ? m_ : static_cast<int>(hi_ - lo_ + 1);
}

std::int64_t QuiverSpec::label(int pos) const {
  return shape_ == QuiverShape::Cyclic ? pos : lo_ + pos;
}

int QuiverSpec::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

RepSpec RepSpec::zero(const QuiverSpec& q, std::vector<int> dims, int prime) {
  RepSpec rep{q, prime, std::move(dims), {}};
  if (static_cast<int>(rep.dims.size()) != q.num_vertices()) {
    throw std::invalid_argument("malformed representation: dimension vector length");
  }
  for (const auto& a : q.arrows()) {
    rep.mats.emplace_back(rep.dims[a.head], rep.dims[a.tail], prime);
  }
  return rep;
}

void RepSpec::validate() const {
  if (!is_prime(prime)) throw std::invalid_argument("malformed representation: p not prime");
  if (static_cast<int>(dims.size()) != quiver.num_vertices() ||
      mats.size() != quiver.arrows().size()) {
    throw std::invalid_argument("malformed representation");
  }
  for (int d : dims) {
    if (d < 0) throw std::invalid_argument("malformed representation");
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto& a = quiver.arrows()[i];
    if (mats[i].rows() != dims[a.head] || mats[i].cols() != dims[a.tail] ||
        mats[i].prime() != prime) {
      throw std::invalid_argument("malformed representation");
    }
  }
}

RepSpec RepSpec::with_prime(int p) const {
  RepSpec out = RepSpec::zero(quiver, dims, p);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (int r = 0; r < mats[i].rows(); ++r) {
      for (int c = 0; c < mats[i].cols(); ++c) out.mats[i].set(r, c, mats[i].at(r, c));
    }
  }
  return out;
}

RepSpec direct_sum(const RepSpec& a, const RepSpec& b) {
  if (!(a.quiver == b.quiver) || a.prime != b.prime) {
    throw std::invalid_argument("quiver mismatch");
  }
  a.validate();
  b.validate();
  std::vector<int> dims(a.dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims[v] + b.dims[v];
  RepSpec out = RepSpec::zero(a.quiver, dims, a.prime);
  for (std::size_t i = 0; i < out.mats.size(); ++i) {
    const auto& ma = a.mats[i];
    const auto& mb = b.mats[i];
    for (int r = 0; r < ma.rows(); ++r) {
      for (int c = 0; c < ma.cols(); ++c) out.mats[i].set(r, c, ma.at(r, c));
    }
    for (int r = 0; r < mb.rows(); ++r) {
      for (int c = 0; c < mb.cols(); ++c) out.mats[i].set(ma.rows() + r, ma.cols() + c, mb.at(r, c));
    }
  }
  return out;
}

HomExt hom_ext_dims(const RepSpec& m, const RepSpec& n) {
  if (!(m.quiver == n.quiver) || m.prime != n.prime) {
    throw std::invalid_argument("quiver mismatch");
  }
  m.validate();
  n.validate();
  const auto& q = m.quiver;
  const int p = m.prime;

  // Column offsets for the unknowns f_v (dims(N_v) x dims(M_v), row-major).
  std::vector<int> col_offset(q.num_vertices() + 1, 0);
  for (int v = 0; v < q.num_vertices(); ++v) {
    col_offset[v + 1] = col_offset[v] + n.dims[v] * m.dims[v];
  }
  std::vector<int> row_offset(q.arrows().size() + 1, 0);
  for (std::size_t i = 0; i < q.arrows().size(); ++i) {
    const auto& a = q.arrows()[i];
    row_offset[i + 1] = row_offset[i] + n.dims[a.head] * m.dims[a.tail];
  }
  const int domain = col_offset.back();
  const int codomain = row_offset.back();
  if (domain == 0 || codomain == 0) return {domain, codomain};

  FpMatrix d(codomain, domain, p);
  for (std::size_t i = 0; i < q.arrows().size(); ++i) {
    const auto& a = q.arrows()[i];
    const int rows_h = n.dims[a.head];
    const int cols_t = m.dims[a.tail];
    const auto& na = n.mats[i];
    const auto& ma = m.mats[i];
    for (int r = 0; r < rows_h; ++r) {
      for (int c = 0; c < cols_t; ++c) {
        const int row = row_offset[i] + r * cols_t + c;
        // (N_a f_tail)[r][c] = sum_s N_a[r][s] f_tail[s][c]
        for (int s = 0; s < n.dims[a.tail]; ++s) {
          d.add(row, col_offset[a.tail] + s * m.dims[a.tail] + c, na.at(r, s));
        }
        // -(f_head M_a)[r][c] = -sum_s f_head[r][s] M_a[s][c]
        for (int s = 0; s < m.dims[a.head]; ++s) {
          d.add(row, col_offset[a.head] + r * m.dims[a.head] + s, -ma.at(s, c));
        }
      }
    }
  }
  const int rank = rank_mod_p(std::move(d));
  return {domain - rank, codomain - rank};
}

long long euler_form(const QuiverSpec& q, std::span<const int> dm, std::span<const int> dn) {
  if (static_cast<int>(dm.size()) != q.num_vertices() ||
      static_cast<int>(dn.size()) != q.num_vertices()) {
    throw std::invalid_argument("dimension vector does not match the quiver");
  }
  long long value = 0;
  for (std::size_t v = 0; v < dm.size(); ++v) value += static_cast<long long>(dm[v]) * dn[v];
  for (const auto& a : q.arrows()) value -= static_cast<long long>(dm[a.tail]) * dn[a.head];
  return value;
}

DiscreteInterval::DiscreteInterval(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
  if (lo == kPosInf || hi == kNegInf || lo > hi) {
    throw std::invalid_argument("discrete interval needs lo <= hi");
  }
}

DiscreteInterval DiscreteInterval::shifted(std::int64_t k) const {
  DiscreteInterval out = *this;
  if (!lo_infinite()) out.lo += k;
  if (!hi_infinite()) out.hi += k;
  return out;
}

std::string DiscreteInterval::str() const {
  std::string s = lo_infinite() ? "(-inf" : "[" + std::to_string(lo);
  s += ",";
  s += hi_infinite() ? "+inf)" : std::to_string(hi) + "]";
  return s;
}

RepSpec interval_to_rep(const QuiverSpec& window, const DiscreteInterval& iv, int prime) {
  if (window.shape() != QuiverShape::LinearWindow) {
    throw std::invalid_argument("interval_to_rep needs a linear window");
  }
  const int nv = window.num_vertices();
  std::vector<int> dims(nv, 0);
  for (int pos = 0; pos < nv; ++pos) {
    const std::int64_t x = window.label(pos);
    const bool above = iv.lo_infinite() || iv.lo <= x;
    const bool below = iv.hi_infinite() || x <= iv.hi;
    dims[pos] = above && below ? 1 : 0;
  }
  RepSpec rep = RepSpec::zero(window, dims, prime);
  for (std::size_t i = 0; i < window.arrows().size(); ++i) {
    const auto& a = window.arrows()[i];
    if (dims[a.tail] == 1 && dims[a.head] == 1) rep.mats[i].set(0, 0, 1);
  }
  return rep;
}

int interval_ext(const DiscreteInterval& i, const DiscreteInterval& j) {
  if (i.hi_infinite() || j.lo_infinite()) return 0;
  const bool starts_left = i.lo_infinite() || i.lo < j.lo;
  const bool reaches = j.lo <= i.hi + 1;
  const bool ends_left = j.hi_infinite() || i.hi < j.hi;
  return starts_left && reaches && ends_left ? 1 : 0;
}

}  // namespace cquiver
