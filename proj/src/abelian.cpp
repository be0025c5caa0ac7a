#include "rspin/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace rspin::abelian {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev, "Bareiss step");
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::append_row(std::span<const Int> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InvalidInput("appended row has wrong width");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  const std::size_t k = std::min(S.rows(), S.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

struct Position {
  std::size_t row, col;
};

// Nonzero entry of least absolute value in the block starting at (t, t);
// the earliest one in row-major order wins ties.
std::optional<Position> smallest_entry(const IntMatrix& m, std::size_t t) {
  std::optional<Position> best;
  Int best_abs;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Int v = abs(m(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = std::move(v);
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& S = f.S;
  const std::size_t diag = std::min(S.rows(), S.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      auto pivot = smallest_entry(S, t);
      if (!pivot) return f;  // the remaining block is zero
      S.swap_rows(t, pivot->row);
      f.U.swap_rows(t, pivot->row);
      S.swap_cols(t, pivot->col);
      f.V.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < S.rows(); ++i) {
        if (S(i, t) == 0) continue;
        Int q = floor_div(S(i, t), S(t, t));
        S.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < S.cols(); ++j) {
        if (S(t, j) == 0) continue;
        Int q = floor_div(S(t, j), S(t, t));
        S.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Enforce d_t | every remaining entry by folding an offending row in.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < S.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < S.cols(); ++j)
          if (!divides(S(t, t), S(i, j))) {
            offending = i;
            break;
          }
      if (!offending) break;
      S.add_row_multiple(t, *offending, 1);
      f.U.add_row_multiple(t, *offending, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Hermite normal form and lattices

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t p = 0;
  for (std::size_t j = 0; j < h.cols() && p < h.rows(); ++j) {
    bool has_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = p; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        if (!best || abs(h(i, j)) < abs(h(*best, j))) best = i;
      }
      if (!best) break;
      has_pivot = true;
      h.swap_rows(p, *best);
      bool done = true;
      for (std::size_t i = p + 1; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        h.add_row_multiple(i, p, -floor_div(h(i, j), h(p, j)));
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (!has_pivot) continue;
    if (h(p, j) < 0) h.negate_row(p);
    for (std::size_t i = 0; i < p; ++i)
      h.add_row_multiple(i, p, -floor_div(h(i, j), h(p, j)));
    ++p;
  }
  IntMatrix out(p, h.cols());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

bool lattice_contains(const IntMatrix& hnf, std::span<const Int> v) {
  if (v.size() != hnf.cols()) throw InvalidInput("vector has wrong dimension");
  std::vector<Int> w(v.begin(), v.end());
  std::size_t col = 0;
  for (std::size_t k = 0; k < hnf.rows(); ++k) {
    std::size_t pivot = col;
    while (pivot < hnf.cols() && hnf(k, pivot) == 0) ++pivot;
    if (pivot == hnf.cols()) break;
    for (; col < pivot; ++col)
      if (w[col] != 0) return false;
    if (!divides(hnf(k, pivot), w[pivot])) return false;
    Int q = exact_div(w[pivot], hnf(k, pivot), "lattice reduction");
    for (std::size_t j = pivot; j < w.size(); ++j) w[j] -= q * hnf(k, j);
    col = pivot + 1;
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

IntMatrix left_kernel(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  const std::size_t r = f.rank();
  IntMatrix basis(a.rows() - r, a.rows());
  for (std::size_t i = r; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) basis(i - r, j) = f.U(i, j);
  return hermite_normal_form(basis);
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), invariant_factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i) {
    if (invariant_factors_[i] < 2)
      throw InvalidInput("invariant factors must be at least 2");
    if (i > 0 && !divides(invariant_factors_[i - 1], invariant_factors_[i]))
      throw InvalidInput("invariant factors must form a divisibility chain");
  }
}

FgAbGroup FgAbGroup::cyclic(const Int& order) {
  return from_cyclic_orders(0, {order});
}

FgAbGroup FgAbGroup::from_cyclic_orders(std::size_t free_rank,
                                        const std::vector<Int>& orders) {
  IntMatrix relations(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0) throw InvalidInput("cyclic orders must be nonnegative");
    relations(i, i) = orders[i];
  }
  FgAbGroup g = group_from_presentation(orders.size(), relations);
  g.free_rank_ += free_rank;
  return g;
}

Int FgAbGroup::torsion_order() const {
  Int n = 1;
  for (const auto& d : invariant_factors_) n *= d;
  return n;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts(free_rank_, "Z");
  for (const auto& d : invariant_factors_) parts.push_back("Z/" + d.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊕ ";
    out += parts[i];
  }
  return out;
}

FgAbGroup group_from_presentation(std::size_t n_generators,
                                  const IntMatrix& relations) {
  if (relations.cols() != n_generators && relations.rows() != 0)
    throw InvalidInput("relation matrix must have one column per generator");
  IntMatrix rel = relations.rows() ? relations : IntMatrix(0, n_generators);
  SmithForm f = smith_normal_form(rel);
  std::vector<Int> factors;
  std::size_t rank = 0;
  for (const auto& d : f.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) factors.push_back(d);
  }
  return FgAbGroup(n_generators - rank, std::move(factors));
}

// ---------------------------------------------------------------------------
// Maps into Z + Z/N

HomZN::HomZN(Int modulus, std::vector<MixedElement> images)
    : modulus_(std::move(modulus)), images_(std::move(images)) {
  if (modulus_ < 1) throw InvalidInput("modulus must be at least 1");
  for (auto& im : images_) im.torsion = mod(im.torsion, modulus_);
}

MixedElement HomZN::apply(std::span<const Int> x) const {
  if (x.size() != images_.size()) throw InvalidInput("vector has wrong dimension");
  MixedElement out{0, 0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.free += x[i] * images_[i].free;
    out.torsion += x[i] * images_[i].torsion;
  }
  out.torsion = mod(out.torsion, modulus_);
  return out;
}

IntMatrix kernel_lattice(const HomZN& map) {
  const std::size_t k = map.source_rank();
  // The extra row (0, N) absorbs multiples of the modulus; its coefficient
  // is projected away afterwards.
  IntMatrix a(k + 1, 2);
  for (std::size_t i = 0; i < k; ++i) {
    a(i, 0) = map.images()[i].free;
    a(i, 1) = map.images()[i].torsion;
  }
  a(k, 1) = map.modulus();
  IntMatrix full = left_kernel(a);
  IntMatrix projected(full.rows(), k);
  for (std::size_t i = 0; i < full.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) projected(i, j) = full(i, j);
  return hermite_normal_form(projected);
}

bool SubgroupInfo::contains(const MixedElement& x) const {
  const Int v[2] = {x.free, mod(x.torsion, modulus)};
  return lattice_contains(membership_basis, v);
}

SubgroupInfo subgroup_info(const Int& modulus,
                           const std::vector<MixedElement>& generators) {
  HomZN map(modulus, generators);
  IntMatrix lattice(0, 2);
  bool has_free = false;
  for (const auto& g : map.images()) {
    const Int row[2] = {g.free, g.torsion};
    lattice.append_row(row);
    if (g.free != 0) has_free = true;
  }
  const Int last[2] = {0, modulus};
  lattice.append_row(last);

  SubgroupInfo info;
  info.modulus = modulus;
  info.membership_basis = hermite_normal_form(lattice);
  info.structure = group_from_presentation(generators.size(), kernel_lattice(map));
  if (has_free) info.index = info.membership_basis(0, 0) * info.membership_basis(1, 1);
  return info;
}

Int element_order(const Int& modulus, const Int& t) {
  if (modulus < 1) throw InvalidInput("modulus must be at least 1");
  return modulus / gcd(modulus, mod(t, modulus));
}

FgAbGroup pontrjagin_dual(const FgAbGroup& g) {
  if (!g.is_finite())
    throw InvalidInput("Pontrjagin duality is only taken for finite groups here");
  return g;
}

}  // namespace rspin::abelian
