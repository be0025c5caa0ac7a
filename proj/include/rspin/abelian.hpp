#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, integer
// kernels, and canonical forms of finitely generated abelian groups.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rspin/integer.hpp"

namespace rspin::abelian {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// All rows must have the same length; `cols` fixes the width when `rows`
  /// is empty.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Int> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::vector<Int> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<std::vector<Int>> to_rows() const;

  IntMatrix transpose() const;
  bool is_diagonal() const;
  /// Bareiss fraction-free elimination; square matrices only.
  Int determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t i);
  void append_row(std::span<const Int> values);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

std::string to_string(const IntMatrix& m);

/// U * A * V = S with U, V unimodular and S diagonal with d1 | d2 | ... .
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  std::vector<Int> diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`:
/// pivots positive and strictly moving right, entries above each pivot
/// reduced into [0, pivot), zero rows removed.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Whether `v` lies in the lattice whose basis is `hnf` (as returned by
/// hermite_normal_form).
bool lattice_contains(const IntMatrix& hnf, std::span<const Int> v);

/// Basis (in Hermite normal form) of { x : x * A = 0 }.
IntMatrix left_kernel(const IntMatrix& a);

/// Canonical form of a finitely generated abelian group:
/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Throws InvalidInput when the factors are not a valid divisor chain.
  FgAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup free_of_rank(std::size_t rank) { return FgAbGroup(rank, {}); }
  static FgAbGroup cyclic(const Int& order);
  /// Z^free_rank + Z/n1 + Z/n2 + ... for arbitrary orders, canonicalized.
  static FgAbGroup from_cyclic_orders(std::size_t free_rank,
                                      const std::vector<Int>& orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Int>& invariant_factors() const noexcept {
    return invariant_factors_;
  }
  bool is_trivial() const noexcept {
    return free_rank_ == 0 && invariant_factors_.empty();
  }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Order of the torsion subgroup.
  Int torsion_order() const;
  FgAbGroup torsion() const { return FgAbGroup(0, invariant_factors_); }

  /// "Z ⊕ Z/4", "Z/3", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> invariant_factors_;
};

/// Cokernel of the relation matrix (rows are relations among the generators).
FgAbGroup group_from_presentation(std::size_t n_generators,
                                  const IntMatrix& relations);

/// Element of Z + Z/N.
struct MixedElement {
  Int free;
  Int torsion;
};

/// Homomorphism Z^k -> Z + Z/N given by the images of the standard basis.
class HomZN {
 public:
  /// Throws InvalidInput when modulus < 1. Torsion parts are reduced.
  HomZN(Int modulus, std::vector<MixedElement> images);

  const Int& modulus() const noexcept { return modulus_; }
  const std::vector<MixedElement>& images() const noexcept { return images_; }
  std::size_t source_rank() const noexcept { return images_.size(); }

  MixedElement apply(std::span<const Int> x) const;

 private:
  Int modulus_;
  std::vector<MixedElement> images_;
};

/// Hermite-normal basis of the kernel of `map`.
IntMatrix kernel_lattice(const HomZN& map);

/// Subgroup of Z + Z/N generated by a list of elements.
struct SubgroupInfo {
  FgAbGroup structure;
  /// nullopt when the index is infinite.
  std::optional<Int> index;
  /// Hermite basis of the preimage lattice in Z^2 (contains (0, N)).
  IntMatrix membership_basis;
  Int modulus;

  bool contains(const MixedElement& x) const;
};

SubgroupInfo subgroup_info(const Int& modulus,
                           const std::vector<MixedElement>& generators);

/// Order of t in Z/N.
Int element_order(const Int& modulus, const Int& t);

/// Character group of a finite abelian group, which is (non-canonically)
/// isomorphic to the group itself. Throws InvalidInput for infinite groups.
FgAbGroup pontrjagin_dual(const FgAbGroup& g);

}  // namespace rspin::abelian
