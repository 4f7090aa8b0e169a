#pragma once

// Exterior algebra of R^8 with the standard metric and orientation e^{01234567}.
// Forms are sparse maps from sorted multi-indices to scalars; <e^I, e^J> = delta_IJ.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "spin7/errors.hpp"
#include "spin7/scalar.hpp"

namespace spin7 {

inline constexpr int kDim = 8;

template <class T>
using Vec8 = std::array<T, kDim>;

template <class T>
Vec8<T> zero_vec8() {
  Vec8<T> v;
  v.fill(T(0));
  return v;
}

template <class T>
Vec8<T> basis_vec8(int i) {
  Vec8<T> v = zero_vec8<T>();
  v.at(static_cast<std::size_t>(i)) = T(1);
  return v;
}

// A subset of {0,...,7}, stored as a bit mask and always read in increasing order.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  MultiIndex(std::initializer_list<int> axes);

  static MultiIndex from_mask(std::uint8_t mask);
  // Throws PreconditionError unless the axes are strictly increasing and in 0..7.
  static MultiIndex from_axes(std::span<const int> axes);
  static MultiIndex full() { return from_mask(0xFF); }

  std::uint8_t mask() const { return mask_; }
  int degree() const;
  bool contains(int axis) const { return (mask_ >> axis) & 1U; }
  std::vector<int> axes() const;
  MultiIndex complement() const { return from_mask(static_cast<std::uint8_t>(~mask_)); }

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  // Lexicographic on the sorted axis lists (only used between indices of equal length).
  friend bool operator<(MultiIndex a, MultiIndex b);

 private:
  std::uint8_t mask_ = 0;
};

// Sign of the shuffle that sorts the concatenation (a, b); 0 if a and b overlap.
int concat_sign(MultiIndex a, MultiIndex b);

// Sign of the permutation sorting `idx`, 0 on a repeated axis. Writes the sorted index.
int sort_sign(std::span<const int> idx, MultiIndex* sorted);

// All multi-indices of a given degree, in lexicographic order.
std::vector<MultiIndex> multi_indices(int degree);

template <class T>
class KForm {
 public:
  using Terms = std::map<MultiIndex, T>;

  explicit KForm(int degree = 0);

  static KForm monomial(MultiIndex idx, const T& c = T(1));
  static KForm scalar(const T& c);
  static KForm one_form(const Vec8<T>& x);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  T coeff(MultiIndex idx) const;
  // Adds c * e^idx (idx must have the form's degree).
  void add(MultiIndex idx, const T& c);
  // b(e_{i1}, ..., e_{ik}) for an arbitrary index tuple.
  T value(std::span<const int> idx) const;
  T value(std::initializer_list<int> idx) const { return value(std::span<const int>(idx.begin(), idx.size())); }

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const T& s);

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const T& s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, const T& s) { return a *= s; }
  KForm operator-() const { return (*this) * T(-1); }
  friend bool operator==(const KForm& a, const KForm& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

 private:
  void require_same_degree(const KForm& o) const;

  int degree_;
  Terms terms_;
};

template <class To, class From>
KForm<To> form_cast(const KForm<From>& b) {
  KForm<To> out(b.degree());
  for (const auto& [idx, c] : b.terms()) out.add(idx, scalar_cast<To>(c));
  return out;
}

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b);

// Interior product i(x)b. A degree-0 input yields the zero 0-form.
template <class T>
KForm<T> contract(const Vec8<T>& x, const KForm<T>& b);

template <class T>
KForm<T> contract_axis(int axis, const KForm<T>& b);

template <class T>
KForm<T> hodge(const KForm<T>& b);

// Hodge star inside the subspace spanned by `span`, oriented by increasing axes.
// Terms with axes outside `span` are rejected.
template <class T>
KForm<T> hodge_within(const KForm<T>& b, MultiIndex span);

template <class T>
T inner(const KForm<T>& a, const KForm<T>& b);

template <class T>
T norm2(const KForm<T>& a) {
  return inner(a, a);
}

template <class T>
double max_abs(const KForm<T>& a);

// Dense covariant n-tensor on R^8.
template <class T>
class CovariantTensor {
 public:
  explicit CovariantTensor(int degree);

  int degree() const { return degree_; }
  T& at(std::span<const int> idx) { return data_[offset(idx)]; }
  const T& at(std::span<const int> idx) const { return data_[offset(idx)]; }
  T& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
  const T& at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

 private:
  std::size_t offset(std::span<const int> idx) const;

  int degree_;
  std::vector<T> data_;
};

// alt(t)(X1..Xn) = (1/n!) sum_sigma sgn(sigma) t(X_sigma(1), ..., X_sigma(n)).
template <class T>
KForm<T> alternate(const CovariantTensor<T>& t);

}  // namespace spin7
