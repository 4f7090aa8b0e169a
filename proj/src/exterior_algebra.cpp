#include <algorithm>
#include <bit>
#include <numeric>

#include "spin7/exterior.hpp"

namespace spin7 {

MultiIndex::MultiIndex(std::initializer_list<int> axes) {
  *this = from_axes(std::span<const int>(axes.begin(), axes.size()));
}

MultiIndex MultiIndex::from_mask(std::uint8_t mask) {
  MultiIndex m;
  m.mask_ = mask;
  return m;
}

MultiIndex MultiIndex::from_axes(std::span<const int> axes) {
  std::uint8_t mask = 0;
  int prev = -1;
  for (int a : axes) {
    if (a < 0 || a >= kDim || a <= prev) throw PreconditionError("multi-index axes must be strictly increasing in 0..7");
    mask = static_cast<std::uint8_t>(mask | (1U << a));
    prev = a;
  }
  return from_mask(mask);
}

int MultiIndex::degree() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::axes() const {
  std::vector<int> out;
  for (int i = 0; i < kDim; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool operator<(MultiIndex a, MultiIndex b) {
  const unsigned diff = static_cast<unsigned>(a.mask_ ^ b.mask_);
  if (diff == 0) return false;
  const unsigned low = diff & (~diff + 1U);
  return (a.mask_ & low) != 0;
}

int concat_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (int j = 0; j < kDim; ++j) {
    if (!b.contains(j)) continue;
    const unsigned above = static_cast<unsigned>(a.mask()) >> (j + 1);
    inversions += std::popcount(above);
  }
  return (inversions % 2) ? -1 : 1;
}

int sort_sign(std::span<const int> idx, MultiIndex* sorted) {
  std::uint8_t mask = 0;
  int inversions = 0;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const int a = idx[p];
    if (a < 0 || a >= kDim) throw PreconditionError("axis out of range");
    if ((mask >> a) & 1U) return 0;
    inversions += std::popcount(static_cast<unsigned>(mask) >> (a + 1));
    mask = static_cast<std::uint8_t>(mask | (1U << a));
  }
  if (sorted) *sorted = MultiIndex::from_mask(mask);
  return (inversions % 2) ? -1 : 1;
}

std::vector<MultiIndex> multi_indices(int degree) {
  std::vector<MultiIndex> out;
  for (unsigned m = 0; m < 256; ++m)
    if (std::popcount(m) == degree) out.push_back(MultiIndex::from_mask(static_cast<std::uint8_t>(m)));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- KForm

template <class T>
KForm<T>::KForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > kDim) throw DegreeError("form degree must lie in 0..8");
}

template <class T>
KForm<T> KForm<T>::monomial(MultiIndex idx, const T& c) {
  KForm f(idx.degree());
  f.add(idx, c);
  return f;
}

template <class T>
KForm<T> KForm<T>::scalar(const T& c) {
  return monomial(MultiIndex{}, c);
}

template <class T>
KForm<T> KForm<T>::one_form(const Vec8<T>& x) {
  KForm f(1);
  for (int i = 0; i < kDim; ++i) f.add(MultiIndex::from_mask(static_cast<std::uint8_t>(1U << i)), x[i]);
  return f;
}

template <class T>
T KForm<T>::coeff(MultiIndex idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? T(0) : it->second;
}

template <class T>
void KForm<T>::add(MultiIndex idx, const T& c) {
  if (idx.degree() != degree_) throw DegreeError("term degree does not match form degree");
  if (spin7::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (spin7::is_zero(it->second)) terms_.erase(it);
  }
}

template <class T>
T KForm<T>::value(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_) throw DegreeError("evaluation arity does not match degree");
  MultiIndex sorted;
  const int s = sort_sign(idx, &sorted);
  if (s == 0) return T(0);
  T c = coeff(sorted);
  if (s < 0) c = -c;
  return c;
}

template <class T>
void KForm<T>::require_same_degree(const KForm& o) const {
  if (o.degree_ != degree_) throw DegreeError("cannot add forms of different degree");
}

template <class T>
KForm<T>& KForm<T>::operator+=(const KForm& o) {
  require_same_degree(o);
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

template <class T>
KForm<T>& KForm<T>::operator-=(const KForm& o) {
  require_same_degree(o);
  for (const auto& [idx, c] : o.terms_) add(idx, T(-c));
  return *this;
}

template <class T>
KForm<T>& KForm<T>::operator*=(const T& s) {
  if (spin7::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------- operations

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b) {
  if (a.degree() + b.degree() > kDim) throw DegreeError("wedge product degree exceeds 8");
  KForm<T> out(a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      const int s = concat_sign(ia, ib);
      if (s == 0) continue;
      T c = ca * cb;
      if (s < 0) c = -c;
      out.add(MultiIndex::from_mask(static_cast<std::uint8_t>(ia.mask() | ib.mask())), c);
    }
  return out;
}

template <class T>
KForm<T> contract_axis(int axis, const KForm<T>& b) {
  if (b.degree() == 0) return KForm<T>(0);
  KForm<T> out(b.degree() - 1);
  for (const auto& [idx, c] : b.terms()) {
    if (!idx.contains(axis)) continue;
    const int pos = std::popcount(static_cast<unsigned>(idx.mask()) & ((1U << axis) - 1U));
    const auto rest = MultiIndex::from_mask(static_cast<std::uint8_t>(idx.mask() & ~(1U << axis)));
    out.add(rest, (pos % 2) ? T(-c) : c);
  }
  return out;
}

template <class T>
KForm<T> contract(const Vec8<T>& x, const KForm<T>& b) {
  if (b.degree() == 0) return KForm<T>(0);
  KForm<T> out(b.degree() - 1);
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i])) continue;
    out += x[i] * contract_axis(i, b);
  }
  return out;
}

template <class T>
KForm<T> hodge_within(const KForm<T>& b, MultiIndex span) {
  KForm<T> out(span.degree() - b.degree());
  for (const auto& [idx, c] : b.terms()) {
    if ((idx.mask() & ~span.mask()) != 0) throw PreconditionError("form has components outside the star's subspace");
    const auto rest = MultiIndex::from_mask(static_cast<std::uint8_t>(span.mask() & ~idx.mask()));
    out.add(rest, concat_sign(idx, rest) < 0 ? T(-c) : c);
  }
  return out;
}

template <class T>
KForm<T> hodge(const KForm<T>& b) {
  return hodge_within(b, MultiIndex::full());
}

template <class T>
T inner(const KForm<T>& a, const KForm<T>& b) {
  if (a.degree() != b.degree()) throw DegreeError("inner product of forms of different degree");
  T s(0);
  for (const auto& [idx, c] : a.terms()) {
    auto it = b.terms().find(idx);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

template <class T>
double max_abs(const KForm<T>& a) {
  double m = 0.0;
  for (const auto& [idx, c] : a.terms()) m = std::max(m, std::fabs(to_double(c)));
  return m;
}

// ---------------------------------------------------------------- tensors

template <class T>
CovariantTensor<T>::CovariantTensor(int degree) : degree_(degree) {
  if (degree < 0 || degree > kDim) throw DegreeError("tensor degree must lie in 0..8");
  std::size_t n = 1;
  for (int i = 0; i < degree; ++i) n *= kDim;
  data_.assign(n, T(0));
}

template <class T>
std::size_t CovariantTensor<T>::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_) throw DegreeError("tensor index arity mismatch");
  std::size_t off = 0;
  for (int a : idx) {
    if (a < 0 || a >= kDim) throw PreconditionError("tensor index out of range");
    off = off * kDim + static_cast<std::size_t>(a);
  }
  return off;
}

template <class T>
KForm<T> alternate(const CovariantTensor<T>& t) {
  const int n = t.degree();
  KForm<T> out(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  T factorial(1);
  for (int i = 2; i <= n; ++i) factorial *= T(i);
  for (MultiIndex idx : multi_indices(n)) {
    const auto axes = idx.axes();
    std::iota(perm.begin(), perm.end(), 0);
    T sum(0);
    std::vector<int> args(static_cast<std::size_t>(n));
    do {
      for (int p = 0; p < n; ++p) args[p] = axes[perm[p]];
      const int s = sort_sign(args, nullptr);
      const T& v = t.at(args);
      if (s > 0) sum += v; else sum -= v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.add(idx, T(sum / factorial));
  }
  return out;
}

#define SPIN7_INSTANTIATE(T)                                              \
  template class KForm<T>;                                                \
  template class CovariantTensor<T>;                                      \
  template KForm<T> wedge(const KForm<T>&, const KForm<T>&);              \
  template KForm<T> contract(const Vec8<T>&, const KForm<T>&);            \
  template KForm<T> contract_axis(int, const KForm<T>&);                  \
  template KForm<T> hodge(const KForm<T>&);                               \
  template KForm<T> hodge_within(const KForm<T>&, MultiIndex);            \
  template T inner(const KForm<T>&, const KForm<T>&);                     \
  template double max_abs(const KForm<T>&);                               \
  template KForm<T> alternate(const CovariantTensor<T>&);

SPIN7_INSTANTIATE(double)
SPIN7_INSTANTIATE(Rational)

#undef SPIN7_INSTANTIATE

}  // namespace spin7
