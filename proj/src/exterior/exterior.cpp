#include "dform/exterior.hpp"

#include <algorithm>

#include "dform/error.hpp"

namespace dform {

// -------------------------------------------------------------- IndexTuple

IndexTuple::IndexTuple(std::initializer_list<std::size_t> indices)
    : IndexTuple(std::vector<std::size_t>(indices)) {}

IndexTuple::IndexTuple(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i - 1] >= indices_[i]) {
      throw Error("index tuple must be strictly increasing");
    }
  }
}

bool IndexTuple::contains(std::size_t axis) const {
  return std::binary_search(indices_.begin(), indices_.end(), axis);
}

std::optional<std::size_t> IndexTuple::position(std::size_t axis) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), axis);
  if (it == indices_.end() || *it != axis) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

IndexTuple IndexTuple::without(std::size_t axis) const {
  std::vector<std::size_t> out;
  out.reserve(indices_.size());
  for (auto i : indices_) {
    if (i != axis) out.push_back(i);
  }
  return IndexTuple(std::move(out));
}

std::optional<std::pair<int, IndexTuple>> merge_sorted(const IndexTuple& a,
                                                       const IndexTuple& b) {
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  // Each time an element of b jumps ahead of the remaining elements of a we
  // pick up one transposition per skipped element.
  std::size_t inversions = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += a.size() - i;
      out.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  return std::pair{inversions % 2 == 0 ? 1 : -1, IndexTuple(std::move(out))};
}

std::vector<IndexTuple> basis_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.emplace_back(current);
    // advance to the next combination
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t i = pos; i < k; ++i) current[i] = current[i - 1] + 1;
  }
  return out;
}

// ------------------------------------------------------------------ Graded

namespace {

template <class Map>
void accumulate(Map& map, const IndexTuple& key, const RationalFunction& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = map.try_emplace(key, value);
  if (!inserted) {
    it->second = it->second + value;
    if (it->second.is_zero()) map.erase(it);
  }
}

}  // namespace

template <class Tag>
Graded<Tag>::Graded(std::size_t dim, std::size_t degree, CoeffMap coeffs)
    : dim_(dim), degree_(degree) {
  for (auto& [index, c] : coeffs) {
    if (index.size() != degree_) throw DegreeMismatch("basis element has wrong degree");
    if (!index.empty() && index.indices().back() >= dim_) {
      throw Error("basis index out of range");
    }
    check_same_dim(dim_, c.dim());
    if (!c.is_zero()) coeffs_.emplace(index, std::move(c));
  }
}

template <class Tag>
Graded<Tag> Graded<Tag>::scalar(const RationalFunction& f) {
  Graded g(f.dim(), 0);
  if (!f.is_zero()) g.coeffs_.emplace(IndexTuple{}, f);
  return g;
}

template <class Tag>
Graded<Tag> Graded<Tag>::basis(std::size_t dim, const IndexTuple& index) {
  CoeffMap m;
  m.emplace(index, RationalFunction::constant(dim, 1));
  return Graded(dim, index.size(), std::move(m));
}

template <class Tag>
Graded<Tag> Graded<Tag>::coordinate(std::size_t dim, std::size_t axis) {
  return basis(dim, IndexTuple{axis});
}

template <class Tag>
Graded<Tag> Graded<Tag>::from_components(
    std::span<const RationalFunction> components) {
  const std::size_t n = components.size();
  CoeffMap m;
  for (std::size_t i = 0; i < n; ++i) m.emplace(IndexTuple{i}, components[i]);
  return Graded(n, 1, std::move(m));
}

template <class Tag>
bool Graded<Tag>::is_polynomial() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second.is_polynomial(); });
}

template <class Tag>
RationalFunction Graded<Tag>::coefficient(const IndexTuple& index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? RationalFunction(dim_) : it->second;
}

template <class Tag>
Graded<Tag> Graded<Tag>::operator-() const {
  Graded out(dim_, degree_);
  for (const auto& [index, c] : coeffs_) out.coeffs_.emplace(index, -c);
  return out;
}

template <class Tag>
Graded<Tag> Graded<Tag>::operator+(const Graded& o) const {
  check_same_dim(dim_, o.dim_);
  if (degree_ != o.degree_) {
    throw DegreeMismatch("cannot add values of degree " + std::to_string(degree_) +
                         " and " + std::to_string(o.degree_));
  }
  Graded out(*this);
  for (const auto& [index, c] : o.coeffs_) accumulate(out.coeffs_, index, c);
  return out;
}

template <class Tag>
Graded<Tag> Graded<Tag>::operator-(const Graded& o) const {
  return *this + (-o);
}

template <class Tag>
Graded<Tag> Graded<Tag>::operator*(const RationalFunction& c) const {
  check_same_dim(dim_, c.dim());
  Graded out(dim_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [index, coeff] : coeffs_) out.coeffs_.emplace(index, coeff * c);
  return out;
}

template <class Tag>
Graded<Tag> Graded<Tag>::eval(std::span<const Rational> point) const {
  check_same_dim(dim_, point.size());
  Graded out(dim_, degree_);
  for (const auto& [index, c] : coeffs_) {
    Rational v = c.eval(point);
    if (v != 0) out.coeffs_.emplace(index, RationalFunction::constant(dim_, v));
  }
  return out;
}

template <class Tag>
bool Graded<Tag>::has_pole_at(std::span<const Rational> point) const {
  return std::any_of(coeffs_.begin(), coeffs_.end(),
                     [&](const auto& kv) { return kv.second.has_pole_at(point); });
}

template <class Tag>
bool operator==(const Graded<Tag>& a, const Graded<Tag>& b) {
  if (a.dim_ != b.dim_ || a.degree_ != b.degree_) return false;
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  auto it = b.coeffs_.begin();
  for (const auto& [index, c] : a.coeffs_) {
    if (index != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

template <class Tag>
Graded<Tag> wedge(const Graded<Tag>& a, const Graded<Tag>& b) {
  check_same_dim(a.dim(), b.dim());
  typename Graded<Tag>::CoeffMap out;
  for (const auto& [ia, ca] : a.coeffs()) {
    for (const auto& [ib, cb] : b.coeffs()) {
      auto merged = merge_sorted(ia, ib);
      if (!merged) continue;
      const auto& [sign, index] = *merged;
      RationalFunction prod = ca * cb;
      accumulate(out, index, sign > 0 ? prod : -prod);
    }
  }
  return Graded<Tag>(a.dim(), a.degree() + b.degree(), std::move(out));
}

template class Graded<FormTag>;
template class Graded<MultiVectorTag>;
template bool operator==(const Graded<FormTag>&, const Graded<FormTag>&);
template bool operator==(const Graded<MultiVectorTag>&, const Graded<MultiVectorTag>&);
template DifferentialForm wedge(const DifferentialForm&, const DifferentialForm&);
template MultiVector wedge(const MultiVector&, const MultiVector&);

// ------------------------------------------------------ calculus on forms

DifferentialForm wedge_all(std::span<const DifferentialForm> factors) {
  if (factors.empty()) throw DegreeMismatch("wedge of an empty factor list");
  DifferentialForm out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = wedge(out, factors[i]);
  return out;
}

DifferentialForm exterior_d(const DifferentialForm& w) {
  const std::size_t n = w.dim();
  DifferentialForm::CoeffMap out;
  for (const auto& [index, f] : w.coeffs()) {
    for (std::size_t axis = 0; axis < n; ++axis) {
      auto pos = std::lower_bound(index.begin(), index.end(), axis);
      if (pos != index.end() && *pos == axis) continue;
      RationalFunction g = partial(f, axis);
      if (g.is_zero()) continue;
      // moving dx_axis past the smaller indices
      const auto before = static_cast<std::size_t>(pos - index.begin());
      std::vector<std::size_t> merged(index.begin(), index.end());
      merged.insert(merged.begin() + static_cast<std::ptrdiff_t>(before), axis);
      accumulate(out, IndexTuple(std::move(merged)), before % 2 == 0 ? g : -g);
    }
  }
  return DifferentialForm(n, w.degree() + 1, std::move(out));
}

DifferentialForm interior(const MultiVector& v, const DifferentialForm& w) {
  check_same_dim(v.dim(), w.dim());
  if (v.degree() > w.degree()) {
    throw DegreeMismatch("interior product: multivector degree exceeds form degree");
  }
  DifferentialForm::CoeffMap out;
  for (const auto& [vi, vc] : v.coeffs()) {
    for (const auto& [wi, wc] : w.coeffs()) {
      IndexTuple rest = wi;
      int sign = 1;
      bool vanishes = false;
      for (std::size_t axis : vi) {
        auto pos = rest.position(axis);
        if (!pos) {
          vanishes = true;
          break;
        }
        if (*pos % 2 == 1) sign = -sign;
        rest = rest.without(axis);
      }
      if (vanishes) continue;
      RationalFunction prod = vc * wc;
      accumulate(out, rest, sign > 0 ? prod : -prod);
    }
  }
  return DifferentialForm(w.dim(), w.degree() - v.degree(), std::move(out));
}

DifferentialForm volume_form(std::size_t dim) {
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  return DifferentialForm::basis(dim, IndexTuple(std::move(all)));
}

}  // namespace dform
