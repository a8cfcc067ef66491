#include "declab/ordinal.hpp"

#include <algorithm>
#include <functional>

#include "declab/error.hpp"

namespace declab {

Ordinal::Ordinal(int n) : n(n) {
  if (n < -1) throw PreconditionError("ordinal [" + std::to_string(n) + "] is below [-1]");
}

OrdinalMap::OrdinalMap(int dom, int cod, std::vector<int> values)
    : dom_(dom), cod_(cod), values_(std::move(values)) {
  if (dom < -1 || cod < -1) throw PreconditionError("ordinal below [-1] in " + to_string());
  if (static_cast<int>(values_.size()) != dom + 1)
    throw PreconditionError("value count does not match domain in " + to_string());
  for (std::size_t r = 0; r < values_.size(); ++r) {
    if (values_[r] < 0 || values_[r] > cod) throw PreconditionError("value out of range in " + to_string());
    if (r > 0 && values_[r - 1] > values_[r]) throw PreconditionError("map is not monotone: " + to_string());
  }
}

OrdinalMap OrdinalMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) v[static_cast<std::size_t>(r)] = r;
  return OrdinalMap(n, n, std::move(v));
}

OrdinalMap OrdinalMap::empty(int cod) { return OrdinalMap(-1, cod, {}); }

OrdinalMap OrdinalMap::constant(int dom, int cod, int value) {
  return OrdinalMap(dom, cod, std::vector<int>(static_cast<std::size_t>(dom + 1), value));
}

bool OrdinalMap::is_identity() const {
  if (dom_ != cod_) return false;
  for (int r = 0; r <= dom_; ++r)
    if ((*this)(r) != r) return false;
  return true;
}

bool OrdinalMap::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool OrdinalMap::is_surjective() const {
  if (cod_ == -1) return true;
  if (values_.empty() || values_.front() != 0 || values_.back() != cod_) return false;
  for (std::size_t r = 1; r < values_.size(); ++r)
    if (values_[r] - values_[r - 1] > 1) return false;
  return true;
}

std::string OrdinalMap::to_string() const {
  std::string s = "(";
  for (std::size_t r = 0; r < values_.size(); ++r) {
    if (r) s += ',';
    s += std::to_string(values_[r]);
  }
  s += "):[" + std::to_string(dom_) + "]->[" + std::to_string(cod_) + "]";
  return s;
}

OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f) {
  if (f.cod() != g.dom())
    throw CompositionError("cannot compose " + g.to_string() + " after " + f.to_string());
  std::vector<int> v(f.values().size());
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = g(f.values()[r]);
  return OrdinalMap(f.dom(), g.cod(), std::move(v));
}

Ordinal ordinal_sum(Ordinal k, Ordinal l) { return Ordinal(k.n + 1 + l.n); }

OrdinalMap ordinal_sum(const OrdinalMap& first, const OrdinalMap& second) {
  std::vector<int> v = first.values();
  v.reserve(first.values().size() + second.values().size());
  const int shift = first.cod() + 1;
  for (int x : second.values()) v.push_back(x + shift);
  return OrdinalMap(first.dom() + 1 + second.dom(), first.cod() + 1 + second.cod(), std::move(v));
}

Split split_at(const OrdinalMap& beta, int i) {
  const int l = beta.dom();
  const int k = beta.cod();
  if (i < -1 || i > k)
    throw PreconditionError("split index " + std::to_string(i) + " outside [-1, " + std::to_string(k) + "]");
  int j = -1;
  for (int r = 0; r <= l; ++r)
    if (beta(r) <= i) j = r;
  std::vector<int> first(beta.values().begin(), beta.values().begin() + (j + 1));
  std::vector<int> second;
  second.reserve(static_cast<std::size_t>(l - j));
  for (int r = j + 1; r <= l; ++r) second.push_back(beta(r) - i - 1);
  return Split{j, OrdinalMap(j, i, std::move(first)), OrdinalMap(l - j - 1, k - i - 1, std::move(second))};
}

OrdinalMap coface(int n, int i) {
  if (n < 0 || i < 0 || i > n)
    throw PreconditionError("coface d^" + std::to_string(i) + " into [" + std::to_string(n) + "]");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) v.push_back(r < i ? r : r + 1);
  return OrdinalMap(n - 1, n, std::move(v));
}

OrdinalMap codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n)
    throw PreconditionError("codegeneracy s^" + std::to_string(i) + " onto [" + std::to_string(n) + "]");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n + 2));
  for (int r = 0; r <= n + 1; ++r) v.push_back(r <= i ? r : r - 1);
  return OrdinalMap(n + 1, n, std::move(v));
}

EzFactorization ez_factor(const OrdinalMap& beta) {
  if (beta.dom() == -1) return {beta, OrdinalMap::identity(-1)};
  std::vector<int> image;
  std::vector<int> epi;
  epi.reserve(beta.values().size());
  for (int x : beta.values()) {
    if (image.empty() || image.back() != x) image.push_back(x);
    epi.push_back(static_cast<int>(image.size()) - 1);
  }
  const int m = static_cast<int>(image.size()) - 1;
  return {OrdinalMap(m, beta.cod(), std::move(image)), OrdinalMap(beta.dom(), m, std::move(epi))};
}

std::pair<int, OrdinalMap> peel_coface(const OrdinalMap& mono) {
  if (!mono.is_injective() || mono.is_identity() || mono.dom() < 0)
    throw PreconditionError("peel_coface needs a non-identity injection, got " + mono.to_string());
  int i = 0;
  while (i <= mono.dom() && mono(i) == i) ++i;
  std::vector<int> rest(mono.values().size());
  for (std::size_t r = 0; r < rest.size(); ++r) rest[r] = mono.values()[r] < i ? mono.values()[r] : mono.values()[r] - 1;
  return {i, OrdinalMap(mono.dom(), mono.cod() - 1, std::move(rest))};
}

namespace {

void enumerate_into(int l, int k, const std::function<bool(const std::vector<int>&)>& keep,
                    std::vector<OrdinalMap>& out) {
  if (l == -1) {
    std::vector<int> none;
    if (keep(none)) out.emplace_back(-1, k, none);
    return;
  }
  if (k == -1) return;
  std::vector<int> v(static_cast<std::size_t>(l + 1), 0);
  for (;;) {
    if (keep(v)) out.emplace_back(l, k, v);
    // Next weakly increasing sequence in lexicographic order.
    int r = l;
    while (r >= 0 && v[static_cast<std::size_t>(r)] == k) --r;
    if (r < 0) return;
    const int next = v[static_cast<std::size_t>(r)] + 1;
    for (int s = r; s <= l; ++s) v[static_cast<std::size_t>(s)] = next;
  }
}

}  // namespace

std::vector<OrdinalMap> enumerate_maps(Ordinal l, Ordinal k) {
  std::vector<OrdinalMap> out;
  enumerate_into(l.n, k.n, [](const std::vector<int>&) { return true; }, out);
  return out;
}

std::vector<OrdinalMap> enumerate_surjections(Ordinal l, Ordinal k) {
  std::vector<OrdinalMap> out;
  if (k.n > l.n) return out;
  enumerate_into(l.n, k.n, [&](const std::vector<int>& v) {
    if (v.empty()) return k.n == -1;
    if (v.front() != 0 || v.back() != k.n) return false;
    for (std::size_t r = 1; r < v.size(); ++r)
      if (v[r] - v[r - 1] > 1) return false;
    return true;
  }, out);
  return out;
}

std::vector<OrdinalMap> enumerate_injections(Ordinal l, Ordinal k) {
  std::vector<OrdinalMap> out;
  if (l.n > k.n) return out;
  enumerate_into(l.n, k.n, [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  }, out);
  return out;
}

std::vector<int> to_flat(const OrdinalMap& beta) {
  std::vector<int> flat{beta.dom(), beta.cod()};
  flat.insert(flat.end(), beta.values().begin(), beta.values().end());
  return flat;
}

OrdinalMap from_flat(const std::vector<int>& flat) {
  if (flat.size() < 2) throw PreconditionError("flat ordinal map needs at least [l k]");
  return OrdinalMap(flat[0], flat[1], std::vector<int>(flat.begin() + 2, flat.end()));
}

}  // namespace declab
