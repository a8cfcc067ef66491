#include "declab/simplicial.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include "declab/error.hpp"

namespace declab {

bool SimplicialObject::is_degenerate(int n, Elem x) const {
  for (int i = 0; i < n; ++i)
    if (degeneracy(n - 1, i, face(n, i, x)) == x) return true;
  return false;
}

std::vector<Elem> AugmentedSimplicialObject::augmentation() const {
  const auto to_point = OrdinalMap::empty(0);
  std::vector<Elem> out(size(0));
  for (Elem x = 0; x < out.size(); ++x) out[x] = act(to_point, x);
  return out;
}

bool AugmentedSimplicialObject::augmentation_coequalizes() const {
  const auto eps = augmentation();
  const auto d0 = coface(1, 0);
  const auto d1 = coface(1, 1);
  for (Elem e = 0; e < size(1); ++e)
    if (eps[act(d0, e)] != eps[act(d1, e)]) return false;
  return true;
}

FinSetQuot coequalizer(std::size_t n, const std::vector<std::pair<Elem, Elem>>& relations) {
  boost::disjoint_sets_with_storage<> sets(n);
  for (std::size_t x = 0; x < n; ++x) sets.make_set(x);
  for (const auto& [a, b] : relations) sets.union_set(a, b);

  FinSetQuot q;
  q.class_of.assign(n, 0);
  std::vector<std::int64_t> class_of_root(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    const auto root = sets.find_set(x);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::int64_t>(q.classes.size());
      q.classes.emplace_back();
    }
    const auto c = static_cast<std::uint32_t>(class_of_root[root]);
    q.class_of[x] = c;
    q.classes[c].push_back(static_cast<Elem>(x));
  }
  return q;
}

FinSetQuot pi0(const SimplicialObject& x) {
  std::vector<std::pair<Elem, Elem>> rel;
  const auto edges = x.size(1);
  rel.reserve(edges);
  for (Elem e = 0; e < edges; ++e) rel.emplace_back(x.face(1, 0, e), x.face(1, 1, e));
  return coequalizer(x.size(0), rel);
}

std::vector<Elem> induced_on_pi0(const FinSetQuot& source, const FinSetQuot& target,
                                 const std::vector<Elem>& level_zero_map) {
  std::vector<Elem> out(source.class_count());
  for (std::size_t c = 0; c < source.class_count(); ++c) {
    const auto image = target.class_of[level_zero_map[source.representative(c)]];
    for (Elem v : source.classes[c])
      if (target.class_of[level_zero_map[v]] != image)
        throw ValidationError("map does not respect components");
    out[c] = image;
  }
  return out;
}

std::string SquareFailure::to_string() const {
  return "beta=" + beta.to_string() + " level=" + std::to_string(level) + " x=" + std::to_string(element) +
         " lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
}

std::vector<OrdinalMap> operators_up_to(int cutoff, Operators which) {
  std::vector<OrdinalMap> ops;
  if (which == Operators::all) {
    for (int m = 0; m <= cutoff; ++m)
      for (int n = 0; n <= cutoff; ++n)
        for (auto& beta : enumerate_maps(Ordinal(m), Ordinal(n))) ops.push_back(std::move(beta));
    return ops;
  }
  for (int n = 1; n <= cutoff; ++n)
    for (int i = 0; i <= n; ++i) ops.push_back(coface(n, i));
  for (int n = 0; n + 1 <= cutoff; ++n)
    for (int i = 0; i <= n; ++i) ops.push_back(codegeneracy(n, i));
  return ops;
}

std::optional<SquareFailure> check_naturality(const SimplicialObject& a, const SimplicialObject& b,
                                              const LevelwiseMap& f, int cutoff, Operators which) {
  for (const auto& beta : operators_up_to(cutoff, which)) {
    const int m = beta.dom();
    const int n = beta.cod();
    for (Elem x = 0; x < a.size(n); ++x) {
      const Elem lhs = f(m, a.act(beta, x));
      const Elem rhs = b.act(beta, f(n, x));
      if (lhs != rhs) return SquareFailure{beta, n, x, lhs, rhs};
    }
  }
  return std::nullopt;
}

bool is_bijection(const std::vector<Elem>& f, std::size_t target_size) {
  if (f.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (Elem y : f) {
    if (y >= target_size || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

CheckResult first_failure(std::initializer_list<CheckResult> results) {
  for (const auto& r : results)
    if (!r.ok) return r;
  return CheckResult::pass();
}

CheckResult natural(const std::string& name, const SimplicialObject& a, const SimplicialObject& b,
                    const LevelwiseMap& f, int cutoff, Operators which) {
  if (auto failure = check_naturality(a, b, f, cutoff, which))
    return CheckResult::fail(name + " is not natural: " + failure->to_string(), *failure);
  return CheckResult::pass();
}

CheckResult check_simplicial_identities(const SimplicialObject& x, int cutoff) {
  auto fail = [](const std::string& which, int n, Elem e) {
    return CheckResult::fail(which + " fails on element " + std::to_string(e) + " of level " + std::to_string(n));
  };
  for (int n = 0; n <= cutoff; ++n)
    for (Elem e = 0; e < x.size(n); ++e) {
      for (int j = 1; n >= 2 && j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(n - 1, i, x.face(n, j, e)) != x.face(n - 1, j - 1, x.face(n, i, e))) return fail("d_i d_j = d_{j-1} d_i", n, e);
      if (n + 2 <= cutoff)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (x.degeneracy(n + 1, i, x.degeneracy(n, j, e)) != x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, e)))
              return fail("s_i s_j = s_{j+1} s_i", n, e);
      if (n + 1 <= cutoff)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            const Elem lhs = x.face(n + 1, i, x.degeneracy(n, j, e));
            Elem rhs = e;
            if (i < j) rhs = x.degeneracy(n - 1, j - 1, x.face(n, i, e));
            else if (i > j + 1) rhs = x.degeneracy(n - 1, j, x.face(n, i - 1, e));
            if (lhs != rhs) return fail("d_i s_j", n, e);
          }
    }
  return CheckResult::pass();
}

SplitForkResult verify_split_fork(const SimplicialObject& x, int k, int i) {
  if (k < 2 || i < 0 || i > k - 1)
    throw PreconditionError("split fork needs k >= 2 and 0 <= i <= k-1");
  auto fail = [&](const std::string& what) {
    return SplitForkResult{false, "k=" + std::to_string(k) + " i=" + std::to_string(i) + ": " + what};
  };

  const auto top = x.size(k);
  const auto mid = x.size(k - 1);
  const auto bottom = x.size(k - 2);
  auto table = [&](const OrdinalMap& beta, std::size_t count) {
    std::vector<Elem> out(count);
    for (Elem z = 0; z < count; ++z) out[z] = x.act(beta, z);
    return out;
  };
  const auto a = table(coface(k, i), top);
  const auto b = table(coface(k, i + 1), top);
  const auto e = table(coface(k - 1, i), mid);

  // Coequalizer property, computed directly.
  std::vector<std::pair<Elem, Elem>> rel;
  for (Elem z = 0; z < top; ++z) rel.emplace_back(a[z], b[z]);
  const auto quotient = coequalizer(mid, rel);
  std::vector<Elem> on_classes(quotient.class_count());
  for (std::size_t c = 0; c < quotient.class_count(); ++c) {
    on_classes[c] = e[quotient.representative(c)];
    for (Elem y : quotient.classes[c])
      if (e[y] != on_classes[c]) return fail("d_i is not constant on class of " + std::to_string(y));
  }
  if (!is_bijection(on_classes, bottom)) return fail("quotient does not map bijectively onto X_{k-2}");

  // Split fork equations.
  const bool last = i == k - 1;
  const auto s = table(codegeneracy(k - 2, last ? k - 2 : i), bottom);
  const auto t = table(codegeneracy(k - 1, last ? k - 2 : i + 1), mid);
  const auto& f = last ? a : b;  // the member of the pair split by t
  const auto& g = last ? b : a;
  for (Elem z = 0; z < top; ++z)
    if (e[a[z]] != e[b[z]]) return fail("e o d_i != e o d_{i+1} at " + std::to_string(z));
  for (Elem w = 0; w < bottom; ++w)
    if (e[s[w]] != w) return fail("e o s != id at " + std::to_string(w));
  for (Elem y = 0; y < mid; ++y) {
    if (f[t[y]] != y) return fail("f o t != id at " + std::to_string(y));
    if (g[t[y]] != s[e[y]]) return fail("g o t != s o e at " + std::to_string(y));
  }
  return {};
}

}  // namespace declab
