#include "declab/homology.hpp"

#include "declab/error.hpp"
#include "declab/hom.hpp"
#include "declab/kan.hpp"

namespace declab {

ChainComplex normalized_chains(const SimplicialObject& x, int top) {
  ChainComplex c;
  for (int n = 0; n <= top; ++n) {
    auto& basis = c.basis.emplace_back();
    auto& position = c.position.emplace_back();
    for (Elem e = 0; e < x.size(n); ++e)
      if (!x.is_degenerate(n, e)) {
        position.emplace(e, basis.size());
        basis.push_back(e);
      }
  }
  for (int n = 0; n <= top; ++n) {
    const auto cols = c.rank(n);
    if (n == 0) {
      c.boundary.emplace_back(0, cols);
      continue;
    }
    const auto& below = c.position[static_cast<std::size_t>(n - 1)];
    MatrixZ d(below.size(), cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (int i = 0; i <= n; ++i) {
        const auto it = below.find(x.face(n, i, c.basis[static_cast<std::size_t>(n)][j]));
        if (it != below.end()) d(it->second, j) += i % 2 == 0 ? 1 : -1;
      }
    c.boundary.push_back(std::move(d));
  }
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (int n = 2; n <= c.top(); ++n)
    if (!(c.boundary[static_cast<std::size_t>(n - 1)] * c.boundary[static_cast<std::size_t>(n)]).is_zero()) return false;
  return true;
}

std::string AbGroup::to_string() const {
  std::string s;
  auto add = [&](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
  if (rank == 1) add("Z");
  if (rank > 1) add("Z^" + std::to_string(rank));
  for (const auto& t : torsion) add("Z/" + t.to_string());
  return s.empty() ? "0" : s;
}

Homology::Homology(const ChainComplex& c, int degree) {
  if (degree + 1 > c.top()) throw PreconditionError("homology in degree n needs chains through degree n+1");
  for (int n = 0; n <= degree; ++n) {
    Degree d;
    d.boundary = snf(c.boundary[static_cast<std::size_t>(n)]);
    const std::size_t r = d.boundary.rank;
    const MatrixZ w = d.boundary.v_inv * c.boundary[static_cast<std::size_t>(n + 1)];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < w.cols(); ++j)
        if (!w(i, j).is_zero()) throw ValidationError("boundary of a boundary is not zero in degree " + std::to_string(n));
    d.relations = snf(w.bottom_rows(r));
    const std::size_t k = c.rank(n) - r;
    AbGroup g;
    for (std::size_t t = 0; t < k; ++t) {
      const Int div = t < d.relations.rank ? d.relations.d(t, t) : Int(0);
      d.divisors.push_back(div);
      if (div.is_zero())
        ++g.rank;
      else if (div != 1)
        g.torsion.push_back(div);
    }
    degrees_.push_back(std::move(d));
    groups_.push_back(std::move(g));
  }
}

std::vector<std::vector<Int>> Homology::generators(int n) const {
  const auto& d = degrees_[static_cast<std::size_t>(n)];
  const MatrixZ kernel = d.boundary.v.right_columns(d.boundary.rank);
  const MatrixZ basis = kernel * d.relations.u_inv;
  std::vector<std::vector<Int>> out;
  for (std::size_t t = 0; t < d.divisors.size(); ++t) {
    if (d.divisors[t] == 1) continue;
    auto& g = out.emplace_back(basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) g[r] = basis(r, t);
  }
  return out;
}

std::vector<Int> Homology::coordinates(int n, const std::vector<Int>& cycle) const {
  const auto& d = degrees_[static_cast<std::size_t>(n)];
  MatrixZ z(cycle.size(), 1);
  for (std::size_t r = 0; r < cycle.size(); ++r) z(r, 0) = cycle[r];
  const MatrixZ y = d.boundary.v_inv * z;
  for (std::size_t r = 0; r < d.boundary.rank; ++r)
    if (!y(r, 0).is_zero()) throw PreconditionError("chain is not a cycle in degree " + std::to_string(n));
  const MatrixZ w = d.relations.u * y.bottom_rows(d.boundary.rank);
  std::vector<Int> out;
  for (std::size_t t = 0; t < d.divisors.size(); ++t) {
    const Int& div = d.divisors[t];
    if (div == 1) continue;
    if (div.is_zero()) {
      out.push_back(w(t, 0));
    } else {
      Int m = w(t, 0) % div;
      if (m.sign() < 0) m += div;
      out.push_back(m);
    }
  }
  return out;
}

std::vector<AbGroup> homology(const SimplicialObject& x, int degree) {
  return Homology(normalized_chains(x, degree + 1), degree).groups();
}

InducedMaps induced(const SimplicialObject& a, const SimplicialObject& b, const LevelwiseMap& f, int degree) {
  const auto ca = normalized_chains(a, degree + 1);
  const auto cb = normalized_chains(b, degree + 1);
  InducedMaps out;
  for (int n = 0; n <= degree + 1; ++n) {
    MatrixZ m(cb.rank(n), ca.rank(n));
    const auto& targets = cb.position[static_cast<std::size_t>(n)];
    for (std::size_t j = 0; j < ca.rank(n); ++j) {
      const auto it = targets.find(f(n, ca.basis[static_cast<std::size_t>(n)][j]));
      if (it != targets.end()) m(it->second, j) = 1;
    }
    out.chain.push_back(std::move(m));
  }
  for (int n = 1; n <= degree + 1; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (cb.boundary[i] * out.chain[i] != out.chain[i - 1] * ca.boundary[i])
      throw ValidationError("levelwise map is not a chain map in degree " + std::to_string(n));
  }
  const Homology ha(ca, degree);
  const Homology hb(cb, degree);
  out.source = ha.groups();
  out.target = hb.groups();
  for (int n = 0; n <= degree; ++n) {
    const auto gens = ha.generators(n);
    const auto& fn = out.chain[static_cast<std::size_t>(n)];
    const std::size_t rows = hb.group(n).rank + hb.group(n).torsion.size();
    MatrixZ m(rows, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      MatrixZ z(gens[j].size(), 1);
      for (std::size_t r = 0; r < gens[j].size(); ++r) z(r, 0) = gens[j][r];
      const MatrixZ image = fn * z;
      std::vector<Int> cycle(image.rows());
      for (std::size_t r = 0; r < image.rows(); ++r) cycle[r] = image(r, 0);
      const auto coords = hb.coordinates(n, cycle);
      for (std::size_t r = 0; r < rows; ++r) m(r, j) = coords[r];
    }
    out.homology.push_back(std::move(m));
  }
  return out;
}

bool is_homology_iso(const InducedMaps& maps) {
  for (std::size_t n = 0; n < maps.homology.size(); ++n) {
    if (maps.source[n] != maps.target[n]) return false;
    // Onto between isomorphic finitely generated groups is bijective. Ontoness:
    // the image together with the torsion relations spans the coordinates.
    const auto& m = maps.homology[n];
    const auto& torsion = maps.target[n].torsion;
    MatrixZ spanning(m.rows(), m.cols() + torsion.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) spanning(r, c) = m(r, c);
    for (std::size_t t = 0; t < torsion.size(); ++t) spanning(t, m.cols() + t) = torsion[t];
    const auto form = snf(spanning);
    if (form.rank != m.rows()) return false;
    for (const auto& e : form.diagonal())
      if (!e.is_zero() && e != 1) return false;
  }
  return true;
}

bool is_homology_iso(const SimplicialObject& a, const SimplicialObject& b, const LevelwiseMap& f, int degree) {
  return is_homology_iso(induced(a, b, f, degree));
}

CheckResult verify_retraction(const SSet& x, int cutoff) {
  const auto xp = std::make_shared<const SSet>(x);
  const Cotensor point(xp, simplex(0));
  const Cotensor path(xp, simplex(1));
  // d^1 : simplex(0) -> simplex(1) picks vertex 0; s^0 : simplex(1) -> simplex(0).
  const SMap d1{{{0}}};
  const SMap s0{{{0, 0}, {0}}};
  if (!is_simplicial(simplex(0), simplex(1), d1) || !is_simplicial(simplex(1), simplex(0), s0))
    return CheckResult::fail("d^1 or s^0 is not simplicial");

  LevelwiseMap yoneda;
  LevelwiseMap face;
  LevelwiseMap degeneracy;
  for (int n = 0; n <= cutoff; ++n) {
    auto& y = yoneda.levels.emplace_back(x.size(n));
    for (Elem e = 0; e < y.size(); ++e) y[e] = point.constant(n, e);
    if (!is_bijection(y, point.size(n))) return CheckResult::fail("X_n -> (X^{simplex(0)})_n is not a bijection at n=" + std::to_string(n));
    auto& s = degeneracy.levels.emplace_back(point.size(n));
    for (Elem g = 0; g < s.size(); ++g) s[g] = along_exponent(point, path, s0, n, g);
    auto& d = face.levels.emplace_back(path.size(n));
    for (Elem g = 0; g < d.size(); ++g) d[g] = along_exponent(path, point, d1, n, g);
    for (Elem g = 0; g < s.size(); ++g)
      if (d[s[g]] != g) return CheckResult::fail("d_1 s_0 != id at level " + std::to_string(n) + " on element " + std::to_string(g));
  }
  return first_failure({
      natural("X -> X^{simplex(0)}", x, point, yoneda, cutoff),
      natural("s_0", point, path, degeneracy, cutoff),
      natural("d_1", path, point, face, cutoff),
  });
}

UnitHomology check_unit_homology(const SSet& x, int degree) {
  UnitHomology out;
  const auto xp = std::make_shared<const SSet>(x);
  const Total t(dec(xp));
  const Cotensor c(xp, simplex(1));
  const int levels = degree + 1;
  const auto u = unit_map(x, t, levels);
  const auto cmp = comparison_map(x, t, c, levels);
  LevelwiseMap composite;
  for (int n = 0; n <= levels; ++n) {
    if (!is_bijection(cmp.levels[static_cast<std::size_t>(n)], c.size(n))) {
      out.result = CheckResult::fail("comparison is not a bijection at level " + std::to_string(n));
      return out;
    }
    auto& level = composite.levels.emplace_back(x.size(n));
    for (Elem e = 0; e < level.size(); ++e) level[e] = cmp(n, u(n, e));
  }
  out.result = natural("comparison o unit", x, c, composite, levels);
  if (!out.result.ok) return out;
  const auto maps = induced(x, c, composite, degree);
  out.source = maps.source;
  out.target = maps.target;
  out.maps = maps.homology;
  if (!is_homology_iso(maps)) out.result = CheckResult::fail("unit does not induce an isomorphism on homology");
  return out;
}

}  // namespace declab
