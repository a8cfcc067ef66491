#include "declab/kan.hpp"

#include <algorithm>
#include <set>

#include "declab/error.hpp"

namespace declab {

namespace {

OrdinalMap vertex(int n) { return OrdinalMap::constant(0, n, 0); }

std::string level_name(int k) { return "level " + std::to_string(k); }

}  // namespace

CheckResult check_split_uniqueness(int bound) {
  std::map<std::pair<int, int>, std::vector<OrdinalMap>> tables;
  auto maps = [&](int l, int k) -> const std::vector<OrdinalMap>& {
    auto it = tables.find({l, k});
    if (it == tables.end()) it = tables.emplace(std::pair{l, k}, enumerate_maps(Ordinal(l), Ordinal(k))).first;
    return it->second;
  };
  for (int l = -1; l <= bound; ++l)
    for (int k = -1; k <= bound; ++k)
      for (const auto& beta : maps(l, k))
        for (int i = -1; i <= k; ++i) {
          int found = 0;
          Split match;
          for (int j = -1; j <= l; ++j)
            for (const auto& first : maps(j, i)) {
              bool prefix = true;
              for (int r = 0; r <= j && prefix; ++r) prefix = first(r) == beta(r);
              if (!prefix) continue;
              for (const auto& second : maps(l - j - 1, k - i - 1)) {
                bool suffix = true;
                for (int r = 0; r <= second.dom() && suffix; ++r) suffix = second(r) + i + 1 == beta(j + 1 + r);
                if (!suffix) continue;
                ++found;
                match = Split{j, first, second};
              }
            }
          const std::string where = beta.to_string() + " at i=" + std::to_string(i);
          if (found != 1) return CheckResult::fail(std::to_string(found) + " decompositions of " + where);
          if (ordinal_sum(match.first, match.second) != beta) return CheckResult::fail("decomposition does not sum to " + where);
          if (split_at(beta, i) != match) return CheckResult::fail("split_at disagrees with the search for " + where);
        }
  return CheckResult::pass();
}

Components::Components(std::shared_ptr<const BisimplicialObject> y, Collapse collapse)
    : y_(std::move(y)), collapse_(collapse) {}

const FinSetQuot& Components::quotient(int k) const {
  std::lock_guard lock(mutex_);
  auto& slot = cache_[k];
  if (!slot) {
    const bool first = collapse_ == Collapse::first;
    const auto id = OrdinalMap::identity(k);
    std::vector<std::pair<Elem, Elem>> rel;
    const auto edges = first ? y_->size(1, k) : y_->size(k, 1);
    for (Elem e = 0; e < edges; ++e) {
      if (first)
        rel.emplace_back(y_->act(coface(1, 0), id, e), y_->act(coface(1, 1), id, e));
      else
        rel.emplace_back(y_->act(id, coface(1, 0), e), y_->act(id, coface(1, 1), e));
    }
    slot = std::make_unique<FinSetQuot>(coequalizer(first ? y_->size(0, k) : y_->size(k, 0), rel));
  }
  return *slot;
}

Elem Components::act(const OrdinalMap& beta, Elem c) const {
  const Elem rep = representative(beta.cod(), c);
  const Elem moved = collapse_ == Collapse::first ? y_->act(OrdinalMap::identity(0), beta, rep)
                                                  : y_->act(beta, OrdinalMap::identity(0), rep);
  return class_of(beta.dom(), moved);
}

SigmaShriek::SigmaShriek(std::shared_ptr<const BisimplicialObject> y)
    : y_(std::move(y)),
      first_(std::make_shared<const Components>(y_, Collapse::first)),
      second_(std::make_shared<const Components>(y_, Collapse::second)) {}

std::size_t SigmaShriek::summand_size(int k, int i) const {
  if (i == -1) return first_->size(k);
  if (i == k) return second_->size(k);
  return y_->size(i, k - i - 1);
}

std::size_t SigmaShriek::size(int k) const {
  std::size_t total = 0;
  for (int i = -1; i <= k; ++i) total += summand_size(k, i);
  return total;
}

Summand SigmaShriek::locate(int k, Elem x) const {
  for (int i = -1; i <= k; ++i) {
    const auto n = summand_size(k, i);
    if (x < n) return Summand{i, x};
    x -= static_cast<Elem>(n);
  }
  throw PreconditionError("element outside " + level_name(k) + " of sigma_! Y");
}

Elem SigmaShriek::element(int k, Summand s) const {
  Elem offset = 0;
  for (int i = -1; i < s.i; ++i) offset += static_cast<Elem>(summand_size(k, i));
  return offset + s.local;
}

Elem SigmaShriek::act(const OrdinalMap& beta, Elem x) const {
  const int l = beta.dom();
  const int k = beta.cod();
  const Summand s = locate(k, x);
  if (s.i == -1) return element(l, {-1, first_->act(beta, s.local)});
  if (s.i == k) return element(l, {l, second_->act(beta, s.local)});
  const Split sp = split_at(beta, s.i);
  if (sp.j == -1) {
    const Elem z = y_->act(vertex(s.i), sp.second, s.local);
    return element(l, {-1, first_->class_of(l, z)});
  }
  if (sp.j == l) {
    const Elem z = y_->act(sp.first, vertex(k - s.i - 1), s.local);
    return element(l, {l, second_->class_of(l, z)});
  }
  return element(l, {sp.j, y_->act(sp.first, sp.second, s.local)});
}

AugmentedByComponents::AugmentedByComponents(std::shared_ptr<const SimplicialObject> x)
    : x_(std::move(x)), components_(pi0(*x_)) {}

std::size_t AugmentedByComponents::size(int n) const {
  return n == -1 ? components_.class_count() : x_->size(n);
}

Elem AugmentedByComponents::act(const OrdinalMap& beta, Elem x) const {
  if (beta.cod() == -1) return x;
  if (beta.dom() == -1) return components_.class_of[x_->act(vertex(beta.cod()), x)];
  return x_->act(beta, x);
}

std::shared_ptr<const AugmentedByComponents> iota_shriek(std::shared_ptr<const SimplicialObject> x) {
  return std::make_shared<const AugmentedByComponents>(std::move(x));
}

AugmentSecond::AugmentSecond(std::shared_ptr<const BisimplicialObject> y)
    : y_(std::move(y)), rows_(std::make_shared<const Components>(y_, Collapse::second)) {}

std::size_t AugmentSecond::size(int i, int j) const {
  if (i < 0) throw PreconditionError("first index is not augmented yet");
  return j == -1 ? rows_->size(i) : y_->size(i, j);
}

Elem AugmentSecond::act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const {
  if (horizontal.dom() < 0) throw PreconditionError("first index is not augmented yet");
  if (vertical.cod() == -1) return rows_->act(horizontal, x);
  if (vertical.dom() == -1) return rows_->class_of(horizontal.dom(), y_->act(horizontal, vertex(vertical.cod()), x));
  return y_->act(horizontal, vertical, x);
}

AugmentFirst::AugmentFirst(std::shared_ptr<const AugmentedBisimplicialObject> b) : b_(std::move(b)) {}

const FinSetQuot& AugmentFirst::column_quotient(int j) const {
  std::lock_guard lock(mutex_);
  auto& slot = cache_[j];
  if (!slot) {
    const auto id = OrdinalMap::identity(j);
    std::vector<std::pair<Elem, Elem>> rel;
    for (Elem e = 0; e < b_->size(1, j); ++e)
      rel.emplace_back(b_->act(coface(1, 0), id, e), b_->act(coface(1, 1), id, e));
    slot = std::make_unique<FinSetQuot>(coequalizer(b_->size(0, j), rel));
  }
  return *slot;
}

std::size_t AugmentFirst::size(int i, int j) const {
  return i == -1 ? column_quotient(j).class_count() : b_->size(i, j);
}

Elem AugmentFirst::act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const {
  const int j = vertical.dom();
  if (horizontal.cod() == -1) {
    const Elem rep = column_quotient(vertical.cod()).representative(x);
    return column_quotient(j).class_of[b_->act(OrdinalMap::identity(0), vertical, rep)];
  }
  if (horizontal.dom() == -1) return column_quotient(j).class_of[b_->act(vertex(horizontal.cod()), vertical, x)];
  return b_->act(horizontal, vertical, x);
}

std::shared_ptr<const AugmentFirst> iota2_shriek(std::shared_ptr<const BisimplicialObject> y) {
  return std::make_shared<const AugmentFirst>(std::make_shared<const AugmentSecond>(std::move(y)));
}

CheckResult check_augmentation_laws(const AugmentedBisimplicialObject& a, int cutoff) {
  const auto to_point = OrdinalMap::empty(0);
  for (int j = -1; j <= cutoff; ++j) {
    const auto id = OrdinalMap::identity(j);
    for (Elem e = 0; e < a.size(1, j); ++e)
      if (a.act(to_point, id, a.act(coface(1, 0), id, e)) != a.act(to_point, id, a.act(coface(1, 1), id, e)))
        return CheckResult::fail("augmentation A_{0,j} -> A_{-1,j} does not coequalize at j=" + std::to_string(j));
  }
  for (int i = -1; i <= cutoff; ++i) {
    const auto id = OrdinalMap::identity(i);
    for (Elem e = 0; e < a.size(i, 1); ++e)
      if (a.act(id, to_point, a.act(id, coface(1, 0), e)) != a.act(id, to_point, a.act(id, coface(1, 1), e)))
        return CheckResult::fail("augmentation A_{i,0} -> A_{i,-1} does not coequalize at i=" + std::to_string(i));
  }
  const auto none = OrdinalMap::identity(-1);
  const auto id0 = OrdinalMap::identity(0);
  for (Elem e = 0; e < a.size(0, 0); ++e) {
    const Elem across = a.act(none, to_point, a.act(to_point, id0, e));
    const Elem down = a.act(to_point, none, a.act(id0, to_point, e));
    if (across != down || across != a.act(to_point, to_point, e))
      return CheckResult::fail("the composites A_{0,0} -> A_{-1,-1} disagree");
  }
  return CheckResult::pass();
}

SigmaAShriek::SigmaAShriek(std::shared_ptr<const AugmentedBisimplicialObject> a) : a_(std::move(a)) {}

std::size_t SigmaAShriek::size(int k) const {
  std::size_t total = 0;
  for (int i = -1; i <= k; ++i) total += a_->size(i, k - i - 1);
  return total;
}

Summand SigmaAShriek::locate(int k, Elem x) const {
  for (int i = -1; i <= k; ++i) {
    const auto n = a_->size(i, k - i - 1);
    if (x < n) return Summand{i, x};
    x -= static_cast<Elem>(n);
  }
  throw PreconditionError("element outside " + level_name(k) + " of (sigma_a)_! A");
}

Elem SigmaAShriek::element(int k, Summand s) const {
  Elem offset = 0;
  for (int i = -1; i < s.i; ++i) offset += static_cast<Elem>(a_->size(i, k - i - 1));
  return offset + s.local;
}

Elem SigmaAShriek::act(const OrdinalMap& beta, Elem x) const {
  const Summand s = locate(beta.cod(), x);
  const Split sp = split_at(beta, s.i);
  return element(beta.dom(), {sp.j, a_->act(sp.first, sp.second, s.local)});
}

SigmaShriekComposite sigma_shriek_composite(std::shared_ptr<const BisimplicialObject> y) {
  SigmaShriekComposite out;
  out.augmented = iota2_shriek(std::move(y));
  out.extended = std::make_shared<const SigmaAShriek>(out.augmented);
  out.result = std::make_shared<const AugmentationForgotten>(out.extended);
  return out;
}

CheckResult check_two_routes(std::shared_ptr<const BisimplicialObject> y, int cutoff) {
  const SigmaShriek direct(y);
  const auto composite = sigma_shriek_composite(y);
  const auto& a = *composite.augmented;
  const auto to_point = OrdinalMap::empty(0);

  LevelwiseMap f;
  for (int k = 0; k <= cutoff; ++k) {
    auto& level = f.levels.emplace_back(direct.size(k));
    const auto id = OrdinalMap::identity(k);
    for (Elem x = 0; x < level.size(); ++x) {
      Summand s = direct.locate(k, x);
      if (s.i == -1)
        s.local = a.act(to_point, id, direct.first_components().representative(k, s.local));
      else if (s.i == k)
        s.local = a.act(id, to_point, direct.second_components().representative(k, s.local));
      level[x] = composite.extended->element(k, s);
    }
    if (!is_bijection(level, composite.result->size(k)))
      return CheckResult::fail("summand comparison is not a bijection at " + level_name(k));
  }
  if (!composite.extended->augmentation_coequalizes())
    return CheckResult::fail("augmentation of (sigma_a)_! A does not coequalize d_0, d_1");
  return first_failure({
      check_augmentation_laws(a, cutoff),
      check_simplicial_identities(direct, cutoff),
      check_simplicial_identities(*composite.result, cutoff),
      natural("two-route comparison", direct, *composite.result, f, cutoff),
  });
}

CheckResult NatIso::verify() const {
  for (int n = 0; n <= cutoff; ++n) {
    if (map.levels.size() <= static_cast<std::size_t>(n) || map.levels[static_cast<std::size_t>(n)].size() != source->size(n))
      return CheckResult::fail("map is not defined on all of " + level_name(n));
    if (!is_bijection(map.levels[static_cast<std::size_t>(n)], target->size(n)))
      return CheckResult::fail("map is not a bijection at " + level_name(n));
  }
  return natural("isomorphism", *source, *target, map, cutoff);
}

LevelwiseMap counit_sigma(const SigmaShriek& sigma_dec_x, const SimplicialObject& x, int cutoff) {
  LevelwiseMap fold;
  for (int k = 0; k <= cutoff; ++k) {
    auto& level = fold.levels.emplace_back(sigma_dec_x.size(k));
    for (Elem e = 0; e < level.size(); ++e) {
      const Summand s = sigma_dec_x.locate(k, e);
      if (s.i == -1)
        level[e] = x.act(coface(k + 1, 0), sigma_dec_x.first_components().representative(k, s.local));
      else if (s.i == k)
        level[e] = x.act(coface(k + 1, k + 1), sigma_dec_x.second_components().representative(k, s.local));
      else
        level[e] = s.local;
    }
  }
  return fold;
}

OrdinalMap split_indicator(int k, int i) {
  std::vector<int> v(static_cast<std::size_t>(k + 1));
  for (int r = 0; r <= k; ++r) v[static_cast<std::size_t>(r)] = r <= i ? 0 : 1;
  return OrdinalMap(k, 1, std::move(v));
}

namespace {

struct CounitData {
  std::shared_ptr<const SSet> x;
  std::shared_ptr<const SigmaShriek> sigma;
  std::shared_ptr<const Product> cylinder;
  LevelwiseMap fold;
  NatIso iso;
};

CounitData counit_data(const SSet& x, int cutoff) {
  CounitData d;
  d.x = std::make_shared<const SSet>(x);
  d.sigma = std::make_shared<const SigmaShriek>(dec(d.x));
  d.cylinder = std::make_shared<const Product>(x, simplex(1));
  d.fold = counit_sigma(*d.sigma, x, cutoff);
  d.iso.source = d.sigma;
  d.iso.target = std::make_shared<const SSet>(d.cylinder->sset());
  d.iso.cutoff = cutoff;
  for (int k = 0; k <= cutoff; ++k) {
    auto& level = d.iso.map.levels.emplace_back(d.sigma->size(k));
    for (Elem e = 0; e < level.size(); ++e) {
      const int i = d.sigma->locate(k, e).i;
      const Simplex pair = d.cylinder->simplex_of(x.level(k)[d.fold(k, e)], standard_simplex(1, split_indicator(k, i)));
      level[e] = d.cylinder->sset().index_of(pair);
    }
  }
  return d;
}

}  // namespace

NatIso counit_iso(const SSet& x, int cutoff) { return counit_data(x, cutoff).iso; }

CheckResult check_counit(const SSet& x, int cutoff) {
  const auto d = counit_data(x, cutoff);
  for (int k = 0; k <= cutoff; ++k) {
    const auto expected = static_cast<std::size_t>(k + 2) * x.size(k);
    if (d.sigma->size(k) != expected)
      return CheckResult::fail("|sigma_! Dec X| at " + level_name(k) + " is " + std::to_string(d.sigma->size(k)) +
                               ", expected " + std::to_string(expected));
    const auto& cyl = d.cylinder->sset();
    for (Elem e = 0; e < d.sigma->size(k); ++e) {
      const auto projected = x.index_of(d.cylinder->split(cyl.level(k)[d.iso.map(k, e)]).first);
      if (projected != d.fold(k, e)) return CheckResult::fail("projection o iso differs from the fold at " + level_name(k));
    }
  }
  return first_failure({d.iso.verify(), natural("fold", *d.sigma, x, d.fold, cutoff)});
}

CheckResult check_pi0_identification(const SSet& x, int cutoff) {
  const auto d = dec(x);
  for (const auto side : {Collapse::first, Collapse::second}) {
    const Components comps(d, side);
    const std::string name = side == Collapse::first ? "pi_0(Dec X_{-,k}) -> X_k" : "pi_0(Dec X_{k,-}) -> X_k";
    LevelwiseMap f;
    for (int k = 0; k <= cutoff; ++k) {
      const auto face = coface(k + 1, side == Collapse::first ? 0 : k + 1);
      const auto& q = comps.quotient(k);
      auto& level = f.levels.emplace_back(q.class_count());
      for (std::size_t c = 0; c < q.class_count(); ++c) {
        level[c] = x.act(face, q.representative(c));
        for (Elem y : q.classes[c])
          if (x.act(face, y) != level[c]) return CheckResult::fail(name + " is not constant on a class at " + level_name(k));
      }
      if (!is_bijection(level, x.size(k))) return CheckResult::fail(name + " is not a bijection at " + level_name(k));
    }
    if (auto r = natural(name, comps, x, f, cutoff); !r.ok) return r;
  }
  return CheckResult::pass();
}

Total::Total(std::shared_ptr<const BisimplicialObject> y, HomOptions options)
    : y_(std::move(y)), options_(std::move(options)), cache_(std::make_shared<Cache>()) {}

const DecSimplex& Total::shape(int n) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->shapes[n];
  if (!slot) slot = std::make_unique<DecSimplex>(n);
  return *slot;
}

const Total::Level& Total::level(int n) const {
  const DecSimplex& s = shape(n);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->levels.find(n); it != cache_->levels.end()) return *it->second;
  }
  auto level = std::make_unique<Level>();
  level->maps = hom(s.bisset(), *y_, options_);
  for (Elem e = 0; e < level->maps.size(); ++e) level->index.emplace(level->maps[e], e);
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->levels[n];
  if (!slot) slot = std::move(level);
  return *slot;
}

Elem Total::index_of(int n, const BiSMap& phi) const {
  const auto& index = level(n).index;
  const auto it = index.find(phi);
  if (it == index.end()) throw ValidationError("map is not a bisimplicial map Dec simplex(" + std::to_string(n) + ") -> Y");
  return it->second;
}

Elem Total::act(const OrdinalMap& beta, Elem phi) const {
  const int m = beta.dom();
  const int n = beta.cod();
  const DecSimplex& from = shape(m);
  const DecSimplex& to = shape(n);
  const BiSMap& g = level(n).maps[phi];
  BiSMap out;
  out.images.resize(from.bisset().cells().size());
  for (std::size_t c = 0; c < out.images.size(); ++c) {
    const int p = from.bisset().cell(c).p;
    out.images[c] = evaluate(*y_, g, to.bisimplex_of(p, compose(beta, from.map_of(c))));
  }
  return index_of(m, out);
}

Elem unit(const SSet& x, const Total& t, int n, Elem e) {
  const DecSimplex& s = t.shape(n);
  BiSMap phi;
  phi.images.resize(s.bisset().cells().size());
  for (std::size_t c = 0; c < phi.images.size(); ++c) phi.images[c] = x.act(s.map_of(c), e);
  return t.index_of(n, phi);
}

LevelwiseMap unit_map(const SSet& x, const Total& t, int cutoff) {
  LevelwiseMap out;
  for (int n = 0; n <= cutoff; ++n) {
    auto& level = out.levels.emplace_back(x.size(n));
    for (Elem e = 0; e < level.size(); ++e) level[e] = unit(x, t, n, e);
  }
  return out;
}

Elem comparison(const SSet& x, const Total& t, const Cotensor& c, int n, Elem phi) {
  const Product& cyl = c.domain(n);
  const DecSimplex& s = t.shape(n);
  const BiSMap& g = t.level(n).maps[phi];
  const SSet& cells = cyl.sset();
  SMap out;
  for (int m = 0; m <= cells.dimension(); ++m) {
    auto& row = out.images.emplace_back(cells.cell_count(m));
    for (std::size_t idx = 0; idx < row.size(); ++idx) {
      const auto& [theta_s, f_s] = cyl.components(CellId{m, static_cast<int>(idx)});
      const auto theta = standard_map(n, theta_s);
      const auto f = standard_map(1, f_s);
      const int i = static_cast<int>(std::count(f.values().begin(), f.values().end(), 0)) - 1;
      if (i == -1) {
        const auto psi = compose(theta, codegeneracy(m, 0));
        row[idx] = x.act(coface(m + 1, 0), evaluate(t.base(), g, s.bisimplex_of(0, psi)));
      } else if (i == m) {
        const auto psi = compose(theta, codegeneracy(m, m));
        row[idx] = x.act(coface(m + 1, m + 1), evaluate(t.base(), g, s.bisimplex_of(m, psi)));
      } else {
        row[idx] = evaluate(t.base(), g, s.bisimplex_of(i, theta));
      }
    }
  }
  return c.level(n).index_of(out);
}

LevelwiseMap comparison_map(const SSet& x, const Total& t, const Cotensor& c, int cutoff) {
  LevelwiseMap out;
  for (int n = 0; n <= cutoff; ++n) {
    auto& level = out.levels.emplace_back(t.size(n));
    for (Elem phi = 0; phi < level.size(); ++phi) level[phi] = comparison(x, t, c, n, phi);
  }
  return out;
}

CheckResult check_comparison(const SSet& x, int cutoff) {
  const auto xp = std::make_shared<const SSet>(x);
  const Total t(dec(xp));
  const Cotensor c(xp, simplex(1));
  const auto cmp = comparison_map(x, t, c, cutoff);
  for (int n = 0; n <= cutoff; ++n)
    if (!is_bijection(cmp.levels[static_cast<std::size_t>(n)], c.size(n)))
      return CheckResult::fail("comparison is not a bijection at " + level_name(n) + " (" + std::to_string(t.size(n)) +
                               " vs " + std::to_string(c.size(n)) + ")");
  const auto u = unit_map(x, t, cutoff);
  for (int n = 0; n <= cutoff; ++n)
    for (Elem e = 0; e < x.size(n); ++e)
      if (cmp(n, u(n, e)) != c.constant(n, e))
        return CheckResult::fail("comparison o unit differs from the constant homotopy at " + level_name(n));
  return first_failure({natural("comparison", t, c, cmp, cutoff), natural("unit", x, t, u, cutoff)});
}

Cellization cellize(const SimplicialObject& x, int top) {
  Cellization out;
  SSet::FaceTable faces;
  for (int n = 0; n <= top; ++n) {
    auto& nf = out.normal_form.emplace_back(x.size(n));
    auto& cells = faces.emplace_back();
    for (Elem e = 0; e < nf.size(); ++e) {
      int split = -1;
      for (int i = 0; i < n && split < 0; ++i)
        if (x.degeneracy(n - 1, i, x.face(n, i, e)) == e) split = i;
      if (split >= 0) {
        const Simplex& below = out.normal_form[static_cast<std::size_t>(n - 1)][x.face(n, split, e)];
        nf[e] = Simplex{below.cell, compose(below.deg, codegeneracy(n - 1, split))};
        continue;
      }
      nf[e] = Simplex{CellId{n, static_cast<int>(cells.size())}, OrdinalMap::identity(n)};
      auto& cell_faces = cells.emplace_back();
      for (int i = 0; n > 0 && i <= n; ++i)
        cell_faces.push_back(out.normal_form[static_cast<std::size_t>(n - 1)][x.face(n, i, e)]);
    }
  }
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  out.sset = SSet(std::move(faces));
  return out;
}

CheckResult check_adjunction(const BiSSet& y, const SSet& x) {
  const auto yp = std::make_shared<const BiSSet>(y);
  const SigmaShriek sigma(yp);
  int top = -1;
  for (const auto& c : y.cells()) top = std::max(top, c.p + c.q + 1);
  for (Elem e = 0; top >= 0 && e < sigma.size(top + 1); ++e)
    if (!sigma.is_degenerate(top + 1, e))
      return CheckResult::fail("sigma_! Y has a nondegenerate element above dimension " + std::to_string(top));
  const auto cz = cellize(sigma, top);

  const auto left = hom(cz.sset, x);
  const auto dx = dec(x);
  const auto right = hom(y, *dx);
  if (left.size() != right.size())
    return CheckResult::fail("|hom(sigma_! Y, X)| = " + std::to_string(left.size()) + " but |hom(Y, Dec X)| = " +
                             std::to_string(right.size()));
  std::set<BiSMap> seen;
  for (const auto& g : left) {
    BiSMap t;
    for (std::size_t id = 0; id < y.cells().size(); ++id) {
      const auto& c = y.cell(id);
      const int k = c.p + c.q + 1;
      const Elem e = sigma.element(k, {c.p, y.index_of(c.p, c.q, y.nondegenerate(id))});
      t.images.push_back(evaluate(x, g, cz.normal_form[static_cast<std::size_t>(k)][e]));
    }
    if (!std::binary_search(right.begin(), right.end(), t))
      return CheckResult::fail("a transposed map is not bisimplicial");
    if (!seen.insert(t).second) return CheckResult::fail("two maps out of sigma_! Y have the same transpose");
  }
  return CheckResult::pass();
}

}  // namespace declab
