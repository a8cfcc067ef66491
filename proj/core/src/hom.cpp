#include "declab/hom.hpp"

#include <algorithm>

#include "declab/error.hpp"
#include "search.hpp"

namespace declab {

namespace {

using detail::unassigned;

SMap blank_map(const SSet& a) {
  SMap f;
  for (int n = 0; n <= a.dimension(); ++n) f.images.emplace_back(a.cell_count(n), unassigned);
  return f;
}

}  // namespace

Elem evaluate(const SimplicialObject& target, const SMap& f, const Simplex& s) {
  const Elem image = f(s.cell);
  if (s.is_nondegenerate()) return image;
  return target.act(s.deg, image);
}

std::vector<Elem> level_map(const SSet& source, const SimplicialObject& target, const SMap& f, int n) {
  const auto& level = source.level(n);
  std::vector<Elem> out(level.size());
  for (Elem e = 0; e < level.size(); ++e) out[e] = evaluate(target, f, level[e]);
  return out;
}

LevelwiseMap levelwise(const SSet& source, const SimplicialObject& target, const SMap& f, int cutoff) {
  LevelwiseMap out;
  for (int n = 0; n <= cutoff; ++n) out.levels.push_back(level_map(source, target, f, n));
  return out;
}

bool is_simplicial(const SSet& source, const SimplicialObject& target, const SMap& f) {
  for (int n = 0; n <= source.dimension(); ++n) {
    if (f.images.size() <= static_cast<std::size_t>(n) || f.images[static_cast<std::size_t>(n)].size() != source.cell_count(n))
      return false;
    for (int c = 0; c < static_cast<int>(source.cell_count(n)); ++c) {
      const CellId id{n, c};
      if (f(id) >= target.size(n)) return false;
      for (int i = 0; n > 0 && i <= n; ++i)
        if (target.face(n, i, f(id)) != evaluate(target, f, source.face(id, i))) return false;
    }
  }
  return true;
}

SMap compose(const SSet& a, const SSet& b, const SimplicialObject& x, const SMap& g, const SMap& f) {
  SMap out = blank_map(a);
  for (int n = 0; n <= a.dimension(); ++n)
    for (int c = 0; c < static_cast<int>(a.cell_count(n)); ++c) {
      const CellId id{n, c};
      out.images[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)] = evaluate(x, g, b.level(n)[f(id)]);
    }
  return out;
}

SMap identity_map(const SSet& a) {
  SMap out = blank_map(a);
  for (int n = 0; n <= a.dimension(); ++n)
    for (int c = 0; c < static_cast<int>(a.cell_count(n)); ++c)
      out.images[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)] = a.index_of(a.cell(CellId{n, c}));
  return out;
}

std::vector<SMap> hom(const SSet& a, const SimplicialObject& x, const HomOptions& options) {
  std::vector<CellId> order;
  std::vector<std::vector<std::size_t>> flat;
  for (int n = 0; n <= a.dimension(); ++n) {
    flat.emplace_back();
    for (int c = 0; c < static_cast<int>(a.cell_count(n)); ++c) {
      flat.back().push_back(order.size());
      order.push_back(CellId{n, c});
    }
  }
  std::vector<std::vector<std::vector<Elem>>> faces(static_cast<std::size_t>(a.dimension() + 1));
  for (int n = 1; n <= a.dimension(); ++n) {
    auto& fn = faces[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n; ++i) {
      auto& t = fn.emplace_back(x.size(n));
      for (Elem e = 0; e < t.size(); ++e) t[e] = x.face(n, i, e);
    }
  }

  detail::SearchProblem problem;
  problem.limit = options.limit;
  problem.max_maps = options.max_maps;
  for (const auto& c : order) {
    problem.candidates.push_back(x.size(c.dim));
    auto& out = problem.edges.emplace_back();
    for (int i = 0; c.dim > 0 && i <= c.dim; ++i) {
      const Simplex& f = a.face(c, i);
      const auto& table = faces[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(i)];
      const std::size_t target = flat[static_cast<std::size_t>(f.cell.dim)][static_cast<std::size_t>(f.cell.index)];
      if (f.is_nondegenerate()) {
        out.push_back({target, [&table](Elem y) -> std::optional<Elem> { return table[y]; }});
      } else {
        out.push_back({target, [&table, &x, deg = f.deg, section = detail::first_section(f.deg)](Elem y) -> std::optional<Elem> {
                         const Elem face = table[y];
                         const Elem lifted = x.act(section, face);
                         if (x.act(deg, lifted) != face) return std::nullopt;
                         return lifted;
                       }});
      }
    }
  }
  auto to_smap = [&](const std::vector<Elem>& image) {
    SMap f = blank_map(a);
    for (std::size_t k = 0; k < order.size(); ++k)
      f.images[static_cast<std::size_t>(order[k].dim)][static_cast<std::size_t>(order[k].index)] = image[k];
    return f;
  };
  if (options.filter)
    problem.filter = [&](std::size_t k, Elem e, const std::vector<Elem>& image) {
      return options.filter(order[k], e, to_smap(image));
    };

  std::vector<SMap> out;
  for (const auto& image : detail::search_maps(problem)) out.push_back(to_smap(image));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SMap> find_embedding(const SSet& a, const SSet& x) {
  HomOptions options;
  options.filter = [&](CellId c, Elem e, const SMap& partial) {
    if (x.is_degenerate(c.dim, e)) return false;
    const auto& same_dim = partial.images[static_cast<std::size_t>(c.dim)];
    for (int other = 0; other < static_cast<int>(same_dim.size()); ++other)
      if (other != c.index && same_dim[static_cast<std::size_t>(other)] == e) return false;
    return true;
  };
  options.limit = 1;
  auto maps = hom(a, x, options);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

SSet quotient(const SSet& x, const SSet& a) {
  if (a.total_cells() == 0) throw ValidationError("cannot collapse an empty subcomplex");
  const auto embedding = find_embedding(a, x);
  if (!embedding) throw ValidationError("subcomplex does not embed into the ambient simplicial set");
  Subcomplex sub;
  for (int n = 0; n <= x.dimension(); ++n) sub.cells.emplace_back(x.cell_count(n), false);
  for (int n = 0; n <= a.dimension(); ++n)
    for (int c = 0; c < static_cast<int>(a.cell_count(n)); ++c) {
      const auto& s = x.level(n)[(*embedding)(CellId{n, c})];
      sub.cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(s.cell.index)] = true;
    }
  return quotient(x, sub);
}

Elem IndexedMaps::index_of(const SMap& f) const {
  const auto it = index.find(f);
  if (it == index.end()) throw ValidationError("map is not in the enumerated hom-set");
  return it->second;
}

Cotensor::Cotensor(std::shared_ptr<const SimplicialObject> x, SSet k, HomOptions options)
    : x_(std::move(x)), k_(std::move(k)), options_(std::move(options)), cache_(std::make_shared<Cache>()) {}

const Product& Cotensor::domain(int n) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->domains[n];
  if (!slot) slot = std::make_unique<Product>(simplex(n), k_);
  return *slot;
}

const IndexedMaps& Cotensor::level(int n) const {
  const Product& dom = domain(n);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->levels.find(n); it != cache_->levels.end()) return *it->second;
  }
  // Enumerate outside the lock; concurrent callers may race to fill the slot
  // but compute equal values, and the first one wins.
  auto level = std::make_unique<IndexedMaps>();
  level->maps = hom(dom.sset(), *x_, options_);
  for (Elem e = 0; e < level->maps.size(); ++e) level->index.emplace(level->maps[e], e);
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->levels[n];
  if (!slot) slot = std::move(level);
  return *slot;
}

SMap Cotensor::precompose(const OrdinalMap& beta, const SMap& g) const {
  const int m = beta.dom();
  const int n = beta.cod();
  const Product& from = domain(m);
  const Product& to = domain(n);
  const SSet& cells = from.sset();
  SMap out = blank_map(cells);
  for (int p = 0; p <= cells.dimension(); ++p)
    for (int c = 0; c < static_cast<int>(cells.cell_count(p)); ++c) {
      const auto& [theta, kappa] = from.components(CellId{p, c});
      const auto moved = standard_simplex(n, compose(beta, standard_map(m, theta)));
      out.images[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] =
          evaluate(*x_, g, to.simplex_of(moved, kappa));
    }
  return out;
}

Elem Cotensor::act(const OrdinalMap& beta, Elem g) const {
  const auto& source = level(beta.cod());
  return level(beta.dom()).index_of(precompose(beta, source.maps[g]));
}

Elem Cotensor::constant(int n, Elem x) const {
  const Product& dom = domain(n);
  const SSet& cells = dom.sset();
  SMap out = blank_map(cells);
  for (int p = 0; p <= cells.dimension(); ++p)
    for (int c = 0; c < static_cast<int>(cells.cell_count(p)); ++c) {
      const auto& theta = dom.components(CellId{p, c}).first;
      out.images[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] = x_->act(standard_map(n, theta), x);
    }
  return level(n).index_of(out);
}

Elem along_exponent(const Cotensor& from, const Cotensor& to, const SMap& h, int n, Elem g) {
  const Product& source = to.domain(n);
  const Product& target = from.domain(n);
  const SMap& gm = from.level(n).maps[g];
  const SSet& cells = source.sset();
  SMap out = blank_map(cells);
  for (int p = 0; p <= cells.dimension(); ++p)
    for (int c = 0; c < static_cast<int>(cells.cell_count(p)); ++c) {
      const auto& [theta, j] = source.components(CellId{p, c});
      const auto& k = from.exponent().level(p)[evaluate(from.exponent(), h, j)];
      out.images[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] =
          evaluate(from.base(), gm, target.simplex_of(theta, k));
    }
  return to.level(n).index_of(out);
}

}  // namespace declab
