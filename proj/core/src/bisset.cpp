#include "declab/bisset.hpp"

#include <algorithm>

#include "declab/error.hpp"
#include "search.hpp"

namespace declab {

std::string BiSimplex::to_string() const {
  return "bicell(" + std::to_string(cell) + ")" + hdeg.to_string() + "x" + vdeg.to_string();
}

BiSSet::BiSSet() : BiSSet(std::vector<BiCell>{}) {}

BiSSet::BiSSet(std::vector<BiCell> cells)
    : data_(std::make_shared<Data>(Data{std::move(cells)})), cache_(std::make_shared<Cache>()) {
  validate();
}

BiSimplex BiSSet::nondegenerate(std::size_t id) const {
  const auto& c = cell(id);
  return BiSimplex{id, OrdinalMap::identity(c.p), OrdinalMap::identity(c.q)};
}

BiSimplex BiSSet::act(const OrdinalMap& horizontal, const OrdinalMap& vertical, const BiSimplex& b) const {
  if (horizontal.cod() != b.hdeg.dom() || vertical.cod() != b.vdeg.dom())
    throw PreconditionError("cannot act by " + horizontal.to_string() + "x" + vertical.to_string() + " on " + b.to_string());
  if (horizontal.dom() < 0 || vertical.dom() < 0) throw PreconditionError("bisimplicial sets have no level -1");
  auto [hmono, hepi] = ez_factor(compose(b.hdeg, horizontal));
  auto [vmono, vepi] = ez_factor(compose(b.vdeg, vertical));
  if (!hmono.is_identity()) {
    const auto [i, rest] = peel_coface(hmono);
    return act(compose(rest, hepi), compose(vmono, vepi), cell(b.cell).hfaces[static_cast<std::size_t>(i)]);
  }
  if (!vmono.is_identity()) {
    const auto [i, rest] = peel_coface(vmono);
    return act(hepi, compose(rest, vepi), cell(b.cell).vfaces[static_cast<std::size_t>(i)]);
  }
  return BiSimplex{b.cell, std::move(hepi), std::move(vepi)};
}

const BiSSet::Level& BiSSet::level_data(int k, int l) const {
  if (k < 0 || l < 0) throw PreconditionError("negative bisimplicial level");
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->levels[{k, l}];
  if (!slot) {
    auto level = std::make_unique<Level>();
    for (std::size_t id = 0; id < cells().size(); ++id) {
      const auto& c = cells()[id];
      if (c.p > k || c.q > l) continue;
      const auto hs = enumerate_surjections(Ordinal(k), Ordinal(c.p));
      const auto vs = enumerate_surjections(Ordinal(l), Ordinal(c.q));
      for (const auto& h : hs)
        for (const auto& v : vs) level->simplices.push_back(BiSimplex{id, h, v});
    }
    for (Elem e = 0; e < level->simplices.size(); ++e) level->index.emplace(level->simplices[e], e);
    slot = std::move(level);
  }
  return *slot;
}

const std::vector<BiSimplex>& BiSSet::level(int k, int l) const { return level_data(k, l).simplices; }

Elem BiSSet::index_of(int k, int l, const BiSimplex& b) const {
  const auto& index = level_data(k, l).index;
  const auto it = index.find(b);
  if (it == index.end()) throw ValidationError("bisimplex " + b.to_string() + " is not in this bisimplicial set");
  return it->second;
}

Elem BiSSet::act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const {
  const auto& b = level(horizontal.cod(), vertical.cod())[x];
  return index_of(horizontal.dom(), vertical.dom(), act(horizontal, vertical, b));
}

void BiSSet::validate() const {
  const auto& cs = cells();
  auto check_face = [&](std::size_t id, const BiSimplex& f, int p, int q) {
    if (f.cell >= id) throw ValidationError("bicell " + std::to_string(id) + " has a face on a later bicell");
    const auto& target = cs[f.cell];
    if (f.hdeg.dom() != p || f.hdeg.cod() != target.p || !f.hdeg.is_surjective() || f.vdeg.dom() != q ||
        f.vdeg.cod() != target.q || !f.vdeg.is_surjective())
      throw ValidationError("bicell " + std::to_string(id) + " has a face not in normal form: " + f.to_string());
  };
  for (std::size_t id = 0; id < cs.size(); ++id) {
    const auto& c = cs[id];
    if (c.p < 0 || c.q < 0) throw ValidationError("bicell " + std::to_string(id) + " has negative bidegree");
    if (static_cast<int>(c.hfaces.size()) != (c.p == 0 ? 0 : c.p + 1) ||
        static_cast<int>(c.vfaces.size()) != (c.q == 0 ? 0 : c.q + 1))
      throw ValidationError("bicell " + std::to_string(id) + " has the wrong number of faces");
    for (const auto& f : c.hfaces) check_face(id, f, c.p - 1, c.q);
    for (const auto& f : c.vfaces) check_face(id, f, c.p, c.q - 1);
  }
  auto fail = [](std::size_t id, const std::string& which) {
    throw ValidationError("bicell " + std::to_string(id) + " violates the " + which + " identities");
  };
  for (std::size_t id = 0; id < cs.size(); ++id) {
    const auto& c = cs[id];
    const auto hid = OrdinalMap::identity(c.p);
    const auto vid = OrdinalMap::identity(c.q);
    for (int j = 1; j <= c.p && c.p >= 2; ++j)
      for (int i = 0; i < j; ++i)
        if (act(coface(c.p - 1, i), vid, c.hfaces[static_cast<std::size_t>(j)]) !=
            act(coface(c.p - 1, j - 1), vid, c.hfaces[static_cast<std::size_t>(i)]))
          fail(id, "horizontal");
    for (int j = 1; j <= c.q && c.q >= 2; ++j)
      for (int i = 0; i < j; ++i)
        if (act(hid, coface(c.q - 1, i), c.vfaces[static_cast<std::size_t>(j)]) !=
            act(hid, coface(c.q - 1, j - 1), c.vfaces[static_cast<std::size_t>(i)]))
          fail(id, "vertical");
    if (c.p >= 1 && c.q >= 1)
      for (int i = 0; i <= c.p; ++i)
        for (int j = 0; j <= c.q; ++j)
          if (act(coface(c.p, i), OrdinalMap::identity(c.q - 1), c.vfaces[static_cast<std::size_t>(j)]) !=
              act(OrdinalMap::identity(c.p - 1), coface(c.q, j), c.hfaces[static_cast<std::size_t>(i)]))
            fail(id, "mixed");
  }
}

BiSSet external_product(const SSet& x, const SSet& y) {
  struct Key {
    CellId a, b;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> order;
  for (int total = 0; total <= x.dimension() + y.dimension(); ++total)
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      for (int a = 0; a < static_cast<int>(x.cell_count(p)); ++a)
        for (int b = 0; b < static_cast<int>(y.cell_count(q)); ++b) order.push_back(Key{CellId{p, a}, CellId{q, b}});
    }
  std::map<Key, std::size_t> index;
  for (std::size_t id = 0; id < order.size(); ++id) index.emplace(order[id], id);

  std::vector<BiCell> cells;
  for (const auto& key : order) {
    BiCell c;
    c.p = key.a.dim;
    c.q = key.b.dim;
    for (int i = 0; c.p > 0 && i <= c.p; ++i) {
      const auto& f = x.face(key.a, i);
      c.hfaces.push_back(BiSimplex{index.at(Key{f.cell, key.b}), f.deg, OrdinalMap::identity(c.q)});
    }
    for (int j = 0; c.q > 0 && j <= c.q; ++j) {
      const auto& f = y.face(key.b, j);
      c.vfaces.push_back(BiSimplex{index.at(Key{key.a, f.cell}), OrdinalMap::identity(c.p), f.deg});
    }
    cells.push_back(std::move(c));
  }
  return BiSSet(std::move(cells));
}

std::shared_ptr<const Decalage> dec(std::shared_ptr<const SimplicialObject> x) {
  return std::make_shared<const Decalage>(std::move(x));
}

std::shared_ptr<const Decalage> dec(const SSet& x) { return dec(std::make_shared<const SSet>(x)); }

namespace {

OrdinalMap block(const OrdinalMap& theta, int from, int count) {
  return OrdinalMap(count - 1, theta.cod(),
                    std::vector<int>(theta.values().begin() + from, theta.values().begin() + from + count));
}

}  // namespace

DecSimplex::DecSimplex(int n) : n_(n) {
  if (n < 0) throw PreconditionError("Dec simplex(n) needs n >= 0");
  struct Entry {
    int p, q;
    OrdinalMap theta;
  };
  std::vector<Entry> entries;
  for (int total = 0; total <= 2 * n; ++total)
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      for (const auto& a : enumerate_injections(Ordinal(p), Ordinal(n)))
        for (const auto& b : enumerate_injections(Ordinal(q), Ordinal(n))) {
          if (a(p) > b(0)) continue;
          std::vector<int> v = a.values();
          v.insert(v.end(), b.values().begin(), b.values().end());
          entries.push_back(Entry{p, q, OrdinalMap(p + 1 + q, n, std::move(v))});
        }
    }
  std::map<std::pair<int, OrdinalMap>, std::size_t> by_split;
  for (std::size_t id = 0; id < entries.size(); ++id) by_split.emplace(std::pair{entries[id].p, entries[id].theta}, id);

  std::vector<BiCell> cells;
  for (const auto& e : entries) {
    BiCell c;
    c.p = e.p;
    c.q = e.q;
    for (int i = 0; c.p > 0 && i <= c.p; ++i) {
      const auto face = compose(e.theta, ordinal_sum(coface(c.p, i), OrdinalMap::identity(c.q)));
      c.hfaces.push_back(BiSimplex{by_split.at({c.p - 1, face}), OrdinalMap::identity(c.p - 1), OrdinalMap::identity(c.q)});
    }
    for (int j = 0; c.q > 0 && j <= c.q; ++j) {
      const auto face = compose(e.theta, ordinal_sum(OrdinalMap::identity(c.p), coface(c.q, j)));
      c.vfaces.push_back(BiSimplex{by_split.at({c.p, face}), OrdinalMap::identity(c.p), OrdinalMap::identity(c.q - 1)});
    }
    cells.push_back(std::move(c));
    maps_.push_back(e.theta);
  }
  bisset_ = BiSSet(std::move(cells));
  by_split_ = std::move(by_split);
}

BiSimplex DecSimplex::bisimplex_of(int k, const OrdinalMap& theta) const {
  const int l = theta.dom() - k - 1;
  if (k < 0 || l < 0 || theta.cod() != n_) throw PreconditionError("not an element of Dec simplex(n): " + theta.to_string());
  auto [amono, aepi] = ez_factor(block(theta, 0, k + 1));
  auto [bmono, bepi] = ez_factor(block(theta, k + 1, l + 1));
  std::vector<int> v = amono.values();
  v.insert(v.end(), bmono.values().begin(), bmono.values().end());
  const int p = amono.dom();
  const int q = bmono.dom();
  const auto id = by_split_.at({p, OrdinalMap(p + 1 + q, n_, std::move(v))});
  return BiSimplex{id, std::move(aepi), std::move(bepi)};
}

Elem evaluate(const BisimplicialObject& target, const BiSMap& f, const BiSimplex& b) {
  const Elem image = f.images[b.cell];
  if (b.is_nondegenerate()) return image;
  return target.act(b.hdeg, b.vdeg, image);
}

bool is_bisimplicial(const BiSSet& source, const BisimplicialObject& target, const BiSMap& f) {
  if (f.images.size() != source.cells().size()) return false;
  for (std::size_t id = 0; id < source.cells().size(); ++id) {
    const auto& c = source.cell(id);
    const Elem x = f.images[id];
    if (x >= target.size(c.p, c.q)) return false;
    for (int i = 0; c.p > 0 && i <= c.p; ++i)
      if (target.act(coface(c.p, i), OrdinalMap::identity(c.q), x) != evaluate(target, f, c.hfaces[static_cast<std::size_t>(i)]))
        return false;
    for (int j = 0; c.q > 0 && j <= c.q; ++j)
      if (target.act(OrdinalMap::identity(c.p), coface(c.q, j), x) != evaluate(target, f, c.vfaces[static_cast<std::size_t>(j)]))
        return false;
  }
  return true;
}

std::vector<BiSMap> hom(const BiSSet& a, const BisimplicialObject& y, const HomOptions& options) {
  const auto& cells = a.cells();
  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> hface_tables;
  std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> vface_tables;
  for (const auto& c : cells) {
    const std::pair key{c.p, c.q};
    if (c.p > 0 && !hface_tables.contains(key)) {
      auto& t = hface_tables[key];
      for (int i = 0; i <= c.p; ++i) {
        auto& row = t.emplace_back(y.size(c.p, c.q));
        const auto d = coface(c.p, i);
        const auto id = OrdinalMap::identity(c.q);
        for (Elem x = 0; x < row.size(); ++x) row[x] = y.act(d, id, x);
      }
    }
    if (c.q > 0 && !vface_tables.contains(key)) {
      auto& t = vface_tables[key];
      for (int j = 0; j <= c.q; ++j) {
        auto& row = t.emplace_back(y.size(c.p, c.q));
        const auto d = coface(c.q, j);
        const auto id = OrdinalMap::identity(c.p);
        for (Elem x = 0; x < row.size(); ++x) row[x] = y.act(id, d, x);
      }
    }
  }

  detail::SearchProblem problem;
  problem.limit = options.limit;
  problem.max_maps = options.max_maps;
  auto edge = [&y](const std::vector<Elem>& table, const BiSimplex& f) -> detail::FaceEdge {
    if (f.is_nondegenerate()) return {f.cell, [&table](Elem x) -> std::optional<Elem> { return table[x]; }};
    return {f.cell, [&table, &y, f, hs = detail::first_section(f.hdeg), vs = detail::first_section(f.vdeg)](Elem x) -> std::optional<Elem> {
              const Elem face = table[x];
              const Elem lifted = y.act(hs, vs, face);
              if (y.act(f.hdeg, f.vdeg, lifted) != face) return std::nullopt;
              return lifted;
            }};
  };
  for (const auto& c : cells) {
    problem.candidates.push_back(y.size(c.p, c.q));
    auto& out = problem.edges.emplace_back();
    for (std::size_t i = 0; i < c.hfaces.size(); ++i) out.push_back(edge(hface_tables.at({c.p, c.q})[i], c.hfaces[i]));
    for (std::size_t j = 0; j < c.vfaces.size(); ++j) out.push_back(edge(vface_tables.at({c.p, c.q})[j], c.vfaces[j]));
  }
  std::vector<BiSMap> out;
  for (auto& image : detail::search_maps(problem)) out.push_back(BiSMap{std::move(image)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace declab
