#include "declab/sset.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "declab/error.hpp"

namespace declab {

namespace {

std::string cell_name(CellId c) { return "cell(" + std::to_string(c.dim) + "," + std::to_string(c.index) + ")"; }

}  // namespace

std::string Simplex::to_string() const { return cell_name(cell) + deg.to_string(); }

SSet::SSet() : SSet(FaceTable{}) {}

SSet::SSet(FaceTable faces)
    : data_(std::make_shared<Data>(Data{std::move(faces)})), cache_(std::make_shared<Cache>()) {
  validate();
}

SSet SSet::unchecked(FaceTable faces) {
  SSet x = SSet();
  x.data_ = std::make_shared<Data>(Data{std::move(faces)});
  return x;
}

int SSet::dimension() const {
  for (int n = static_cast<int>(data_->faces.size()) - 1; n >= 0; --n)
    if (!data_->faces[static_cast<std::size_t>(n)].empty()) return n;
  return -1;
}

std::size_t SSet::cell_count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(data_->faces.size())) return 0;
  return data_->faces[static_cast<std::size_t>(dim)].size();
}

std::size_t SSet::total_cells() const {
  std::size_t total = 0;
  for (const auto& cells : data_->faces) total += cells.size();
  return total;
}

const Simplex& SSet::face(CellId cell, int i) const {
  return data_->faces[static_cast<std::size_t>(cell.dim)][static_cast<std::size_t>(cell.index)]
                     [static_cast<std::size_t>(i)];
}

Simplex SSet::cell(CellId id) const { return Simplex{id, OrdinalMap::identity(id.dim)}; }

Simplex SSet::face_along(CellId cell, const OrdinalMap& mono) const {
  if (mono.is_identity()) return this->cell(cell);
  const auto [i, rest] = peel_coface(mono);
  return act(rest, face(cell, i));
}

Simplex SSet::act(const OrdinalMap& beta, const Simplex& s) const {
  if (beta.cod() != s.dim())
    throw PreconditionError("cannot act by " + beta.to_string() + " on " + s.to_string());
  if (beta.dom() < 0) throw PreconditionError("simplicial sets have no level [-1]");
  const auto [mono, epi] = ez_factor(compose(s.deg, beta));
  Simplex r = face_along(s.cell, mono);
  return Simplex{r.cell, compose(r.deg, epi)};
}

const SSet::Level& SSet::level_data(int n) const {
  if (n < 0) throw PreconditionError("negative level " + std::to_string(n));
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->levels[n];
  if (!slot) {
    auto level = std::make_unique<Level>();
    for (int m = 0; m <= std::min(n, dimension()); ++m) {
      const auto surjections = enumerate_surjections(Ordinal(n), Ordinal(m));
      for (int c = 0; c < static_cast<int>(cell_count(m)); ++c)
        for (const auto& eta : surjections) level->simplices.push_back(Simplex{CellId{m, c}, eta});
    }
    for (Elem e = 0; e < level->simplices.size(); ++e) level->index.emplace(level->simplices[e], e);
    slot = std::move(level);
  }
  return *slot;
}

const std::vector<Simplex>& SSet::level(int n) const { return level_data(n).simplices; }

Elem SSet::index_of(const Simplex& s) const {
  const auto& index = level_data(s.dim()).index;
  auto it = index.find(s);
  if (it == index.end()) throw ValidationError("simplex " + s.to_string() + " is not in this simplicial set");
  return it->second;
}

Elem SSet::act(const OrdinalMap& beta, Elem x) const {
  return index_of(act(beta, level(beta.cod())[x]));
}

bool SSet::is_degenerate(int n, Elem x) const { return !level(n)[x].is_nondegenerate(); }

void SSet::validate() const {
  const auto& faces = data_->faces;
  for (int n = 0; n < static_cast<int>(faces.size()); ++n) {
    for (int c = 0; c < static_cast<int>(faces[static_cast<std::size_t>(n)].size()); ++c) {
      const CellId id{n, c};
      const auto& fs = faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
      if (static_cast<int>(fs.size()) != (n == 0 ? 0 : n + 1))
        throw ValidationError(cell_name(id) + " has " + std::to_string(fs.size()) + " faces");
      for (const auto& f : fs) {
        if (f.cell.dim < 0 || f.cell.dim > n - 1 || f.cell.index < 0 ||
            f.cell.index >= static_cast<int>(cell_count(f.cell.dim)))
          throw ValidationError(cell_name(id) + " has a face on a missing cell " + f.to_string());
        if (f.deg.dom() != n - 1 || f.deg.cod() != f.cell.dim || !f.deg.is_surjective())
          throw ValidationError(cell_name(id) + " has a face not in normal form: " + f.to_string());
      }
    }
  }
  // d_i d_j = d_{j-1} d_i for i < j.
  for (int n = 2; n < static_cast<int>(faces.size()); ++n) {
    for (int c = 0; c < static_cast<int>(faces[static_cast<std::size_t>(n)].size()); ++c) {
      const CellId id{n, c};
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          const auto lhs = act(coface(n - 1, i), face(id, j));
          const auto rhs = act(coface(n - 1, j - 1), face(id, i));
          if (lhs != rhs)
            throw ValidationError(cell_name(id) + " violates d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                  " = d_" + std::to_string(j - 1) + " d_" + std::to_string(i) + ": " +
                                  lhs.to_string() + " vs " + rhs.to_string());
        }
    }
  }
}

namespace {

const std::vector<OrdinalMap>& injections(int m, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<OrdinalMap>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, n}];
  if (slot.empty()) slot = enumerate_injections(Ordinal(m), Ordinal(n));
  return slot;
}

// The simplicial subset of simplex(n) spanned by the faces whose vertex sets
// pass `keep`; `keep` must be closed under passing to subsets.
template <typename Keep>
SSet nerve_of_faces(int n, Keep keep) {
  SSet::FaceTable faces(static_cast<std::size_t>(n + 1));
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    for (const auto& delta : injections(m, n)) {
      if (!keep(delta.values())) continue;
      std::vector<Simplex> fs;
      for (int i = 0; m > 0 && i <= m; ++i) {
        const auto f = compose(delta, coface(m, i));
        fs.push_back(Simplex{CellId{m - 1, index[static_cast<std::size_t>(m - 1)].at(f.values())},
                             OrdinalMap::identity(m - 1)});
      }
      auto& cells = faces[static_cast<std::size_t>(m)];
      index[static_cast<std::size_t>(m)].emplace(delta.values(), static_cast<int>(cells.size()));
      cells.push_back(std::move(fs));
    }
  }
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  return SSet(std::move(faces));
}

}  // namespace

SSet simplex(int n) {
  if (n < 0) throw PreconditionError("simplex(n) needs n >= 0");
  return nerve_of_faces(n, [](const std::vector<int>&) { return true; });
}

SSet boundary(int n) {
  if (n < 0) throw PreconditionError("boundary(n) needs n >= 0");
  return nerve_of_faces(n, [n](const std::vector<int>& v) { return static_cast<int>(v.size()) <= n; });
}

SSet horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw PreconditionError("horn(n,k) needs n >= 1 and 0 <= k <= n");
  return nerve_of_faces(n, [n, k](const std::vector<int>& v) {
    if (static_cast<int>(v.size()) == n + 1) return false;
    if (static_cast<int>(v.size()) == n) return std::find(v.begin(), v.end(), k) != v.end();
    return true;
  });
}

SSet disjoint_union(const SSet& x, const SSet& y) {
  const auto dims = std::max(x.face_table().size(), y.face_table().size());
  SSet::FaceTable faces(dims);
  for (std::size_t n = 0; n < dims; ++n) {
    if (n < x.face_table().size()) faces[n] = x.face_table()[n];
    if (n < y.face_table().size())
      for (auto fs : y.face_table()[n]) {
        for (auto& f : fs) f.cell.index += static_cast<int>(x.cell_count(f.cell.dim));
        faces[n].push_back(std::move(fs));
      }
  }
  return SSet(std::move(faces));
}

Simplex standard_simplex(int n, const OrdinalMap& theta) {
  if (theta.cod() != n || theta.dom() < 0) throw PreconditionError("not a simplex of simplex(n): " + theta.to_string());
  auto [mono, epi] = ez_factor(theta);
  const auto& cells = injections(mono.dom(), n);
  const auto it = std::lower_bound(cells.begin(), cells.end(), mono);
  return Simplex{CellId{mono.dom(), static_cast<int>(it - cells.begin())}, std::move(epi)};
}

OrdinalMap standard_map(int n, const Simplex& s) {
  return compose(injections(s.cell.dim, n)[static_cast<std::size_t>(s.cell.index)], s.deg);
}

Product::Product(const SSet& first, const SSet& second) : first_(first), second_(second) {
  const int top = (first.dimension() < 0 || second.dimension() < 0) ? -1 : first.dimension() + second.dimension();
  SSet::FaceTable faces(static_cast<std::size_t>(top + 1));
  components_.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    for (const auto& x : first.level(n))
      for (const auto& y : second.level(n)) {
        bool jointly_degenerate = false;
        for (int r = 0; r < n && !jointly_degenerate; ++r)
          jointly_degenerate = x.deg(r) == x.deg(r + 1) && y.deg(r) == y.deg(r + 1);
        if (jointly_degenerate) continue;
        std::vector<Simplex> fs;
        for (int i = 0; n > 0 && i <= n; ++i) {
          const auto d = coface(n, i);
          fs.push_back(simplex_of(first.act(d, x), second.act(d, y)));
        }
        const CellId id{n, static_cast<int>(components_[static_cast<std::size_t>(n)].size())};
        lookup_.emplace(std::pair{x, y}, id);
        components_[static_cast<std::size_t>(n)].emplace_back(x, y);
        faces[static_cast<std::size_t>(n)].push_back(std::move(fs));
      }
  }
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  sset_ = SSet(std::move(faces));
}

const std::pair<Simplex, Simplex>& Product::components(CellId cell) const {
  return components_[static_cast<std::size_t>(cell.dim)][static_cast<std::size_t>(cell.index)];
}

Simplex Product::simplex_of(const Simplex& x, const Simplex& y) const {
  if (x.dim() != y.dim()) throw PreconditionError("product simplex components of different dimension");
  const int n = x.dim();
  std::vector<int> joint(static_cast<std::size_t>(n + 1), 0);
  for (int r = 0; r < n; ++r) {
    const bool merge = x.deg(r) == x.deg(r + 1) && y.deg(r) == y.deg(r + 1);
    joint[static_cast<std::size_t>(r + 1)] = joint[static_cast<std::size_t>(r)] + (merge ? 0 : 1);
  }
  const int q = joint.back();
  std::vector<int> xv(static_cast<std::size_t>(q + 1));
  std::vector<int> yv(static_cast<std::size_t>(q + 1));
  for (int r = 0; r <= n; ++r) {
    xv[static_cast<std::size_t>(joint[static_cast<std::size_t>(r)])] = x.deg(r);
    yv[static_cast<std::size_t>(joint[static_cast<std::size_t>(r)])] = y.deg(r);
  }
  const Simplex xr{x.cell, OrdinalMap(q, x.deg.cod(), std::move(xv))};
  const Simplex yr{y.cell, OrdinalMap(q, y.deg.cod(), std::move(yv))};
  const auto it = lookup_.find({xr, yr});
  if (it == lookup_.end()) throw ValidationError("pair is not a simplex of the product");
  return Simplex{it->second, OrdinalMap(n, q, std::move(joint))};
}

std::pair<Simplex, Simplex> Product::split(const Simplex& s) const {
  const auto& [x, y] = components(s.cell);
  return {first_.act(s.deg, x), second_.act(s.deg, y)};
}

Product product(const SSet& x, const SSet& y) { return Product(x, y); }

bool Subcomplex::contains(CellId c) const {
  return c.dim < static_cast<int>(cells.size()) && cells[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
}

bool Subcomplex::empty() const {
  for (const auto& row : cells)
    if (std::find(row.begin(), row.end(), true) != row.end()) return false;
  return true;
}

SSet quotient(const SSet& x, const Subcomplex& a) {
  if (a.cells.size() > x.face_table().size()) throw ValidationError("subcomplex has cells beyond the dimension of X");
  for (std::size_t n = 0; n < a.cells.size(); ++n)
    if (a.cells[n].size() != x.cell_count(static_cast<int>(n)))
      throw ValidationError("subcomplex cell table does not match X in dimension " + std::to_string(n));
  if (a.empty()) throw ValidationError("cannot collapse an empty subcomplex");
  for (int n = 1; n < static_cast<int>(a.cells.size()); ++n)
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c)
      if (a.contains(CellId{n, c}))
        for (int i = 0; i <= n; ++i)
          if (!a.contains(x.face(CellId{n, c}, i).cell))
            throw ValidationError("subcomplex is not closed under faces at " + cell_name(CellId{n, c}));

  const auto& old_faces = x.face_table();
  std::vector<std::vector<int>> renumber(old_faces.size());
  SSet::FaceTable faces(old_faces.size());
  faces[0].emplace_back();  // the collapsed point
  for (std::size_t n = 0; n < old_faces.size(); ++n) {
    int next = n == 0 ? 1 : 0;
    for (int c = 0; c < static_cast<int>(old_faces[n].size()); ++c)
      renumber[n].push_back(a.contains(CellId{static_cast<int>(n), c}) ? -1 : next++);
  }
  for (std::size_t n = 0; n < old_faces.size(); ++n)
    for (int c = 0; c < static_cast<int>(old_faces[n].size()); ++c) {
      if (renumber[n][static_cast<std::size_t>(c)] < 0) continue;
      std::vector<Simplex> fs;
      for (const auto& f : old_faces[n][static_cast<std::size_t>(c)]) {
        const int target = renumber[static_cast<std::size_t>(f.cell.dim)][static_cast<std::size_t>(f.cell.index)];
        if (target < 0)
          fs.push_back(Simplex{CellId{0, 0}, OrdinalMap::constant(f.dim(), 0, 0)});
        else
          fs.push_back(Simplex{CellId{f.cell.dim, target}, f.deg});
      }
      faces[n].push_back(std::move(fs));
    }
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  return SSet(std::move(faces));
}

void print_sset(std::ostream& out, const SSet& x) {
  out << "SSET v1\n";
  std::vector<int> first_id;
  int next = 0;
  for (int n = 0; n <= x.dimension(); ++n) {
    first_id.push_back(next);
    next += static_cast<int>(x.cell_count(n));
  }
  for (int n = 0; n <= x.dimension(); ++n)
    for (int c = 0; c < static_cast<int>(x.cell_count(n)); ++c) {
      out << "cell " << first_id[static_cast<std::size_t>(n)] + c << " dim " << n << '\n';
      for (int i = 0; n > 0 && i <= n; ++i) {
        const auto& f = x.face(CellId{n, c}, i);
        out << "face " << i << " = (";
        for (std::size_t r = 0; r < f.deg.values().size(); ++r) out << (r ? " " : "") << f.deg.values()[r];
        out << ") " << first_id[static_cast<std::size_t>(f.cell.dim)] + f.cell.index << '\n';
      }
    }
}

std::string print_sset(const SSet& x) {
  std::ostringstream out;
  print_sset(out, x);
  return out.str();
}

SSet parse_sset(std::istream& in) {
  std::string line;
  std::size_t offset = 0;
  std::size_t line_start = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      line_start = offset;
      offset += line.size() + 1;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("missing SSET header", 0);
  {
    std::istringstream header(line);
    std::string magic, version;
    header >> magic >> version;
    if (magic != "SSET" || version != "v1") throw ParseError("expected header `SSET v1`", line_start);
  }

  SSet::FaceTable faces;
  std::vector<CellId> by_id;
  struct Pending {
    int id;
    int dim;
    std::vector<Simplex> faces;
  };
  std::optional<Pending> current;
  auto finish = [&](std::size_t where) {
    if (!current) return;
    const int expected = current->dim == 0 ? 0 : current->dim + 1;
    if (static_cast<int>(current->faces.size()) != expected)
      throw ParseError("cell " + std::to_string(current->id) + " needs " + std::to_string(expected) + " faces", where);
    if (faces.size() <= static_cast<std::size_t>(current->dim)) faces.resize(static_cast<std::size_t>(current->dim + 1));
    auto& cells = faces[static_cast<std::size_t>(current->dim)];
    by_id.push_back(CellId{current->dim, static_cast<int>(cells.size())});
    cells.push_back(std::move(current->faces));
    current.reset();
  };

  while (next_line()) {
    std::istringstream tokens(line);
    std::string keyword;
    tokens >> keyword;
    if (keyword == "cell") {
      finish(line_start);
      int id = 0, dim = 0;
      std::string dim_kw;
      if (!(tokens >> id >> dim_kw >> dim) || dim_kw != "dim") throw ParseError("malformed cell line", line_start);
      if (id != static_cast<int>(by_id.size())) throw ParseError("cell ids must be consecutive from 0", line_start);
      if (dim < 0 || (!by_id.empty() && dim < by_id.back().dim))
        throw ParseError("cells must be listed by nondecreasing dimension", line_start);
      current = Pending{id, dim, {}};
    } else if (keyword == "face") {
      if (!current) throw ParseError("face line before any cell", line_start);
      int i = 0;
      std::string eq;
      if (!(tokens >> i >> eq) || eq != "=") throw ParseError("malformed face line", line_start);
      if (i != static_cast<int>(current->faces.size())) throw ParseError("faces must be listed in order", line_start);
      const auto open = line.find('(');
      const auto close = line.find(')');
      if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("face degeneracy must be parenthesized", line_start);
      std::istringstream values(line.substr(open + 1, close - open - 1));
      std::vector<int> deg;
      for (int v; values >> v;) deg.push_back(v);
      std::istringstream rest(line.substr(close + 1));
      int target = -1;
      std::string extra;
      if (!(rest >> target) || (rest >> extra)) throw ParseError("face needs a single target cell id", line_start);
      if (target < 0 || target >= static_cast<int>(by_id.size()))
        throw ParseError("face target " + std::to_string(target) + " is not an earlier cell", line_start);
      const CellId cell = by_id[static_cast<std::size_t>(target)];
      try {
        current->faces.push_back(Simplex{cell, OrdinalMap(current->dim - 1, cell.dim, std::move(deg))});
      } catch (const PreconditionError& e) {
        throw ParseError(std::string("bad face degeneracy: ") + e.what(), line_start);
      }
    } else {
      throw ParseError("unknown record `" + keyword + "`", line_start);
    }
  }
  finish(offset);
  return SSet(std::move(faces));
}

SSet parse_sset(const std::string& text) {
  std::istringstream in(text);
  return parse_sset(in);
}

}  // namespace declab
