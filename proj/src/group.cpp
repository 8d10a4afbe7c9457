#include "selab/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "selab/errors.hpp"

namespace selab {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

std::vector<bool> closure_mask(const FiniteGroup& g, std::span<const Elem> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  for (Elem s : seed) {
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  }
  // Closed under right multiplication by seed elements is enough in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : seed) {
      Elem p = g.mul(members[i], s);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  }
  return in;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

void validate_group_table(std::size_t n, std::span<const Elem> mul) {
  if (n == 0) throw ValidationError("non-empty carrier", "order 0");
  if (mul.size() != n * n) {
    throw ValidationError("square table", std::to_string(mul.size()) + " entries for order " +
                                              std::to_string(n));
  }
  for (std::size_t i = 0; i < mul.size(); ++i) {
    if (mul[i] >= n) {
      throw ValidationError("closure", "row " + std::to_string(i / n) + " column " +
                                           std::to_string(i % n) + " holds " +
                                           std::to_string(mul[i]));
    }
  }
  auto at = [&](Elem a, Elem b) { return mul[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      throw ValidationError("identity", "element " + std::to_string(a));
    }
  }
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) throw ValidationError("inverses", "element " + std::to_string(a));
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem ab = at(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw ValidationError("associativity", triple(a, b, c));
        }
      }
    }
  }
}

GroupPtr FiniteGroup::from_table(std::size_t order, std::vector<Elem> mul, std::string label,
                                 std::vector<std::string> names) {
  validate_group_table(order, mul);
  if (!names.empty() && names.size() != order) {
    throw InputError("element name list has wrong length");
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = order;
  g->mul_ = std::move(mul);
  g->label_ = std::move(label);
  g->names_ = std::move(names);
  g->inv_.resize(order);
  g->orders_.resize(order);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      if (g->mul(a, b) == 0) {
        g->inv_[a] = b;
        break;
      }
    }
    std::size_t k = 1;
    for (Elem p = a; p != 0; p = g->mul(p, a)) ++k;
    g->orders_[a] = k;
  }
  return g;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::string FiniteGroup::element_name(Elem a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

std::optional<Elem> FiniteGroup::find_element(std::string_view name) const {
  for (Elem a = 0; a < names_.size(); ++a) {
    if (names_[a] == name) return a;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool is_homomorphism(std::span<const Elem> map, const FiniteGroup& dom, const FiniteGroup& cod) {
  require(map.size() == dom.order(), "homomorphism table length " + std::to_string(map.size()) +
                                         " does not match domain order " +
                                         std::to_string(dom.order()));
  for (Elem v : map) require(v < cod.order(), "homomorphism image out of range");
  if (map[0] != 0) return false;
  for (Elem a = 0; a < dom.order(); ++a) {
    for (Elem b = 0; b < dom.order(); ++b) {
      if (map[dom.mul(a, b)] != cod.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

GroupHom::GroupHom(GroupPtr dom, GroupPtr cod, std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (!is_homomorphism(map_, *dom_, *cod_)) {
    throw ValidationError("homomorphism", dom_->label() + " -> " + cod_->label());
  }
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<Elem> map(g->order());
  std::iota(map.begin(), map.end(), Elem{0});
  return GroupHom(Unchecked{}, g, g, std::move(map));
}

GroupHom GroupHom::zero(GroupPtr dom, GroupPtr cod) {
  std::vector<Elem> map(dom->order(), 0);
  return GroupHom(Unchecked{}, std::move(dom), std::move(cod), std::move(map));
}

bool GroupHom::is_injective() const {
  std::vector<bool> seen(cod_->order(), false);
  for (Elem v : map_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> seen(cod_->order(), false);
  for (Elem v : map_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  require(f.cod_ == g.dom_, "compose: codomain/domain mismatch (" + f.cod().label() + " vs " +
                                g.dom().label() + ")");
  std::vector<Elem> map(f.dom().order());
  for (Elem a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return GroupHom(GroupHom::Unchecked{}, f.dom_, g.cod_, std::move(map));
}

GroupIso::GroupIso(GroupHom h) : hom_(std::move(h)) {
  if (hom_.dom().order() != hom_.cod().order() || !hom_.is_injective()) {
    throw ValidationError("bijectivity", hom_.dom().label() + " -> " + hom_.cod().label());
  }
  inverse_.resize(hom_.dom().order());
  for (Elem a = 0; a < inverse_.size(); ++a) inverse_[hom_(a)] = a;
}

GroupHom GroupIso::inverse_hom() const {
  return GroupHom(GroupHom::Unchecked{}, hom_.cod_ptr(), hom_.dom_ptr(), inverse_);
}

// ---------------------------------------------------------------------------
// Generators and extension

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<bool> in = closure_mask(g, gens);
  while (std::find(in.begin(), in.end(), false) != in.end()) {
    Elem best = 0;
    std::size_t best_order = 0;
    for (Elem a = 0; a < g.order(); ++a) {
      if (!in[a] && g.element_order(a) > best_order) {
        best = a;
        best_order = g.element_order(a);
      }
    }
    gens.push_back(best);
    in = closure_mask(g, gens);
  }
  return gens;
}

std::optional<std::vector<Elem>> extend_to_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                                               std::span<const Elem> gens,
                                               std::span<const Elem> images) {
  std::vector<Elem> map(dom.order(), kUnassigned);
  map[0] = 0;
  std::vector<Elem> queue{0};
  // map(x·g) = map(x)·img(g) checked on every edge of the Cayley graph of ⟨gens⟩.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = dom.mul(x, gens[j]);
      Elem v = cod.mul(map[x], images[j]);
      if (map[y] == kUnassigned) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  return map;
}

namespace {

/// Backtracks over images of `gens`; `candidates[j]` lists allowed images for
/// gens[j]. Calls `emit` for every complete consistent assignment.
template <typename Accept, typename Emit>
void backtrack_images(const FiniteGroup& dom, const FiniteGroup& cod, std::span<const Elem> gens,
                      const std::vector<std::vector<Elem>>& candidates, Accept&& accept_partial,
                      Emit&& emit) {
  std::vector<Elem> images;
  images.reserve(gens.size());
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      auto map = extend_to_hom(dom, cod, gens, images);
      if (map) emit(std::move(*map));
      return;
    }
    for (Elem c : candidates[depth]) {
      images.push_back(c);
      auto partial = extend_to_hom(dom, cod, gens.first(depth + 1), images);
      if (partial && accept_partial(*partial)) self(self, depth + 1);
      images.pop_back();
    }
  };
  rec(rec, 0);
}

bool partial_injective(std::span<const Elem> map, std::size_t cod_order) {
  std::vector<bool> seen(cod_order, false);
  for (Elem v : map) {
    if (v == kUnassigned) continue;
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::vector<GroupHom> hom_enumerate(const GroupPtr& x, const GroupPtr& y, std::size_t bound) {
  if (x->order() > bound) throw CapacityError("hom_enumerate", x->order(), bound);
  auto gens = generating_set(*x);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (Elem c = 0; c < y->order(); ++c) {
      if (x->element_order(gens[j]) % y->element_order(c) == 0) candidates[j].push_back(c);
    }
  }
  std::vector<std::vector<Elem>> maps;
  backtrack_images(
      *x, *y, gens, candidates, [](const std::vector<Elem>&) { return true; },
      [&](std::vector<Elem> m) { maps.push_back(std::move(m)); });
  std::sort(maps.begin(), maps.end());
  std::vector<GroupHom> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(x, y, std::move(m));
  return out;
}

std::vector<std::vector<Elem>> automorphisms_by_bijection_scan(const FiniteGroup& x) {
  std::vector<Elem> perm(x.order());
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::vector<std::vector<Elem>> out;
  do {
    if (is_homomorphism(perm, x, x)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<Elem> AutomorphismGroup::index_of(std::span<const Elem> map) const {
  for (Elem i = 0; i < automorphisms.size(); ++i) {
    auto m = automorphisms[i].hom().map();
    if (std::equal(m.begin(), m.end(), map.begin(), map.end())) return i;
  }
  return std::nullopt;
}

AutomorphismGroup automorphism_group(const GroupPtr& x, std::size_t bound) {
  if (x->order() > bound) throw CapacityError("automorphism_group", x->order(), bound);
  auto gens = generating_set(*x);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (Elem c = 0; c < x->order(); ++c) {
      if (x->element_order(c) == x->element_order(gens[j])) candidates[j].push_back(c);
    }
  }
  std::vector<std::vector<Elem>> maps;
  const std::size_t n = x->order();
  backtrack_images(
      *x, *x, gens, candidates,
      [n](const std::vector<Elem>& partial) { return partial_injective(partial, n); },
      [&](std::vector<Elem> m) {
        if (partial_injective(m, n)) maps.push_back(std::move(m));
      });
  std::sort(maps.begin(), maps.end());  // identity map is lexicographically least

  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < maps.size(); ++i) index.emplace(maps[i], i);
  const std::size_t m = maps.size();
  std::vector<Elem> table(m * m);
  std::vector<Elem> comp(n);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      for (Elem e = 0; e < n; ++e) comp[e] = maps[i][maps[j][e]];
      table[i * m + j] = index.at(comp);
    }
  }
  AutomorphismGroup out;
  out.x = x;
  out.group = FiniteGroup::from_table(m, std::move(table), "Aut(" + x->label() + ")");
  out.automorphisms.reserve(m);
  for (auto& mp : maps) out.automorphisms.emplace_back(GroupHom(x, x, std::move(mp)));
  return out;
}

std::optional<GroupIso> find_isomorphism(const GroupPtr& x, const GroupPtr& y) {
  const std::size_t n = x->order();
  if (n != y->order()) return std::nullopt;
  std::vector<std::size_t> ox(n + 1, 0), oy(n + 1, 0);
  for (Elem a = 0; a < n; ++a) {
    ++ox[x->element_order(a)];
    ++oy[y->element_order(a)];
  }
  if (ox != oy) return std::nullopt;
  auto gens = generating_set(*x);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (Elem c = 0; c < n; ++c) {
      if (y->element_order(c) == x->element_order(gens[j])) candidates[j].push_back(c);
    }
  }
  std::optional<std::vector<Elem>> found;
  backtrack_images(
      *x, *y, gens, candidates,
      [&](const std::vector<Elem>& partial) { return !found && partial_injective(partial, n); },
      [&](std::vector<Elem> m) {
        if (!found && partial_injective(m, n)) found = std::move(m);
      });
  if (!found) return std::nullopt;
  return GroupIso(GroupHom(x, y, std::move(*found)));
}

// ---------------------------------------------------------------------------
// Products

DirectProduct direct_product(const GroupPtr& x, const GroupPtr& y) {
  const std::size_t nx = x->order(), ny = y->order(), n = nx * ny;
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    Elem ax = a / ny, ay = a % ny;
    names[a] = "(" + x->element_name(ax) + "," + y->element_name(ay) + ")";
    for (Elem b = 0; b < n; ++b) {
      Elem bx = b / ny, by = b % ny;
      table[a * n + b] = static_cast<Elem>(x->mul(ax, bx) * ny + y->mul(ay, by));
    }
  }
  auto g = FiniteGroup::from_table(n, std::move(table), x->label() + "x" + y->label(),
                                   std::move(names));
  std::vector<Elem> i1(nx), i2(ny), p1(n), p2(n);
  for (Elem a = 0; a < nx; ++a) i1[a] = static_cast<Elem>(a * ny);
  for (Elem b = 0; b < ny; ++b) i2[b] = b;
  for (Elem a = 0; a < n; ++a) {
    p1[a] = a / ny;
    p2[a] = a % ny;
  }
  return DirectProduct{g,
                       x,
                       y,
                       GroupHom(x, g, std::move(i1)),
                       GroupHom(y, g, std::move(i2)),
                       GroupHom(g, x, std::move(p1)),
                       GroupHom(g, y, std::move(p2))};
}

GroupHom pairing(const GroupHom& f, const GroupHom& g, const DirectProduct& product) {
  require(f.dom_ptr() == g.dom_ptr(), "pairing: domains differ");
  require(f.cod_ptr() == product.left && g.cod_ptr() == product.right,
          "pairing: codomains do not match the product factors");
  std::vector<Elem> map(f.dom().order());
  for (Elem a = 0; a < map.size(); ++a) map[a] = product.pair(f(a), g(a));
  return GroupHom(f.dom_ptr(), product.group, std::move(map));
}

// ---------------------------------------------------------------------------
// Catalog constructors

GroupPtr cyclic(std::size_t n) {
  require(n >= 1, "cyclic(n) needs n >= 1");
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return FiniteGroup::from_table(n, std::move(table), "C" + std::to_string(n));
}

GroupPtr dihedral(std::size_t n) {
  require(n >= 3, "dihedral(n) needs n >= 3");
  // index k + n·f is r^k s^f, and s r = r^-1 s.
  const std::size_t order = 2 * n;
  std::vector<Elem> table(order * order);
  std::vector<std::string> names(order);
  for (Elem a = 0; a < order; ++a) {
    std::size_t ka = a % n, fa = a / n;
    std::string rot = ka == 0 ? "" : (ka == 1 ? "r" : "r^" + std::to_string(ka));
    names[a] = fa ? rot + "s" : (rot.empty() ? "e" : rot);
    for (Elem b = 0; b < order; ++b) {
      std::size_t kb = b % n, fb = b / n;
      std::size_t k = fa ? (ka + n - kb) % n : (ka + kb) % n;
      table[a * order + b] = static_cast<Elem>(k + n * ((fa + fb) % 2));
    }
  }
  return FiniteGroup::from_table(order, std::move(table), "D" + std::to_string(n),
                                 std::move(names));
}

namespace {

GroupPtr permutation_group(std::size_t n, bool even_only, std::string label) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, Elem> index;
  for (Elem i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  const std::size_t m = perms.size();
  std::vector<Elem> table(m * m);
  std::vector<int> c(n);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      // (a·b)(i) = a(b(i))
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a * m + b] = index.at(c);
    }
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (auto& q : perms) names.push_back(cycle_notation(q));
  return FiniteGroup::from_table(m, std::move(table), std::move(label), std::move(names));
}

}  // namespace

GroupPtr symmetric(std::size_t n) {
  require(n >= 1 && n <= 5, "symmetric(n) supports 1 <= n <= 5");
  return permutation_group(n, false, "S" + std::to_string(n));
}

GroupPtr alternating(std::size_t n) {
  require(n >= 1 && n <= 5, "alternating(n) supports 1 <= n <= 5");
  return permutation_group(n, true, "A" + std::to_string(n));
}

GroupPtr quaternion8() {
  // index 2u + s is (-1)^s·unit[u] with units 1, i, j, k.
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* unit_name[4] = {"1", "i", "j", "k"};
  std::vector<Elem> table(64);
  std::vector<std::string> names(8);
  for (Elem a = 0; a < 8; ++a) {
    names[a] = std::string(a % 2 ? "-" : "") + unit_name[a / 2];
    for (Elem b = 0; b < 8; ++b) {
      int u = unit_mul[a / 2][b / 2];
      int s = (static_cast<int>(a % 2) + static_cast<int>(b % 2) + sign_mul[a / 2][b / 2]) % 2;
      table[a * 8 + b] = static_cast<Elem>(2 * u + s);
    }
  }
  return FiniteGroup::from_table(8, std::move(table), "Q8", std::move(names));
}

// ---------------------------------------------------------------------------
// Cayley-table text format

GroupPtr read_cayley_table(std::istream& in, std::string label) {
  std::string keyword;
  std::size_t n = 0;
  if (!(in >> keyword >> n) || keyword != "order") {
    throw ValidationError("header", "expected `order n` on line 1");
  }
  std::vector<Elem> table;
  table.reserve(n * n);
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw ValidationError("closure", "negative entry " + std::to_string(v));
    table.push_back(static_cast<Elem>(v));
  }
  if (!in.eof()) throw ValidationError("square table", "non-numeric entry");
  return FiniteGroup::from_table(n, std::move(table), std::move(label));
}

GroupPtr load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Cayley table " + path);
  auto slash = path.find_last_of('/');
  std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
  if (auto dot = stem.find('.'); dot != std::string::npos) stem.resize(dot);
  return read_cayley_table(in, stem);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  out << "order " << g.order() << "\n";
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// Spec strings

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw InputError("expected a natural number, got '" + s + "'");
  }
  if (pos != s.size() || s.empty() || s[0] == '-') {
    throw InputError("expected a natural number, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::optional<std::pair<std::string, std::vector<std::string>>> split_call(std::string_view spec) {
  spec = trim(spec);
  auto open = spec.find('(');
  if (open == std::string_view::npos) return std::nullopt;
  if (spec.back() != ')') throw InputError("unbalanced parentheses in '" + std::string(spec) + "'");
  std::string head(trim(spec.substr(0, open)));
  std::string_view body = spec.substr(open + 1, spec.size() - open - 2);
  std::vector<std::string> args;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw InputError("unbalanced parentheses in '" + std::string(spec) + "'");
    if (c == ',' && depth == 0) {
      args.emplace_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InputError("unbalanced parentheses in '" + std::string(spec) + "'");
  if (!trim(body).empty() || !args.empty()) args.emplace_back(trim(body.substr(start)));
  return std::make_pair(std::move(head), std::move(args));
}

GroupPtr construct_group(std::string_view spec, const SpecExtension& extension) {
  auto call = split_call(spec);
  if (!call) {
    std::string word(trim(spec));
    if (word == "quaternion8") return quaternion8();
    throw InputError("unknown group spec '" + word + "'");
  }
  const auto& [head, args] = *call;
  if (extension) {
    if (auto g = extension(head, args)) return *g;
  }
  auto arity = [&](std::size_t k) {
    require(args.size() == k, head + " expects " + std::to_string(k) + " argument(s)");
  };
  if (head == "cyclic") return arity(1), cyclic(parse_size(args[0]));
  if (head == "dihedral") return arity(1), dihedral(parse_size(args[0]));
  if (head == "symmetric") return arity(1), symmetric(parse_size(args[0]));
  if (head == "alternating") return arity(1), alternating(parse_size(args[0]));
  if (head == "quaternion8") return arity(0), quaternion8();
  if (head == "direct_product") {
    arity(2);
    return direct_product(construct_group(args[0], extension), construct_group(args[1], extension))
        .group;
  }
  if (head == "from_table") {
    arity(1);
    std::string path = args[0];
    if (path.size() >= 2 && path.front() == '"' && path.back() == '"') {
      path = path.substr(1, path.size() - 2);
    }
    return load_cayley_table(path);
  }
  throw InputError("unknown group constructor '" + head + "'");
}

// ---------------------------------------------------------------------------
// Permutations

std::string cycle_notation(std::span<const int> perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::optional<std::vector<int>> parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  text = trim(text);
  if (text.empty()) return std::nullopt;
  // Cycles compose right to left, matching the group multiplication.
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') return std::nullopt;
    auto close = text.find(')', i);
    if (close == std::string_view::npos) return std::nullopt;
    std::vector<int> cyc;
    std::istringstream body{std::string(text.substr(i + 1, close - i - 1))};
    std::string tok;
    while (body >> tok) {
      for (char& c : tok)
        if (c == ',') c = ' ';
      std::istringstream parts(tok);
      int v = 0;
      while (parts >> v) {
        if (v < 1 || static_cast<std::size_t>(v) > degree) return std::nullopt;
        if (std::find(cyc.begin(), cyc.end(), v - 1) != cyc.end()) return std::nullopt;
        cyc.push_back(v - 1);
      }
      if (!parts.eof()) return std::nullopt;
    }
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<int> step(degree);
    std::iota(step.begin(), step.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k) step[cyc[k]] = cyc[(k + 1) % cyc.size()];
    std::vector<int> next(degree);
    for (std::size_t x = 0; x < degree; ++x) next[x] = step[perm[x]];
    perm = std::move(next);
  }
  return perm;
}

}  // namespace selab
