#include "selab/subgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "selab/errors.hpp"

namespace selab {

struct SubgroupAccess {
  static Subgroup make(GroupPtr parent, std::vector<Elem> elems) {
    return Subgroup(Subgroup::Unchecked{}, std::move(parent), std::move(elems));
  }
};

namespace {

Subgroup from_mask(const GroupPtr& x, const std::vector<bool>& mask) {
  std::vector<Elem> elems;
  for (Elem a = 0; a < mask.size(); ++a)
    if (mask[a]) elems.push_back(a);
  return SubgroupAccess::make(x, std::move(elems));
}

void same_parent(const Subgroup& a, const Subgroup& b, const char* op) {
  if (a.parent_ptr() != b.parent_ptr()) {
    throw InputError(std::string(op) + ": subgroups of different groups (" + a.parent().label() +
                     ", " + b.parent().label() + ")");
  }
}

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = v.size();
    for (Elem e : v) h = h * 1000003u ^ e;
    return h;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

Subgroup::Subgroup(Unchecked, GroupPtr parent, std::vector<Elem> elems)
    : parent_(std::move(parent)), elems_(std::move(elems)), mask_(parent_->order(), false) {
  for (Elem e : elems_) mask_[e] = true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elems)
    : parent_(std::move(parent)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  mask_.assign(parent_->order(), false);
  for (Elem e : elems_) {
    if (e >= parent_->order()) throw InputError("subgroup element out of range");
    mask_[e] = true;
  }
  if (elems_.empty() || elems_[0] != 0) throw ValidationError("contains identity", to_string());
  for (Elem a : elems_) {
    if (!mask_[parent_->inv(a)]) throw ValidationError("closed under inverses", std::to_string(a));
    for (Elem b : elems_) {
      if (!mask_[parent_->mul(a, b)]) {
        throw ValidationError("closed under multiplication",
                              "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
}

Subgroup Subgroup::trivial(GroupPtr parent) { return SubgroupAccess::make(std::move(parent), {0}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  for (Elem a = 0; a < all.size(); ++a) all[a] = a;
  return SubgroupAccess::make(std::move(parent), std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  same_parent(*this, other, "is_subset_of");
  return std::all_of(elems_.begin(), elems_.end(), [&](Elem a) { return other.contains(a); });
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? " " : "") << elems_[i];
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------

GenerateResult generate(const GroupPtr& x, std::span<const Elem> seed) {
  const FiniteGroup& g = *x;
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> current{0};
  in[0] = true;
  for (Elem s : seed) {
    if (s >= g.order()) throw InputError("generate: seed element out of range");
    if (!in[s]) {
      in[s] = true;
      current.push_back(s);
    }
  }
  std::size_t iterations = 0;
  while (true) {
    std::vector<Elem> next = current;
    std::vector<bool> next_in = in;
    for (Elem a : current) {
      Elem ia = g.inv(a);
      if (!next_in[ia]) {
        next_in[ia] = true;
        next.push_back(ia);
      }
      for (Elem b : current) {
        Elem ab = g.mul(a, b);
        if (!next_in[ab]) {
          next_in[ab] = true;
          next.push_back(ab);
        }
      }
    }
    if (next.size() == current.size()) break;
    ++iterations;
    current = std::move(next);
    in = std::move(next_in);
  }
  return {from_mask(x, in), iterations};
}

Subgroup meet(const Subgroup& h, const Subgroup& k) {
  same_parent(h, k, "meet");
  std::vector<Elem> out;
  std::set_intersection(h.elements().begin(), h.elements().end(), k.elements().begin(),
                        k.elements().end(), std::back_inserter(out));
  return SubgroupAccess::make(h.parent_ptr(), std::move(out));
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  same_parent(h, k, "join");
  if (k.is_subset_of(h)) return h;
  if (h.is_subset_of(k)) return k;
  std::vector<Elem> seed;
  std::set_union(h.elements().begin(), h.elements().end(), k.elements().begin(),
                 k.elements().end(), std::back_inserter(seed));
  return generated(h.parent_ptr(), seed);
}

Subgroup join_family(const GroupPtr& x, std::span<const Subgroup> family) {
  std::vector<bool> seen(x->order(), false);
  std::vector<Elem> seed;
  for (const auto& h : family) {
    if (h.parent_ptr() != x) throw InputError("join_family: subgroup of a different group");
    for (Elem a : h.elements()) {
      if (!seen[a]) {
        seen[a] = true;
        seed.push_back(a);
      }
    }
  }
  return generated(x, seed);
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& x, bool normal_only, std::size_t bound) {
  if (x->order() > bound) throw CapacityError("enumerate_subgroups", x->order(), bound);
  std::vector<Subgroup> found;
  std::unordered_set<std::vector<Elem>, VecHash> seen;
  auto add = [&](Subgroup s) {
    std::vector<Elem> key(s.elements().begin(), s.elements().end());
    if (seen.insert(std::move(key)).second) found.push_back(std::move(s));
  };
  std::vector<Subgroup> cyclics;
  for (Elem a = 0; a < x->order(); ++a) {
    Elem one[] = {a};
    Subgroup c = generated(x, one);
    std::vector<Elem> key(c.elements().begin(), c.elements().end());
    if (seen.count(key) == 0) {
      cyclics.push_back(c);
      add(std::move(c));
    }
  }
  // Every subgroup is a join of cyclic ones, so saturating under
  // "join with a cyclic subgroup" reaches the whole lattice.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclics) {
      if (c.is_subset_of(found[i])) continue;
      add(join(found[i], c));
    }
  }
  if (normal_only) {
    std::erase_if(found, [](const Subgroup& s) { return !is_normal(s); });
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem a : h.elements()) {
      if (!h.contains(g.conj(x, a))) return false;
    }
  }
  return true;
}

Subgroup normal_closure(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  std::vector<bool> mark(g.order(), false);
  std::vector<Elem> seed;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem a : s.elements()) {
      Elem c = g.conj(x, a);
      if (!mark[c]) {
        mark[c] = true;
        seed.push_back(c);
      }
    }
  }
  return generated(s.parent_ptr(), seed);
}

Subgroup higgins_commutator(const Subgroup& h, const Subgroup& k) {
  same_parent(h, k, "higgins_commutator");
  const FiniteGroup& g = h.parent();
  std::vector<bool> mark(g.order(), false);
  std::vector<Elem> seed;
  for (Elem a : h.elements()) {
    for (Elem b : k.elements()) {
      Elem c = g.commutator(a, b);
      if (!mark[c]) {
        mark[c] = true;
        seed.push_back(c);
      }
    }
  }
  return generated(h.parent_ptr(), seed);
}

Subgroup centralizer(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = std::all_of(s.elements().begin(), s.elements().end(),
                                [&](Elem a) { return g.mul(x, a) == g.mul(a, x); });
    if (commutes) out.push_back(x);
  }
  return SubgroupAccess::make(s.parent_ptr(), std::move(out));
}

Subgroup normal_core_by_conjugates(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    // a ∈ xSx⁻¹ for all x  ⟺  x⁻¹ a x ∈ S for all x
    bool in_all = true;
    for (Elem x = 0; x < g.order() && in_all; ++x) in_all = s.contains(g.conj(g.inv(x), a));
    if (in_all) out.push_back(a);
  }
  return SubgroupAccess::make(s.parent_ptr(), std::move(out));
}

Subgroup normal_core(const Subgroup& s) {
  // Every normal N ⊆ S is the join of the normal closures of its elements,
  // each of which lies in S; so joining the closures ⟨⟨a⟩⟩ ⊆ S over a ∈ S
  // gives the join of all normal subgroups contained in S.
  std::vector<Subgroup> contained;
  for (Elem a : s.elements()) {
    Elem one[] = {a};
    Subgroup c = normal_closure(generated(s.parent_ptr(), one));
    if (c.is_subset_of(s)) contained.push_back(std::move(c));
  }
  Subgroup core = join_family(s.parent_ptr(), contained);
  Subgroup oracle = normal_core_by_conjugates(s);
  if (!(core == oracle)) {
    throw ConsistencyError("normal_core: join of normals " + core.to_string() +
                           " != intersection of conjugates " + oracle.to_string() + " for S = " +
                           s.to_string() + " in " + s.parent().label());
  }
  return core;
}

// ---------------------------------------------------------------------------

Subgroup image(const GroupHom& f, const Subgroup& h) {
  if (h.parent_ptr() != f.dom_ptr()) throw InputError("image: subgroup not in the domain");
  std::vector<Elem> out;
  for (Elem a : h.elements()) out.push_back(f(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SubgroupAccess::make(f.cod_ptr(), std::move(out));
}

Subgroup image(const GroupHom& f) { return image(f, Subgroup::whole(f.dom_ptr())); }

Subgroup kernel(const GroupHom& f) {
  std::vector<Elem> out;
  for (Elem a = 0; a < f.dom().order(); ++a)
    if (f(a) == 0) out.push_back(a);
  return SubgroupAccess::make(f.dom_ptr(), std::move(out));
}

Subgroup preimage(const GroupHom& f, const Subgroup& k) {
  if (k.parent_ptr() != f.cod_ptr()) throw InputError("preimage: subgroup not in the codomain");
  std::vector<Elem> out;
  for (Elem a = 0; a < f.dom().order(); ++a)
    if (k.contains(f(a))) out.push_back(a);
  return SubgroupAccess::make(f.dom_ptr(), std::move(out));
}

Elem InducedGroup::local(Elem parent_elem) const {
  auto m = inclusion.map();
  auto it = std::lower_bound(m.begin(), m.end(), parent_elem);
  if (it == m.end() || *it != parent_elem) throw InputError("element not in the subgroup");
  return static_cast<Elem>(it - m.begin());
}

InducedGroup induced_group(const Subgroup& h, std::string label) {
  const FiniteGroup& g = h.parent();
  auto el = h.elements();
  const std::size_t m = el.size();
  std::vector<Elem> pos(g.order(), kUnassigned);
  for (Elem i = 0; i < m; ++i) pos[el[i]] = i;
  std::vector<Elem> table(m * m);
  std::vector<std::string> names;
  if (g.has_names()) names.reserve(m);
  for (Elem i = 0; i < m; ++i) {
    if (g.has_names()) names.push_back(g.element_name(el[i]));
    for (Elem j = 0; j < m; ++j) table[i * m + j] = pos[g.mul(el[i], el[j])];
  }
  if (label.empty()) label = g.label() + "{" + std::to_string(m) + "}";
  auto sub = FiniteGroup::from_table(m, std::move(table), std::move(label), std::move(names));
  return InducedGroup{sub, GroupHom(sub, h.parent_ptr(), std::vector<Elem>(el.begin(), el.end()))};
}

Quotient quotient(const Subgroup& n, std::string label) {
  if (!is_normal(n)) throw InputError("quotient: subgroup " + n.to_string() + " is not normal");
  const FiniteGroup& g = n.parent();
  // coset id of x = rank of min(xN) among all coset minima
  std::vector<Elem> rep(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem least = x;
    for (Elem a : n.elements()) least = std::min(least, g.mul(x, a));
    rep[x] = least;
  }
  std::vector<Elem> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Elem> proj(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    proj[x] = static_cast<Elem>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (Elem i = 0; i < q; ++i)
    for (Elem j = 0; j < q; ++j) table[i * q + j] = proj[g.mul(reps[i], reps[j])];
  if (label.empty()) label = g.label() + "/" + std::to_string(n.size());
  auto qg = FiniteGroup::from_table(q, std::move(table), std::move(label));
  return Quotient{qg, GroupHom(n.parent_ptr(), qg, std::move(proj))};
}

}  // namespace selab
