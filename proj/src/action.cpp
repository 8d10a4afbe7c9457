#include "selab/action.hpp"

#include <algorithm>
#include <sstream>

#include "selab/errors.hpp"

namespace selab {

namespace {

std::string witness(std::initializer_list<Elem> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (Elem x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

Subgroup subgroup_from_mask(const GroupPtr& x, const std::vector<bool>& mask) {
  std::vector<Elem> elems;
  for (Elem a = 0; a < mask.size(); ++a)
    if (mask[a]) elems.push_back(a);
  return Subgroup(x, std::move(elems));
}

}  // namespace

// ---------------------------------------------------------------------------
// BAction

BAction::BAction(GroupPtr b, GroupPtr x, std::vector<Elem> table)
    : b_(std::move(b)), x_(std::move(x)), table_(std::move(table)) {
  const std::size_t nb = b_->order(), nx = x_->order();
  if (table_.size() != nb * nx) {
    throw ValidationError("action table shape", std::to_string(table_.size()) + " entries for " +
                                                    std::to_string(nb) + "x" + std::to_string(nx));
  }
  for (Elem v : table_) {
    if (v >= nx) throw ValidationError("action table range", std::to_string(v));
  }
  for (Elem e = 0; e < nx; ++e) {
    if (apply(0, e) != e) throw ValidationError("unit law a(e,x) = x", witness({0, e}));
  }
  for (Elem g = 0; g < nb; ++g) {
    for (Elem u = 0; u < nx; ++u) {
      for (Elem w = 0; w < nx; ++w) {
        if (apply(g, x_->mul(u, w)) != x_->mul(apply(g, u), apply(g, w))) {
          throw ValidationError("a(b,xy) = a(b,x)a(b,y)", witness({g, u, w}));
        }
      }
    }
  }
  for (Elem g = 0; g < nb; ++g) {
    for (Elem h = 0; h < nb; ++h) {
      for (Elem e = 0; e < nx; ++e) {
        if (apply(g, apply(h, e)) != apply(b_->mul(g, h), e)) {
          throw ValidationError("a(b,a(b',x)) = a(bb',x)", witness({g, h, e}));
        }
      }
    }
  }
}

bool BAction::is_trivial() const {
  const std::size_t nx = x_->order();
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != i % nx) return false;
  return true;
}

GroupIso BAction::curried(Elem b) const {
  auto row = std::span<const Elem>(table_).subspan(b * x_->order(), x_->order());
  return GroupIso(GroupHom(x_, x_, std::vector<Elem>(row.begin(), row.end())));
}

GroupHom BAction::as_automorphism_hom(const AutomorphismGroup& aut) const {
  if (aut.x != x_) throw InputError("as_automorphism_hom: automorphism group of another group");
  std::vector<Elem> map(b_->order());
  for (Elem g = 0; g < b_->order(); ++g) {
    auto idx = aut.index_of(std::span<const Elem>(table_).subspan(g * x_->order(), x_->order()));
    if (!idx) throw ConsistencyError("action row is not a listed automorphism");
    map[g] = *idx;
  }
  return GroupHom(b_, aut.group, std::move(map));
}

Subgroup BAction::act_on(Elem b, const Subgroup& s) const {
  if (s.parent_ptr() != x_) throw InputError("act_on: subgroup of another group");
  std::vector<Elem> out;
  for (Elem e : s.elements()) out.push_back(apply(b, e));
  return Subgroup(x_, std::move(out));
}

bool BAction::is_invariant(const Subgroup& s) const {
  if (s.parent_ptr() != x_) throw InputError("is_invariant: subgroup of another group");
  for (Elem g = 0; g < b_->order(); ++g)
    for (Elem e : s.elements())
      if (!s.contains(apply(g, e))) return false;
  return true;
}

BAction trivial_action(GroupPtr b, GroupPtr x) {
  std::vector<Elem> table(b->order() * x->order());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Elem>(i % x->order());
  return BAction(std::move(b), std::move(x), std::move(table));
}

BAction action_from_hom(const GroupHom& h, const AutomorphismGroup& aut) {
  if (h.cod_ptr() != aut.group) throw InputError("action_from_hom: hom does not land in Aut(X)");
  const std::size_t nx = aut.x->order();
  std::vector<Elem> table(h.dom().order() * nx);
  for (Elem g = 0; g < h.dom().order(); ++g)
    for (Elem e = 0; e < nx; ++e) table[g * nx + e] = aut.evaluate(h(g), e);
  return BAction(h.dom_ptr(), aut.x, std::move(table));
}

BAction conjugation_action(const GroupPtr& x) {
  const std::size_t n = x->order();
  std::vector<Elem> table(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem e = 0; e < n; ++e) table[g * n + e] = x->conj(g, e);
  return BAction(x, x, std::move(table));
}

std::vector<BAction> enumerate_actions(const GroupPtr& b, const GroupPtr& x,
                                       std::size_t aut_bound) {
  auto aut = automorphism_group(x, aut_bound);
  std::vector<BAction> out;
  for (const auto& h : hom_enumerate(b, aut.group, b->order())) out.push_back(action_from_hom(h, aut));
  return out;
}

// ---------------------------------------------------------------------------
// SplitExtension

SplitExtension::SplitExtension(GroupHom embedding, GroupHom projection, GroupHom section)
    : embedding_(std::move(embedding)),
      projection_(std::move(projection)),
      section_(std::move(section)) {
  if (embedding_.cod_ptr() != projection_.dom_ptr() || section_.cod_ptr() != projection_.dom_ptr() ||
      section_.dom_ptr() != projection_.cod_ptr()) {
    throw InputError("split extension maps do not compose");
  }
  for (Elem b = 0; b < base().order(); ++b) {
    if (projection_(section_(b)) != b) {
      throw ValidationError("projection∘section = identity", std::to_string(b));
    }
  }
  if (!embedding_.is_injective()) throw ValidationError("embedding injective", kernel_group().label());
  Subgroup k = kernel_image();
  if (!(k == kernel(projection_))) {
    throw ValidationError("image(embedding) = kernel(projection)", k.to_string());
  }
  Subgroup s = section_image();
  if (!meet(k, s).is_trivial()) throw ValidationError("K meet B = 0", meet(k, s).to_string());
  if (!join(k, s).is_whole()) throw ValidationError("K join B = A", join(k, s).to_string());
  kernel_index_.assign(middle().order(), kUnassigned);
  for (Elem e = 0; e < kernel_group().order(); ++e) kernel_index_[embedding_(e)] = e;
}

SplitExtension semidirect_product(const BAction& act, std::string label) {
  const GroupPtr& x = act.target_ptr();
  const GroupPtr& b = act.acting_ptr();
  const std::size_t nx = x->order(), nb = b->order(), n = nx * nb;
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (Elem p = 0; p < n; ++p) {
    Elem px = p / nb, pb = p % nb;
    names[p] = "(" + x->element_name(px) + "," + b->element_name(pb) + ")";
    for (Elem q = 0; q < n; ++q) {
      Elem qx = q / nb, qb = q % nb;
      Elem rx = x->mul(px, act.apply(pb, qx));
      table[p * n + q] = static_cast<Elem>(rx * nb + b->mul(pb, qb));
    }
  }
  if (label.empty()) {
    label = act.is_trivial() ? x->label() + "x" + b->label() : x->label() + ":" + b->label();
  }
  auto a = FiniteGroup::from_table(n, std::move(table), std::move(label), std::move(names));
  std::vector<Elem> emb(nx), proj(n), sec(nb);
  for (Elem e = 0; e < nx; ++e) emb[e] = static_cast<Elem>(e * nb);
  for (Elem p = 0; p < n; ++p) proj[p] = p % nb;
  for (Elem g = 0; g < nb; ++g) sec[g] = g;
  return SplitExtension(GroupHom(x, a, std::move(emb)), GroupHom(a, b, std::move(proj)),
                        GroupHom(b, a, std::move(sec)));
}

BAction action_of_split_extension(const SplitExtension& ext) {
  const FiniteGroup& a = ext.middle();
  const std::size_t nb = ext.base().order(), nx = ext.kernel_group().order();
  std::vector<Elem> table(nb * nx);
  for (Elem g = 0; g < nb; ++g) {
    Elem s = ext.section()(g);
    for (Elem e = 0; e < nx; ++e) {
      Elem c = a.conj(s, ext.embedding()(e));
      Elem back = ext.kernel_preimage(c);
      if (back == kUnassigned) {
        throw ConsistencyError("conjugate of a kernel element left the kernel");
      }
      table[g * nx + e] = back;
    }
  }
  return BAction(ext.base_ptr(), ext.kernel_ptr(), std::move(table));
}

SemidirectComparison compare_with_semidirect(const SplitExtension& ext) {
  SplitExtension sdp = semidirect_product(action_of_split_extension(ext));
  const std::size_t nb = ext.base().order();
  std::vector<Elem> map(sdp.middle().order());
  for (Elem p = 0; p < map.size(); ++p) {
    map[p] = ext.middle().mul(ext.embedding()(p / nb), ext.section()(p % nb));
  }
  GroupIso iso(GroupHom(sdp.middle_ptr(), ext.middle_ptr(), std::move(map)));
  if (!(compose(iso.hom(), sdp.embedding()) == ext.embedding()) ||
      !(compose(ext.projection(), iso.hom()) == sdp.projection()) ||
      !(compose(iso.hom(), sdp.section()) == ext.section())) {
    throw ConsistencyError("semidirect comparison does not commute with the point structure");
  }
  return SemidirectComparison{std::move(sdp), std::move(iso)};
}

SplitExtension extension_from_decomposition(const Subgroup& k, const Subgroup& b) {
  if (k.parent_ptr() != b.parent_ptr()) throw InputError("decomposition: different parents");
  if (!is_normal(k)) throw InputError("decomposition: K is not normal");
  if (!meet(k, b).is_trivial()) throw InputError("decomposition: K meet B is not trivial");
  if (!join(k, b).is_whole()) throw InputError("decomposition: K join B is not the whole group");
  const FiniteGroup& x = k.parent();
  InducedGroup kg = induced_group(k, x.label() + ".K" + std::to_string(k.size()));
  InducedGroup bg = induced_group(b, x.label() + ".B" + std::to_string(b.size()));
  std::vector<Elem> proj(x.order());
  for (Elem e = 0; e < x.order(); ++e) {
    // e = κ·β with β ∈ B: the B-part is the unique β with e β⁻¹ ∈ K.
    for (Elem beta : b.elements()) {
      if (k.contains(x.mul(e, x.inv(beta)))) {
        proj[e] = bg.local(beta);
        break;
      }
    }
  }
  return SplitExtension(kg.inclusion, GroupHom(k.parent_ptr(), bg.group, std::move(proj)),
                        bg.inclusion);
}

SplitExtension change_of_base(const SplitExtension& ext, const GroupHom& f) {
  if (f.cod_ptr() != ext.base_ptr()) throw InputError("change_of_base: map does not land in the base");
  DirectProduct prod = direct_product(f.dom_ptr(), ext.middle_ptr());
  std::vector<Elem> members;
  for (Elem b = 0; b < f.dom().order(); ++b)
    for (Elem a = 0; a < ext.middle().order(); ++a)
      if (f(b) == ext.projection()(a)) members.push_back(prod.pair(b, a));
  InducedGroup m = induced_group(Subgroup(prod.group, std::move(members)),
                                 ext.middle().label() + "@" + f.dom().label());
  std::vector<Elem> emb(ext.kernel_group().order()), proj(m.group->order()),
      sec(f.dom().order());
  for (Elem e = 0; e < emb.size(); ++e) emb[e] = m.local(prod.pair(0, ext.embedding()(e)));
  for (Elem p = 0; p < proj.size(); ++p) proj[p] = prod.proj1(m.inclusion(p));
  for (Elem b = 0; b < sec.size(); ++b) sec[b] = m.local(prod.pair(b, ext.section()(f(b))));
  return SplitExtension(GroupHom(ext.kernel_ptr(), m.group, std::move(emb)),
                        GroupHom(m.group, f.dom_ptr(), std::move(proj)),
                        GroupHom(f.dom_ptr(), m.group, std::move(sec)));
}

FibreProduct fibre_product(const SplitExtension& e1, const SplitExtension& e2) {
  if (e1.base_ptr() != e2.base_ptr()) throw InputError("fibre_product: different bases");
  DirectProduct prod = direct_product(e1.middle_ptr(), e2.middle_ptr());
  DirectProduct kp = direct_product(e1.kernel_ptr(), e2.kernel_ptr());
  std::vector<Elem> members;
  for (Elem a = 0; a < e1.middle().order(); ++a)
    for (Elem c = 0; c < e2.middle().order(); ++c)
      if (e1.projection()(a) == e2.projection()(c)) members.push_back(prod.pair(a, c));
  InducedGroup m = induced_group(Subgroup(prod.group, std::move(members)),
                                 e1.middle().label() + "x_" + e1.base().label() +
                                     e2.middle().label());
  std::vector<Elem> emb(kp.group->order()), proj(m.group->order()), sec(e1.base().order());
  for (Elem e = 0; e < emb.size(); ++e) {
    emb[e] = m.local(prod.pair(e1.embedding()(kp.proj1(e)), e2.embedding()(kp.proj2(e))));
  }
  for (Elem p = 0; p < proj.size(); ++p) proj[p] = e1.projection()(prod.proj1(m.inclusion(p)));
  for (Elem b = 0; b < sec.size(); ++b) {
    sec[b] = m.local(prod.pair(e1.section()(b), e2.section()(b)));
  }
  SplitExtension ext(GroupHom(kp.group, m.group, std::move(emb)),
                     GroupHom(m.group, e1.base_ptr(), std::move(proj)),
                     GroupHom(e1.base_ptr(), m.group, std::move(sec)));
  return FibreProduct{std::move(ext), std::move(kp)};
}

// ---------------------------------------------------------------------------
// Cores

Subgroup action_core(const Subgroup& s, const BAction& act) {
  if (s.parent_ptr() != act.target_ptr()) throw InputError("action_core: S is not a subgroup of X");
  const auto gens = generating_set(act.acting());
  std::vector<bool> cur(s.parent().order(), false);
  for (Elem e : s.elements()) cur[e] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> next = cur;
    // Y ∩ a(g, Y): keep y iff a(g⁻¹, y) ∈ Y.
    for (Elem g : gens) {
      Elem gi = act.acting().inv(g);
      for (Elem e = 0; e < next.size(); ++e) {
        if (next[e] && !cur[act.apply(gi, e)]) next[e] = false;
      }
    }
    if (next != cur) {
      cur = std::move(next);
      changed = true;
    }
  }
  return subgroup_from_mask(s.parent_ptr(), cur);
}

Subgroup action_core_by_intersection(const Subgroup& s, const BAction& act) {
  if (s.parent_ptr() != act.target_ptr()) throw InputError("action_core: S is not a subgroup of X");
  Subgroup y = s;
  for (Elem g = 0; g < act.acting().order(); ++g) y = meet(y, act.act_on(g, s));
  return y;
}

Subgroup action_core_by_join(const Subgroup& s, const BAction& act, std::size_t bound) {
  if (s.parent_ptr() != act.target_ptr()) throw InputError("action_core: S is not a subgroup of X");
  std::vector<Subgroup> family;
  for (auto& h : enumerate_subgroups(s.parent_ptr(), false, bound)) {
    if (h.is_subset_of(s) && act.is_invariant(h)) family.push_back(std::move(h));
  }
  return join_family(s.parent_ptr(), family);
}

std::vector<PointSubobject> enumerate_subpoints(const SplitExtension& ext, std::size_t bound) {
  Subgroup k = ext.kernel_image();
  Subgroup b = ext.section_image();
  std::vector<PointSubobject> out;
  for (auto& u : enumerate_subgroups(ext.middle_ptr(), false, bound)) {
    if (!b.is_subset_of(u)) continue;
    Subgroup kp = meet(u, k);
    out.push_back(PointSubobject{std::move(u), std::move(kp)});
  }
  return out;
}

ExtensionCore split_extension_core(const Subgroup& s, const SplitExtension& ext) {
  if (s.parent_ptr() != ext.kernel_ptr()) {
    throw InputError("split_extension_core: s is not a subgroup of the kernel");
  }
  Subgroup kbar = action_core(s, action_of_split_extension(ext));
  Subgroup kbar_in_a = image(ext.embedding(), kbar);
  std::vector<Elem> seed(kbar_in_a.elements().begin(), kbar_in_a.elements().end());
  for (Elem g = 0; g < ext.base().order(); ++g) seed.push_back(ext.section()(g));
  Subgroup point = generated(ext.middle_ptr(), seed);

  InducedGroup xg = induced_group(kbar, ext.kernel_group().label() + ".core");
  InducedGroup ag = induced_group(point, ext.middle().label() + ".core");
  InducedGroup sg = induced_group(s);

  std::vector<Elem> emb(xg.group->order()), proj(ag.group->order()), sec(ext.base().order()),
      u(xg.group->order());
  for (Elem e = 0; e < emb.size(); ++e) {
    emb[e] = ag.local(ext.embedding()(xg.inclusion(e)));
    u[e] = sg.local(xg.inclusion(e));
  }
  for (Elem p = 0; p < proj.size(); ++p) proj[p] = ext.projection()(ag.inclusion(p));
  for (Elem g = 0; g < sec.size(); ++g) sec[g] = ag.local(ext.section()(g));

  SplitExtension core(GroupHom(xg.group, ag.group, std::move(emb)),
                      GroupHom(ag.group, ext.base_ptr(), std::move(proj)),
                      GroupHom(ext.base_ptr(), ag.group, std::move(sec)));
  return ExtensionCore{std::move(core), GroupHom(xg.group, sg.group, std::move(u)), ag.inclusion,
                       std::move(kbar), std::move(point)};
}

std::optional<PointSubobject> find_terminality_violation(const Subgroup& s,
                                                         const SplitExtension& ext,
                                                         const ExtensionCore& core,
                                                         std::size_t bound) {
  Subgroup ks = image(ext.embedding(), s);
  for (auto& sp : enumerate_subpoints(ext, bound)) {
    if (sp.kernel_part.is_subset_of(ks) && !sp.point.is_subset_of(core.point)) return sp;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SplitExtension fibrewise_right_adjoint(const GroupHom& p, const GroupHom& sec,
                                       const SplitExtension& over_e) {
  if (over_e.base_ptr() != p.dom_ptr()) {
    throw InputError("fibrewise_right_adjoint: point is not over the domain of p");
  }
  if (sec.dom_ptr() != p.cod_ptr() || sec.cod_ptr() != p.dom_ptr()) {
    throw InputError("fibrewise_right_adjoint: section has the wrong type");
  }
  for (Elem b = 0; b < p.cod().order(); ++b) {
    if (p(sec(b)) != b) throw InputError("fibrewise_right_adjoint: p∘sec is not the identity");
  }
  GroupHom sp = compose(sec, p);
  SplitExtension pulled = change_of_base(over_e, sp);
  FibreProduct prod = fibre_product(over_e, pulled);
  GroupHom id = GroupHom::identity(over_e.kernel_ptr());
  Subgroup diagonal = image(pairing(id, id, prod.kernel_product));
  ExtensionCore core = split_extension_core(diagonal, prod.ext);
  return change_of_base(core.core, sec);
}

std::size_t count_point_morphisms(const SplitExtension& from, const SplitExtension& to,
                                  std::size_t domain_bound) {
  if (from.base_ptr() != to.base_ptr()) throw InputError("count_point_morphisms: different bases");
  std::size_t count = 0;
  for (const auto& g : hom_enumerate(from.middle_ptr(), to.middle_ptr(), domain_bound)) {
    bool ok = true;
    for (Elem m = 0; m < from.middle().order() && ok; ++m) {
      ok = to.projection()(g(m)) == from.projection()(m);
    }
    for (Elem b = 0; b < from.base().order() && ok; ++b) {
      ok = g(from.section()(b)) == to.section()(b);
    }
    count += ok;
  }
  return count;
}

std::size_t count_equivariant_morphisms(const BAction& from, const BAction& to,
                                        std::size_t domain_bound) {
  if (from.acting_ptr() != to.acting_ptr()) {
    throw InputError("count_equivariant_morphisms: different acting groups");
  }
  std::size_t count = 0;
  for (const auto& f : hom_enumerate(from.target_ptr(), to.target_ptr(), domain_bound)) {
    bool ok = true;
    for (Elem g = 0; g < from.acting().order() && ok; ++g)
      for (Elem e = 0; e < from.target().order() && ok; ++e)
        ok = f(from.apply(g, e)) == to.apply(g, f(e));
    count += ok;
  }
  return count;
}

}  // namespace selab
