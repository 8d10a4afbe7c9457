#include "selab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "selab/errors.hpp"

namespace selab {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckReport start_report(std::string check, std::string instance) {
  CheckReport r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  return r;
}

void fail(CheckReport& r, std::string witness) {
  r.verdict = Verdict::fails;
  r.witness = std::move(witness);
}

std::string family_string(std::span<const Subgroup> family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? ", " : "") + family[i].to_string();
  return out + "]";
}

/// Drops members one at a time while the failure persists.
template <typename T, typename Fails>
std::vector<T> minimize_family(std::vector<T> family, Fails&& fails) {
  for (std::size_t i = 0; i < family.size();) {
    std::vector<T> trial = family;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (fails(trial)) {
      family = std::move(trial);
    } else {
      ++i;
    }
  }
  return family;
}

struct VecHash {
  std::size_t operator()(std::span<const Elem> v) const noexcept {
    std::size_t h = v.size();
    for (Elem e : v) h = h * 1000003u ^ e;
    return h;
  }
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    return (*this)(std::span<const Elem>(v));
  }
};

std::vector<Elem> key_of(const Subgroup& s) {
  return {s.elements().begin(), s.elements().end()};
}

/// All subsets of {0..n-1}, each visited once, built incrementally so that
/// `visit` can carry running joins. `visit(chosen)` returns false to prune.
template <typename State, typename Extend, typename Visit>
void for_each_family(std::size_t n, State root, Extend&& extend, Visit&& visit) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start, const State& state) -> bool {
    if (!visit(chosen, state)) return false;
    for (std::size_t i = start; i < n; ++i) {
      chosen.push_back(i);
      bool go_on = self(self, i + 1, extend(state, i));
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(rec, 0, root);
}

std::vector<std::vector<std::size_t>> random_families(std::size_t n, std::size_t count,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  const std::size_t max_size = std::min<std::size_t>(n, 8);
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace

std::string describe(const Subgroup& s) { return s.parent().label() + s.to_string(); }

std::string describe(const SplitExtension& ext) {
  return ext.kernel_group().label() + " -> " + ext.middle().label() + " -> " + ext.base().label();
}

// ---------------------------------------------------------------------------
// Distributivity over decompositions

bool is_decomposition(const Subgroup& k, const Subgroup& b) {
  return k.parent_ptr() == b.parent_ptr() && is_normal(k) && meet(k, b).is_trivial() &&
         join(k, b).is_whole();
}

std::vector<std::pair<Subgroup, Subgroup>> enumerate_decompositions(const GroupPtr& x,
                                                                    std::size_t bound) {
  auto subs = enumerate_subgroups(x, false, bound);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (const auto& k : subs) {
    if (!is_normal(k)) continue;
    for (const auto& b : subs) {
      if (k.size() * b.size() != x->order()) continue;
      if (meet(k, b).is_trivial() && join(k, b).is_whole()) out.emplace_back(k, b);
    }
  }
  return out;
}

namespace {

void require_decomposition(const Subgroup& k, const Subgroup& b, const char* who) {
  if (!is_decomposition(k, b)) {
    throw InputError(std::string(who) + ": (K, B) = (" + k.to_string() + ", " + b.to_string() +
                     ") is not a decomposition");
  }
}

std::vector<Subgroup> filter_above(const Subgroup& b) {
  std::vector<Subgroup> out;
  for (auto& u : enumerate_subgroups(b.parent_ptr(), false, b.parent().order())) {
    if (b.is_subset_of(u)) out.push_back(std::move(u));
  }
  return out;
}

std::string decomposition_instance(const Subgroup& k, const Subgroup& b) {
  return b.parent().label() + " K=" + k.to_string() + " B=" + b.to_string();
}

/// Both sides of K ∧ ⋁U_i = ⋁(K ∧ U_i); the left join is taken among
/// subgroups containing B, so the empty family joins to B.
bool family_law_holds(const Subgroup& k, const Subgroup& b, std::span<const Subgroup> family) {
  std::vector<Subgroup> with_b(family.begin(), family.end());
  with_b.push_back(b);
  std::vector<Subgroup> meets;
  for (const auto& u : family) meets.push_back(meet(k, u));
  return meet(k, join_family(k.parent_ptr(), with_b)) == join_family(k.parent_ptr(), meets);
}

}  // namespace

CheckReport check_intersections_binary(const Subgroup& k, const Subgroup& b) {
  Stopwatch sw;
  require_decomposition(k, b, "check_intersections_binary");
  auto r = start_report("intersections_binary", decomposition_instance(k, b));
  auto lattice = filter_above(b);
  for (const auto& u : lattice) {
    for (const auto& v : lattice) {
      ++r.cases;
      if (!(meet(k, join(u, v)) == join(meet(k, u), meet(k, v)))) {
        fail(r, "U=" + u.to_string() + " V=" + v.to_string());
        r.millis = sw.millis();
        return r;
      }
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_intersections_family(const Subgroup& k, const Subgroup& b,
                                       const std::vector<std::vector<Subgroup>>& families) {
  Stopwatch sw;
  require_decomposition(k, b, "check_intersections_family");
  auto r = start_report("intersections_family", decomposition_instance(k, b));
  for (const auto& fam : families) {
    for (const auto& u : fam) {
      if (!b.is_subset_of(u)) throw InputError("family member does not contain B: " + u.to_string());
    }
    ++r.cases;
    if (!family_law_holds(k, b, fam)) {
      auto small = minimize_family(fam, [&](const std::vector<Subgroup>& f) {
        return !family_law_holds(k, b, f);
      });
      fail(r, family_string(small));
      break;
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_intersections_family(const Subgroup& k, const Subgroup& b,
                                       const FamilyOptions& opts) {
  Stopwatch sw;
  require_decomposition(k, b, "check_intersections_family");
  auto lattice = filter_above(b);
  const std::size_t n = lattice.size();
  std::vector<Subgroup> meets;
  for (const auto& u : lattice) meets.push_back(meet(k, u));

  if (n > opts.exhaustive_members) {
    std::vector<std::vector<Subgroup>> fams;
    for (auto& idx : random_families(n, opts.samples, opts.seed)) {
      std::vector<Subgroup> fam;
      for (auto i : idx) fam.push_back(lattice[i]);
      fams.push_back(std::move(fam));
    }
    auto r = check_intersections_family(k, b, fams);
    r.instance += " sampled seed=" + std::to_string(opts.seed);
    r.millis = sw.millis();
    return r;
  }

  auto r = start_report("intersections_family", decomposition_instance(k, b) + " exhaustive");
  struct Joins {
    Subgroup points;
    Subgroup kernels;
  };
  Joins root{b, Subgroup::trivial(k.parent_ptr())};
  std::optional<std::vector<std::size_t>> bad;
  for_each_family(
      n, root,
      [&](const Joins& s, std::size_t i) {
        return Joins{join(s.points, lattice[i]), join(s.kernels, meets[i])};
      },
      [&](const std::vector<std::size_t>& chosen, const Joins& s) {
        ++r.cases;
        if (meet(k, s.points) == s.kernels) return true;
        bad = chosen;
        return false;
      });
  if (bad) {
    std::vector<Subgroup> fam;
    for (auto i : *bad) fam.push_back(lattice[i]);
    fam = minimize_family(fam, [&](const std::vector<Subgroup>& f) {
      return !family_law_holds(k, b, f);
    });
    fail(r, family_string(fam));
  }
  r.millis = sw.millis();
  return r;
}

// ---------------------------------------------------------------------------
// Kernel functor

namespace {

bool kernel_geometric_holds(const SplitExtension& ext, std::span<const PointSubobject> family) {
  std::vector<Subgroup> points{ext.section_image()};
  std::vector<Subgroup> kernels;
  for (const auto& p : family) {
    points.push_back(p.point);
    kernels.push_back(p.kernel_part);
  }
  if (!join_family(ext.middle_ptr(), points).is_whole()) return true;
  return join_family(ext.middle_ptr(), kernels) == ext.kernel_image();
}

std::string subpoint_family_string(std::span<const PointSubobject> family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? ", " : "") + family[i].point.to_string();
  return out + "]";
}

}  // namespace

CheckReport check_kernel_geometric(const SplitExtension& ext,
                                   std::span<const PointSubobject> family) {
  Stopwatch sw;
  auto r = start_report("kernel_geometric", describe(ext));
  r.cases = 1;
  if (!kernel_geometric_holds(ext, family)) {
    std::vector<PointSubobject> fam(family.begin(), family.end());
    fam = minimize_family(fam, [&](const std::vector<PointSubobject>& f) {
      return !kernel_geometric_holds(ext, f);
    });
    fail(r, subpoint_family_string(fam));
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_kernel_geometric_all(const SplitExtension& ext, const FamilyOptions& opts) {
  Stopwatch sw;
  auto subpoints = enumerate_subpoints(ext, ext.middle().order());
  const std::size_t n = subpoints.size();
  const bool exhaustive = n <= opts.exhaustive_members;
  auto r = start_report("kernel_geometric",
                        describe(ext) + (exhaustive ? " exhaustive"
                                                    : " sampled seed=" + std::to_string(opts.seed)));
  const Subgroup kappa = ext.kernel_image();
  std::optional<std::vector<std::size_t>> bad;
  if (exhaustive) {
    struct Joins {
      Subgroup points;
      Subgroup kernels;
    };
    for_each_family(
        n, Joins{ext.section_image(), Subgroup::trivial(ext.middle_ptr())},
        [&](const Joins& s, std::size_t i) {
          return Joins{join(s.points, subpoints[i].point), join(s.kernels, subpoints[i].kernel_part)};
        },
        [&](const std::vector<std::size_t>& chosen, const Joins& s) {
          ++r.cases;
          if (!s.points.is_whole() || s.kernels == kappa) return true;
          bad = chosen;
          return false;
        });
  } else {
    for (auto& idx : random_families(n, opts.samples, opts.seed)) {
      std::vector<PointSubobject> fam;
      for (auto i : idx) fam.push_back(subpoints[i]);
      ++r.cases;
      if (!kernel_geometric_holds(ext, fam)) {
        bad = idx;
        break;
      }
    }
  }
  if (bad) {
    std::vector<PointSubobject> fam;
    for (auto i : *bad) fam.push_back(subpoints[i]);
    fam = minimize_family(fam, [&](const std::vector<PointSubobject>& f) {
      return !kernel_geometric_holds(ext, f);
    });
    fail(r, subpoint_family_string(fam));
  }
  r.millis = sw.millis();
  return r;
}

// ---------------------------------------------------------------------------
// Normality

CheckReport check_join_normals_normal(const GroupPtr& x) {
  Stopwatch sw;
  auto r = start_report("join_normals_normal", x->label());
  auto normals = enumerate_subgroups(x, true, x->order());
  // Joins of all families = closure of {0} under "join with one more normal".
  struct Node {
    Subgroup join;
    std::ptrdiff_t parent;
    std::ptrdiff_t added;
  };
  std::vector<Node> nodes{{Subgroup::trivial(x), -1, -1}};
  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> index{{{0}, 0}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ++r.cases;
    if (!is_normal(nodes[i].join)) {
      std::vector<Subgroup> fam;
      for (auto j = static_cast<std::ptrdiff_t>(i); nodes[j].parent >= 0; j = nodes[j].parent) {
        fam.push_back(normals[static_cast<std::size_t>(nodes[j].added)]);
      }
      fam = minimize_family(fam, [&](const std::vector<Subgroup>& f) {
        return !is_normal(join_family(x, f));
      });
      fail(r, family_string(fam));
      break;
    }
    for (std::size_t n = 0; n < normals.size(); ++n) {
      Subgroup j = join(nodes[i].join, normals[n]);
      auto key = key_of(j);
      if (index.count(key)) continue;
      index.emplace(std::move(key), nodes.size());
      nodes.push_back({std::move(j), static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(n)});
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_higgins_normality(const GroupPtr& x) {
  Stopwatch sw;
  auto r = start_report("higgins_normality", x->label());
  const Subgroup whole = Subgroup::whole(x);
  for (const auto& h : enumerate_subgroups(x, false, x->order())) {
    ++r.cases;
    bool normal = is_normal(h);
    bool criterion = higgins_commutator(h, whole).is_subset_of(h);
    if (normal != criterion) {
      fail(r, "H=" + h.to_string() + " normal=" + (normal ? "1" : "0") +
                  " [H,X]<=H=" + (criterion ? "1" : "0"));
      break;
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_commutator_join(const GroupPtr& x, std::span<const Subgroup> chain) {
  Stopwatch sw;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].parent_ptr() != x) throw InputError("check_commutator_join: foreign subgroup");
    if (!is_normal(chain[i])) {
      throw InputError("check_commutator_join: " + chain[i].to_string() + " is not normal");
    }
    if (i > 0 && !chain[i - 1].is_subset_of(chain[i])) {
      throw InputError("check_commutator_join: chain is not ascending at position " +
                       std::to_string(i));
    }
  }
  auto r = start_report("commutator_join", x->label() + " chain=" + family_string(chain));
  r.cases = 1;
  const Subgroup whole = Subgroup::whole(x);
  std::vector<Subgroup> comms;
  for (const auto& n : chain) comms.push_back(higgins_commutator(n, whole));
  Subgroup lhs = higgins_commutator(join_family(x, chain), whole);
  Subgroup rhs = join_family(x, comms);
  if (!(lhs == rhs)) fail(r, "[join,X]=" + lhs.to_string() + " join[N,X]=" + rhs.to_string());
  r.millis = sw.millis();
  return r;
}

CheckReport check_commutator_join_all(const GroupPtr& x, const FamilyOptions& opts) {
  Stopwatch sw;
  auto normals = enumerate_subgroups(x, true, x->order());
  const std::size_t n = normals.size();
  const Subgroup whole = Subgroup::whole(x);
  std::vector<Subgroup> comm;
  for (const auto& m : normals) comm.push_back(higgins_commutator(m, whole));
  // above[i]: normals strictly containing normals[i] (sorted by size, so later).
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (normals[i].size() < normals[j].size() && normals[i].is_subset_of(normals[j]))
        above[i].push_back(j);

  // chains starting at i, counted with saturation at 4097
  constexpr std::size_t cap = 4096;
  std::vector<std::size_t> chains_from(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    for (auto j : above[i]) chains_from[i] = std::min(cap + 1, chains_from[i] + chains_from[j]);
  }
  std::size_t total = 0;
  for (auto c : chains_from) total = std::min(cap + 1, total + c);
  const bool exhaustive = total <= cap;

  auto r = start_report("commutator_join",
                        x->label() + (exhaustive ? " all chains"
                                                 : " pairs+sampled seed=" + std::to_string(opts.seed)));
  auto holds_for = [&](const std::vector<std::size_t>& chain) {
    std::vector<Subgroup> members, comms;
    for (auto i : chain) {
      members.push_back(normals[i]);
      comms.push_back(comm[i]);
    }
    return higgins_commutator(join_family(x, members), whole) == join_family(x, comms);
  };
  std::optional<std::vector<std::size_t>> bad;
  auto test = [&](const std::vector<std::size_t>& chain) {
    ++r.cases;
    if (!holds_for(chain)) bad = chain;
    return !bad;
  };

  if (exhaustive) {
    std::vector<std::size_t> chain;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
      chain.push_back(i);
      bool ok = test(chain);
      for (std::size_t k = 0; ok && k < above[i].size(); ++k) ok = self(self, above[i][k]);
      chain.pop_back();
      return ok;
    };
    for (std::size_t i = 0; i < n && !bad; ++i) rec(rec, i);
  } else {
    for (std::size_t i = 0; i < n && !bad; ++i) {
      if (!test({i})) break;
      for (auto j : above[i])
        if (!test({i, j})) break;
    }
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < opts.samples && !bad; ++s) {
      std::vector<std::size_t> chain{0};
      while (!above[chain.back()].empty()) {
        const auto& next = above[chain.back()];
        chain.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
      }
      test(chain);
    }
  }
  if (bad) {
    std::vector<Subgroup> members;
    for (auto i : *bad) members.push_back(normals[i]);
    fail(r, family_string(members));
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_three_subobjects(const GroupPtr& x) {
  Stopwatch sw;
  auto r = start_report("three_subobjects", x->label());
  auto normals = enumerate_subgroups(x, true, x->order());
  const std::size_t n = normals.size();
  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(key_of(normals[i]), i);
  auto locate = [&](const Subgroup& s) {
    auto it = index.find(key_of(s));
    if (it == index.end()) {
      throw ConsistencyError("commutator or join of normal subgroups is not normal: " + describe(s));
    }
    return it->second;
  };
  std::vector<std::size_t> comm(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) comm[i * n + j] = locate(higgins_commutator(normals[i], normals[j]));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> joins;
  auto join_idx = [&](std::size_t a, std::size_t b) {
    auto key = std::minmax(a, b);
    auto it = joins.find(key);
    if (it != joins.end()) return it->second;
    std::size_t v = locate(join(normals[a], normals[b]));
    joins.emplace(key, v);
    return v;
  };
  for (std::size_t k = 0; k < n && r.holds(); ++k) {
    for (std::size_t l = 0; l < n && r.holds(); ++l) {
      for (std::size_t m = 0; m < n && r.holds(); ++m) {
        ++r.cases;
        std::size_t lhs = comm[k * n + comm[l * n + m]];
        std::size_t rhs = join_idx(comm[m * n + comm[k * n + l]], comm[l * n + comm[m * n + k]]);
        if (!normals[lhs].is_subset_of(normals[rhs])) {
          fail(r, "K=" + normals[k].to_string() + " L=" + normals[l].to_string() +
                      " M=" + normals[m].to_string());
        }
      }
    }
  }
  r.millis = sw.millis();
  return r;
}

// ---------------------------------------------------------------------------
// Cores

CheckReport check_core_adjunction(const SplitExtension& ext) {
  Stopwatch sw;
  auto r = start_report("core_adjunction", describe(ext));
  auto subpoints = enumerate_subpoints(ext, ext.middle().order());
  for (const auto& s : enumerate_subgroups(ext.kernel_ptr(), false, ext.kernel_group().order())) {
    Subgroup ks = image(ext.embedding(), s);
    Subgroup core_point = split_extension_core(s, ext).point;
    for (const auto& u : subpoints) {
      ++r.cases;
      bool left = u.kernel_part.is_subset_of(ks);
      bool right = u.point.is_subset_of(core_point);
      if (left != right) {
        fail(r, "U=" + u.point.to_string() + " S=" + s.to_string());
        r.millis = sw.millis();
        return r;
      }
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_core_terminality(const SplitExtension& ext) {
  Stopwatch sw;
  auto r = start_report("core_terminality", describe(ext));
  BAction act = action_of_split_extension(ext);
  auto subpoints = enumerate_subpoints(ext, ext.middle().order());
  auto violation = [&](const Subgroup& s, const ExtensionCore& core) -> std::optional<std::string> {
    if (!core.u.is_injective()) return "u not injective";
    if (!core.v.is_injective()) return "v not injective";
    if (!core.kernel_part.is_subset_of(s)) return "core kernel not inside s";
    if (!act.is_invariant(core.kernel_part)) return "core kernel not B-invariant";
    if (!(image(ext.embedding(), core.kernel_part) == meet(core.point, ext.kernel_image()))) {
      return "core kernel is not the kernel part of the core point";
    }
    Subgroup ks = image(ext.embedding(), s);
    for (const auto& sp : subpoints) {
      if (sp.kernel_part.is_subset_of(ks) && !sp.point.is_subset_of(core.point)) {
        return "subpoint " + sp.point.to_string() + " does not factor through v";
      }
    }
    return std::nullopt;
  };
  for (const auto& s : enumerate_subgroups(ext.kernel_ptr(), false, ext.kernel_group().order())) {
    ++r.cases;
    if (auto why = violation(s, split_extension_core(s, ext))) {
      fail(r, "s=" + s.to_string() + " " + *why);
      break;
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_action_core_routes(const BAction& act) {
  Stopwatch sw;
  auto r = start_report("action_core_routes",
                        act.acting().label() + " on " + act.target().label());
  auto subs = enumerate_subgroups(act.target_ptr(), false, act.target().order());
  for (const auto& s : subs) {
    ++r.cases;
    Subgroup a = action_core(s, act);
    Subgroup b = action_core_by_intersection(s, act);
    // Join of invariant subgroups inside S, reusing the enumerated lattice.
    std::vector<Subgroup> family;
    for (const auto& h : subs)
      if (h.is_subset_of(s) && act.is_invariant(h)) family.push_back(h);
    Subgroup c = join_family(act.target_ptr(), family);
    if (!(a == b) || !(a == c)) {
      fail(r, "S=" + s.to_string() + " iterate=" + a.to_string() + " intersect=" + b.to_string() +
                  " join=" + c.to_string());
      break;
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_normal_core_pullback(const Subgroup& s) {
  Stopwatch sw;
  auto r = start_report("normal_core_pullback", describe(s));
  r.cases = 1;
  const FiniteGroup& x = s.parent();
  Subgroup n = normal_core(s);
  Quotient xq = quotient(n);
  InducedGroup sg = induced_group(s);
  Subgroup n_in_s = preimage(sg.inclusion, n);
  Quotient sq = quotient(n_in_s);

  // s̄(q(m)) = r(m)
  std::vector<Elem> bar(sq.group->order(), kUnassigned);
  for (Elem m = 0; m < sg.group->order(); ++m) bar[sq.projection(m)] = xq.projection(sg.inclusion(m));
  GroupHom sbar(sq.group, xq.group, std::move(bar));

  std::size_t pullback_size = 0;
  for (Elem e = 0; e < x.order(); ++e)
    for (Elem c = 0; c < sq.group->order(); ++c) pullback_size += xq.projection(e) == sbar(c);
  if (pullback_size != s.size()) {
    fail(r, "pullback has " + std::to_string(pullback_size) + " elements, S has " +
                std::to_string(s.size()));
  } else if (!sbar.is_injective()) {
    fail(r, "induced map S/N -> X/N is not injective");
  } else if (Subgroup c = normal_core(image(sbar)); !c.is_trivial()) {
    fail(r, "normal core of S/N in X/N is " + c.to_string());
  }
  r.millis = sw.millis();
  return r;
}

bool clot_restricts(const Subgroup& n) {
  const GroupPtr& x = n.parent_ptr();
  DirectProduct xx = direct_product(x, x);
  GroupHom id = GroupHom::identity(x);
  GroupHom kappa = pairing(id, GroupHom::zero(x, x), xx);
  GroupHom diag = pairing(id, id, xx);
  std::vector<Elem> seed;
  for (Elem a : n.elements()) seed.push_back(kappa(a));
  for (Elem a = 0; a < x->order(); ++a) seed.push_back(diag(a));
  Subgroup y = generated(xx.group, seed);
  return meet(y, image(kappa)) == image(kappa, n);
}

CheckReport check_clots(const Subgroup& n) {
  Stopwatch sw;
  auto r = start_report("clots", describe(n));
  r.cases = 1;
  bool restricts = clot_restricts(n);
  bool normal = is_normal(n);
  if (restricts != normal) {
    fail(r, std::string("restricts=") + (restricts ? "1" : "0") + " normal=" + (normal ? "1" : "0"));
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_normal_core_oracle(const GroupPtr& x) {
  Stopwatch sw;
  auto r = start_report("normal_core_oracle", x->label());
  auto subs = enumerate_subgroups(x, false, x->order());
  std::vector<Subgroup> normals;
  for (const auto& s : subs)
    if (is_normal(s)) normals.push_back(s);
  for (const auto& s : subs) {
    ++r.cases;
    try {
      Subgroup core = normal_core(s);  // throws if the two constructions differ
      if (!is_normal(core) || !core.is_subset_of(s)) {
        fail(r, "S=" + s.to_string() + " core=" + core.to_string() + " not a normal subgroup of S");
        break;
      }
      for (const auto& m : normals) {
        if (m.is_subset_of(s) && !m.is_subset_of(core)) {
          fail(r, "S=" + s.to_string() + " misses normal " + m.to_string());
          break;
        }
      }
      if (!r.holds()) break;
    } catch (const ConsistencyError& e) {
      fail(r, e.what());
      break;
    }
  }
  r.millis = sw.millis();
  return r;
}

CheckReport check_fibrewise_adjunction(const GroupHom& p, const GroupHom& sec,
                                       const SplitExtension& over_e,
                                       std::span<const SplitExtension> points_over_b,
                                       std::size_t hom_bound) {
  Stopwatch sw;
  std::string p_map;
  for (Elem v : p.map()) p_map += std::to_string(v);
  auto r = start_report("fibrewise_adjunction", p.dom().label() + "->" + p.cod().label() +
                                                    " p=" + p_map + " D=" + describe(over_e));
  SplitExtension right = fibrewise_right_adjoint(p, sec, over_e);
  for (const auto& a : points_over_b) {
    ++r.cases;
    std::size_t lhs = count_point_morphisms(change_of_base(a, p), over_e, hom_bound);
    std::size_t rhs = count_point_morphisms(a, right, hom_bound);
    if (lhs != rhs) {
      fail(r, "A'=" + describe(a) + " |Hom(p*A',D)|=" + std::to_string(lhs) +
                  " |Hom(A',R(D))|=" + std::to_string(rhs));
      break;
    }
  }
  r.millis = sw.millis();
  return r;
}

}  // namespace selab
