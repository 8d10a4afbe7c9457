#include "selab/catalog.hpp"

#include <fstream>
#include <sstream>

#include "selab/errors.hpp"

namespace selab {

namespace {

std::string unquote(std::string s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

std::size_t parse_index(const std::string& text) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw InputError("expected an index, got '" + text + "'");
  return v;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void Catalog::add(std::string spec, GroupPtr group) {
  if (find(group->label())) throw InputError("catalog already has a group labelled " + group->label());
  entries_.push_back(CatalogEntry{std::move(spec), std::move(group)});
}

const CatalogEntry* Catalog::find(std::string_view label) const {
  for (const auto& e : entries_)
    if (e.group->label() == label) return &e;
  return nullptr;
}

std::vector<GroupPtr> Catalog::groups(std::size_t max_order) const {
  std::vector<GroupPtr> out;
  for (const auto& e : entries_)
    if (e.group->order() <= max_order) out.push_back(e.group);
  return out;
}

GroupPtr construct_catalog_group(std::string_view spec, const std::filesystem::path& base_dir) {
  SpecExtension ext = [&](const std::string& head,
                          const std::vector<std::string>& args) -> std::optional<GroupPtr> {
    if (head == "from_table") {
      if (args.size() != 1) throw InputError("from_table expects 1 argument(s)");
      std::filesystem::path p = unquote(trim(args[0]));
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      return load_cayley_table(p.string());
    }
    if (head == "semidirect") {
      if (args.size() != 3) throw InputError("semidirect expects 3 argument(s)");
      GroupPtr x = construct_catalog_group(args[0], base_dir);
      GroupPtr b = construct_catalog_group(args[1], base_dir);
      std::size_t k = parse_index(trim(args[2]));
      auto acts = enumerate_actions(b, x);
      if (k >= acts.size()) {
        throw InputError("semidirect: " + b->label() + " has " + std::to_string(acts.size()) +
                         " actions on " + x->label());
      }
      return semidirect_product(acts[k], x->label() + ":" + b->label() + "[" + std::to_string(k) +
                                             "]")
          .middle_ptr();
    }
    return std::nullopt;
  };
  return construct_group(spec, ext);
}

std::vector<std::string> base_catalog_specs() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 16; ++n) specs.push_back("cyclic(" + std::to_string(n) + ")");
  for (int n = 3; n <= 8; ++n) specs.push_back("dihedral(" + std::to_string(n) + ")");
  specs.push_back("quaternion8");
  specs.push_back("symmetric(3)");
  specs.push_back("symmetric(4)");
  specs.push_back("alternating(4)");
  return specs;
}

std::vector<GroupPtr> isomorphism_representatives(const std::vector<GroupPtr>& groups) {
  std::vector<GroupPtr> reps;
  for (const auto& g : groups) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (r->order() == g->order() && find_isomorphism(r, g)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

Catalog default_catalog(std::size_t max_order) {
  Catalog cat;
  std::vector<GroupPtr> seen;
  for (const auto& spec : base_catalog_specs()) {
    GroupPtr g = construct_catalog_group(spec);
    if (g->order() > max_order) continue;
    cat.add(spec, g);
    seen.push_back(g);
  }
  // Factors are isomorphism representatives of everything catalogued so
  // far; products are added until no new isomorphism class appears.
  std::vector<std::pair<std::string, GroupPtr>> factors;
  std::vector<GroupPtr> products;
  auto is_new = [&](const GroupPtr& g) {
    for (const auto& p : products)
      if (p->order() == g->order() && find_isomorphism(p, g)) return false;
    return true;
  };
  for (const auto& g : isomorphism_representatives(seen)) {
    if (g->order() > 1) factors.emplace_back(cat.find(g->label())->spec, g);
  }
  std::size_t done = 0;
  while (done < factors.size()) {
    const std::size_t end = factors.size();
    std::vector<std::pair<std::string, GroupPtr>> fresh;
    auto offer = [&](std::string spec, GroupPtr g) {
      if (!is_new(g)) return;
      products.push_back(g);
      cat.add(spec, g);
      bool known = false;
      for (const auto& [s, f] : factors)
        if (f->order() == g->order() && find_isomorphism(f, g)) known = true;
      if (!known) fresh.emplace_back(std::move(spec), std::move(g));
    };
    // Pairs with at least one factor from the newest round.
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = std::max(i, done); j < end; ++j) {
        const auto& [si, gi] = factors[i];
        const auto& [sj, gj] = factors[j];
        if (gi->order() * gj->order() > max_order) continue;
        offer("direct_product(" + si + ", " + sj + ")", direct_product(gi, gj).group);
      }
    }
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        if (i < done && j < done) continue;
        const auto& [sx, x] = factors[i];
        const auto& [sb, b] = factors[j];
        if (x->order() * b->order() > max_order) continue;
        auto acts = enumerate_actions(b, x);
        for (std::size_t k = 1; k < acts.size(); ++k) {
          std::string label = x->label() + ":" + b->label() + "[" + std::to_string(k) + "]";
          offer("semidirect(" + sx + ", " + sb + ", " + std::to_string(k) + ")",
                semidirect_product(acts[k], label).middle_ptr());
        }
      }
    }
    done = end;
    for (auto& f : fresh) factors.push_back(std::move(f));
  }
  return cat;
}

Catalog load_catalog(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot open manifest " + manifest.string());
  Catalog cat;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    GroupPtr g;
    try {
      g = construct_catalog_group(line, manifest.parent_path());
    } catch (const InputError& e) {
      throw InputError(manifest.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    cat.add(line, std::move(g));
  }
  return cat;
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& manifest) {
  std::ofstream out(manifest);
  if (!out) throw InputError("cannot write manifest " + manifest.string());
  for (const auto& e : catalog.entries()) {
    if (e.spec.find("from_table") == std::string::npos) {
      out << e.spec << "\n";
      continue;
    }
    std::string file = e.group->label() + ".table";
    std::ofstream table(manifest.parent_path() / file);
    if (!table) throw InputError("cannot write table " + file);
    write_cayley_table(table, *e.group);
    out << "from_table(\"" << file << "\")\n";
  }
}

std::vector<CatalogAction> catalog_actions(const Catalog& catalog, std::size_t max_middle) {
  std::vector<GroupPtr> nontrivial;
  for (const auto& g : catalog.groups(max_middle / 2))
    if (g->order() > 1) nontrivial.push_back(g);
  auto reps = isomorphism_representatives(nontrivial);
  std::vector<CatalogAction> out;
  for (const auto& x : reps) {
    for (const auto& b : reps) {
      if (x->order() * b->order() > max_middle) continue;
      auto acts = enumerate_actions(b, x);
      for (std::size_t k = 0; k < acts.size(); ++k) {
        out.push_back(CatalogAction{b->label() + " on " + x->label() + " #" + std::to_string(k),
                                    std::move(acts[k])});
      }
    }
  }
  return out;
}

}  // namespace selab
