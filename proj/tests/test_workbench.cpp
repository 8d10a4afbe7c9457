#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "selab/catalog.hpp"
#include "selab/errors.hpp"
#include "selab/script.hpp"
#include "selab/suite.hpp"

using namespace selab;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError("", 0, 0);
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("selab_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// Random well-bound scripts drawn from the statement forms.
std::string random_script(std::mt19937_64& rng) {
  std::vector<std::string> groups, subs, actions, exts;
  std::string out;
  const std::vector<std::string> ctors = {"cyclic(4)", "dihedral(3)", "symmetric(3)", "quaternion8",
                                          "alternating(4)", "cyclic(6)"};
  auto pick = [&](const std::vector<std::string>& v) { return v[rng() % v.size()]; };
  auto sep = [&] { return rng() % 2 ? "; " : " , "; };
  std::size_t n = 1 + rng() % 10;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "x" + std::to_string(i);
    switch (rng() % 6) {
      case 0:
        if (!groups.empty() && rng() % 2) {
          out += "group " + name + " = direct_product(" + pick(groups) + ", " + pick(ctors) + ")\n";
        } else {
          out += "group " + name + " = " + pick(ctors) + "\n";
        }
        groups.push_back(name);
        break;
      case 1:
        if (groups.empty()) break;
        out += "sub " + name + " = generate(" + pick(groups) + sep() + std::to_string(rng() % 4) + " 0" +
               std::to_string(rng() % 3) + ")\n";
        subs.push_back(name);
        break;
      case 2:
        if (groups.empty()) break;
        out += "action  " + name + "=conjugation( " + pick(groups) + " )  # comment\n";
        actions.push_back(name);
        break;
      case 3:
        if (actions.empty()) break;
        out += "ext " + name + " = semidirect(" + pick(actions) + ")\n";
        exts.push_back(name);
        break;
      case 4:
        if (subs.empty()) break;
        out += "core commutator(" + pick(subs) + sep() + pick(subs) + ")\n";
        break;
      case 5:
        if (!exts.empty()) {
          out += "check core_terminality(" + pick(exts) + ")\n\n";
        } else {
          out += "check omega_witness(" + std::to_string(rng() % 70) + ")\n";
        }
        break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("empty and single-statement scripts") {
  CHECK(parse_script("").statements.empty());
  CHECK(parse_script("\n  # only a comment\n\n").statements.empty());
  auto s = parse_script("group G = symmetric(3)");
  REQUIRE(s.statements.size() == 1);
  CHECK(s.statements[0].kind == StmtKind::group);
  CHECK(s.statements[0].name == "G");
  CHECK(s.statements[0].value.head == "symmetric");
}

TEST_CASE("binding errors carry positions") {
  auto e = parse_error("sub H = generate(G; 1 2)");
  CHECK(e.line() == 1);
  CHECK(e.column() == 18);
  CHECK(std::string(e.what()).find("unbound name 'G'") != std::string::npos);

  e = parse_error("group G = cyclic(3)\ngroup G = cyclic(4)");
  CHECK(e.line() == 2);
  CHECK(e.column() == 7);

  e = parse_error("group G = cyclic(3)\nsub H = generate(G; 1)\naction A = conjugation(H)");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("expected a group") != std::string::npos);
}

TEST_CASE("syntax errors list expected tokens") {
  auto e = parse_error("grup G = cyclic(3)");
  CHECK(e.column() == 1);
  CHECK(std::string(e.what()).find("expected one of: group, sub, action, ext, core, check") !=
        std::string::npos);
  e = parse_error("group G = cyclic(3");
  CHECK(std::string(e.what()).find("';', ',', ')', found end of input") != std::string::npos);
  e = parse_error("group G = cyclic(3) extra");
  CHECK(std::string(e.what()).find("expected end of line") != std::string::npos);
  e = parse_error("group G = torus(3)");
  CHECK(std::string(e.what()).find("unknown group constructor") != std::string::npos);
  e = parse_error("group G = symmetric(3)\nsub H = generate(G; (1 1))");
  CHECK(e.line() == 2);
  CHECK(std::string(e.what()).find("invalid cycle word") != std::string::npos);
  e = parse_error("group G = cyclic(2)\nsub H = generate(G; 1 @)");
  CHECK(e.column() == 23);
}

TEST_CASE("separators, spacing and cycle words normalize") {
  auto a = parse_script("group G=symmetric(3)\nsub H = generate( G , (2 1) 007 )\n");
  auto b = parse_script("group G = symmetric(3)\nsub H = generate(G; (1 2) 7)");
  CHECK(a == b);
  CHECK(print_script(a) == "group G = symmetric(3)\nsub H = generate(G; (1 2) 7)\n");
}

TEST_CASE("parse(print(s)) == s on seeded random scripts") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = random_script(rng);
    Script s = parse_script(text);
    std::string printed = print_script(s);
    CHECK(parse_script(printed) == s);
    CHECK(print_script(parse_script(printed)) == printed);
  }
}

TEST_CASE("running a script") {
  auto s = parse_script(
      "group G = symmetric(3)\n"
      "sub H = generate(G; (1 2))\n"
      "sub N = generate(G; (1 2 3))\n"
      "core normal(H)\n"
      "core normal(N)\n"
      "core commutator(N; H)\n"
      "action A = conjugation(G)\n"
      "ext E = semidirect(A)\n"
      "core split(H; E)\n"
      "check higgins(G)\n"
      "check core_terminality(E)\n");
  auto r = run_script(s);
  REQUIRE(r.lines.size() == 11);
  CHECK(r.lines[3] == "normal core of H = {0}");
  CHECK(r.lines[4] == "normal core of N = {0 3 4}");
  CHECK(r.lines[5] == "[N, H] = {0 3 4}");
  REQUIRE(r.reports.size() == 2);
  for (const auto& rep : r.reports) CHECK(rep.holds());
}

TEST_CASE("runtime script errors name the line") {
  auto s = parse_script("group G = cyclic(3)\nsub H = generate(G; 5)");
  try {
    run_script(s);
    FAIL("expected a script error");
  } catch (const ScriptError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(run_script(parse_script("group G = cyclic(3)\nsub H = generate(G; (1 2))")),
                  ScriptError);
  CHECK_THROWS_AS(run_script(parse_script("group G = dihedral(2)")), ScriptError);
}

TEST_CASE("default catalog contents") {
  auto cat = default_catalog(24);
  for (const char* label : {"C1", "C16", "D3", "D8", "Q8", "S3", "S4", "A4", "C2xC2", "C2xC2xC2"})
    CHECK(cat.find(label) != nullptr);
  for (const auto& e : cat.entries()) {
    CHECK(e.group->order() <= 24);
    CHECK(construct_catalog_group(e.spec)->order() == e.group->order());
  }
  auto small = default_catalog(8);
  for (const auto& e : small.entries()) CHECK(e.group->order() <= 8);
  CHECK(small.find("C8"));
  CHECK_FALSE(small.find("C9"));
}

TEST_CASE("catalog save then load is the identity on labels and tables") {
  auto dir = temp_dir("catalog");
  {
    std::ofstream t(dir / "V4.table");
    t << "order 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
  }
  {
    std::ofstream m(dir / "in.manifest");
    m << "# test manifest\ncyclic(6)\nfrom_table(\"V4.table\")\nsemidirect(cyclic(3), cyclic(2), 1)\n\n"
         "direct_product(quaternion8, cyclic(2))\n";
  }
  auto cat = load_catalog(dir / "in.manifest");
  REQUIRE(cat.size() == 4);
  CHECK(cat.find("V4"));
  auto out_dir = temp_dir("catalog_out");
  save_catalog(cat, out_dir / "out.manifest");
  auto back = load_catalog(out_dir / "out.manifest");
  REQUIRE(back.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& a = *cat.entries()[i].group;
    const auto& b = *back.entries()[i].group;
    CHECK(a.label() == b.label());
    CHECK(std::equal(a.table().begin(), a.table().end(), b.table().begin(), b.table().end()));
  }
}

TEST_CASE("catalog load errors") {
  auto dir = temp_dir("catalog_bad");
  {
    std::ofstream m(dir / "empty.manifest");
    m << "# nothing here\n";
  }
  CHECK(load_catalog(dir / "empty.manifest").empty());
  {
    // Order-5 loop with identity and inverses but no associativity.
    std::ofstream t(dir / "loop.table");
    t << "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
    std::ofstream m(dir / "loop.manifest");
    m << "from_table(\"loop.table\")\n";
  }
  try {
    load_catalog(dir / "loop.manifest");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.axiom().find("associativ") != std::string::npos);
    CHECK(e.witness() == "(1,1,2)");
  }
  {
    std::ofstream m(dir / "dup.manifest");
    m << "cyclic(3)\ncyclic(3)\n";
  }
  CHECK_THROWS_AS(load_catalog(dir / "dup.manifest"), InputError);
  CHECK_THROWS_AS(load_catalog(dir / "missing.manifest"), InputError);
}

TEST_CASE("suite selectors") {
  CHECK(parse_suite("all") == Suite::all);
  CHECK(parse_suite("omega") == Suite::omega);
  CHECK_FALSE(parse_suite("everything"));
}

TEST_CASE("omega suite") {
  auto res = run_suite(Suite::omega, Catalog{}, {});
  CHECK(res.exit_code() == 0);
  std::size_t witnesses = 0;
  for (const auto& r : res.reports) witnesses += r.check == "omega_witness";
  CHECK(witnesses == 1);
}

TEST_CASE("suite runs are deterministic") {
  auto cat = default_catalog(8);
  SuiteOptions opts;
  opts.max_order = 8;
  auto a = run_suite(Suite::theorems, cat, opts);
  auto b = run_suite(Suite::theorems, cat, opts);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].check == b.reports[i].check);
    CHECK(a.reports[i].instance == b.reports[i].instance);
    CHECK(a.reports[i].verdict == b.reports[i].verdict);
    CHECK(a.reports[i].cases == b.reports[i].cases);
    CHECK(a.reports[i].holds());
  }
  CHECK(a.exit_code() == 0);
}

TEST_CASE("capacity skips are reported, and abort under strict") {
  Catalog cat;
  cat.add("symmetric(5)", symmetric(5));
  SuiteOptions opts;
  opts.max_order = 120;
  auto res = run_suite(Suite::theorems, cat, opts);
  bool skipped = false;
  for (const auto& r : res.reports) skipped |= r.verdict == Verdict::skipped_capacity;
  CHECK(skipped);
  CHECK(res.exit_code() == 0);
  opts.strict = true;
  auto strict = run_suite(Suite::theorems, cat, opts);
  CHECK(strict.aborted);
  CHECK(strict.exit_code() == 3);
  CHECK(strict.reports.size() < res.reports.size());
}
