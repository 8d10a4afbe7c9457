#include "selab/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <variant>

#include "selab/action.hpp"
#include "selab/catalog.hpp"
#include "selab/checks.hpp"
#include "selab/errors.hpp"
#include "selab/omega.hpp"

namespace selab {

bool operator==(const Term& a, const Term& b) {
  return a.kind == b.kind && a.text == b.text && a.call == b.call;
}

bool operator==(const Call& a, const Call& b) {
  return a.head == b.head && a.bare == b.bare && a.args == b.args;
}

namespace {

// ---------------------------------------------------------------------------
// Signatures

enum class Arg { group, sub, action, ext, number, elems, opt_number };
enum class Bound { group, sub, action, ext };

using Signature = std::vector<Arg>;

const std::map<std::string, Signature>& signatures(StmtKind kind) {
  static const std::map<std::string, Signature> sub = {
      {"generate", {Arg::group, Arg::elems}}, {"whole", {Arg::group}}, {"trivial", {Arg::group}}};
  static const std::map<std::string, Signature> action = {
      {"conjugation", {Arg::group}},
      {"trivial", {Arg::group, Arg::group}},
      {"indexed", {Arg::group, Arg::group, Arg::number}},
      {"of", {Arg::ext}}};
  static const std::map<std::string, Signature> ext = {{"semidirect", {Arg::action}},
                                                       {"decomposition", {Arg::sub, Arg::sub}}};
  static const std::map<std::string, Signature> core = {{"normal", {Arg::sub}},
                                                        {"action", {Arg::sub, Arg::action}},
                                                        {"split", {Arg::sub, Arg::ext}},
                                                        {"commutator", {Arg::sub, Arg::sub}}};
  static const std::map<std::string, Signature> check = {
      {"group_axioms", {Arg::group}},
      {"higgins", {Arg::group}},
      {"join_normals", {Arg::group}},
      {"commutator_join", {Arg::group}},
      {"three_subobjects", {Arg::group}},
      {"normal_core_oracle", {Arg::group}},
      {"clots", {Arg::sub}},
      {"normal_core_pullback", {Arg::sub}},
      {"intersections", {Arg::sub, Arg::sub}},
      {"kernel_geometric", {Arg::ext}},
      {"core_adjunction", {Arg::ext}},
      {"core_terminality", {Arg::ext}},
      {"action_core_routes", {Arg::action}},
      {"omega_witness", {Arg::opt_number}},
      {"omega_invariance", {Arg::number, Arg::opt_number}}};
  static const std::map<std::string, Signature> none;
  switch (kind) {
    case StmtKind::sub:
      return sub;
    case StmtKind::action:
      return action;
    case StmtKind::ext:
      return ext;
    case StmtKind::core:
      return core;
    case StmtKind::check:
      return check;
    case StmtKind::group:
      break;
  }
  return none;
}

const std::map<std::string, std::vector<std::string>>& group_constructors() {
  // "g" a group expression, "n" a number, "s" a string.
  static const std::map<std::string, std::vector<std::string>> m = {
      {"cyclic", {"n"}},           {"dihedral", {"n"}},     {"symmetric", {"n"}},
      {"alternating", {"n"}},      {"quaternion8", {}},     {"direct_product", {"g", "g"}},
      {"semidirect", {"g", "g", "n"}}, {"from_table", {"s"}}};
  return m;
}

std::string join_keys(const std::map<std::string, Signature>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : ", ") + k;
  return out;
}

const char* kind_name(Bound b) {
  switch (b) {
    case Bound::group:
      return "group";
    case Bound::sub:
      return "subgroup";
    case Bound::action:
      return "action";
    case Bound::ext:
      return "extension";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Parser

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Script parse() {
    Script script;
    for (;;) {
      skip_blank_lines();
      if (at_end()) break;
      script.statements.push_back(statement());
      skip_space();
      if (!at_end() && peek() != '\n') error("expected end of line");
    }
    return script;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::map<std::string, Bound> bound_;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  [[noreturn]] void error_at(const std::string& msg, std::size_t line, std::size_t col) const {
    throw ParseError(msg, line, col);
  }

  std::string found() const {
    if (at_end()) return "end of input";
    if (peek() == '\n') return "end of line";
    return std::string("'") + peek() + "'";
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    if (peek() == '#') {
      while (!at_end() && peek() != '\n') advance();
    }
  }

  void skip_blank_lines() {
    for (;;) {
      skip_space();
      if (peek() == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string("expected '") + c + "', found " + found());
    advance();
  }

  std::string identifier(const std::string& what) {
    skip_space();
    if (!ident_start(peek())) error("expected " + what + ", found " + found());
    std::string out;
    while (!at_end() && ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  Statement statement() {
    skip_space();
    Statement st;
    st.line = line_;
    st.column = col_;
    std::string kw =
        identifier("one of: group, sub, action, ext, core, check");
    static const std::map<std::string, StmtKind> kws = {
        {"group", StmtKind::group}, {"sub", StmtKind::sub},   {"action", StmtKind::action},
        {"ext", StmtKind::ext},     {"core", StmtKind::core}, {"check", StmtKind::check}};
    auto it = kws.find(kw);
    if (it == kws.end()) {
      error_at("unknown statement '" + kw + "'; expected one of: group, sub, action, ext, core, check",
               st.line, st.column);
    }
    st.kind = it->second;
    std::size_t name_line = 0, name_col = 0;
    if (st.kind != StmtKind::core && st.kind != StmtKind::check) {
      skip_space();
      name_line = line_;
      name_col = col_;
      st.name = identifier("a name");
      expect('=');
    }
    st.value = expr();
    validate(st);
    if (!st.name.empty()) {
      if (bound_.count(st.name) || st.name == "quaternion8") {
        error_at("name '" + st.name + "' is already bound", name_line, name_col);
      }
      static const std::map<StmtKind, Bound> kinds = {{StmtKind::group, Bound::group},
                                                      {StmtKind::sub, Bound::sub},
                                                      {StmtKind::action, Bound::action},
                                                      {StmtKind::ext, Bound::ext}};
      bound_[st.name] = kinds.at(st.kind);
    }
    return st;
  }

  Call expr() {
    skip_space();
    Call c;
    c.line = line_;
    c.column = col_;
    c.head = identifier("an identifier");
    skip_space();
    if (peek() != '(') {
      c.bare = true;
      return c;
    }
    advance();
    skip_space();
    if (peek() == ')') {
      advance();
      return c;
    }
    for (;;) {
      c.args.push_back(arg());
      skip_space();
      if (peek() == ')') {
        advance();
        return c;
      }
      if (peek() == ';' || peek() == ',') {
        advance();
        continue;
      }
      error("expected one of: term, ';', ',', ')', found " + found());
    }
  }

  std::vector<Term> arg() {
    std::vector<Term> terms;
    for (;;) {
      skip_space();
      char c = peek();
      if (c == ';' || c == ',' || c == ')') break;
      if (c == '\n' || at_end() || c == '#') break;
      terms.push_back(term());
    }
    if (terms.empty()) error("expected a term, found " + found());
    return terms;
  }

  Term term() {
    Term t;
    t.line = line_;
    t.column = col_;
    char c = peek();
    if (ident_start(c)) {
      Call call = expr();
      if (call.bare) {
        t.kind = TermKind::name;
        t.text = call.head;
      } else {
        t.kind = TermKind::call;
        t.text = call.head;
        t.call.push_back(std::move(call));
      }
      return t;
    }
    if (digit(c)) {
      t.kind = TermKind::number;
      while (!at_end() && digit(peek())) {
        t.text += peek();
        advance();
      }
      if (ident_char(peek())) error("expected a digit or separator, found " + found());
      auto nz = t.text.find_first_not_of('0');
      t.text = nz == std::string::npos ? "0" : t.text.substr(nz);
      return t;
    }
    if (c == '"') {
      t.kind = TermKind::string;
      advance();
      while (!at_end() && peek() != '"' && peek() != '\n') {
        t.text += peek();
        advance();
      }
      if (peek() != '"') error("unterminated string");
      advance();
      return t;
    }
    if (c == '(') return cycle_word();
    error("expected one of: identifier, number, string, cycle word, found " + found());
  }

  Term cycle_word() {
    Term t;
    t.kind = TermKind::cycle;
    t.line = line_;
    t.column = col_;
    std::string raw;
    std::size_t degree = 1;
    while (peek() == '(') {
      raw += '(';
      advance();
      for (;;) {
        while (peek() == ' ' || peek() == '\t') advance();
        if (peek() == ')') break;
        if (!digit(peek())) error("expected one of: point, ')', found " + found());
        std::string num;
        while (digit(peek())) {
          num += peek();
          advance();
        }
        if (num.size() > 3) error_at("cycle point out of range", t.line, t.column);
        degree = std::max<std::size_t>(degree, std::stoul(num));
        raw += num + " ";
      }
      raw += ')';
      advance();
    }
    auto perm = parse_cycles(raw, degree);
    if (!perm) error_at("invalid cycle word " + raw, t.line, t.column);
    t.text = cycle_notation(*perm);
    return t;
  }

  // -- validation ----------------------------------------------------------

  void require_bound(const Term& t, Bound kind) {
    if (t.kind != TermKind::name) {
      error_at(std::string("expected a ") + kind_name(kind) + " name", t.line, t.column);
    }
    auto it = bound_.find(t.text);
    if (it == bound_.end()) error_at("unbound name '" + t.text + "'", t.line, t.column);
    if (it->second != kind) {
      error_at("'" + t.text + "' is a " + kind_name(it->second) + ", expected a " + kind_name(kind),
               t.line, t.column);
    }
  }

  void validate_group_expr(const Call& c) {
    if (c.bare) {
      if (c.head == "quaternion8") return;
      auto it = bound_.find(c.head);
      if (it == bound_.end()) error_at("unbound name '" + c.head + "'", c.line, c.column);
      if (it->second != Bound::group) {
        error_at("'" + c.head + "' is a " + std::string(kind_name(it->second)) + ", expected a group",
                 c.line, c.column);
      }
      return;
    }
    const auto& ctors = group_constructors();
    auto it = ctors.find(c.head);
    if (it == ctors.end()) {
      std::string names;
      for (const auto& [k, v] : ctors) names += (names.empty() ? "" : ", ") + k;
      error_at("unknown group constructor '" + c.head + "'; expected one of: " + names +
                   ", or a group name",
               c.line, c.column);
    }
    const auto& sig = it->second;
    if (c.args.size() != sig.size()) {
      error_at(c.head + " expects " + std::to_string(sig.size()) + " argument(s)", c.line, c.column);
    }
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const auto& a = c.args[i];
      const Term& t = a.front();
      if (a.size() != 1) error_at("expected a single term", a[1].line, a[1].column);
      if (sig[i] == "n" && t.kind != TermKind::number) error_at("expected a number", t.line, t.column);
      if (sig[i] == "s" && t.kind != TermKind::string) error_at("expected a string", t.line, t.column);
      if (sig[i] == "g") {
        if (t.kind == TermKind::call) {
          validate_group_expr(t.call.front());
        } else if (t.kind == TermKind::name) {
          Call bare{t.text, true, {}, t.line, t.column};
          validate_group_expr(bare);
        } else {
          error_at("expected a group expression", t.line, t.column);
        }
      }
    }
  }

  void validate(const Statement& st) {
    const Call& c = st.value;
    if (st.kind == StmtKind::group) {
      validate_group_expr(c);
      return;
    }
    const auto& sigs = signatures(st.kind);
    auto it = sigs.find(c.head);
    if (it == sigs.end() || c.bare) {
      if (it == sigs.end()) {
        error_at("unknown '" + c.head + "'; expected one of: " + join_keys(sigs), c.line, c.column);
      }
      if (!it->second.empty() && it->second.front() != Arg::opt_number) {
        error_at("expected '(' after " + c.head, c.line, c.column + c.head.size());
      }
    }
    const Signature& sig = it->second;
    std::size_t required = 0;
    for (Arg a : sig) required += a != Arg::elems && a != Arg::opt_number;
    if (c.args.size() < required || c.args.size() > sig.size()) {
      error_at(c.head + " expects " + std::to_string(required) +
                   (required == sig.size() ? "" : "-" + std::to_string(sig.size())) + " argument(s)",
               c.line, c.column);
    }
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      const auto& a = c.args[i];
      if (sig[i] != Arg::elems && a.size() != 1) {
        error_at("expected a single term", a[1].line, a[1].column);
      }
      const Term& t = a.front();
      switch (sig[i]) {
        case Arg::group:
          require_bound(t, Bound::group);
          break;
        case Arg::sub:
          require_bound(t, Bound::sub);
          break;
        case Arg::action:
          require_bound(t, Bound::action);
          break;
        case Arg::ext:
          require_bound(t, Bound::ext);
          break;
        case Arg::number:
        case Arg::opt_number:
          if (t.kind != TermKind::number) error_at("expected a number", t.line, t.column);
          break;
        case Arg::elems:
          for (const Term& e : a) {
            if (e.kind != TermKind::number && e.kind != TermKind::cycle) {
              error_at("expected an element index or cycle word", e.line, e.column);
            }
          }
          break;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Printer

void print_call(std::ostream& out, const Call& c, bool top_level);

void print_term(std::ostream& out, const Term& t) {
  switch (t.kind) {
    case TermKind::name:
    case TermKind::number:
    case TermKind::cycle:
      out << t.text;
      break;
    case TermKind::string:
      out << '"' << t.text << '"';
      break;
    case TermKind::call:
      print_call(out, t.call.front(), false);
      break;
  }
}

void print_call(std::ostream& out, const Call& c, bool top_level) {
  out << c.head;
  if (c.bare) return;
  out << "(";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) out << (top_level ? "; " : ", ");
    for (std::size_t j = 0; j < c.args[i].size(); ++j) {
      if (j) out << " ";
      print_term(out, c.args[i][j]);
    }
  }
  out << ")";
}

const char* keyword(StmtKind k) {
  switch (k) {
    case StmtKind::group:
      return "group";
    case StmtKind::sub:
      return "sub";
    case StmtKind::action:
      return "action";
    case StmtKind::ext:
      return "ext";
    case StmtKind::core:
      return "core";
    case StmtKind::check:
      return "check";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Interpreter

using Value = std::variant<GroupPtr, Subgroup, BAction, SplitExtension>;

class Interpreter {
 public:
  explicit Interpreter(const ScriptOptions& opts) : opts_(opts) {}

  void run(const Statement& st, ScriptResult& out) {
    line_ = st.line;
    const Call& c = st.value;
    switch (st.kind) {
      case StmtKind::group: {
        GroupPtr g = group_expr(c);
        out.lines.push_back(st.name + " = " + g->label() + ", order " + std::to_string(g->order()));
        env_.insert_or_assign(st.name, g);
        break;
      }
      case StmtKind::sub: {
        Subgroup s = subgroup(c, out);
        out.lines.push_back(st.name + " = " + describe(s) + ", order " + std::to_string(s.size()));
        env_.insert_or_assign(st.name, s);
        break;
      }
      case StmtKind::action: {
        BAction a = action(c);
        out.lines.push_back(st.name + ": " + a.acting().label() + " acts on " + a.target().label() +
                            (a.is_trivial() ? " trivially" : ""));
        env_.insert_or_assign(st.name, a);
        break;
      }
      case StmtKind::ext: {
        SplitExtension e = extension(c);
        out.lines.push_back(st.name + ": " + describe(e));
        env_.insert_or_assign(st.name, e);
        break;
      }
      case StmtKind::core:
        out.lines.push_back(core(c));
        break;
      case StmtKind::check: {
        CheckReport r = check(c);
        out.lines.push_back(to_line(r));
        out.reports.push_back(std::move(r));
        break;
      }
    }
  }

 private:
  const ScriptOptions& opts_;
  std::map<std::string, Value> env_;
  std::size_t line_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ScriptError(msg, line_); }

  template <typename T>
  const T& get(const Term& t) const {
    return std::get<T>(env_.at(t.text));
  }
  const GroupPtr& group(const Term& t) const { return get<GroupPtr>(t); }
  const Subgroup& sub(const Term& t) const { return get<Subgroup>(t); }

  std::size_t number(const Term& t) const {
    if (t.text.size() > 9) fail("number " + t.text + " is too large");
    return std::stoul(t.text);
  }

  GroupPtr group_term(const Term& t) {
    if (t.kind == TermKind::call) return group_expr(t.call.front());
    return group_expr(Call{t.text, true, {}, t.line, t.column});
  }

  GroupPtr group_expr(const Call& c) {
    if (c.bare) {
      if (c.head == "quaternion8") return quaternion8();
      return std::get<GroupPtr>(env_.at(c.head));
    }
    const auto& a = c.args;
    if (c.head == "direct_product") return direct_product(group_term(a[0][0]), group_term(a[1][0])).group;
    if (c.head == "semidirect") {
      GroupPtr x = group_term(a[0][0]), b = group_term(a[1][0]);
      std::size_t k = number(a[2][0]);
      auto acts = enumerate_actions(b, x);
      if (k >= acts.size()) {
        fail(b->label() + " has " + std::to_string(acts.size()) + " actions on " + x->label());
      }
      return semidirect_product(acts[k], x->label() + ":" + b->label() + "[" + std::to_string(k) + "]")
          .middle_ptr();
    }
    std::ostringstream spec;
    print_call(spec, c, false);
    return construct_catalog_group(spec.str(), opts_.base_dir);
  }

  Elem element(const GroupPtr& g, const Term& t) const {
    if (t.kind == TermKind::number) {
      std::size_t v = number(t);
      if (v >= g->order()) fail("element " + t.text + " out of range for " + g->label());
      return static_cast<Elem>(v);
    }
    auto e = g->find_element(t.text);
    if (!e) fail(g->label() + " has no element " + t.text);
    return *e;
  }

  Subgroup subgroup(const Call& c, ScriptResult&) {
    const GroupPtr& g = group(c.args[0][0]);
    if (c.head == "whole") return Subgroup::whole(g);
    if (c.head == "trivial") return Subgroup::trivial(g);
    std::vector<Elem> seed;
    if (c.args.size() > 1)
      for (const Term& t : c.args[1]) seed.push_back(element(g, t));
    return generated(g, seed);
  }

  BAction action(const Call& c) {
    const auto& a = c.args;
    if (c.head == "conjugation") return conjugation_action(group(a[0][0]));
    if (c.head == "trivial") return trivial_action(group(a[0][0]), group(a[1][0]));
    if (c.head == "of") return action_of_split_extension(get<SplitExtension>(a[0][0]));
    auto acts = enumerate_actions(group(a[0][0]), group(a[1][0]));
    std::size_t k = number(a[2][0]);
    if (k >= acts.size()) fail("only " + std::to_string(acts.size()) + " actions available");
    return acts[k];
  }

  SplitExtension extension(const Call& c) {
    const auto& a = c.args;
    if (c.head == "semidirect") return semidirect_product(get<BAction>(a[0][0]));
    const Subgroup& k = sub(a[0][0]);
    const Subgroup& b = sub(a[1][0]);
    if (k.parent_ptr() != b.parent_ptr()) fail("subgroups of different groups");
    if (!is_decomposition(k, b)) fail(describe(k) + " and " + describe(b) + " do not decompose the group");
    return extension_from_decomposition(k, b);
  }

  std::string core(const Call& c) {
    const auto& a = c.args;
    const Subgroup& s = sub(a[0][0]);
    if (c.head == "normal") return "normal core of " + a[0][0].text + " = " + normal_core(s).to_string();
    if (c.head == "commutator") {
      const Subgroup& k = sub(a[1][0]);
      if (k.parent_ptr() != s.parent_ptr()) fail("subgroups of different groups");
      return "[" + a[0][0].text + ", " + a[1][0].text + "] = " + higgins_commutator(s, k).to_string();
    }
    if (c.head == "action") {
      const BAction& act = get<BAction>(a[1][0]);
      if (s.parent_ptr() != act.target_ptr()) fail(a[0][0].text + " is not a subgroup of the acted-on group");
      return "action core of " + a[0][0].text + " under " + a[1][0].text + " = " +
             action_core(s, act).to_string();
    }
    const SplitExtension& e = get<SplitExtension>(a[1][0]);
    if (s.parent_ptr() != e.kernel_ptr()) fail(a[0][0].text + " is not a subgroup of the kernel");
    ExtensionCore core = split_extension_core(s, e);
    return "split extension core of " + a[0][0].text + " in " + a[1][0].text + ": kernel " +
           core.kernel_part.to_string() + ", point " + core.point.to_string() + " of order " +
           std::to_string(core.point.size());
  }

  CheckReport check(const Call& c) {
    const auto& a = c.args;
    const std::string& h = c.head;
    FamilyOptions fam;
    fam.seed = opts_.seed;
    if (h == "group_axioms") {
      const GroupPtr& g = group(a[0][0]);
      validate_group_table(g->order(), g->table());
      return CheckReport{"group_axioms", g->label(), Verdict::holds, std::nullopt, 0.0,
                         g->order() * g->order() * g->order()};
    }
    if (h == "higgins") return check_higgins_normality(group(a[0][0]));
    if (h == "join_normals") return check_join_normals_normal(group(a[0][0]));
    if (h == "commutator_join") return check_commutator_join_all(group(a[0][0]), fam);
    if (h == "three_subobjects") return check_three_subobjects(group(a[0][0]));
    if (h == "normal_core_oracle") return check_normal_core_oracle(group(a[0][0]));
    if (h == "clots") return check_clots(sub(a[0][0]));
    if (h == "normal_core_pullback") return check_normal_core_pullback(sub(a[0][0]));
    if (h == "intersections") {
      const Subgroup& k = sub(a[0][0]);
      const Subgroup& b = sub(a[1][0]);
      if (k.parent_ptr() != b.parent_ptr() || !is_decomposition(k, b)) {
        fail(a[0][0].text + " and " + a[1][0].text + " do not decompose the group");
      }
      return aggregate("intersections", describe(k) + " | " + describe(b),
                       {check_intersections_binary(k, b), check_intersections_family(k, b, fam)});
    }
    if (h == "kernel_geometric") {
      FamilyOptions sp = fam;
      sp.exhaustive_members = 10;
      return check_kernel_geometric_all(get<SplitExtension>(a[0][0]), sp);
    }
    if (h == "core_adjunction") return check_core_adjunction(get<SplitExtension>(a[0][0]));
    if (h == "core_terminality") return check_core_terminality(get<SplitExtension>(a[0][0]));
    if (h == "action_core_routes") return check_action_core_routes(get<BAction>(a[0][0]));
    if (h == "omega_witness") return omega::verify_witness(a.empty() ? 64 : number(a[0][0]));
    // omega_invariance(i; samples)
    std::size_t i = number(a[0][0]);
    std::size_t n = a.size() > 1 ? number(a[1][0]) : 1000;
    return omega::verify_Ni_invariance(i, omega::sample_invariance_pairs(i, n, opts_.seed));
  }
};

}  // namespace

Script parse_script(std::string_view text) { return Parser(text).parse(); }

std::string print_script(const Script& script) {
  std::ostringstream out;
  for (const auto& st : script.statements) {
    out << keyword(st.kind) << " ";
    if (!st.name.empty()) out << st.name << " = ";
    print_call(out, st.value, st.kind != StmtKind::group);
    out << "\n";
  }
  return out.str();
}

ScriptResult run_script(const Script& script, const ScriptOptions& options) {
  ScriptResult out;
  Interpreter interp(options);
  for (const auto& st : script.statements) {
    try {
      interp.run(st, out);
    } catch (const ScriptError&) {
      throw;
    } catch (const std::exception& e) {
      throw ScriptError(e.what(), st.line);
    }
  }
  return out;
}

}  // namespace selab
