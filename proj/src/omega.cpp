#include "selab/omega.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iterator>
#include <random>
#include <sstream>

#include "selab/errors.hpp"

namespace selab::omega {

OmegaElement OmegaElement::make(std::vector<std::uint64_t> support, Integer z) {
  std::sort(support.begin(), support.end());
  // Z₂ coordinates: a repeated index cancels.
  std::vector<std::uint64_t> reduced;
  for (std::size_t i = 0; i < support.size();) {
    std::size_t j = i;
    while (j < support.size() && support[j] == support[i]) ++j;
    if ((j - i) % 2) reduced.push_back(support[i]);
    i = j;
  }
  return OmegaElement{std::move(reduced), std::move(z)};
}

OmegaElement operator+(const OmegaElement& a, const OmegaElement& b) {
  OmegaElement out;
  std::set_symmetric_difference(a.support.begin(), a.support.end(), b.support.begin(),
                                b.support.end(), std::back_inserter(out.support));
  out.z = a.z + b.z;
  return out;
}

OmegaElement operator-(const OmegaElement& a) { return OmegaElement{a.support, -a.z}; }

OmegaElement operator-(const OmegaElement& a, const OmegaElement& b) { return a + (-b); }

OmegaElement toggle(const OmegaElement& a, std::uint64_t n) {
  std::uint64_t one[] = {n};
  OmegaElement out;
  std::set_symmetric_difference(a.support.begin(), a.support.end(), std::begin(one),
                                std::end(one), std::back_inserter(out.support));
  out.z = a.z;
  return out;
}

// ---------------------------------------------------------------------------

SeqDescriptor::SeqDescriptor(std::vector<OmegaElement> prefix, TailKind kind, OmegaElement tail)
    : prefix_(std::move(prefix)), kind_(kind), tail_(std::move(tail)) {
  while (!prefix_.empty()) {
    std::uint64_t n = prefix_.size() - 1;
    OmegaElement tail_term = kind_ == TailKind::constant ? tail_ : toggle(tail_, n);
    if (!(prefix_.back() == tail_term)) break;
    prefix_.pop_back();
  }
}

OmegaElement SeqDescriptor::term(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return kind_ == TailKind::constant ? tail_ : toggle(tail_, n);
}

std::vector<OmegaElement> SeqDescriptor::unfolded_prefix(std::size_t length) const {
  std::vector<OmegaElement> out = prefix_;
  for (std::size_t n = out.size(); n < length; ++n) out.push_back(term(n));
  return out;
}

SeqDescriptor seq_add(const SeqDescriptor& a, const SeqDescriptor& b) {
  const std::size_t len = std::max(a.prefix().size(), b.prefix().size());
  std::vector<OmegaElement> prefix;
  prefix.reserve(len);
  for (std::size_t n = 0; n < len; ++n) prefix.push_back(a.term(n) + b.term(n));
  // The toggled bit appears once per shifted-delta summand; two cancel.
  bool a_delta = a.kind() == TailKind::shifted_delta;
  bool b_delta = b.kind() == TailKind::shifted_delta;
  TailKind kind = (a_delta != b_delta) ? TailKind::shifted_delta : TailKind::constant;
  return SeqDescriptor(std::move(prefix), kind, a.tail() + b.tail());
}

SeqDescriptor seq_neg(const SeqDescriptor& a) {
  std::vector<OmegaElement> prefix;
  for (const auto& e : a.prefix()) prefix.push_back(-e);
  return SeqDescriptor(std::move(prefix), a.kind(), -a.tail());
}

OmegaElement omega_eval_raw(const std::vector<OmegaElement>& prefix, TailKind kind,
                            const OmegaElement& tail) {
  // A constant tail takes one value from some index on: finite value set.
  if (kind == TailKind::constant) return {};
  // Shifted-delta terms are pairwise distinct: infinite value set.
  bool all_z_zero = tail.z == 0 && std::all_of(prefix.begin(), prefix.end(),
                                               [](const OmegaElement& e) { return e.z == 0; });
  if (all_z_zero) return {};
  return OmegaElement{{}, 1};
}

OmegaElement omega_eval(const SeqDescriptor& d) {
  return omega_eval_raw(d.prefix(), d.kind(), d.tail());
}

bool member_Ni(const OmegaElement& e, std::uint64_t i) {
  return e.z == 0 && (e.support.empty() || e.support.back() < i);
}

bool sequence_in_Ni(const SeqDescriptor& d, std::uint64_t i) {
  // Shifted-delta tails have terms with arbitrarily large support indices.
  if (d.kind() == TailKind::shifted_delta) return false;
  return member_Ni(d.tail(), i) &&
         std::all_of(d.prefix().begin(), d.prefix().end(),
                     [i](const OmegaElement& e) { return member_Ni(e, i); });
}

OmegaElement omega_difference(const SeqDescriptor& alpha, const SeqDescriptor& beta) {
  return omega_eval(seq_add(alpha, beta)) - omega_eval(alpha);
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

CheckReport verify_witness(std::uint64_t max_i) {
  auto start = std::chrono::steady_clock::now();
  CheckReport r;
  r.check = "omega_witness";
  r.instance = "alpha=const{;1} beta=sdelta{;0} i<=" + std::to_string(max_i);
  const SeqDescriptor alpha = SeqDescriptor::constant(OmegaElement{{}, 1});
  const SeqDescriptor beta = SeqDescriptor::shifted_delta(OmegaElement{});
  const OmegaElement diff = omega_difference(alpha, beta);
  const OmegaElement expected{{}, 1};
  std::ostringstream wit;
  if (!(diff == expected)) {
    r.verdict = Verdict::fails;
    wit << "difference " << to_string(diff) << " != " << to_string(expected);
  }
  for (std::uint64_t i = 0; i <= max_i && r.holds(); ++i) {
    ++r.cases;
    if (member_Ni(diff, i)) {
      r.verdict = Verdict::fails;
      wit << "difference lies in N_" << i;
    }
  }
  if (!r.holds()) r.witness = wit.str();
  r.millis = elapsed_ms(start);
  return r;
}

CheckReport verify_Ni_invariance(std::uint64_t i,
                                 const std::vector<std::pair<SeqDescriptor, SeqDescriptor>>& samples) {
  auto start = std::chrono::steady_clock::now();
  CheckReport r;
  r.check = "omega_Ni_invariance";
  r.instance = "i=" + std::to_string(i) + " samples=" + std::to_string(samples.size());
  for (const auto& [alpha, beta] : samples) {
    if (!sequence_in_Ni(beta, i)) {
      throw InputError("verify_Ni_invariance: " + to_string(beta) + " has a term outside N_" +
                       std::to_string(i));
    }
  }
  for (const auto& [alpha, beta] : samples) {
    ++r.cases;
    OmegaElement lhs = omega_eval(seq_add(alpha, beta));
    OmegaElement rhs = omega_eval(alpha);
    if (!(lhs == rhs)) {
      r.verdict = Verdict::fails;
      r.witness = "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " omega(a+b)=" +
                  to_string(lhs) + " omega(a)=" + to_string(rhs);
      break;
    }
  }
  r.millis = elapsed_ms(start);
  return r;
}

std::vector<std::pair<SeqDescriptor, SeqDescriptor>> sample_invariance_pairs(std::uint64_t i,
                                                                             std::size_t count,
                                                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (i * 0x9E3779B97F4A7C15ull));
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  auto element = [&](std::uint64_t max_index, bool zero_z) {
    std::vector<std::uint64_t> support;
    const auto k = uniform(0, 3);
    for (std::uint64_t j = 0; j < k && max_index > 0; ++j) support.push_back(uniform(0, max_index - 1));
    Integer z = zero_z ? Integer(0) : Integer(static_cast<long long>(uniform(0, 6)) - 3);
    return OmegaElement::make(std::move(support), z);
  };
  std::vector<std::pair<SeqDescriptor, SeqDescriptor>> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<OmegaElement> ap;
    for (auto k = uniform(0, 4); k > 0; --k) ap.push_back(element(16, uniform(0, 1) == 0));
    TailKind ak = uniform(0, 1) ? TailKind::shifted_delta : TailKind::constant;
    SeqDescriptor alpha(std::move(ap), ak, element(16, uniform(0, 1) == 0));
    std::vector<OmegaElement> bp;
    for (auto k = uniform(0, 4); k > 0; --k) bp.push_back(element(i, true));
    SeqDescriptor beta(std::move(bp), TailKind::constant, element(i, true));
    out.emplace_back(std::move(alpha), std::move(beta));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text syntax

std::string to_string(const OmegaElement& e) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < e.support.size(); ++k) os << (k ? " " : "") << e.support[k];
  os << ";" << e.z << "}";
  return os.str();
}

std::string to_string(const SeqDescriptor& d) {
  std::string tail = (d.kind() == TailKind::constant ? "const" : "sdelta") + to_string(d.tail());
  if (d.prefix().empty()) return tail;
  std::string out = "prefix[";
  for (std::size_t k = 0; k < d.prefix().size(); ++k) out += (k ? "," : "") + to_string(d.prefix()[k]);
  return out + "]+" + tail;
}

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  SeqDescriptor descriptor() {
    skip_ws();
    std::vector<OmegaElement> prefix;
    if (accept("prefix")) {
      expect('[');
      skip_ws();
      if (peek() != ']') {
        prefix.push_back(element());
        skip_ws();
        while (peek() == ',') {
          ++pos_;
          prefix.push_back(element());
          skip_ws();
        }
      }
      expect(']');
      expect('+');
    }
    skip_ws();
    TailKind kind;
    if (accept("const")) {
      kind = TailKind::constant;
    } else if (accept("sdelta")) {
      kind = TailKind::shifted_delta;
    } else {
      fail("expected one of: const, sdelta, prefix");
    }
    OmegaElement tail = element();
    end();
    return SeqDescriptor(std::move(prefix), kind, std::move(tail));
  }

  OmegaElement element() {
    expect('{');
    std::vector<std::uint64_t> support;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == ';') break;
      if (c == ',') {
        ++pos_;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a support index or ';'");
      std::uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      support.push_back(v);
    }
    expect(';');
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits[0] == '+') digits.erase(0, 1);
    Integer z(digits);
    expect('}');
    return OmegaElement::make(std::move(support), std::move(z));
  }

  void end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing text");
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeqDescriptor parse_descriptor(std::string_view text) { return DescriptorParser(text).descriptor(); }

OmegaElement parse_element(std::string_view text) {
  DescriptorParser p(text);
  OmegaElement e = p.element();
  p.end();
  return e;
}

}  // namespace selab::omega
