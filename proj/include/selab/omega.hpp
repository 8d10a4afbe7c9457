#pragma once

// A decidable fragment of the algebra X = Z₂^ℕ × Z with the ℵ₀-ary
// operation ω, on which a union of normal subalgebras N = ⋃ N_i fails to be
// normal.
//
// Sequences in X^ℕ are described by a finite prefix followed by either a
// constant tail e or a shifted-delta tail whose n-th term is e with bit n
// toggled. The fragment is closed under pointwise addition and ω is
// computable on it.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selab/report.hpp"

namespace selab::omega {

using Integer = boost::multiprecision::cpp_int;

/// (x, z) with x ∈ Z₂^ℕ of finite support.
struct OmegaElement {
  std::vector<std::uint64_t> support;  ///< sorted, unique
  Integer z = 0;

  static OmegaElement make(std::vector<std::uint64_t> support, Integer z);
  bool is_zero() const { return support.empty() && z == 0; }

  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
};

OmegaElement operator+(const OmegaElement& a, const OmegaElement& b);
/// Negation flips z only; the Z₂ part is its own inverse.
OmegaElement operator-(const OmegaElement& a);
OmegaElement operator-(const OmegaElement& a, const OmegaElement& b);
/// Toggles bit n.
OmegaElement toggle(const OmegaElement& a, std::uint64_t n);

enum class TailKind { constant, shifted_delta };

class SeqDescriptor {
 public:
  /// Normalizes: trailing prefix terms equal to the tail term at their
  /// index are absorbed into the tail.
  SeqDescriptor(std::vector<OmegaElement> prefix, TailKind kind, OmegaElement tail);

  static SeqDescriptor constant(OmegaElement e) { return {{}, TailKind::constant, std::move(e)}; }
  static SeqDescriptor shifted_delta(OmegaElement e) {
    return {{}, TailKind::shifted_delta, std::move(e)};
  }
  static SeqDescriptor zero() { return constant({}); }

  const std::vector<OmegaElement>& prefix() const noexcept { return prefix_; }
  TailKind kind() const noexcept { return kind_; }
  const OmegaElement& tail() const noexcept { return tail_; }

  /// n-th term of the sequence.
  OmegaElement term(std::uint64_t n) const;
  /// Same sequence with one more tail term unfolded into the prefix. Not
  /// normalized, so it differs structurally from *this.
  std::vector<OmegaElement> unfolded_prefix(std::size_t length) const;

  friend bool operator==(const SeqDescriptor&, const SeqDescriptor&) = default;

 private:
  std::vector<OmegaElement> prefix_;
  TailKind kind_;
  OmegaElement tail_;
};

/// Pointwise sum.
SeqDescriptor seq_add(const SeqDescriptor& a, const SeqDescriptor& b);
SeqDescriptor seq_neg(const SeqDescriptor& a);

/// ω: (0,0) if the value set is finite or every z-coordinate is 0, (0,1)
/// otherwise.
OmegaElement omega_eval(const SeqDescriptor& d);
/// ω evaluated from an explicit prefix/tail split that need not be
/// normalized; agrees with omega_eval on every representation.
OmegaElement omega_eval_raw(const std::vector<OmegaElement>& prefix, TailKind kind,
                            const OmegaElement& tail);

/// e ∈ N_i  ⟺  z = 0 and every support index is < i.
bool member_Ni(const OmegaElement& e, std::uint64_t i);
/// Every term of the sequence lies in N_i.
bool sequence_in_Ni(const SeqDescriptor& d, std::uint64_t i);

/// ω(α+β) − ω(α).
OmegaElement omega_difference(const SeqDescriptor& alpha, const SeqDescriptor& beta);

/// α = const(0,1), β = (δ_n, 0)_n: ω(α+β) − ω(α) = (0,1) ∉ N_i for i ≤ max_i.
CheckReport verify_witness(std::uint64_t max_i = 64);

/// ω(α+β) = ω(α) for every (α, β) with β ∈ N_i^ℕ. Throws InputError when a
/// β has a term outside N_i.
CheckReport verify_Ni_invariance(std::uint64_t i,
                                 const std::vector<std::pair<SeqDescriptor, SeqDescriptor>>& samples);

/// Seeded random (α, β) pairs with β ∈ N_i^ℕ.
std::vector<std::pair<SeqDescriptor, SeqDescriptor>> sample_invariance_pairs(std::uint64_t i,
                                                                             std::size_t count,
                                                                             std::uint64_t seed);

// Text syntax: `const{support;z}`, `sdelta{support;z}`,
// `prefix[{support;z},...]+tail`. Support indices are separated by spaces
// or commas and may be empty.
std::string to_string(const OmegaElement& e);
std::string to_string(const SeqDescriptor& d);
/// Throws ParseError (line 1, 1-based column).
SeqDescriptor parse_descriptor(std::string_view text);
OmegaElement parse_element(std::string_view text);

}  // namespace selab::omega
