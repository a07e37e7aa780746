#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vsta/automaton.hpp"
#include "vsta/vsa.hpp"

namespace vsta::testgen {

/// SplitMix64 (Steele, Lea, Flood 2014): the state advances by
/// 0x9e3779b97f4a7c15 and each output is mixed with the multipliers
/// 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb (shifts 30, 27, 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, n) via a 128-bit multiply; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability p, using the top 53 bits.
  bool chance(double p);

 private:
  std::uint64_t state_;
};

/// {a/0, b/0, c/0, g/1, f/2}.
Signature default_signature();

enum class GenMode {
  /// Arbitrary overlap between union children.
  Mixed,
  /// Children of every union have disjoint root symbols, so the embedded
  /// automaton has exactly one derivation per accepted term.
  Disjoint,
  /// Mixed, plus a root-level pair of distinct joins with the same head
  /// whose languages overlap, so some term has two derivations.
  Ambiguous,
};

struct GenConfig {
  std::uint64_t seed = 1;
  /// Maximum height of a denoted term (a constant has height 1).
  std::uint32_t max_depth = 4;
  Signature signature = default_signature();
  std::uint32_t max_union_width = 4;
  double share_probability = 0.3;
  /// Upper bound on the number of derivations, hence on |[[v]]|.
  std::size_t max_terms = 10000;
  GenMode mode = GenMode::Mixed;
};

/// Random orthodox VSA mixing set, union and join nodes. A pure function
/// of `cfg` (and the store's prior contents). Throws std::invalid_argument
/// on an unusable configuration.
NodeLabel gen_vsa(VsaStore& store, const GenConfig& cfg);

/// Random normalized VSA with roughly `target_size` nodes plus edges, all
/// reachable from the root. Used for scaling measurements.
NormalizedVsa gen_layered_vsa(VsaStore& store, std::uint64_t seed, std::size_t target_size);

struct AutomatonGenConfig {
  std::uint64_t seed = 1;
  std::uint32_t states = 6;
  std::uint32_t transitions = 10;
  Signature signature = default_signature();
  /// When false every transition targets a state with a larger id than
  /// all its children.
  bool allow_cycles = false;
};

TreeAutomaton gen_automaton(const AutomatonGenConfig& cfg);

/// Reference denotation of an orthodox VSA, evaluated literally from the
/// set, union and join semantics without memoization or sharing. Sorted.
/// Throws OverflowError when any intermediate set exceeds `cap`.
std::vector<Term> oracle_enumerate(const VsaStore& store, NodeLabel root,
                                   std::size_t cap = 100000);

}  // namespace vsta::testgen
