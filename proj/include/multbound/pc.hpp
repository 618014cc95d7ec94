// Power-commutator presentations of finite p-groups and collection.
//
// A presentation has generators g_1..g_n, every relative order equal to p,
// power relations g_i^p = w_i and commutator relations [g_j, g_i] = w_ji for
// j > i, where each right-hand side only involves generators of larger index.
// Generator indices are 0-based in the API and 1-based in the text format.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multbound {

/// g_1^{e_1} ... g_n^{e_n} with every e_i in [0, p-1].
struct NormalWord {
  std::vector<int> exponents;

  bool is_identity() const;
  bool operator==(const NormalWord&) const = default;
  auto operator<=>(const NormalWord&) const = default;
};

struct PcPresentation {
  int prime = 2;
  int ngens = 0;
  /// powers[i] is g_i^p.
  std::vector<NormalWord> powers;
  /// commutators[j][i] (j > i) is [g_j, g_i]; entries with j <= i are unused.
  std::vector<std::vector<NormalWord>> commutators;

  /// A presentation on n generators with all relations trivial.
  static PcPresentation elementary(int prime, int ngens);

  NormalWord identity() const;
  NormalWord generator(int i) const;
  void set_power(int i, NormalWord w);
  void set_commutator(int j, int i, NormalWord w);

  /// Structural checks (prime, shapes, index ordering, exponent ranges).
  /// Throws PresentationError.
  void validate() const;
};

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PresentationError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

bool is_prime(long long n);

/// Parses the line-oriented presentation format. The result is structurally
/// valid but not checked for consistency.
PcPresentation parse_presentation(std::string_view text);
PcPresentation read_presentation_file(const std::string& path);
std::string format_presentation(const PcPresentation& pres);

/// Letters are 1-based signed generator numbers: +k is g_k and -k is g_k^-1.
NormalWord collect(std::span<const int> letters, const PcPresentation& pres);

NormalWord multiply(const NormalWord& a, const NormalWord& b,
                    const PcPresentation& pres);
NormalWord inverse(const NormalWord& a, const PcPresentation& pres);
NormalWord power(const NormalWord& a, long long k, const PcPresentation& pres);
/// a^-1 b^-1 a b
NormalWord commutator(const NormalWord& a, const NormalWord& b,
                      const PcPresentation& pres);

/// The letter sequence spelling a normal word, usable with collect().
std::vector<int> letters_of(const NormalWord& w);

struct ConsistencyResult {
  bool consistent = true;
  /// Human-readable name of the first failing overlap, e.g. "g3 g2 g1".
  std::string failing_test;
  std::optional<NormalWord> lhs;
  std::optional<NormalWord> rhs;
};

ConsistencyResult consistency_check(const PcPresentation& pres);

/// The presentation of A x B: generators of A followed by those of B.
PcPresentation direct_product(const PcPresentation& a, const PcPresentation& b);

/// Mixed-radix index of a normal word with g_1 as the most significant digit.
std::size_t word_index(const NormalWord& w, int prime);
NormalWord word_from_index(std::size_t index, int prime, int ngens);

}  // namespace multbound
