// Named families of p-groups and the builtin verification corpus.
//
// Entry strings look like `dihedral(16)` or `abelian(9,3)`; anything else is
// taken as a path to a presentation file.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "multbound/pc.hpp"

namespace multbound {

struct CorpusEntry {
  std::string id;
  std::string source;  ///< "builtin" or the file path
  PcPresentation presentation;
};

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Families and their parameters:
///   abelian(o1, o2, ...)          cyclic orders, all powers of one prime
///   elementary(p, d)              d >= 1
///   heisenberg(p)                 order p^3, exponent p for odd p
///   extraspecial(p, m, plus|minus) order p^{1+2m}; for odd p `minus` has
///                                 exponent p^2, for p = 2 `plus` is a
///                                 central product of dihedral groups and
///                                 `minus` involves one quaternion factor
///   dihedral(N), quaternion(N)    N = 2^n, n >= 3
///   semidihedral(N)               N = 2^n, n >= 4
///   modular(p, n)                 order p^n, n >= 3 (n >= 4 for p = 2)
///   free_class2_exp_p(p, r)       p odd, r >= 2
///   wreath_pp(p)                  Z/p wr Z/p, order p^{p+1}
/// The order must not exceed the table cap. Throws FamilyError.
CorpusEntry builtin_family(const std::string& name, const std::vector<long long>& params,
                           const std::vector<std::string>& words = {});

std::vector<std::string> family_names();

/// True for strings of the form name(args).
bool is_family_spec(const std::string& s);
/// Parses and builds a family spec; the id is the normalised spec.
CorpusEntry parse_family_spec(const std::string& s);
/// A family spec or a presentation file.
CorpusEntry load_entry(const std::string& spec_or_path);

/// The builtin corpus for p in {2, 3, 5}: every abelian group, the dihedral,
/// quaternion, semidihedral, modular, extraspecial and wreath families, all of
/// order at most `max_order`. `families` restricts to the named families
/// (empty or {"all"} keeps everything).
std::vector<CorpusEntry> builtin_corpus(std::size_t max_order, const std::vector<std::string>& families = {});

}  // namespace multbound
