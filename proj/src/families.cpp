#include "multbound/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "multbound/table_group.hpp"

namespace multbound {

namespace {

int log_exact(long long value, int p) {
  int e = 0;
  while (value > 1 && value % p == 0) {
    value /= p;
    ++e;
  }
  return value == 1 ? e : -1;
}

int smallest_prime_factor(long long n) {
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return static_cast<int>(d);
  return static_cast<int>(n);
}

void check_order(int p, int ngens) {
  std::size_t order = 1;
  for (int i = 0; i < ngens; ++i) {
    order *= static_cast<std::size_t>(p);
    if (order > kDefaultTableCap)
      throw FamilyError("group order exceeds the table cap of " + std::to_string(kDefaultTableCap));
  }
}

void need_prime(long long p) {
  if (!is_prime(p)) throw FamilyError(std::to_string(p) + " is not prime");
}

// r^m where generators first, first+1, .. are r, r^p, r^{p^2}, ... and r has
// order p^len.
NormalWord cyclic_power(const PcPresentation& pres, int first, int len, long long m) {
  const int p = pres.prime;
  long long order = 1;
  for (int i = 0; i < len; ++i) order *= p;
  m = ((m % order) + order) % order;
  NormalWord w = pres.identity();
  for (int i = 0; i < len; ++i) {
    w.exponents[first + i] = static_cast<int>(m % p);
    m /= p;
  }
  return w;
}

// Adds a cyclic block: generators first.. with g^p = next generator.
void cyclic_block(PcPresentation& pres, int first, int len) {
  for (int i = 0; i + 1 < len; ++i) pres.set_power(first + i, pres.generator(first + i + 1));
}

// <s, r> with r of order p^{n-1} (generators 2..n as powers of r),
// s^{-1} r s = r^sigma and s^p = r^{s_pow}.
PcPresentation metacyclic(int p, int n, long long sigma, long long s_pow) {
  check_order(p, n);
  PcPresentation pres = PcPresentation::elementary(p, n);
  const int len = n - 1;
  cyclic_block(pres, 1, len);
  pres.set_power(0, cyclic_power(pres, 1, len, s_pow));
  long long step = 1;
  for (int i = 1; i <= len; ++i, step *= p) {
    NormalWord c = cyclic_power(pres, 1, len, step * (sigma - 1));
    if (!c.is_identity()) pres.set_commutator(i, 0, c);
  }
  return pres;
}

long long two_power_exponent(long long order, int min_n) {
  const int n = log_exact(order, 2);
  if (n < min_n) throw FamilyError("order must be 2^n with n >= " + std::to_string(min_n));
  return n;
}

std::string join_params(const std::vector<long long>& params, const std::vector<std::string>& words) {
  std::ostringstream os;
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  for (std::size_t i = 0; i < words.size(); ++i) os << (params.empty() && i == 0 ? "" : ",") << words[i];
  return os.str();
}

void arity(const std::vector<long long>& params, std::size_t n, const std::string& name) {
  if (params.size() != n)
    throw FamilyError(name + " takes " + std::to_string(n) + " numeric parameter" + (n == 1 ? "" : "s"));
}

PcPresentation build(const std::string& name, const std::vector<long long>& params,
                     const std::vector<std::string>& words) {
  if (name != "extraspecial" && !words.empty()) throw FamilyError(name + " takes numeric parameters only");

  if (name == "abelian") {
    if (params.empty()) throw FamilyError("abelian needs at least one cyclic order");
    const int p = smallest_prime_factor(std::max(2LL, params[0]));
    std::vector<int> exps;
    for (long long o : params) {
      const int e = o >= 2 ? log_exact(o, p) : -1;
      if (e < 1) throw FamilyError("abelian orders must be powers of one prime, got " + std::to_string(o));
      exps.push_back(e);
    }
    std::sort(exps.rbegin(), exps.rend());
    int n = 0;
    for (int e : exps) n += e;
    check_order(p, n);
    PcPresentation pres = PcPresentation::elementary(p, n);
    int first = 0;
    for (int e : exps) {
      cyclic_block(pres, first, e);
      first += e;
    }
    return pres;
  }
  if (name == "elementary") {
    arity(params, 2, name);
    need_prime(params[0]);
    if (params[1] < 1) throw FamilyError("elementary needs d >= 1");
    check_order(static_cast<int>(params[0]), static_cast<int>(params[1]));
    return PcPresentation::elementary(static_cast<int>(params[0]), static_cast<int>(params[1]));
  }
  if (name == "heisenberg") {
    arity(params, 1, name);
    return build("extraspecial", {params[0], 1}, {"plus"});
  }
  if (name == "extraspecial") {
    if (params.size() != 2 || words.size() > 1)
      throw FamilyError("extraspecial takes (p, m, plus|minus)");
    need_prime(params[0]);
    const int p = static_cast<int>(params[0]);
    const long long m = params[1];
    if (m < 1) throw FamilyError("extraspecial needs m >= 1");
    const std::string variant = words.empty() ? "plus" : words[0];
    if (variant != "plus" && variant != "minus") throw FamilyError("extraspecial variant must be plus or minus");
    const int n = static_cast<int>(2 * m + 1);
    check_order(p, n);
    PcPresentation pres = PcPresentation::elementary(p, n);
    const int z = n - 1;
    for (int j = 0; j < m; ++j) pres.set_commutator(2 * j + 1, 2 * j, pres.generator(z));
    if (variant == "minus") {
      pres.set_power(0, pres.generator(z));
      if (p == 2) pres.set_power(1, pres.generator(z));
    }
    return pres;
  }
  if (name == "dihedral" || name == "quaternion" || name == "semidihedral") {
    arity(params, 1, name);
    const int n = static_cast<int>(two_power_exponent(params[0], name == "semidihedral" ? 4 : 3));
    const long long half = 1LL << (n - 2);  // r^half is the involution in <r>
    if (name == "dihedral") return metacyclic(2, n, -1, 0);
    if (name == "quaternion") return metacyclic(2, n, -1, half);
    return metacyclic(2, n, half - 1, 0);
  }
  if (name == "modular") {
    arity(params, 2, name);
    need_prime(params[0]);
    const int p = static_cast<int>(params[0]);
    const long long n = params[1];
    if (n < (p == 2 ? 4 : 3)) throw FamilyError("modular needs n >= 3 (n >= 4 for p = 2)");
    check_order(p, static_cast<int>(n));
    long long pn2 = 1;
    for (int i = 0; i < n - 2; ++i) pn2 *= p;
    return metacyclic(p, static_cast<int>(n), 1 + pn2, 0);
  }
  if (name == "free_class2_exp_p") {
    arity(params, 2, name);
    need_prime(params[0]);
    const int p = static_cast<int>(params[0]);
    if (p == 2) throw FamilyError("free_class2_exp_p needs p odd");
    const int r = static_cast<int>(params[1]);
    if (r < 2) throw FamilyError("free_class2_exp_p needs rank >= 2");
    const int n = r + r * (r - 1) / 2;
    check_order(p, n);
    PcPresentation pres = PcPresentation::elementary(p, n);
    int c = r;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) pres.set_commutator(j, i, pres.generator(c++));
    return pres;
  }
  if (name == "wreath_pp") {
    arity(params, 1, name);
    need_prime(params[0]);
    const int p = static_cast<int>(params[0]);
    check_order(p, p + 1);
    PcPresentation pres = PcPresentation::elementary(p, p + 1);
    for (int k = 1; k < p; ++k) pres.set_commutator(k, 0, pres.generator(k + 1));
    return pres;
  }
  throw FamilyError("unknown family '" + name + "'");
}

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
  return s;
}

}  // namespace

CorpusEntry builtin_family(const std::string& name, const std::vector<long long>& params,
                           const std::vector<std::string>& words) {
  CorpusEntry e;
  e.presentation = build(name, params, words);
  std::vector<long long> shown = params;
  if (name == "abelian") std::sort(shown.rbegin(), shown.rend());
  e.id = name + "(" + join_params(shown, words) + ")";
  e.source = "builtin";
  return e;
}

std::vector<std::string> family_names() {
  return {"abelian", "elementary", "heisenberg", "extraspecial", "dihedral",
          "quaternion", "semidihedral", "modular", "free_class2_exp_p", "wreath_pp"};
}

bool is_family_spec(const std::string& s) {
  const std::string t = trim(s);
  const auto open = t.find('(');
  if (open == std::string::npos || open == 0 || t.back() != ')') return false;
  return std::all_of(t.begin(), t.begin() + static_cast<long>(open),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

CorpusEntry parse_family_spec(const std::string& s) {
  if (!is_family_spec(s)) throw FamilyError("not a family spec: '" + s + "'");
  const std::string t = trim(s);
  const auto open = t.find('(');
  const std::string name = t.substr(0, open);
  std::vector<long long> params;
  std::vector<std::string> words;
  std::stringstream args(t.substr(open + 1, t.size() - open - 2));
  std::string tok;
  while (std::getline(args, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) throw FamilyError("empty parameter in '" + s + "'");
    if (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-') {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw FamilyError("bad number '" + tok + "'");
      }
      if (used != tok.size()) throw FamilyError("bad number '" + tok + "'");
      if (!words.empty()) throw FamilyError("numeric parameters must come first");
      params.push_back(v);
    } else {
      words.push_back(tok);
    }
  }
  return builtin_family(name, params, words);
}

CorpusEntry load_entry(const std::string& spec_or_path) {
  if (is_family_spec(spec_or_path)) return parse_family_spec(spec_or_path);
  CorpusEntry e;
  e.presentation = read_presentation_file(spec_or_path);
  e.id = spec_or_path;
  e.source = spec_or_path;
  return e;
}

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus(std::size_t max_order, const std::vector<std::string>& families) {
  const bool all = families.empty() || std::find(families.begin(), families.end(), "all") != families.end();
  const std::vector<std::string> names = family_names();
  for (const auto& f : families)
    if (f != "all" && std::find(names.begin(), names.end(), f) == names.end())
      throw FamilyError("unknown family '" + f + "'");
  auto wanted = [&](const std::string& f) {
    return all || std::find(families.begin(), families.end(), f) != families.end();
  };
  auto fits = [&](int p, int n) {
    std::size_t o = 1;
    for (int i = 0; i < n; ++i) o *= static_cast<std::size_t>(p);
    return o <= max_order && o <= kDefaultTableCap;
  };

  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& name, std::vector<long long> params, std::vector<std::string> words = {}) {
    out.push_back(builtin_family(name, params, words));
  };
  for (int p : {2, 3, 5}) {
    if (wanted("abelian"))
      for (int n = 1; fits(p, n); ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(n, n, cur, parts);
        for (const auto& part : parts) {
          std::vector<long long> orders;
          for (int e : part) {
            long long o = 1;
            for (int i = 0; i < e; ++i) o *= p;
            orders.push_back(o);
          }
          add("abelian", orders);
        }
      }
    if (wanted("heisenberg") && p != 2 && fits(p, 3)) add("heisenberg", {p});
    if (wanted("extraspecial"))
      for (int m = 1; fits(p, 2 * m + 1); ++m)
        for (const char* v : {"plus", "minus"})
          if (!(p != 2 && m == 1 && std::string(v) == "plus" && wanted("heisenberg"))) add("extraspecial", {p, m}, {v});
    if (wanted("modular"))
      for (int n = p == 2 ? 4 : 3; fits(p, n); ++n) add("modular", {p, n});
    if (wanted("free_class2_exp_p") && p != 2)
      for (int r = 2; fits(p, r + r * (r - 1) / 2); ++r)
        if (!(r == 2 && (wanted("heisenberg") || wanted("extraspecial")))) add("free_class2_exp_p", {p, r});
    if (wanted("wreath_pp") && p != 2 && fits(p, p + 1)) add("wreath_pp", {p});
  }
  for (int n = 3; fits(2, n); ++n) {
    if (wanted("dihedral")) add("dihedral", {1LL << n});
    if (wanted("quaternion")) add("quaternion", {1LL << n});
    if (wanted("semidihedral") && n >= 4) add("semidihedral", {1LL << n});
  }
  if (wanted("elementary") && !wanted("abelian"))
    for (int p : {2, 3, 5})
      for (int d = 1; fits(p, d); ++d) add("elementary", {p, d});
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

}  // namespace multbound
