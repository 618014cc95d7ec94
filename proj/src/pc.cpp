#include "multbound/pc.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace multbound {

bool NormalWord::is_identity() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](int e) { return e == 0; });
}

PcPresentation PcPresentation::elementary(int prime, int ngens) {
  PcPresentation pres;
  pres.prime = prime;
  pres.ngens = ngens;
  pres.powers.assign(ngens, NormalWord{std::vector<int>(ngens, 0)});
  pres.commutators.assign(
      ngens, std::vector<NormalWord>(ngens, NormalWord{std::vector<int>(ngens, 0)}));
  return pres;
}

NormalWord PcPresentation::identity() const {
  return NormalWord{std::vector<int>(ngens, 0)};
}

NormalWord PcPresentation::generator(int i) const {
  NormalWord w = identity();
  w.exponents.at(i) = 1;
  return w;
}

void PcPresentation::set_power(int i, NormalWord w) { powers.at(i) = std::move(w); }

void PcPresentation::set_commutator(int j, int i, NormalWord w) {
  if (j <= i) throw PresentationError("commutator relation needs j > i");
  commutators.at(j).at(i) = std::move(w);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_word(const NormalWord& w, int prime, int ngens, int min_index,
                const std::string& what) {
  if (static_cast<int>(w.exponents.size()) != ngens)
    throw PresentationError(what + ": word has wrong length");
  for (int k = 0; k < ngens; ++k) {
    int e = w.exponents[k];
    if (e < 0 || e >= prime)
      throw PresentationError(what + ": exponent out of range");
    if (e != 0 && k <= min_index)
      throw PresentationError(what + ": word uses a generator of too small an index");
  }
}

}  // namespace

void PcPresentation::validate() const {
  if (!is_prime(prime)) throw PresentationError("p is not prime");
  if (ngens < 0) throw PresentationError("negative generator count");
  if (static_cast<int>(powers.size()) != ngens ||
      static_cast<int>(commutators.size()) != ngens)
    throw PresentationError("relation tables have wrong shape");
  for (int i = 0; i < ngens; ++i) {
    check_word(powers[i], prime, ngens, i, "pow " + std::to_string(i + 1));
    if (static_cast<int>(commutators[i].size()) != ngens)
      throw PresentationError("relation tables have wrong shape");
    for (int k = 0; k < i; ++k)
      check_word(commutators[i][k], prime, ngens, i,
                 "comm " + std::to_string(i + 1) + " " + std::to_string(k + 1));
  }
}

ParseError::ParseError(int line, const std::string& what)
    : PresentationError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

long long parse_int(const std::string& tok, int line) {
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  if (tok.size() > 9) throw ParseError(line, "integer too large: " + tok);
  return std::stoll(tok);
}

NormalWord parse_rhs(const std::vector<std::string>& toks, std::size_t start,
                     int prime, int ngens, int min_index, int line) {
  NormalWord w{std::vector<int>(ngens, 0)};
  if ((toks.size() - start) % 2 != 0)
    throw ParseError(line, "right-hand side must be pairs 'g<k> <e>'");
  int last = min_index;
  for (std::size_t t = start; t < toks.size(); t += 2) {
    const std::string& g = toks[t];
    if (g.size() < 2 || g[0] != 'g')
      throw ParseError(line, "expected generator 'g<k>', got '" + g + "'");
    long long k = parse_int(g.substr(1), line);
    long long e = parse_int(toks[t + 1], line);
    if (k < 1 || k > ngens) throw ParseError(line, "generator index out of range: " + g);
    int k0 = static_cast<int>(k - 1);
    if (k0 <= min_index)
      throw ParseError(line, "right-hand side uses " + g +
                                 ", which is not of higher index than the relation");
    if (k0 <= last && t != start)
      throw ParseError(line, "right-hand side indices must be strictly increasing");
    if (e < 1 || e >= prime) throw ParseError(line, "exponent out of range [1, p-1]");
    w.exponents[k0] = static_cast<int>(e);
    last = k0;
  }
  return w;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  int stage = 0;  // 0: expect p, 1: expect n, 2: relations
  PcPresentation pres;
  std::vector<std::vector<bool>> seen_comm;
  std::vector<bool> seen_pow;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;

    if (stage == 0) {
      if (toks.size() != 2 || toks[0] != "p") throw ParseError(line, "expected 'p <prime>'");
      long long p = parse_int(toks[1], line);
      if (!is_prime(p)) throw ParseError(line, "p = " + toks[1] + " is not prime");
      pres.prime = static_cast<int>(p);
      stage = 1;
    } else if (stage == 1) {
      if (toks.size() != 2 || toks[0] != "n") throw ParseError(line, "expected 'n <count>'");
      long long n = parse_int(toks[1], line);
      if (n > 64) throw ParseError(line, "too many generators");
      pres = PcPresentation::elementary(pres.prime, static_cast<int>(n));
      seen_pow.assign(n, false);
      seen_comm.assign(n, std::vector<bool>(n, false));
      stage = 2;
    } else if (toks[0] == "pow") {
      if (toks.size() < 3 || toks[2] != ":") throw ParseError(line, "expected 'pow <i> : ...'");
      long long i = parse_int(toks[1], line);
      if (i < 1 || i > pres.ngens) throw ParseError(line, "pow index out of range");
      int i0 = static_cast<int>(i - 1);
      if (seen_pow[i0]) throw ParseError(line, "duplicate power relation");
      seen_pow[i0] = true;
      pres.powers[i0] = parse_rhs(toks, 3, pres.prime, pres.ngens, i0, line);
    } else if (toks[0] == "comm") {
      if (toks.size() < 4 || toks[3] != ":")
        throw ParseError(line, "expected 'comm <j> <i> : ...'");
      long long j = parse_int(toks[1], line);
      long long i = parse_int(toks[2], line);
      if (j < 1 || j > pres.ngens || i < 1 || i > pres.ngens)
        throw ParseError(line, "comm index out of range");
      if (j <= i) throw ParseError(line, "comm requires j > i");
      int j0 = static_cast<int>(j - 1), i0 = static_cast<int>(i - 1);
      if (seen_comm[j0][i0]) throw ParseError(line, "duplicate commutator relation");
      seen_comm[j0][i0] = true;
      pres.commutators[j0][i0] = parse_rhs(toks, 4, pres.prime, pres.ngens, j0, line);
    } else {
      throw ParseError(line, "unknown directive '" + toks[0] + "'");
    }
  }
  if (stage == 0) throw ParseError(line, "missing 'p <prime>' line");
  if (stage == 1) throw ParseError(line, "missing 'n <count>' line");
  return pres;
}

PcPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PresentationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

namespace {

void append_rhs(std::ostringstream& out, const NormalWord& w) {
  for (std::size_t k = 0; k < w.exponents.size(); ++k)
    if (w.exponents[k] != 0) out << " g" << (k + 1) << ' ' << w.exponents[k];
}

}  // namespace

std::string format_presentation(const PcPresentation& pres) {
  std::ostringstream out;
  out << "p " << pres.prime << "\nn " << pres.ngens << '\n';
  for (int i = 0; i < pres.ngens; ++i) {
    if (pres.powers[i].is_identity()) continue;
    out << "pow " << (i + 1) << " :";
    append_rhs(out, pres.powers[i]);
    out << '\n';
  }
  for (int j = 0; j < pres.ngens; ++j)
    for (int i = 0; i < j; ++i) {
      if (pres.commutators[j][i].is_identity()) continue;
      out << "comm " << (j + 1) << ' ' << (i + 1) << " :";
      append_rhs(out, pres.commutators[j][i]);
      out << '\n';
    }
  return out.str();
}

// Collection from the left. `ev` is the collected prefix; `stack` holds
// pending 0-based generator letters with the next letter at the back.
// Every relation rewrites g_i into words over strictly larger indices, so
// the process terminates for any presentation of this shape.
namespace {

void push_word(std::vector<int>& stack, const std::vector<int>& exps) {
  for (int k = static_cast<int>(exps.size()) - 1; k >= 0; --k)
    for (int r = 0; r < exps[k]; ++r) stack.push_back(k);
}

void run_collector(std::vector<int>& ev, std::vector<int>& stack,
                   const PcPresentation& pres) {
  const int n = pres.ngens;
  const int p = pres.prime;
  std::vector<int> seq;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    int top = n - 1;
    while (top > i && ev[top] == 0) --top;
    if (top == i) {
      if (++ev[i] == p) {
        ev[i] = 0;
        push_word(stack, pres.powers[i].exponents);
      }
      continue;
    }
    // prefix * g_i * (tail conjugated by g_i), with g_j^{g_i} = g_j [g_j, g_i].
    seq.clear();
    for (int j = i + 1; j < n; ++j) {
      for (int r = 0; r < ev[j]; ++r) {
        seq.push_back(j);
        const auto& c = pres.commutators[j][i].exponents;
        for (int k = 0; k < n; ++k)
          for (int t = 0; t < c[k]; ++t) seq.push_back(k);
      }
      ev[j] = 0;
    }
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) stack.push_back(*it);
    stack.push_back(i);
  }
}

NormalWord times_letters(const NormalWord& a, std::vector<int> stack_letters,
                         const PcPresentation& pres) {
  NormalWord out = a;
  std::reverse(stack_letters.begin(), stack_letters.end());
  run_collector(out.exponents, stack_letters, pres);
  return out;
}

std::vector<int> zero_based_letters(const NormalWord& w) {
  std::vector<int> out;
  for (std::size_t k = 0; k < w.exponents.size(); ++k)
    for (int r = 0; r < w.exponents[k]; ++r) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace

std::vector<int> letters_of(const NormalWord& w) {
  auto out = zero_based_letters(w);
  for (int& l : out) l += 1;
  return out;
}

NormalWord multiply(const NormalWord& a, const NormalWord& b,
                    const PcPresentation& pres) {
  return times_letters(a, zero_based_letters(b), pres);
}

NormalWord inverse(const NormalWord& a, const PcPresentation& pres) {
  NormalWord cur = a;
  NormalWord inv = pres.identity();
  for (int i = 0; i < pres.ngens; ++i) {
    int t = cur.exponents[i];
    if (t == 0) continue;
    std::vector<int> letters(pres.prime - t, i);
    cur = times_letters(cur, letters, pres);
    inv = times_letters(inv, letters, pres);
  }
  return inv;
}

NormalWord collect(std::span<const int> letters, const PcPresentation& pres) {
  NormalWord out = pres.identity();
  std::vector<int> pending;
  for (int l : letters) {
    if (l == 0 || std::abs(l) > pres.ngens)
      throw PresentationError("malformed generator letter " + std::to_string(l));
    if (l > 0) {
      pending.push_back(l - 1);
    } else {
      auto inv = inverse(pres.generator(-l - 1), pres);
      auto ls = zero_based_letters(inv);
      pending.insert(pending.end(), ls.begin(), ls.end());
    }
  }
  return times_letters(out, pending, pres);
}

NormalWord power(const NormalWord& a, long long k, const PcPresentation& pres) {
  NormalWord base = k < 0 ? inverse(a, pres) : a;
  if (k < 0) k = -k;
  NormalWord out = pres.identity();
  while (k > 0) {
    if (k & 1) out = multiply(out, base, pres);
    base = multiply(base, base, pres);
    k >>= 1;
  }
  return out;
}

NormalWord commutator(const NormalWord& a, const NormalWord& b,
                      const PcPresentation& pres) {
  NormalWord ai = inverse(a, pres);
  NormalWord bi = inverse(b, pres);
  return multiply(multiply(multiply(ai, bi, pres), a, pres), b, pres);
}

ConsistencyResult consistency_check(const PcPresentation& pres) {
  pres.validate();
  const int n = pres.ngens;
  const int p = pres.prime;
  auto gen = [&](int i) { return pres.generator(i); };
  auto name = [](std::initializer_list<int> gs) {
    std::string s;
    for (int g : gs) s += (s.empty() ? "g" : " g") + std::to_string(g + 1);
    return s;
  };
  auto fail = [](std::string test, NormalWord l, NormalWord r) {
    return ConsistencyResult{false, std::move(test), std::move(l), std::move(r)};
  };

  // (g_k g_j) g_i = g_k (g_j g_i), k > j > i
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        auto lhs = multiply(multiply(gen(k), gen(j), pres), gen(i), pres);
        auto rhs = multiply(gen(k), multiply(gen(j), gen(i), pres), pres);
        if (lhs != rhs) return fail(name({k, j, i}), lhs, rhs);
      }
  // g_j^p g_i = g_j^{p-1} (g_j g_i), j > i
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      auto lhs = multiply(pres.powers[j], gen(i), pres);
      NormalWord left = pres.identity();
      left.exponents[j] = p - 1;
      auto rhs = multiply(left, multiply(gen(j), gen(i), pres), pres);
      if (lhs != rhs) return fail(name({j}) + "^p " + name({i}), lhs, rhs);
    }
  // g_j g_i^p = (g_j g_i) g_i^{p-1}, j > i
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      auto lhs = multiply(gen(j), pres.powers[i], pres);
      auto rhs = times_letters(multiply(gen(j), gen(i), pres),
                               std::vector<int>(p - 1, i), pres);
      if (lhs != rhs) return fail(name({j}) + " " + name({i}) + "^p", lhs, rhs);
    }
  // g_i^p g_i = g_i g_i^p
  for (int i = 0; i < n; ++i) {
    auto lhs = multiply(pres.powers[i], gen(i), pres);
    auto rhs = multiply(gen(i), pres.powers[i], pres);
    if (lhs != rhs) return fail(name({i}) + "^(p+1)", lhs, rhs);
  }
  return {};
}

PcPresentation direct_product(const PcPresentation& a, const PcPresentation& b) {
  if (a.prime != b.prime) throw PresentationError("direct product of different primes");
  const int na = a.ngens, nb = b.ngens;
  PcPresentation out = PcPresentation::elementary(a.prime, na + nb);
  auto embed = [&](const NormalWord& w, int offset) {
    NormalWord r = out.identity();
    for (std::size_t k = 0; k < w.exponents.size(); ++k)
      r.exponents[k + offset] = w.exponents[k];
    return r;
  };
  for (int i = 0; i < na; ++i) {
    out.powers[i] = embed(a.powers[i], 0);
    for (int k = 0; k < i; ++k) out.commutators[i][k] = embed(a.commutators[i][k], 0);
  }
  for (int i = 0; i < nb; ++i) {
    out.powers[na + i] = embed(b.powers[i], na);
    for (int k = 0; k < i; ++k)
      out.commutators[na + i][na + k] = embed(b.commutators[i][k], na);
  }
  return out;
}

std::size_t word_index(const NormalWord& w, int prime) {
  std::size_t idx = 0;
  for (int e : w.exponents) idx = idx * prime + static_cast<std::size_t>(e);
  return idx;
}

NormalWord word_from_index(std::size_t index, int prime, int ngens) {
  NormalWord w{std::vector<int>(ngens, 0)};
  for (int k = ngens - 1; k >= 0; --k) {
    w.exponents[k] = static_cast<int>(index % prime);
    index /= prime;
  }
  return w;
}

}  // namespace multbound
