#include "multbound/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace multbound {

namespace {

PropertyResult compare(std::string name, Rational lhs, Rational rhs, bool ok, std::string note = {}) {
  return PropertyResult{std::move(name), ok ? Verdict::pass : Verdict::fail, lhs, rhs, std::move(note)};
}

PropertyResult not_applicable(std::string name, std::string note, Verdict v = Verdict::vacuous) {
  return PropertyResult{std::move(name), v, 0, 0, std::move(note)};
}

std::vector<PropertyResult> check_oracle_closed_form(const GroupData& g) {
  const char* name = "abelian_multiplier_closed_form";
  if (!g.profile.flags.is_abelian) return {not_applicable(name, "nonabelian")};
  if (!g.multiplier) return {not_applicable(name, "no oracle value", Verdict::skipped)};
  const AbelianType closed = abelian_multiplier(abelian_invariants(*g.group));
  return {compare(name, g.multiplier->log_order, closed.log_order(), closed == g.multiplier->type,
                  g.multiplier->type.to_string() + " vs " + closed.to_string())};
}

std::vector<PropertyResult> check_master_inequality(const GroupData& g) {
  if (!g.ew) return {not_applicable("ellis_wiegold_inequality", "abelian"),
                     not_applicable("ellis_wiegold_relaxation", "abelian")};
  if (!g.multiplier) return {not_applicable("ellis_wiegold_inequality", "no oracle value", Verdict::skipped),
                             not_applicable("ellis_wiegold_relaxation", "no oracle value", Verdict::skipped)};
  const EwInequality e = ew_inequality(*g.ew, g.multiplier->log_order);
  return {compare("ellis_wiegold_inequality", e.lhs, e.rhs, e.lhs <= e.rhs, e.lhs == e.rhs ? "equality" : ""),
          compare("ellis_wiegold_relaxation", e.rhs, e.rhs_relaxed, e.rhs <= e.rhs_relaxed)};
}

std::vector<PropertyResult> check_psi_lower_bounds(const GroupData& g) {
  const char* name = "psi_image_lower_bound";
  if (!g.ew) return {not_applicable(name, "abelian")};
  const int delta = g.profile.delta, c = g.profile.c;
  std::vector<PropertyResult> out;
  for (int i = 2; i <= std::min(delta, c); ++i) {
    const int im = psi_image_log_size(*g.ew, i);
    out.push_back(compare(name, delta - i, im, delta - i <= im, "i=" + std::to_string(i)));
  }
  if (out.empty()) out.push_back(not_applicable(name, "min(delta, c) < 2"));
  return out;
}

std::vector<PropertyResult> check_psi2_commutator_rank(const GroupData& g) {
  const char* name = "psi2_commutator_rank_lower_bound";
  if (!g.ew) return {not_applicable(name, "abelian")};
  const int delta = g.profile.delta;
  const int hi = std::min(delta, g.profile.gamma + 1);
  const auto bound = descending_sum(delta, 2, hi);
  const int im = psi_image_log_size(*g.ew, 2);
  return {compare(name, static_cast<std::int64_t>(bound), im, bound <= im)};
}

std::vector<PropertyResult> check_psi_cross(const GroupData& g) {
  const char* name = "psi_generator_span_matches_all_tuples";
  if (!g.ew) return {not_applicable(name, "abelian")};
  std::vector<PropertyResult> out;
  std::size_t size = 1;
  for (int e : g.ew->reduced_abelianization().type().exps)
    for (int j = 0; j < e; ++j) size *= static_cast<std::size_t>(g.profile.p);
  for (int i = 2; i <= g.profile.c; ++i) {
    std::size_t tuples = 1;
    bool small = true;
    for (int j = 0; j <= i && small; ++j) {
      tuples *= size;
      small = tuples <= g.options->psi_cross_check_limit;
    }
    const std::string note = "i=" + std::to_string(i);
    if (!small) {
      out.push_back(not_applicable(name, note + ": too many tuples", Verdict::skipped));
      continue;
    }
    const int a = psi_image_log_size(*g.ew, i);
    const int b = psi_image_log_size_all_tuples(*g.ew, i);
    out.push_back(compare(name, a, b, a == b, note));
  }
  return out;
}

std::vector<PropertyResult> check_v_subgroup(const GroupData& g) {
  const char* name = "v_subgroup_formula";
  int v = 0;
  try {
    v = v_subgroup_log_size(*g.group);
  } catch (const HypothesisError& e) {
    return {not_applicable(name, e.what())};
  }
  const int t = g.profile.t, d = g.profile.d;
  const Rational formula(static_cast<std::int64_t>(t) * (2 * d - t + 1), 2);
  return {compare(name, v, formula, Rational(v) == formula)};
}

std::vector<PropertyResult> check_agemo_quotient(const GroupData& g) {
  const char* name = "agemo_quotient_multiplier";
  const auto& pr = g.profile;
  if (pr.c != 2 || pr.p == 2 || !pr.flags.has_Gp_cyclic_p || !pr.flags.has_Gp_in_gamma2)
    return {not_applicable(name, "needs class 2, p odd, G^p of order p inside gamma_2")};
  if (!g.multiplier) return {not_applicable(name, "no oracle value", Verdict::skipped)};
  const Quotient q = quotient(*g.group, frattini_agemo(*g.group).agemo);
  const MultiplierResult mq = multiplier_type(q.group, g.options->oracle_cap);
  const int lhs = g.multiplier->log_order + pr.t;
  return {compare(name, lhs, mq.log_order, lhs == mq.log_order)};
}

}  // namespace

const std::vector<Checker>& checker_registry() {
  static const std::vector<Checker> registry = {
      {"abelian_multiplier_closed_form", check_oracle_closed_form},
      {"ellis_wiegold_inequality", check_master_inequality},
      {"psi_image_lower_bound", check_psi_lower_bounds},
      {"psi2_commutator_rank_lower_bound", check_psi2_commutator_rank},
      {"psi_generator_span_matches_all_tuples", check_psi_cross},
      {"v_subgroup_formula", check_v_subgroup},
      {"agemo_quotient_multiplier", check_agemo_quotient},
  };
  return registry;
}

EntryResult evaluate_entry(const CorpusEntry& entry, const SweepOptions& options) {
  EntryResult r;
  r.id = entry.id;
  r.source = entry.source;
  try {
    try {
      entry.presentation.validate();
    } catch (const PresentationError& e) {
      r.status = "rejected: parse";
      r.message = e.what();
      return r;
    }
    if (auto c = consistency_check(entry.presentation); !c.consistent) {
      r.status = "rejected: consistency";
      r.message = "overlap " + c.failing_test;
      return r;
    }
    const TableGroup g = materialize_table(entry.presentation, kDefaultTableCap);
    GroupData data;
    data.entry = &entry;
    data.group = &g;
    data.options = &options;
    data.profile = group_profile(g);
    if (g.order() <= options.oracle_cap) data.multiplier = multiplier_type(g, options.oracle_cap);
    std::optional<EllisWiegoldContext> ew;
    if (!data.profile.flags.is_abelian) {
      ew.emplace(g);
      data.ew = &*ew;
    }
    r.report = check_report(entry.id, data.profile,
                            data.multiplier ? std::optional<AbelianType>(data.multiplier->type) : std::nullopt);
    for (const auto& p : r.report->dominance) r.properties.push_back(p);
    for (const auto& c : checker_registry())
      for (auto& p : c.run(data)) r.properties.push_back(std::move(p));
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
    r.report.reset();
    r.properties.clear();
  }
  return r;
}

SweepSummary summarize(const std::vector<EntryResult>& entries) {
  SweepSummary s;
  s.entries = entries.size();
  auto tally = [&](Verdict v) {
    switch (v) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::vacuous: ++s.vacuous; break;
      case Verdict::skipped: ++s.skipped; break;
    }
  };
  for (const auto& e : entries) {
    if (!e.ok()) {
      ++s.rejected;
      continue;
    }
    if (!e.report->multiplier) ++s.oracle_skipped;
    for (Verdict v : e.report->verdicts) tally(v);
    for (const auto& p : e.properties) tally(p.verdict);
  }
  return s;
}

int exit_code(const SweepSummary& s) {
  if (s.fail > 0) return 2;
  if (s.rejected > 0) return 3;
  return 0;
}

SweepReport run_sweep(const std::vector<CorpusEntry>& entries, const SweepOptions& options,
                      std::vector<EntryResult> preset) {
  SweepReport rep;
  rep.options = options;

  std::vector<const CorpusEntry*> todo;
  std::map<std::string, int> seen;
  for (const auto& r : preset) seen[r.id]++;
  for (const auto& e : entries) {
    if (seen[e.id]++ > 0) {
      EntryResult dup;
      dup.id = e.id;
      dup.source = e.source;
      dup.status = "rejected: duplicate id";
      preset.push_back(std::move(dup));
      continue;
    }
    todo.push_back(&e);
  }

  std::vector<EntryResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) results[i] = evaluate_entry(*todo[i], options);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(todo.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  rep.entries = std::move(preset);
  for (auto& r : results) rep.entries.push_back(std::move(r));
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const EntryResult& a, const EntryResult& b) { return a.id < b.id; });
  rep.summary = summarize(rep.entries);
  return rep;
}

SweepReport run_sweep(const SweepOptions& options) {
  std::vector<CorpusEntry> entries;
  std::vector<EntryResult> rejected;
  if (options.builtin) entries = builtin_corpus(options.max_order, options.families);
  for (const auto& in : options.inputs) {
    try {
      entries.push_back(load_entry(in));
    } catch (const std::exception& e) {
      EntryResult r;
      r.id = in;
      r.source = is_family_spec(in) ? "builtin" : in;
      r.status = "rejected: parse";
      r.message = e.what();
      rejected.push_back(std::move(r));
    }
  }
  return run_sweep(entries, options, std::move(rejected));
}

}  // namespace multbound
