#include "multbound/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace multbound {

namespace {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r) {
  if (r.den() == 1) return r.num();
  return r.to_string();
}

Json profile_json(const GroupProfile& pr) {
  return Json{{"p", pr.p},
              {"n", pr.n},
              {"k", pr.k},
              {"d", pr.d},
              {"c", pr.c},
              {"delta", pr.delta},
              {"gamma", pr.gamma},
              {"t", pr.t},
              {"z", pr.z},
              {"flags",
               {{"is_abelian", pr.flags.is_abelian},
                {"is_special", pr.flags.is_special},
                {"is_maximal_class", pr.flags.is_maximal_class},
                {"has_Gp_in_gamma2", pr.flags.has_Gp_in_gamma2},
                {"has_Gp_cyclic_p", pr.flags.has_Gp_cyclic_p},
                {"has_Gp_equal_gamma2", pr.flags.has_Gp_equal_gamma2}}}};
}

Json entry_to_json(const EntryResult& e) {
  Json j{{"id", e.id}, {"source", e.source}, {"status", e.status}};
  if (!e.message.empty()) j["message"] = e.message;
  if (!e.report) return j;
  const BoundReport& r = *e.report;
  j["profile"] = profile_json(r.profile);
  if (r.multiplier) {
    Json type = Json::array();
    for (int x : r.multiplier->exps) {
      long long o = 1;
      for (int i = 0; i < x; ++i) o *= r.profile.p;
      type.push_back(o);
    }
    long long order = 1;
    for (int i = 0; i < r.multiplier->log_order(); ++i) order *= r.profile.p;
    j["multiplier"] = Json{{"type", type}, {"order", order}, {"log_order", r.multiplier->log_order()}};
  } else {
    j["multiplier"] = nullptr;
  }
  Json bounds = Json::array();
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const BoundValue& b = r.bounds[i];
    bounds.push_back(Json{{"name", b.name},
                          {"exponent_num", b.exponent.num()},
                          {"exponent_den", b.exponent.den()},
                          {"kind", to_string(b.kind)},
                          {"applicable", b.applicable},
                          {"reason", b.reason},
                          {"verdict", to_string(r.verdicts[i])}});
  }
  j["bounds"] = bounds;
  Json props = Json::array();
  for (const auto& p : e.properties) {
    Json pj{{"name", p.name}, {"verdict", to_string(p.verdict)}, {"lhs", rational(p.lhs)}, {"rhs", rational(p.rhs)}};
    if (!p.note.empty()) pj["note"] = p.note;
    props.push_back(pj);
  }
  j["properties"] = props;
  return j;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string entry_json(const EntryResult& entry) { return entry_to_json(entry).dump(2); }

std::string report_json(const SweepReport& report, bool reproducible) {
  const SweepOptions& o = report.options;
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = "multbound";
  j["version"] = kToolVersion;
  if (!reproducible) j["generated_at"] = utc_now();
  j["config"] = Json{{"builtin", o.builtin},
                     {"families", o.families},
                     {"inputs", o.inputs},
                     {"max_order", o.max_order},
                     {"oracle_cap", o.oracle_cap},
                     {"psi_cross_check_limit", o.psi_cross_check_limit}};
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(entry_to_json(e));
  j["entries"] = entries;
  const SweepSummary& s = report.summary;
  j["summary"] = Json{{"entries", s.entries}, {"rejected", s.rejected}, {"pass", s.pass},
                      {"fail", s.fail},       {"vacuous", s.vacuous},   {"skipped", s.skipped},
                      {"oracle_skipped", s.oracle_skipped}};
  return j.dump(2) + "\n";
}

std::string report_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "id,status,p,n,m,record,name,kind,value,verdict,detail\n";
  for (const auto& e : report.entries) {
    if (!e.report) {
      os << csv_field(e.id) << ',' << csv_field(e.status) << ",,,,,,,,," << csv_field(e.message) << '\n';
      continue;
    }
    const BoundReport& r = *e.report;
    const std::string m = r.multiplier ? std::to_string(r.multiplier->log_order()) : "";
    const std::string head = csv_field(e.id) + ',' + e.status + ',' + std::to_string(r.profile.p) + ',' +
                             std::to_string(r.profile.n) + ',' + m + ',';
    for (std::size_t i = 0; i < r.bounds.size(); ++i) {
      const BoundValue& b = r.bounds[i];
      os << head << "bound," << b.name << ',' << to_string(b.kind) << ',' << b.exponent.to_string() << ','
         << to_string(r.verdicts[i]) << ',' << csv_field(b.reason) << '\n';
    }
    for (const auto& p : e.properties)
      os << head << "property," << p.name << ",," << p.lhs.to_string() << " vs " << p.rhs.to_string() << ','
         << to_string(p.verdict) << ',' << csv_field(p.note) << '\n';
  }
  return os.str();
}

}  // namespace multbound
