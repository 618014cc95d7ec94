// Runs every bound and property checker over a corpus.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multbound/bounds.hpp"
#include "multbound/cohomology.hpp"
#include "multbound/ellis_wiegold.hpp"
#include "multbound/families.hpp"

namespace multbound {

inline constexpr const char* kToolVersion = "0.1.0";

struct SweepOptions {
  bool builtin = true;
  std::vector<std::string> families;  ///< empty means all
  std::vector<std::string> inputs;    ///< extra entries: family specs or files
  std::size_t max_order = 128;
  std::size_t oracle_cap = kDefaultOracleCap;
  unsigned jobs = 1;
  /// Tuple-count limit for the all-tuples cross-check of Psi images.
  std::size_t psi_cross_check_limit = 20000;
};

/// Everything a checker may look at for one group.
struct GroupData {
  const CorpusEntry* entry = nullptr;
  const TableGroup* group = nullptr;
  GroupProfile profile;
  std::optional<MultiplierResult> multiplier;
  /// Present for nonabelian groups.
  const EllisWiegoldContext* ew = nullptr;
  const SweepOptions* options = nullptr;
};

struct Checker {
  std::string name;
  std::function<std::vector<PropertyResult>(const GroupData&)> run;
};

/// Every property checker, in report order.
const std::vector<Checker>& checker_registry();

struct EntryResult {
  std::string id;
  std::string source;
  /// "ok", "rejected: parse", "rejected: consistency", "rejected: duplicate id"
  /// or "error: <message>".
  std::string status = "ok";
  std::string message;
  std::optional<BoundReport> report;
  std::vector<PropertyResult> properties;

  bool ok() const { return status == "ok"; }
};

struct SweepSummary {
  std::size_t entries = 0;
  std::size_t rejected = 0;
  std::size_t pass = 0, fail = 0, vacuous = 0, skipped = 0;
  std::size_t oracle_skipped = 0;  ///< groups without an oracle value
};

struct SweepReport {
  SweepOptions options;
  std::vector<EntryResult> entries;  ///< sorted by id
  SweepSummary summary;
};

/// Profile, oracle (within the cap), bounds and all checkers for one entry.
/// Never throws; failures end up in the status.
EntryResult evaluate_entry(const CorpusEntry& entry, const SweepOptions& options);

/// Loads the corpus described by the options and evaluates it on
/// `options.jobs` worker threads. Unloadable inputs become rejected entries.
SweepReport run_sweep(const SweepOptions& options);
/// Same, over an explicit list of entries.
SweepReport run_sweep(const std::vector<CorpusEntry>& entries, const SweepOptions& options,
                      std::vector<EntryResult> preset = {});

SweepSummary summarize(const std::vector<EntryResult>& entries);

/// 0 when everything passes, 2 on any failed bound or property, 3 when some
/// input was rejected and nothing failed.
int exit_code(const SweepSummary& s);

}  // namespace multbound
