#pragma once

#include "toric/error.hpp"
#include "toric/fan_file.hpp"
#include "toric/pipeline.hpp"
#include "toric/reference_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct BatchOptions {
  unsigned jobs = 1;
  std::optional<std::size_t> elimination_cone;
  /// Collect a human-readable trace of the intermediate data per item.
  bool verbose = false;
};

struct BatchItem {
  std::string path;
  std::optional<FanFile> input;
  std::optional<DoublingReport> report;
  std::optional<ErrorCode> error_code;
  std::string error;
  std::string trace;

  bool ok() const { return report.has_value(); }
  /// Report id: the file's id when it parsed, else the path.
  std::string id() const { return input ? input->id : path; }
};

struct BatchResult {
  std::vector<BatchItem> items;

  bool all_ok() const;
};

/// One item per path, in input order; failures are isolated per file.
BatchResult run_batch(const std::vector<std::string>& paths, const BatchOptions& options = {});

/// Runs one already-parsed fan through the pipeline.
BatchItem run_item(const FanFile& file, const BatchOptions& options = {});

enum class ReferenceStatus { Match, Mismatch, UnknownId };

struct ReferenceCheckRow {
  std::string id;
  ReferenceStatus status = ReferenceStatus::UnknownId;
  std::int64_t chi_M = 0;
  std::int64_t tau_M = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> expected;
  std::string source;
};

struct ReferenceCheck {
  std::vector<ReferenceCheckRow> rows;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t unknown = 0;

  bool ok() const { return mismatched == 0 && unknown == 0; }
  std::string summary() const;
};

/// Compares computed (chi(M), tau(M)) with the table row for each report id.
/// Items that failed to compute are skipped.
ReferenceCheck check_reference(const std::vector<BatchItem>& items, const ReferenceTable& table);

/// Compares against the `expect` lines carried by the fan files themselves.
ReferenceCheck check_embedded_expectations(const std::vector<BatchItem>& items);

/// 0 success, 1 computation/validation failure, 2 reference mismatch.
int exit_status(const BatchResult& result, const std::vector<ReferenceCheck>& checks);

}  // namespace toric
