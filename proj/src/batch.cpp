#include "toric/batch.hpp"

#include "toric/report_format.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace toric {

bool BatchResult::all_ok() const {
  return std::all_of(items.begin(), items.end(), [](const BatchItem& i) { return i.ok(); });
}

BatchItem run_item(const FanFile& file, const BatchOptions& options) {
  BatchItem item;
  item.path = file.id;
  item.input = file;
  try {
    PipelineOptions po;
    if (options.elimination_cone) po.elimination_cone = *options.elimination_cone;
    PipelineResult result = run_pipeline(file.fan, po);
    item.report = result.report;
    if (options.verbose) item.trace = format_trace(result);
  } catch (const Error& e) {
    item.error_code = e.code();
    item.error = e.what();
  } catch (const std::exception& e) {
    item.error = e.what();
  }
  return item;
}

namespace {

BatchItem process_path(const std::string& path, const BatchOptions& options) {
  FanFile file;
  try {
    file = parse_fan_file(path);
  } catch (const Error& e) {
    BatchItem item;
    item.path = path;
    item.error_code = e.code();
    item.error = e.what();
    return item;
  }
  BatchItem item = run_item(file, options);
  item.path = path;
  return item;
}

}  // namespace

BatchResult run_batch(const std::vector<std::string>& paths, const BatchOptions& options) {
  BatchResult result;
  result.items.resize(paths.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(paths.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < paths.size(); ++i) result.items[i] = process_path(paths[i], options);
    return result;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < paths.size(); i = next++) result.items[i] = process_path(paths[i], options);
    });
  for (auto& t : pool) t.join();
  return result;
}

std::string ReferenceCheck::summary() const {
  std::ostringstream os;
  os << "reference check: " << matched << " match, " << mismatched << " mismatch, " << unknown << " unknown id";
  for (const auto& r : rows) {
    if (r.status == ReferenceStatus::Match) continue;
    os << "\n  " << r.id << ": ";
    if (r.status == ReferenceStatus::UnknownId) {
      os << "id not in " << r.source;
    } else {
      os << "computed (" << r.chi_M << "," << r.tau_M << ") expected (" << r.expected->first << ","
         << r.expected->second << ") [" << r.source << "]";
    }
  }
  return os.str();
}

namespace {

void tally(ReferenceCheck& check, ReferenceCheckRow row) {
  switch (row.status) {
    case ReferenceStatus::Match: ++check.matched; break;
    case ReferenceStatus::Mismatch: ++check.mismatched; break;
    case ReferenceStatus::UnknownId: ++check.unknown; break;
  }
  check.rows.push_back(std::move(row));
}

}  // namespace

ReferenceCheck check_reference(const std::vector<BatchItem>& items, const ReferenceTable& table) {
  ReferenceCheck check;
  for (const auto& item : items) {
    if (!item.ok()) continue;
    ReferenceCheckRow row{item.id(), ReferenceStatus::UnknownId, item.report->chi_M, item.report->tau_M, {}, "reference table"};
    if (const ReferenceRow* ref = table.find(item.id())) {
      row.expected = std::make_pair(ref->chi_M, ref->tau_M);
      row.status = (ref->chi_M == row.chi_M && ref->tau_M == row.tau_M) ? ReferenceStatus::Match : ReferenceStatus::Mismatch;
    }
    tally(check, std::move(row));
  }
  return check;
}

ReferenceCheck check_embedded_expectations(const std::vector<BatchItem>& items) {
  ReferenceCheck check;
  for (const auto& item : items) {
    if (!item.ok() || !item.input || !item.input->expected) continue;
    ReferenceCheckRow row{item.id(), ReferenceStatus::Match, item.report->chi_M, item.report->tau_M,
                          item.input->expected, "expect line of " + item.path};
    if (row.expected->first != row.chi_M || row.expected->second != row.tau_M) row.status = ReferenceStatus::Mismatch;
    tally(check, std::move(row));
  }
  return check;
}

int exit_status(const BatchResult& result, const std::vector<ReferenceCheck>& checks) {
  if (!result.all_ok()) return 1;
  for (const auto& c : checks)
    if (!c.ok()) return 2;
  return 0;
}

}  // namespace toric
