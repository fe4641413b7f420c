#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

struct ReferenceRow {
  std::int64_t number = 0;
  std::string id;
  std::int64_t chi_M = 0;
  std::int64_t tau_M = 0;
  std::string notation;
};

/// Published (chi(M), tau(M)) values keyed by database ID. CSV columns:
/// no,id,chi_M,tau_M,notation (header row required, notation may be empty).
class ReferenceTable {
 public:
  ReferenceTable() = default;
  explicit ReferenceTable(std::vector<ReferenceRow> rows);

  static ReferenceTable parse_csv(std::string_view text, const std::string& source = "<reference>");
  static ReferenceTable load(const std::filesystem::path& path);

  const std::vector<ReferenceRow>& rows() const { return rows_; }
  const ReferenceRow* find(const std::string& id) const;
  /// Rows whose (chi, tau) pair equals the given one.
  std::vector<const ReferenceRow*> rows_with(std::int64_t chi_M, std::int64_t tau_M) const;

 private:
  std::vector<ReferenceRow> rows_;
  std::map<std::string, std::size_t> by_id_;
};

}  // namespace toric
