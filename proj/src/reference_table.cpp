#include "toric/reference_table.hpp"

#include "toric/error.hpp"

#include <fstream>
#include <sstream>

namespace toric {

ReferenceTable::ReferenceTable(std::vector<ReferenceRow> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!by_id_.emplace(rows_[i].id, i).second)
      throw Error(ErrorCode::ValidationError, "reference table repeats id " + rows_[i].id);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ReferenceTable ReferenceTable::parse_csv(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::vector<ReferenceRow> rows;
  std::string line;
  std::size_t number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(trim(f));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() < 4 || fields.size() > 5)
      throw Error(ErrorCode::ParseError, source + ":" + std::to_string(number) + ": expected 4 or 5 fields");
    try {
      ReferenceRow row;
      row.number = std::stoll(fields[0]);
      row.id = fields[1];
      row.chi_M = std::stoll(fields[2]);
      row.tau_M = std::stoll(fields[3]);
      if (fields.size() == 5) row.notation = fields[4];
      rows.push_back(std::move(row));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, source + ":" + std::to_string(number) + ": malformed number");
    }
  }
  return ReferenceTable(std::move(rows));
}

ReferenceTable ReferenceTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open reference table");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path.string());
}

const ReferenceRow* ReferenceTable::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &rows_[it->second];
}

std::vector<const ReferenceRow*> ReferenceTable::rows_with(std::int64_t chi_M, std::int64_t tau_M) const {
  std::vector<const ReferenceRow*> out;
  for (const auto& r : rows_)
    if (r.chi_M == chi_M && r.tau_M == tau_M) out.push_back(&r);
  return out;
}

}  // namespace toric
