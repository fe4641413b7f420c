#pragma once

#include "toric/batch.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace toric {

enum class EmitFormat { Text, Json, Csv };

nlohmann::json report_to_json(const DoublingReport& report);

std::string format_text(const std::vector<BatchItem>& items);
std::string format_json(const std::vector<BatchItem>& items);
std::string format_csv(const std::vector<BatchItem>& items);

std::string format_items(const std::vector<BatchItem>& items, EmitFormat format);

/// Intermediate data of one run (primitive collections, grading, ring,
/// Chern classes), as printed by --verbose.
std::string format_trace(const PipelineResult& result);

}  // namespace toric
