// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <filesystem>
#include <string>

#include "wdqual/statement.hpp"

namespace wdqual {

// Compact statement document used by the projection CLI:
//   {"subject":"Q182450","property":"P26",
//    "value":{"type":"entity","id":"Q253916"},
//    "qualifiers":[{"property":"P580",
//                   "value":{"type":"time","time":"+1960-00-00T00:00:00Z","precision":9}}]}
// Value types: entity, time, quantity, string, url, external_id,
// monolingual_text, coordinate, novalue, somevalue.
Statement parse_statement_json_text(const std::string& text, const std::string& name = "<text>");
Statement load_statement_json(const std::filesystem::path& file);

}  // namespace wdqual
