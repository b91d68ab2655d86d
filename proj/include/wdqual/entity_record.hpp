// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wdqual/entity_id.hpp"
#include "wdqual/statement.hpp"

namespace wdqual {

// One entity as decoded from a dump line: its id, kind, datatype (for
// property entities) and all statements from its top-level claims.
// Labels, sitelinks, references and lexeme-internal structures are
// skipped; nothing downstream reads them.
struct EntityRecord {
  EntityId id;
  EntityKind kind = EntityKind::Other;
  std::string datatype;  // property entities only
  std::vector<Statement> statements;
};

struct EntityParseError {
  std::string message;
};

// Decodes one dump line (one JSON entity object). Returns false and
// fills `error` when the line is not a well-formed entity; partial
// damage inside a single claim is tolerated where possible.
bool parse_entity_json(std::string_view line, EntityRecord& out, EntityParseError& error);

}  // namespace wdqual
