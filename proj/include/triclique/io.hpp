#pragma once

#include <string>

#include "triclique/context.hpp"
#include "triclique/mrd.hpp"

namespace triclique {

/// CSV of incidence triples: one `object,attribute,condition` per line,
/// `#` comments and blank lines ignored. Entities are declared in order of
/// first appearance; isolated entities cannot be expressed.
TriContext context_from_csv(const std::string& text);

/// Structured document with keys `objects`, `attributes`, `conditions`
/// (label arrays, isolated entities allowed) and `triples`.
TriContext context_from_json(const std::string& text);

std::string context_to_json(const TriContext& k);

/// Structured document with keys `entity_types`, `entities`,
/// `relationship_types`, `edges` (entities written `type:label`).
Mrd mrd_from_json(const std::string& text);

std::string mrd_to_json(const Mrd& d);

enum class InputKind { context_csv, context_json, mrd_json };

/// Distinguishes the three on-disk formats by shape, not file name.
InputKind sniff_input(const std::string& text);

std::string read_file(const std::string& path);

/// FNV-1a 64-bit content hash, hex encoded.
std::string content_digest(const std::string& bytes);

} // namespace triclique
