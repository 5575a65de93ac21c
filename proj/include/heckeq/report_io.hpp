#pragma once

// Serialization of every CLI payload in three formats.  JSON output is an
// envelope {command, meta, <payload>} built from ordered maps so that
// output is byte-identical across runs; the only run-dependent value
// (elapsed_ms) lives in meta, which determinism checks strip.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckeq/character_table.hpp"
#include "heckeq/hecke.hpp"
#include "heckeq/modcurve.hpp"

namespace heckeq {

enum class OutputFormat { Json, Csv, Text };

// Accepts "json", "csv", "text"; throws InvalidElement otherwise.
OutputFormat parse_format(const std::string& name);

// --- JSON payloads -------------------------------------------------------

nlohmann::ordered_json reports_json(const std::vector<HeckeReport>& reports);
nlohmann::ordered_json table_json(const CharacterTable& table);
nlohmann::ordered_json table_json(const NumericCharacterTable& table);
nlohmann::ordered_json classes_json(std::uint64_t q);
nlohmann::ordered_json cusps_json(std::uint64_t q);
nlohmann::ordered_json ptable_json(const CharacterTable& table);

// Wraps a payload under its key with command name and metadata.
nlohmann::ordered_json envelope(const std::string& command,
                                const std::string& payload_key,
                                nlohmann::ordered_json payload,
                                double elapsed_ms);

// --- CSV -----------------------------------------------------------------

std::string reports_csv(const std::vector<HeckeReport>& reports);
std::string table_csv(const CharacterTable& table);
std::string table_csv(const NumericCharacterTable& table);
std::string classes_csv(std::uint64_t q);
std::string cusps_csv(std::uint64_t q);
std::string ptable_csv(const CharacterTable& table);

// --- Text ----------------------------------------------------------------

// Text renderers take an elapsed_ms and append it as a final
// "elapsed_ms: ..." line (strippable by determinism checks).
std::string reports_text(const std::vector<HeckeReport>& reports,
                         double elapsed_ms);
std::string table_text(const CharacterTable& table, double elapsed_ms);
std::string table_text(const NumericCharacterTable& table, double elapsed_ms);
std::string classes_text(std::uint64_t q, double elapsed_ms);
std::string cusps_text(std::uint64_t q, double elapsed_ms);
std::string ptable_text(const CharacterTable& table, double elapsed_ms);

// Compact human rendering of a cyclotomic number, e.g. "-1/2+z7^1+z7^4".
std::string cyclo_to_string(const CycloNumber& x);

} // namespace heckeq
