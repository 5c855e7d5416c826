#pragma once

#include <filesystem>
#include <string>

#include "geomatch/configurations.hpp"
#include "geomatch/constructions.hpp"
#include "geomatch/oracle.hpp"

namespace geomatch {

// Fixed-schema JSON codecs. Field order and integer-only values are part of
// the format: the same inputs must serialize to identical bytes.
//   PointSet: {"config", "n2", "points", ["center_index"], "labels"}
//   Family:   {"method", "matchings", "stones"}
//   Packing:  {"constraint", "max_size", "exhaustive", "witness_cap",
//              "witnesses"}
std::string point_set_to_json(const PointSet& ps);
PointSet point_set_from_json(const std::string& text);

std::string family_to_json(const MatchingFamily& family);
MatchingFamily family_from_json(const std::string& text);

std::string packing_to_json(const PackingResult& result);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

// FNV-1a 64-bit digest of a byte string, as fixed-width hex.
std::string digest_hex(const std::string& bytes);

}  // namespace geomatch
