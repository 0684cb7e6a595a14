#pragma once

#include <difflat/derivation.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace difflat {

/// {"n": .., "covers": [[lo, hi], ...], "name": .., "labels": [..]}; name and labels are optional.
auto lattice_to_json(const FinLattice & lattice) -> nlohmann::json;
auto lattice_from_json(const nlohmann::json & j) -> FinLattice;

/// Parses text; syntax errors become Parse errors with line and column.
auto parse_json_text(std::string_view text, std::string_view source = "<input>") -> nlohmann::json;
auto read_json_file(const std::string & path) -> nlohmann::json;
auto read_lattice_file(const std::string & path) -> FinLattice;

/// {"image": [d(0), d(1), ...]}
auto derivation_to_json(const OperatorMap & d) -> nlohmann::json;

/// Resolves a comma-separated list of labels or ids into an image array.
auto parse_image_spec(const FinLattice & lattice, std::string_view spec) -> std::vector<Elem>;

/// The two-row notation: element labels on top, their images below.
auto two_row_table(const OperatorMap & d) -> std::string;

} // namespace difflat
