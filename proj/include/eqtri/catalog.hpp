#pragma once
// Built-in complexes with their actions and embeddings, plus the on-disk
// formats: .facets (one facet per line), .action (generators as cycle
// products), .pos (vertex coordinates as exact rationals).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqtri/action.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/rational.hpp"

namespace eqtri {

struct Fixture {
  std::string id;
  Complex complex;
  std::optional<GroupAction> action;
  std::optional<std::map<VertexToken, RationalPoint>> positions;
  std::string notes;
};

std::vector<std::string> fixture_ids();
// Throws Range for unknown ids; verifies the embedded checksum of the
// canonical serialization before returning.
Fixture load_fixture(const std::string& id);

// Canonical serialization: sorted facets, tokens separated by single spaces,
// one facet per line, trailing newline.
std::string serialize_complex(const Complex& X);
Complex parse_complex(const std::string& text,
                      std::vector<std::string>* warnings = nullptr);
Complex read_complex_file(const std::string& path,
                          std::vector<std::string>* warnings = nullptr);
void write_complex_file(const Complex& X, const std::string& path);

std::string serialize_action(const GroupAction& a);
GroupAction parse_action(const std::string& text);
GroupAction read_action_file(const std::string& path);
void write_action_file(const GroupAction& a, const std::string& path);

std::string serialize_positions(const std::map<VertexToken, RationalPoint>& pos);
std::map<VertexToken, RationalPoint> parse_positions(const std::string& text);
std::map<VertexToken, RationalPoint> read_positions_file(const std::string& path);
void write_positions_file(const std::map<VertexToken, RationalPoint>& pos,
                          const std::string& path);

// FNV-1a over the canonical serialization; used for fixture self-checks.
std::uint64_t fnv1a64(const std::string& data);

// Discrepancies between published claims attached to a fixture and the values
// this library computes; empty when everything agrees. Each entry is a
// deterministic one-line description.
std::vector<std::string> fixture_flags(const Fixture& fx);

}  // namespace eqtri
