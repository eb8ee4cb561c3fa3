#pragma once

// Plain-text structure files.
//
//   kind: <semigroup|group|lattice|semiring|iso-family|instance-spec>
//   size: <n>
//   names: <n tokens>
//   table: <op|join|meet|add|mul>
//   <n rows of n indices>
//
// Semiring files may carry `labels: α:g …` after the names. Family files
// (kind iso-family) hold the lattice, then one `component: <α>` block per
// lattice element (size/names/table: op), then `map: <α> <β>` headers each
// followed by one line of |G_α| target indices. '#' starts a comment; blank
// lines are ignored. serialize() writes the canonical form, which parses back
// to the same structure and re-serializes byte for byte.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sdlkit/core.hpp"
#include "sdlkit/generators.hpp"
#include "sdlkit/sdl.hpp"

namespace sdlkit::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SemigroupFile {
  std::vector<std::string> names;
  BinaryOpTable op;
  friend bool operator==(const SemigroupFile&, const SemigroupFile&) = default;
};

struct GroupFile {
  std::vector<std::string> names;
  BinaryOpTable op;
  friend bool operator==(const GroupFile&, const GroupFile&) = default;
};

struct LatticeFile {
  std::vector<std::string> names;
  BinaryOpTable join;
  BinaryOpTable meet;
  friend bool operator==(const LatticeFile&, const LatticeFile&) = default;
};

struct SemiringFile {
  std::vector<std::string> names;
  BinaryOpTable add;
  BinaryOpTable mul;
  std::optional<std::vector<Label>> labels;
  friend bool operator==(const SemiringFile&, const SemiringFile&) = default;
};

struct MapEntry {
  Element from;
  Element to;
  std::vector<Element> targets;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct FamilyFile {
  LatticeFile lattice;
  std::vector<GroupFile> components;
  std::vector<MapEntry> maps;
  friend bool operator==(const FamilyFile&, const FamilyFile&) = default;
};

struct InstanceSpecFile {
  InstanceSpec spec;
  friend bool operator==(const InstanceSpecFile&, const InstanceSpecFile&) = default;
};

using Structure = std::variant<SemigroupFile, GroupFile, LatticeFile, SemiringFile, FamilyFile,
                               InstanceSpecFile>;

/// Throws ParseError on syntax errors, dimension mismatches, out-of-range
/// indices and unknown kinds.
Structure parse(std::string_view text);
std::string serialize(const Structure& structure);

const char* kind_tag(const Structure& structure);

std::vector<std::string> index_names(std::size_t n);

/// Validates the lattice and groups and assembles the family. Throws
/// std::invalid_argument if they are not a distributive lattice and groups.
FamilyInstance to_family(const FamilyFile& file);
FamilyFile to_file(const FamilyInstance& instance, std::vector<std::string> lattice_names = {},
                   std::vector<std::vector<std::string>> component_names = {});

/// Element names `<α>.<g>` when the semiring is labelled, indices otherwise.
SemiringFile to_file(const SemiringTable& s, const std::vector<std::string>& lattice_names = {},
                     const std::vector<std::vector<std::string>>& component_names = {});
SemiringTable to_semiring(const SemiringFile& file);

LatticeFile to_file(const FiniteDistributiveLattice& lattice, std::vector<std::string> names = {});

/// Throw IoError on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace sdlkit::io
