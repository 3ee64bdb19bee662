#pragma once

// The four published multiplication tables (R3, R4, R3 u C3, R4 u C4),
// transcribed cell by cell in the textual label notation, and a comparator
// that checks them against tables recomputed with rotor_mul.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psop/unity_algebra.hpp"

namespace psop {

enum class ReferenceTableId { R3, R4, Union3, Union8 };

struct ReferenceTable {
  std::string name;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> cells;  // row-major, as printed

  std::vector<Rotor> header_rotors() const;
};

const ReferenceTable& reference_table(ReferenceTableId id);

struct Discrepancy {
  std::size_t row;
  std::size_t col;
  std::string row_label;
  std::string col_label;
  std::string published;
  std::string computed;
};

// Cells whose published label resolves to a different rotor than the
// product computed from first principles.
std::vector<Discrepancy> compare_with_reference(const ReferenceTable& ref, Notation family);

}  // namespace psop
