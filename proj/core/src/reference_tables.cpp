#include "psop/reference_tables.hpp"

#include "psop/error.hpp"

namespace psop {

namespace {

// Transcribed verbatim, including the I/J mix-ups in the order-8 table.
// Symbols: '/' slash, '\' aslash, '_' bottom, '~' top, '=' dashv.
const ReferenceTable kR3{
    "R3",
    {"+1", "/1", "\\1"},
    {
        {"+1", "/1", "\\1"},
        {"/1", "\\1", "+1"},
        {"\\1", "+1", "/1"},
    },
};

const ReferenceTable kR4{
    "R4",
    {"+1", "~1", "_1", "=1"},
    {
        {"+1", "~1", "_1", "=1"},
        {"~1", "=1", "+1", "_1"},
        {"_1", "+1", "=1", "~1"},
        {"=1", "_1", "~1", "+1"},
    },
};

const ReferenceTable kUnion3{
    "union3",
    {"+1", "/1", "\\1", "+I", "/I", "\\I"},
    {
        {"+1", "/1", "\\1", "+I", "/I", "\\I"},
        {"/1", "\\1", "+1", "/I", "\\I", "+I"},
        {"\\1", "+1", "/1", "\\I", "+I", "/I"},
        {"+I", "/I", "\\I", "/1", "\\1", "+1"},
        {"/I", "\\I", "+I", "\\1", "+1", "/1"},
        {"\\I", "+I", "/I", "1", "/1", "\\1"},
    },
};

const ReferenceTable kUnion8{
    "union8",
    {"+1", "~1", "_1", "=1", "+J", "~J", "_J", "=J"},
    {
        {"+1", "~1", "_1", "=1", "+J", "~J", "_J", "=J"},
        {"~1", "=1", "+1", "_1", "~J", "=J", "+J", "_J"},
        {"_1", "+1", "=1", "~1", "_J", "+I", "=I", "~I"},
        {"=1", "_1", "~1", "+1", "=J", "_J", "~J", "+I"},
        {"+J", "~J", "_J", "=J", "_1", "+1", "=1", "~1"},
        {"~J", "=J", "+J", "_J", "+1", "~1", "_1", "=1"},
        {"_J", "+J", "=J", "~I", "=1", "_1", "~1", "+1"},
        {"=J", "_J", "~J", "+J", "~1", "=1", "+1", "_1"},
    },
};

}  // namespace

std::vector<Rotor> ReferenceTable::header_rotors() const {
  std::vector<Rotor> out;
  out.reserve(headers.size());
  for (const auto& h : headers) out.push_back(parse_label(h));
  return out;
}

const ReferenceTable& reference_table(ReferenceTableId id) {
  switch (id) {
    case ReferenceTableId::R3: return kR3;
    case ReferenceTableId::R4: return kR4;
    case ReferenceTableId::Union3: return kUnion3;
    case ReferenceTableId::Union8: return kUnion8;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown reference table");
}

std::vector<Discrepancy> compare_with_reference(const ReferenceTable& ref, Notation family) {
  const auto elements = ref.header_rotors();
  const auto computed = multiplication_table(elements);
  std::vector<Discrepancy> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto& idx = computed.products[i][j];
      const Rotor product = idx ? computed.elements[*idx] : elements[i] * elements[j];
      const Rotor published = parse_label(ref.cells[i][j]);
      if (published != product) {
        out.push_back({i, j, ref.headers[i], ref.headers[j], ref.cells[i][j],
                       notation(product, family)});
      }
    }
  }
  return out;
}

}  // namespace psop
