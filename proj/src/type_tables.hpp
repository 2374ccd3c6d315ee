#pragma once

namespace sextic::detail {

struct TypeTable {
  int i, j;
  const char* basis[3];
  const char* transition[36];
  const char* gram[36];
};

extern const TypeTable kTypeTables[20];

}  // namespace sextic::detail
