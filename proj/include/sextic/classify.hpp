#pragma once

#include "sextic/exact.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sextic {

struct SexticType {
  int i = 0;  // A-case 1..5
  int j = 0;  // B-case 1..4
  std::string name() const;  // "A5,B1"
  int index() const { return (i - 1) * 4 + (j - 1); }
  friend bool operator==(const SexticType& x, const SexticType& y) { return x.i == y.i && x.j == y.j; }
  friend bool operator<(const SexticType& x, const SexticType& y) { return x.index() < y.index(); }
};

SexticType type_from_index(int index);
// Accepts "A5,B1", "5,1" or "(5,1)".
SexticType parse_type(const std::string& s);

// Row membership of the A and B congruence conditions, evaluated on m itself.
bool a_row(int i, const Int& m);
bool b_row(int j, const Int& m);

// Throws Unclassifiable when no row matches.
SexticType classify(const Int& m);
// Lookup on m mod 2^6 3^6; returns {0,0} for residues no sixth-power-free m can have.
SexticType classify_residue(long r46656);
// Lookup on m mod 2^6 3^5, reading the mod-729 row of B1 as m = 0 mod 243.
SexticType classify_residue15552(long r15552);

struct PartitionReport {
  long lo = 0, hi = 0;
  long checked = 0;
  long violations = 0;
  std::vector<long> violating;  // first few offenders
  std::array<long, 20> per_type{};
};

// Every sixth-power-free, non-square, non-cube m in [lo, hi] must match exactly one A row and one B row.
PartitionReport type_partition_check(long lo, long hi);

// Number of residues mod 15552 whose lifts mod 46656 disagree with classify_residue15552.
long residue_constancy_violations();

bool is_sixth_power_free(long m);
bool is_square_or_cube(long m);

}  // namespace sextic
