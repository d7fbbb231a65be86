#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphstat/smith.hpp"
#include "graphstat/util.hpp"

namespace graphstat::hom {

// Finitely generated abelian group in invariant-factor form:
// Z^rank + Z/t1 + Z/t2 + ... with t1 | t2 | ... and every ti > 1.
struct FGAbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;

  bool operator==(const FGAbelianGroup& o) const {
    return rank == o.rank && torsion == o.torsion;
  }
  bool operator!=(const FGAbelianGroup& o) const { return !(*this == o); }
  std::string to_string() const;
};

FGAbelianGroup group_from_factors(int rank, std::vector<Int> factors);

// Boundary data of a chain complex concentrated in degrees 0..2.
struct BoundaryData {
  int c0 = 0, c1 = 0, c2 = 0;
  SparseMat d1;  // c0 x c1
  SparseMat d2;  // c1 x c2
};

// Exact check that d1 * d2 = 0.
bool composition_is_zero(const BoundaryData& b);

// Change-of-basis data needed to express 1-cycles in H1 coordinates.
struct H1Basis {
  bool available = false;
  int r1 = 0, r2 = 0;
  Mat v1_inv;                 // c1 x c1
  Mat u2;                     // k x k with k = c1 - r1
  std::vector<Int> diag2;     // invariant factors of the quotient relation
  // Generators as integer 1-chains (length c1): the free generators first,
  // then one generator for each torsion factor.
  std::vector<std::vector<Int>> free_generators;
  std::vector<std::vector<Int>> torsion_generators;
};

struct H1Result {
  FGAbelianGroup group;
  H1Basis basis;
};

struct H1Options {
  // Basis transforms are computed only when c1 is at most this bound; larger
  // complexes get the group alone through the sparse path.
  int basis_threshold = 512;
  bool force_group_only = false;
};

// H1 = ker d1 / im d2 over the integers.
H1Result homology_h1(const BoundaryData& b, const H1Options& opt = {});

// Free rank of H0 = Z^(number of connected components of the 1-skeleton).
int h0_rank(const BoundaryData& b);

// Class of a 1-cycle in the coordinates fixed by the basis: one integer per
// free generator, then one residue (in [0, ti)) per torsion factor.
struct CycleClass {
  std::vector<Int> free_coords;
  std::vector<Int> torsion_residues;
  std::vector<Int> torsion_moduli;

  bool operator==(const CycleClass& o) const {
    return free_coords == o.free_coords &&
           torsion_residues == o.torsion_residues &&
           torsion_moduli == o.torsion_moduli;
  }
  CycleClass operator+(const CycleClass& o) const;
  CycleClass operator-(const CycleClass& o) const;
  bool is_zero() const;
  std::string to_string() const;
};

CycleClass cycle_class(const H1Basis& basis, const std::vector<Int>& z);

}  // namespace graphstat::hom
