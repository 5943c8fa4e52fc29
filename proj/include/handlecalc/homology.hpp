#pragma once

#include <optional>
#include <vector>

#include "handlecalc/handle.hpp"
#include "handlecalc/linalg.hpp"

namespace handlecalc {

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianGroup {
  std::vector<BigInt> torsion;  // invariant factors >= 2
  Index free_rank = 0;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Order of a finite group; nullopt when the group is infinite.
  std::optional<BigInt> order() const;
  bool operator==(const AbelianGroup& other) const {
    return free_rank == other.free_rank && torsion == other.torsion;
  }
};

struct HomologyProfile {
  AbelianGroup h1;
  Index h2_rank = 0;
  IntegerMatrix h2_basis;           // columns, in 2-handle coordinates
  IntegerMatrix intersection_form;  // h2_basis^T Q h2_basis
  Inertia inertia;
};

/// Cokernel of M : Z^cols -> Z^rows.
AbelianGroup cokernel(const IntegerMatrix& m);

/// Surgery presentation of the boundary with every dotted circle replaced
/// by a 0-framed unknot: [[Q, R], [R^T, 0]].
IntegerMatrix boundary_presentation(const HandleDecomposition& d);

AbelianGroup boundary_first_homology(const HandleDecomposition& d);

HomologyProfile homology(const HandleDecomposition& d);

bool is_homology_trivial(const HandleDecomposition& d);

}  // namespace handlecalc
