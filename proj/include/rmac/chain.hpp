#pragma once

#include "rmac/abelian_group.hpp"
#include "rmac/int_matrix.hpp"

namespace rmac {

// H_k of ... -> C_{k+1} --d_k1--> C_k --d_k--> C_{k-1} -> ...
// Requires d_k * d_k1 == 0.
FGAbelianGroup chain_homology(const IntMatrix& d_k, const IntMatrix& d_k1);
FGAbelianGroup chain_homology(const SparseMatrix& d_k, const SparseMatrix& d_k1);

// Same group, computed from an explicit kernel basis of d_k.
FGAbelianGroup chain_homology_by_kernel(const IntMatrix& d_k, const IntMatrix& d_k1);

// Matrix of the map induced on H_k by the chain map (f_km1, f_k, f_kp1),
// in a homology basis chosen by the SNF of d_k and of the boundary lattice.
// Requires H_k free; throws Unsupported otherwise.
IntMatrix induced_map_on_homology(const IntMatrix& d_k, const IntMatrix& d_k1, const IntMatrix& f_k,
                                  const IntMatrix& f_km1, const IntMatrix& f_kp1);

}  // namespace rmac
