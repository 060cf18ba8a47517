#include "rmac/chain.hpp"

#include "rmac/errors.hpp"
#include "rmac/smith.hpp"

namespace rmac {
namespace {

void check_composable(std::size_t dk_rows, std::size_t dk_cols, std::size_t dk1_rows) {
  (void)dk_rows;
  if (dk_cols != dk1_rows) {
    throw InvalidArgument("boundary shapes incompatible: d_k has " + std::to_string(dk_cols) +
                          " columns, d_{k+1} has " + std::to_string(dk1_rows) + " rows");
  }
}

bool all_zero_rows(const IntMatrix& m, std::size_t from, std::size_t to) {
  for (std::size_t r = from; r < to; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

}  // namespace

FGAbelianGroup chain_homology(const IntMatrix& d_k, const IntMatrix& d_k1) {
  check_composable(d_k.rows(), d_k.cols(), d_k1.rows());
  if (!(d_k * d_k1).is_zero()) throw InvalidArgument("d_k * d_{k+1} != 0");
  SmithInvariants out = smith_invariants(d_k);
  SmithInvariants in = smith_invariants(d_k1);
  return FGAbelianGroup(d_k.cols() - out.rank - in.rank, in.invariant_factors);
}

FGAbelianGroup chain_homology(const SparseMatrix& d_k, const SparseMatrix& d_k1) {
  check_composable(d_k.rows(), d_k.cols(), d_k1.rows());
  if (!(d_k * d_k1).is_zero()) throw InvalidArgument("d_k * d_{k+1} != 0");
  SmithInvariants out = smith_invariants(d_k);
  SmithInvariants in = smith_invariants(d_k1);
  return FGAbelianGroup(d_k.cols() - out.rank - in.rank, in.invariant_factors);
}

FGAbelianGroup chain_homology_by_kernel(const IntMatrix& d_k, const IntMatrix& d_k1) {
  check_composable(d_k.rows(), d_k.cols(), d_k1.rows());
  SNFResult s = smith_normal_form(d_k, {.inverses = true});
  const std::size_t r = s.rank, z = d_k.cols() - r;
  IntMatrix coords = *s.V_inv * d_k1;
  if (!all_zero_rows(coords, 0, r)) throw InvalidArgument("d_k * d_{k+1} != 0");
  SmithInvariants w = smith_invariants(coords.block(r, 0, z, d_k1.cols()));
  return FGAbelianGroup(z - w.rank, w.invariant_factors);
}

IntMatrix induced_map_on_homology(const IntMatrix& d_k, const IntMatrix& d_k1, const IntMatrix& f_k,
                                  const IntMatrix& f_km1, const IntMatrix& f_kp1) {
  check_composable(d_k.rows(), d_k.cols(), d_k1.rows());
  if (!(d_k * f_k == f_km1 * d_k) || !(d_k1 * f_kp1 == f_k * d_k1)) {
    throw InvalidArgument("maps do not commute with the boundaries");
  }
  SNFResult s = smith_normal_form(d_k, {.inverses = true});
  const std::size_t r = s.rank, z = d_k.cols() - r;
  const IntMatrix& v_inv = *s.V_inv;
  IntMatrix coords = v_inv * d_k1;
  if (!all_zero_rows(coords, 0, r)) throw InvalidArgument("d_k * d_{k+1} != 0");
  SNFResult w = smith_normal_form(coords.block(r, 0, z, d_k1.cols()), {.inverses = true});
  if (!w.invariant_factors.empty()) throw Unsupported("induced map requested on homology with torsion");
  const std::size_t rw = w.rank, h = z - rw;

  IntMatrix cycles = s.V.block(0, r, d_k.cols(), z) * w.U_inv->block(0, rw, z, h);
  IntMatrix image = v_inv * (f_k * cycles);
  require(all_zero_rows(image, 0, r), "image of a cycle is not a cycle");
  IntMatrix reduced = w.U * image.block(r, 0, z, h);
  return reduced.block(rw, 0, h, h);
}

}  // namespace rmac
