#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmac/abelian_group.hpp"
#include "rmac/int_matrix.hpp"
#include "rmac/simplicial.hpp"

namespace rmac {

inline constexpr std::size_t default_cell_cap = 2'000'000;

// Endpoints of the fixed coordinates: {+1, -1} for the real moment-angle
// complex, {1, 0} for the cubical cone cc(K).
enum class CubeModel { real_moment_angle, cubical_cone };

// A face of the ambient cube: `free` coordinates span it, every other
// coordinate sits at the upper endpoint unless its bit is set in `low`.
struct Cell {
  std::uint32_t free = 0;
  std::uint32_t low = 0;

  int dimension() const noexcept { return __builtin_popcount(free); }
  std::vector<int> free_coordinates() const;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class CellComplex {
 public:
  CellComplex() = default;
  // Cells per dimension in canonical order; boundaries[k] maps C_k -> C_{k-1}.
  CellComplex(int ambient, CubeModel model, std::vector<std::vector<Cell>> cells,
              std::vector<SparseMatrix> boundaries, std::optional<SimplicialComplex> source);

  int ambient_dimension() const noexcept { return ambient_; }
  CubeModel model() const noexcept { return model_; }
  int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  const std::optional<SimplicialComplex>& source() const noexcept { return source_; }

  const std::vector<Cell>& cells(int k) const;
  std::size_t cell_count(int k) const;
  std::size_t total_cells() const;
  std::optional<std::size_t> index_of(const Cell& c) const;

  // k ranges over 0..dimension()+1; the ends are empty maps.
  const SparseMatrix& boundary(int k) const;
  IntMatrix boundary_matrix(int k) const { return boundary(k).to_dense(); }

  // "1,3|+-" : free coordinates, then endpoint symbols over the rest.
  std::string label(const Cell& c) const;
  long long euler_characteristic() const;
  bool boundary_squares_to_zero() const;

 private:
  int ambient_ = 0;
  CubeModel model_ = CubeModel::real_moment_angle;
  std::vector<std::vector<Cell>> cells_;
  std::vector<SparseMatrix> boundaries_;
  std::optional<SimplicialComplex> source_;
};

// Strict weak order used for every cell list: (free set lexicographic,
// then endpoints with the upper endpoint first).
bool canonical_less(const Cell& a, const Cell& b);
Cell cell_from_label(const std::string& label, int ambient, CubeModel model);

std::size_t rmac_cell_count(const SimplicialComplex& k);
CellComplex build_rmac(const SimplicialComplex& k, std::size_t cell_cap = default_cell_cap);
CellComplex build_cc(const SimplicialComplex& k, std::size_t cell_cap = default_cell_cap);

std::vector<FGAbelianGroup> homology(const CellComplex& c);

struct SurfaceReport {
  std::vector<FGAbelianGroup> homology;
  long long euler = 0;
  bool closed_orientable_surface = false;
  std::optional<std::size_t> genus;
};

SurfaceReport surface_report(const CellComplex& c);

struct SignedIndex {
  std::size_t index;
  int sign;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

// A cellular Z_n action given by a generator mapping each cell to ± a cell.
class CellAction {
 public:
  CellAction(int order, std::vector<std::vector<SignedIndex>> images);
  int order() const noexcept { return order_; }
  const std::vector<SignedIndex>& images(int k) const { return images_.at(static_cast<std::size_t>(k)); }
  int dimension() const noexcept { return static_cast<int>(images_.size()) - 1; }
  // Signed permutation matrix on C_k; empty map outside 0..dimension().
  IntMatrix chain_matrix(int k) const;

 private:
  int order_;
  std::vector<std::vector<SignedIndex>> images_;
};

// Generator i -> i + 1 mod n on a complex built from a rotation-invariant K on [n].
CellAction rotation_action(const CellComplex& c, int n);

struct FixedPointClass {
  int period = 0;  // d: the orbit size
  Integer vertex_count;
  Integer orbit_count;
  int stabilizer_order = 0;  // n / d
};

// Vertices of the n-cube grouped by minimal rotation period.
std::vector<FixedPointClass> fixed_point_census(int n);

CellComplex quotient_complex(const CellComplex& c, const CellAction& action);

// Matrix of the rotation on H_1(R Z_{K_n}); checks trivial action on H_0, H_2.
IntMatrix sigma_on_h1(int n, int sigma_cap = 9);

struct ReflectionAudit {
  std::size_t cube_cells = 0;        // cells C_I of cc(K), one per face I (including the empty face)
  std::size_t top_cubes = 0;         // maximal faces of K
  std::size_t rmac_cells = 0;
  std::size_t preimage_of_top = 0;   // rmac cells over the top cubes
  bool bijective = false;
};

ReflectionAudit reflection_audit(const SimplicialComplex& k, std::size_t cell_cap = default_cell_cap);

}  // namespace rmac
