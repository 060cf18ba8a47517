#include "rmac/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "rmac/chain.hpp"
#include "rmac/errors.hpp"
#include "rmac/smith.hpp"

namespace rmac {
namespace {

constexpr int max_ambient = 31;

std::uint64_t key(const Cell& c) { return (std::uint64_t{c.free} << 32) | c.low; }

std::uint32_t face_mask(const Face& f) {
  std::uint32_t m = 0;
  for (int v : f) m |= std::uint32_t{1} << (v - 1);
  return m;
}

std::uint32_t full_mask(int m) { return m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1; }

std::vector<std::uint32_t> face_masks_with_empty(const SimplicialComplex& k) {
  std::vector<std::uint32_t> out{0};
  for (const auto& layer : k.faces_by_dimension())
    for (const Face& f : layer) out.push_back(face_mask(f));
  return out;
}

// All submasks of `mask`, including 0 and mask itself.
template <typename F>
void for_each_submask(std::uint32_t mask, F&& f) {
  std::uint32_t s = mask;
  for (;;) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

std::map<std::size_t, std::unordered_map<std::uint64_t, std::size_t>> index_cells(
    const std::vector<std::vector<Cell>>& cells) {
  std::map<std::size_t, std::unordered_map<std::uint64_t, std::size_t>> idx;
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (std::size_t i = 0; i < cells[k].size(); ++i) idx[k][key(cells[k][i])] = i;
  return idx;
}

CellComplex assemble(int ambient, CubeModel model, std::vector<Cell> all, std::optional<SimplicialComplex> source) {
  int dim = -1;
  for (const Cell& c : all) dim = std::max(dim, c.dimension());
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(dim + 1));
  for (const Cell& c : all) cells[static_cast<std::size_t>(c.dimension())].push_back(c);
  for (auto& layer : cells) std::sort(layer.begin(), layer.end(), canonical_less);
  auto index = index_cells(cells);

  std::vector<SparseMatrix> boundaries(static_cast<std::size_t>(dim + 2));
  if (dim >= 0) boundaries[0] = SparseMatrix(0, cells[0].size());
  for (int k = 1; k <= dim; ++k) {
    const auto& lower = index[static_cast<std::size_t>(k - 1)];
    SparseMatrix b(cells[static_cast<std::size_t>(k - 1)].size(), cells[static_cast<std::size_t>(k)].size());
    const auto& layer = cells[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < layer.size(); ++j) {
      const Cell& c = layer[j];
      int pos = 0;
      for (int coord : c.free_coordinates()) {
        const std::uint32_t bit = std::uint32_t{1} << (coord - 1);
        const int s = pos % 2 ? 1 : -1;  // (-1)^j for the j-th free coordinate, j from 1
        Cell upper{c.free & ~bit, c.low};
        Cell lower_face{c.free & ~bit, c.low | bit};
        auto u = lower.find(key(upper));
        auto l = lower.find(key(lower_face));
        require(u != lower.end() && l != lower.end(), "boundary face missing from complex");
        b.add(u->second, j, Integer(s));
        b.add(l->second, j, Integer(-s));
        ++pos;
      }
    }
    boundaries[static_cast<std::size_t>(k)] = std::move(b);
  }
  if (dim >= 0) boundaries[static_cast<std::size_t>(dim + 1)] = SparseMatrix(cells.back().size(), 0);
  CellComplex c(ambient, model, std::move(cells), std::move(boundaries), std::move(source));
  require(c.boundary_squares_to_zero(), "boundary of boundary is not zero");
  return c;
}

void check_ambient(const SimplicialComplex& k) {
  if (k.vertex_count() > max_ambient) {
    throw ResourceLimit("cell complexes support at most " + std::to_string(max_ambient) + " vertices");
  }
}

std::uint32_t rotate(std::uint32_t mask, int n) {
  if (n == 1) return mask;
  return ((mask << 1) | (mask >> (n - 1))) & full_mask(n);
}

std::uint32_t rotate_n_times(std::uint32_t mask, int times, int n) {
  for (int i = 0; i < times; ++i) mask = rotate(mask, n);
  return mask;
}

}  // namespace

std::vector<int> Cell::free_coordinates() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (free >> i & 1u) out.push_back(i + 1);
  return out;
}

bool canonical_less(const Cell& a, const Cell& b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  if (a.free != b.free) return a.free_coordinates() < b.free_coordinates();
  // lowest differing coordinate decides; upper endpoint sorts first
  std::uint32_t diff = a.low ^ b.low;
  if (diff == 0) return false;
  std::uint32_t lowest = diff & (~diff + 1);
  return (a.low & lowest) == 0;
}

CellComplex::CellComplex(int ambient, CubeModel model, std::vector<std::vector<Cell>> cells,
                         std::vector<SparseMatrix> boundaries, std::optional<SimplicialComplex> source)
    : ambient_(ambient),
      model_(model),
      cells_(std::move(cells)),
      boundaries_(std::move(boundaries)),
      source_(std::move(source)) {
  if (boundaries_.size() != cells_.size() + 1 && !(cells_.empty() && boundaries_.empty())) {
    throw InvalidArgument("need one boundary map per dimension plus one");
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (boundaries_[k].cols() != cells_[k].size() || boundaries_[k + 1].rows() != cells_[k].size()) {
      throw InvalidArgument("boundary shape does not match cell counts in dimension " + std::to_string(k));
    }
  }
}

const std::vector<Cell>& CellComplex::cells(int k) const {
  static const std::vector<Cell> none;
  if (k < 0 || k > dimension()) return none;
  return cells_[static_cast<std::size_t>(k)];
}

std::size_t CellComplex::cell_count(int k) const { return cells(k).size(); }

std::size_t CellComplex::total_cells() const {
  std::size_t n = 0;
  for (const auto& layer : cells_) n += layer.size();
  return n;
}

std::optional<std::size_t> CellComplex::index_of(const Cell& c) const {
  const auto& layer = cells(c.dimension());
  auto it = std::lower_bound(layer.begin(), layer.end(), c, canonical_less);
  if (it == layer.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

const SparseMatrix& CellComplex::boundary(int k) const {
  if (k < 0 || k > dimension() + 1) throw InvalidArgument("boundary index out of range: " + std::to_string(k));
  return boundaries_[static_cast<std::size_t>(k)];
}

std::string CellComplex::label(const Cell& c) const {
  const char up = model_ == CubeModel::real_moment_angle ? '+' : '1';
  const char down = model_ == CubeModel::real_moment_angle ? '-' : '0';
  std::string s;
  for (int v : c.free_coordinates()) s += (s.empty() ? "" : ",") + std::to_string(v);
  s += '|';
  for (int i = 0; i < ambient_; ++i)
    if (!(c.free >> i & 1u)) s += (c.low >> i & 1u) ? down : up;
  return s;
}

Cell cell_from_label(const std::string& label, int ambient, CubeModel model) {
  const char up = model == CubeModel::real_moment_angle ? '+' : '1';
  const char down = model == CubeModel::real_moment_angle ? '-' : '0';
  auto bar = label.find('|');
  if (bar == std::string::npos) throw InvalidArgument("cell label without '|': " + label);
  Cell c;
  std::string coords = label.substr(0, bar);
  std::size_t pos = 0;
  while (pos < coords.size()) {
    std::size_t next = coords.find(',', pos);
    if (next == std::string::npos) next = coords.size();
    int v = std::stoi(coords.substr(pos, next - pos));
    if (v < 1 || v > ambient) throw InvalidArgument("cell label coordinate out of range: " + label);
    c.free |= std::uint32_t{1} << (v - 1);
    pos = next + 1;
  }
  std::string ends = label.substr(bar + 1);
  if (static_cast<int>(ends.size()) != ambient - c.dimension()) {
    throw InvalidArgument("cell label has wrong number of endpoints: " + label);
  }
  std::size_t e = 0;
  for (int i = 0; i < ambient; ++i) {
    if (c.free >> i & 1u) continue;
    if (ends[e] == down) {
      c.low |= std::uint32_t{1} << i;
    } else if (ends[e] != up) {
      throw InvalidArgument("bad endpoint symbol in cell label: " + label);
    }
    ++e;
  }
  return c;
}

long long CellComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < cells_.size(); ++k)
    chi += (k % 2 ? -1 : 1) * static_cast<long long>(cells_[k].size());
  return chi;
}

bool CellComplex::boundary_squares_to_zero() const {
  for (int k = 1; k <= dimension(); ++k)
    if (!(boundary(k) * boundary(k + 1)).is_zero()) return false;
  return true;
}

std::size_t rmac_cell_count(const SimplicialComplex& k) {
  check_ambient(k);
  const int m = k.vertex_count();
  std::size_t total = std::size_t{1} << m;
  auto layers = k.faces_by_dimension();
  for (std::size_t d = 0; d < layers.size(); ++d) total += layers[d].size() << (m - static_cast<int>(d) - 1);
  return total;
}

CellComplex build_rmac(const SimplicialComplex& k, std::size_t cell_cap) {
  std::size_t total = rmac_cell_count(k);
  if (total > cell_cap) {
    throw ResourceLimit("real moment-angle complex has " + std::to_string(total) + " cells, cap is " +
                        std::to_string(cell_cap));
  }
  const std::uint32_t all = full_mask(k.vertex_count());
  std::vector<Cell> cells;
  cells.reserve(total);
  for (std::uint32_t sigma : face_masks_with_empty(k))
    for_each_submask(all & ~sigma, [&](std::uint32_t low) { cells.push_back({sigma, low}); });
  return assemble(k.vertex_count(), CubeModel::real_moment_angle, std::move(cells), k);
}

CellComplex build_cc(const SimplicialComplex& k, std::size_t cell_cap) {
  check_ambient(k);
  std::vector<std::uint32_t> faces = face_masks_with_empty(k);
  std::size_t total = 0;
  for (std::uint32_t f : faces) total += std::size_t{1} << __builtin_popcount(f);
  if (total > cell_cap) {
    throw ResourceLimit("cubical cone has " + std::to_string(total) + " cells, cap is " + std::to_string(cell_cap));
  }
  std::vector<Cell> cells;
  for (std::uint32_t face : faces)
    for_each_submask(face, [&](std::uint32_t zeros) { cells.push_back({face & ~zeros, zeros}); });
  return assemble(k.vertex_count(), CubeModel::cubical_cone, std::move(cells), k);
}

std::vector<FGAbelianGroup> homology(const CellComplex& c) {
  std::vector<FGAbelianGroup> h;
  for (int k = 0; k <= c.dimension(); ++k) h.push_back(chain_homology(c.boundary(k), c.boundary(k + 1)));
  return h;
}

SurfaceReport surface_report(const CellComplex& c) {
  SurfaceReport r;
  r.homology = homology(c);
  r.euler = c.euler_characteristic();
  const auto& h = r.homology;
  bool ok = c.dimension() == 2 && h[0] == FGAbelianGroup::free(1) && h[2] == FGAbelianGroup::free(1) &&
            h[1].is_free() && h[1].rank() % 2 == 0 &&
            r.euler == 2 - static_cast<long long>(h[1].rank());
  r.closed_orientable_surface = ok;
  if (ok) r.genus = h[1].rank() / 2;
  return r;
}

CellAction::CellAction(int order, std::vector<std::vector<SignedIndex>> images)
    : order_(order), images_(std::move(images)) {
  if (order_ < 1) throw InvalidArgument("action order must be positive");
}

IntMatrix CellAction::chain_matrix(int k) const {
  if (k < 0 || k > dimension()) return IntMatrix(0, 0);
  const auto& im = images(k);
  IntMatrix m(im.size(), im.size());
  for (std::size_t j = 0; j < im.size(); ++j) m(im[j].index, j) = im[j].sign;
  return m;
}

CellAction rotation_action(const CellComplex& c, int n) {
  if (!c.source() || c.source()->vertex_count() != n || c.ambient_dimension() != n) {
    throw InvalidArgument("rotation needs a complex built from a simplicial complex on " + std::to_string(n) +
                          " vertices");
  }
  const SimplicialComplex& k = *c.source();
  const VertexPermutation shift = VertexPermutation::rotation(n);
  for (const Face& f : k.maximal_faces()) {
    if (!k.contains(shift.apply(f))) throw InvalidArgument("simplicial complex is not rotation invariant");
  }
  std::vector<std::vector<SignedIndex>> images(static_cast<std::size_t>(c.dimension() + 1));
  for (int d = 0; d <= c.dimension(); ++d) {
    for (const Cell& cell : c.cells(d)) {
      Cell image{rotate(cell.free, n), rotate(cell.low, n)};
      // coordinate n wraps to 1 and must pass the other d - 1 free coordinates
      int sign = ((cell.free >> (n - 1) & 1u) && d % 2 == 0) ? -1 : 1;
      auto idx = c.index_of(image);
      require(idx.has_value(), "rotated cell missing from complex");
      images[static_cast<std::size_t>(d)].push_back({*idx, sign});
    }
  }
  CellAction action(n, std::move(images));

  for (int d = 1; d <= c.dimension(); ++d) {
    IntMatrix lhs = action.chain_matrix(d - 1) * c.boundary(d);
    IntMatrix rhs = c.boundary_matrix(d) * action.chain_matrix(d);
    require(lhs == rhs, "rotation does not commute with the boundary");
  }
  for (int d = 0; d <= c.dimension(); ++d) {
    const auto& im = action.images(d);
    for (std::size_t i = 0; i < im.size(); ++i) {
      std::size_t cur = i;
      int sign = 1;
      for (int step = 0; step < n; ++step) {
        sign *= im[cur].sign;
        cur = im[cur].index;
      }
      require(cur == i && sign == 1, "n-th power of the rotation is not the identity");
    }
  }
  return action;
}

std::vector<FixedPointClass> fixed_point_census(int n) {
  if (n < 1 || n > 24) throw ResourceLimit("fixed point census supports 1 <= n <= 24");
  std::map<int, std::int64_t> count;
  const std::uint32_t all = full_mask(n);
  for (std::uint32_t w = 0; w <= all; ++w) {
    int period = n;
    for (int d = 1; d < n; ++d) {
      if (n % d == 0 && rotate_n_times(w, d, n) == w) {
        period = d;
        break;
      }
    }
    count[period]++;
    if (w == all) break;
  }
  std::vector<FixedPointClass> out;
  for (auto [d, v] : count) {
    require(v % d == 0, "vertex count not divisible by orbit size");
    out.push_back({d, Integer(v), Integer(v / d), n / d});
  }
  return out;
}

CellComplex quotient_complex(const CellComplex& c, const CellAction& action) {
  if (action.dimension() != c.dimension()) throw InvalidArgument("action does not match the complex");
  const int n = action.order();
  // orbit[d][i] = (orbit index, s) with cell i = s * sigma^j(representative)
  std::vector<std::vector<SignedIndex>> orbit(static_cast<std::size_t>(c.dimension() + 1));
  std::vector<std::vector<Cell>> reps(static_cast<std::size_t>(c.dimension() + 1));
  std::vector<std::vector<std::size_t>> rep_index(static_cast<std::size_t>(c.dimension() + 1));
  for (int d = 0; d <= c.dimension(); ++d) {
    const auto& im = action.images(d);
    auto& orb = orbit[static_cast<std::size_t>(d)];
    orb.assign(im.size(), {SIZE_MAX, 0});
    for (std::size_t i = 0; i < im.size(); ++i) {
      if (orb[i].index != SIZE_MAX) continue;
      const std::size_t o = reps[static_cast<std::size_t>(d)].size();
      reps[static_cast<std::size_t>(d)].push_back(c.cells(d)[i]);
      rep_index[static_cast<std::size_t>(d)].push_back(i);
      std::size_t cur = i;
      int s = 1;
      for (int step = 0; step < n; ++step) {
        if (orb[cur].index != SIZE_MAX) {
          if (d > 0 && (cur != i || s != 1 || step != n)) {
            throw Unsupported("cell " + c.label(c.cells(d)[i]) + " has a nontrivial stabilizer");
          }
          break;
        }
        orb[cur] = {o, s};
        s *= im[cur].sign;
        cur = im[cur].index;
      }
    }
  }

  std::vector<SparseMatrix> boundaries(static_cast<std::size_t>(c.dimension() + 2));
  if (c.dimension() >= 0) boundaries[0] = SparseMatrix(0, reps[0].size());
  for (int d = 1; d <= c.dimension(); ++d) {
    SparseMatrix b(reps[static_cast<std::size_t>(d - 1)].size(), reps[static_cast<std::size_t>(d)].size());
    const SparseMatrix& full = c.boundary(d);
    for (std::size_t j = 0; j < reps[static_cast<std::size_t>(d)].size(); ++j) {
      for (const auto& e : full.column(rep_index[static_cast<std::size_t>(d)][j])) {
        const SignedIndex& f = orbit[static_cast<std::size_t>(d - 1)][e.row];
        b.add(f.index, j, e.value * Integer(f.sign));
      }
    }
    boundaries[static_cast<std::size_t>(d)] = std::move(b);
  }
  if (c.dimension() >= 0) {
    boundaries[static_cast<std::size_t>(c.dimension() + 1)] = SparseMatrix(reps.back().size(), 0);
  }
  CellComplex q(c.ambient_dimension(), c.model(), std::move(reps), std::move(boundaries), std::nullopt);
  require(q.boundary_squares_to_zero(), "quotient boundary of boundary is not zero");
  return q;
}

IntMatrix sigma_on_h1(int n, int sigma_cap) {
  if (n < 3) throw InvalidArgument("polygon needs n >= 3, got " + std::to_string(n));
  if (n > sigma_cap) {
    throw ResourceLimit("rotation matrix on H_1 for n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(sigma_cap));
  }
  CellComplex c = build_rmac(polygon_boundary(n));
  CellAction a = rotation_action(c, n);
  IntMatrix d1 = c.boundary_matrix(1), d2 = c.boundary_matrix(2);
  IntMatrix f0 = a.chain_matrix(0), f1 = a.chain_matrix(1), f2 = a.chain_matrix(2);
  IntMatrix empty(0, 0);
  require(induced_map_on_homology(c.boundary_matrix(0), d1, f0, empty, f1) == IntMatrix::identity(1),
          "rotation acts nontrivially on H_0");
  require(induced_map_on_homology(d2, c.boundary_matrix(3), f2, f1, empty) == IntMatrix::identity(1),
          "rotation acts nontrivially on H_2");
  IntMatrix m = induced_map_on_homology(d1, d2, f1, f0, f2);
  require(m.power(static_cast<unsigned>(n)).is_identity(), "rotation on H_1 does not have order dividing n");
  SmithInvariants inv = smith_invariants(m);
  require(inv.rank == m.rows() && inv.invariant_factors.empty(), "rotation on H_1 is not invertible over Z");
  return m;
}

ReflectionAudit reflection_audit(const SimplicialComplex& k, std::size_t cell_cap) {
  CellComplex cube = build_cc(k, cell_cap);
  CellComplex real = build_rmac(k, cell_cap);
  const int m = k.vertex_count();
  ReflectionAudit r;
  r.rmac_cells = real.total_cells();
  r.top_cubes = k.maximal_faces().size();
  std::map<std::uint32_t, std::size_t> preimages;
  for (int d = 0; d <= real.dimension(); ++d)
    for (const Cell& c : real.cells(d)) preimages[c.free]++;
  bool ok = true;
  for (int d = 0; d <= cube.dimension(); ++d) {
    for (const Cell& c : cube.cells(d)) {
      if (c.low != 0) continue;  // only the cubes C_I with no zero coordinate
      ++r.cube_cells;
      std::size_t expected = std::size_t{1} << (m - c.dimension());
      auto it = preimages.find(c.free);
      ok = ok && it != preimages.end() && it->second == expected;
    }
  }
  std::set<std::uint32_t> top;
  for (const Face& f : k.maximal_faces()) top.insert(face_mask(f));
  for (const auto& [face, count] : preimages) {
    ok = ok && k.contains(Cell{face, 0}.free_coordinates());
    if (top.count(face)) r.preimage_of_top += count;
  }
  r.bijective = ok && preimages.size() == r.cube_cells;
  return r;
}

}  // namespace rmac
