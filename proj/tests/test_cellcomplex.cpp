#include <map>
#include <string>

#include "doctest.h"
#include "rmac/cell_complex.hpp"
#include "rmac/chain.hpp"
#include "rmac/errors.hpp"
#include "rmac/polynomial.hpp"

using namespace rmac;

namespace {

const FGAbelianGroup Z = FGAbelianGroup::free(1);

long long pow2(int e) { return 1LL << e; }

// Σ_{σ∈K, |σ|=k} 2^{m-k}, counted from the face lists.
std::vector<std::size_t> cell_count_oracle(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  std::vector<std::size_t> out{static_cast<std::size_t>(pow2(m))};
  for (const auto& layer : k.faces_by_dimension()) {
    if (layer.empty()) continue;
    const int size = static_cast<int>(layer.front().size());
    out.push_back(layer.size() * static_cast<std::size_t>(pow2(m - size)));
  }
  return out;
}

// Minimal rotation period of an n-letter word, by string rotation.
int period_oracle(const std::string& w) {
  const int n = static_cast<int>(w.size());
  for (int d = 1; d <= n; ++d)
    if (n % d == 0 && w.substr(static_cast<std::size_t>(d)) + w.substr(0, static_cast<std::size_t>(d)) == w) return d;
  return n;
}

std::size_t index_of_label(const CellComplex& c, const std::string& label) {
  auto idx = c.index_of(cell_from_label(label, c.ambient_dimension(), c.model()));
  REQUIRE(idx.has_value());
  return *idx;
}

}  // namespace

TEST_CASE("cell counts") {
  const CellComplex k3 = build_rmac(polygon_boundary(3));
  CHECK(k3.cell_count(0) == 8);
  CHECK(k3.cell_count(1) == 12);
  CHECK(k3.cell_count(2) == 6);

  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    const CellComplex c = build_rmac(polygon_boundary(n));
    CHECK(c.cell_count(0) == static_cast<std::size_t>(pow2(n)));
    CHECK(c.cell_count(1) == static_cast<std::size_t>(n * pow2(n - 1)));
    CHECK(c.cell_count(2) == static_cast<std::size_t>(n * pow2(n - 2)));
    CHECK(c.euler_characteristic() == (4 - n) * pow2(n - 2));
    CHECK(rmac_cell_count(polygon_boundary(n)) == c.total_cells());
  }

  const CellComplex q4 = build_rmac(discrete_complex(4));
  CHECK(q4.dimension() == 1);
  CHECK(q4.cell_count(0) == 16);
  CHECK(q4.cell_count(1) == 32);

  const SimplicialComplex solid(5, {{1, 2, 3}, {2, 4}, {3, 4, 5}, {1, 5}});
  const CellComplex s = build_rmac(solid);
  std::vector<std::size_t> expect = cell_count_oracle(solid);
  REQUIRE(static_cast<std::size_t>(s.dimension() + 1) == expect.size());
  for (int k = 0; k <= s.dimension(); ++k) CHECK(s.cell_count(k) == expect[static_cast<std::size_t>(k)]);

  CHECK_THROWS_AS(build_rmac(polygon_boundary(12), 1000), ResourceLimit);
  CHECK_THROWS_AS(build_cc(polygon_boundary(12), 50), ResourceLimit);
}

TEST_CASE("boundary structure") {
  for (const SimplicialComplex& k :
       {polygon_boundary(5), discrete_complex(3), SimplicialComplex(4, {{1, 2, 3}, {3, 4}}),
        SimplicialComplex(4, {{1, 2, 3, 4}})}) {
    for (const CellComplex& c : {build_rmac(k), build_cc(k)}) {
      CHECK(c.boundary_squares_to_zero());
      for (int d = 1; d <= c.dimension(); ++d) {
        const SparseMatrix& b = c.boundary(d);
        for (std::size_t j = 0; j < b.cols(); ++j) {
          CHECK(b.column(j).size() == static_cast<std::size_t>(2 * d));
          for (const auto& e : b.column(j)) CHECK(abs(e.value) == Integer(1));
        }
      }
    }
  }
}

TEST_CASE("boundary sign convention") {
  const CellComplex c = build_rmac(polygon_boundary(4));
  const std::size_t sq = index_of_label(c, "1,2|+-");
  const IntMatrix d2 = c.boundary_matrix(2);
  // j = 1 contributes -1 at the upper endpoint, j = 2 contributes +1
  CHECK(d2(index_of_label(c, "2|++-"), sq) == Integer(-1));
  CHECK(d2(index_of_label(c, "2|-+-"), sq) == Integer(1));
  CHECK(d2(index_of_label(c, "1|++-"), sq) == Integer(1));
  CHECK(d2(index_of_label(c, "1|-+-"), sq) == Integer(-1));
  CHECK(c.label(c.cells(2)[sq]) == "1,2|+-");
}

TEST_CASE("homology of polygon complexes") {
  CHECK(homology(build_rmac(polygon_boundary(3))) == std::vector<FGAbelianGroup>{Z, FGAbelianGroup(), Z});
  CHECK(homology(build_rmac(polygon_boundary(4))) ==
        std::vector<FGAbelianGroup>{Z, FGAbelianGroup::free(2), Z});
  CHECK(homology(build_rmac(polygon_boundary(6))) ==
        std::vector<FGAbelianGroup>{Z, FGAbelianGroup::free(34), Z});

  const IntMatrix d1 = build_rmac(polygon_boundary(4)).boundary_matrix(1);
  const IntMatrix d2 = build_rmac(polygon_boundary(4)).boundary_matrix(2);
  CHECK(chain_homology(d1, d2) == FGAbelianGroup::free(2));

  for (int n = 3; n <= 9; ++n) {
    CAPTURE(n);
    SurfaceReport r = surface_report(build_rmac(polygon_boundary(n)));
    CHECK(r.closed_orientable_surface);
    REQUIRE(r.genus.has_value());
    CHECK(static_cast<long long>(*r.genus) == 1 + (n - 4) * pow2(n - 3));
  }
  CHECK(*surface_report(build_rmac(polygon_boundary(5))).genus == 5);

  const CellComplex q4 = build_rmac(discrete_complex(4));
  CHECK(homology(q4) == std::vector<FGAbelianGroup>{Z, FGAbelianGroup::free(17)});
}

TEST_CASE("non-surface example") {
  const CellComplex c = build_rmac(SimplicialComplex(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}}));
  SurfaceReport r = surface_report(c);
  CHECK(c.cell_count(0) == 16);
  CHECK(c.cell_count(1) == 32);
  CHECK(c.cell_count(2) == 16);
  CHECK(r.euler == 0);
  CHECK_FALSE(r.closed_orientable_surface);
  CHECK_FALSE(r.genus.has_value());
}

TEST_CASE("labels round trip") {
  for (const CellComplex& c : {build_rmac(polygon_boundary(5)), build_cc(polygon_boundary(5))}) {
    for (int d = 0; d <= c.dimension(); ++d) {
      for (std::size_t i = 0; i < c.cell_count(d); ++i) {
        const Cell& cell = c.cells(d)[i];
        CHECK(cell_from_label(c.label(cell), c.ambient_dimension(), c.model()) == cell);
        CHECK(c.index_of(cell) == std::optional<std::size_t>(i));
        if (i > 0) CHECK(canonical_less(c.cells(d)[i - 1], cell));
      }
    }
  }
  CHECK_THROWS_AS(cell_from_label("1,2", 4, CubeModel::real_moment_angle), InvalidArgument);
  CHECK_THROWS_AS(cell_from_label("1,2|+", 4, CubeModel::real_moment_angle), InvalidArgument);
  CHECK_THROWS_AS(cell_from_label("1,2|+x", 4, CubeModel::real_moment_angle), InvalidArgument);
}

TEST_CASE("rotation action") {
  const CellComplex c = build_rmac(polygon_boundary(4));
  const CellAction a = rotation_action(c, 4);

  const SignedIndex e = a.images(2)[index_of_label(c, "1,2|+-")];
  CHECK(e.index == index_of_label(c, "2,3|-+"));
  CHECK(e.sign == 1);
  const SignedIndex w = a.images(2)[index_of_label(c, "1,4|++")];
  CHECK(w.index == index_of_label(c, "1,2|++"));
  CHECK(w.sign == -1);
  CHECK(a.images(1)[index_of_label(c, "4|+-+")].sign == 1);

  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const CellComplex cn = build_rmac(polygon_boundary(n));
    const CellAction an = rotation_action(cn, n);
    for (int d = 0; d <= cn.dimension(); ++d) {
      const IntMatrix f = an.chain_matrix(d);
      CHECK(f.power(static_cast<unsigned>(n)).is_identity());
      CHECK_FALSE(f.is_identity());
      if (d > 0) CHECK(an.chain_matrix(d - 1) * cn.boundary(d) == cn.boundary_matrix(d) * f);
    }
  }

  const CellComplex graph = build_rmac(discrete_complex(5));
  CHECK(rotation_action(graph, 5).chain_matrix(1).power(5).is_identity());
  CHECK_THROWS_AS(rotation_action(build_rmac(SimplicialComplex(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})), 4),
                  InvalidArgument);
}

TEST_CASE("fixed point census") {
  auto as_map = [](const std::vector<FixedPointClass>& v) {
    std::map<int, std::pair<Integer, Integer>> m;
    for (const auto& c : v) {
      m[c.period] = {c.vertex_count, c.orbit_count};
    }
    return m;
  };
  auto c3 = fixed_point_census(3);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].period == 1);
  CHECK(c3[0].vertex_count == Integer(2));
  CHECK(c3[0].stabilizer_order == 3);
  CHECK(c3[1].period == 3);
  CHECK(c3[1].vertex_count == Integer(6));
  CHECK(c3[1].orbit_count == Integer(2));

  auto c6 = as_map(fixed_point_census(6));
  CHECK(c6[1].second == Integer(2));
  CHECK(c6[2].second == Integer(1));
  CHECK(c6[3].second == Integer(2));
  CHECK(c6[6].second == Integer(9));

  auto c5 = as_map(fixed_point_census(5));
  CHECK(c5.size() == 2);
  CHECK(c5[5].second == Integer(6));

  for (int n = 1; n <= 14; ++n) {
    std::map<int, long long> oracle;
    for (long long w = 0; w < pow2(n); ++w) {
      std::string s;
      for (int i = 0; i < n; ++i) s += (w >> i & 1) ? '1' : '0';
      oracle[period_oracle(s)]++;
    }
    auto got = fixed_point_census(n);
    REQUIRE(got.size() == oracle.size());
    for (const auto& c : got) {
      CHECK(c.vertex_count == Integer(static_cast<std::int64_t>(oracle[c.period])));
      CHECK(c.stabilizer_order * c.period == n);
    }
  }
}

TEST_CASE("quotient complexes") {
  std::map<int, std::size_t> genus_expect{{3, 0}, {4, 0}, {6, 2}};
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const CellComplex c = build_rmac(polygon_boundary(n));
    const CellComplex q = quotient_complex(c, rotation_action(c, n));
    SurfaceReport r = surface_report(q);
    CHECK(r.homology.back() == Z);
    CHECK(r.closed_orientable_surface);
    long long branch = 0;
    for (const auto& fp : fixed_point_census(n)) branch += fp.orbit_count.to_int64() * (n - fp.period);
    CHECK(q.euler_characteristic() * n == c.euler_characteristic() + branch);
    if (genus_expect.count(n)) CHECK(r.genus == std::optional<std::size_t>(genus_expect[n]));
  }
}

TEST_CASE("rotation on H1") {
  CHECK(sigma_on_h1(3).rows() == 0);
  const IntMatrix a4 = sigma_on_h1(4);
  REQUIRE(a4.rows() == 2);
  CHECK((a4 * a4 + IntMatrix::identity(2)).is_zero());
  for (int n = 5; n <= 7; ++n) {
    CAPTURE(n);
    const IntMatrix a = sigma_on_h1(n);
    CHECK(a.rows() == static_cast<std::size_t>(2 * (1 + (n - 4) * (1 << (n - 3)))));
    CHECK(a.power(static_cast<unsigned>(n)).is_identity());
    const Integer det = charpoly(a).coefficients().front();
    CHECK(abs(det) == Integer(1));
  }
  CHECK_THROWS_AS(sigma_on_h1(10), ResourceLimit);
}

TEST_CASE("cubical cone and reflection audit") {
  const CellComplex cc3 = build_cc(polygon_boundary(3));
  CHECK(cc3.model() == CubeModel::cubical_cone);
  CHECK(cc3.cell_count(2) == 3);
  ReflectionAudit r3 = reflection_audit(polygon_boundary(3));
  CHECK(r3.top_cubes == 3);
  CHECK(r3.preimage_of_top == 6);
  CHECK(r3.bijective);
  CHECK(r3.rmac_cells == 26);

  const SimplicialComplex point(1, {{1}});
  const CellComplex cc1 = build_cc(point);
  CHECK(cc1.cell_count(0) == 2);
  CHECK(cc1.cell_count(1) == 1);
  CHECK(cc1.label(cc1.cells(0)[0]) == "|1");
  ReflectionAudit r1 = reflection_audit(point);
  CHECK(r1.bijective);
  CHECK(r1.rmac_cells == 3);
  CHECK(homology(build_rmac(point)) == std::vector<FGAbelianGroup>{Z, FGAbelianGroup()});

  for (int n = 3; n <= 7; ++n) {
    ReflectionAudit r = reflection_audit(polygon_boundary(n));
    CHECK(r.bijective);
    CHECK(r.preimage_of_top == static_cast<std::size_t>(n * pow2(n - 2)));
    CHECK(homology(build_cc(polygon_boundary(n))).front() == Z);
  }
}
