#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "rmac/errors.hpp"
#include "rmac/simplicial.hpp"

using namespace rmac;

namespace {

SimplicialComplex fig1_graph() { return SimplicialComplex(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}}); }

SimplicialComplex octahedron() {
  std::vector<Face> faces;
  for (int a : {1, 4})
    for (int b : {2, 5})
      for (int c : {3, 6}) {
        Face f{a, b, c};
        std::sort(f.begin(), f.end());
        faces.push_back(f);
      }
  return SimplicialComplex(6, faces);
}

// Brute force over all m! permutations.
std::size_t automorphism_count_oracle(const SimplicialComplex& k) {
  std::set<Face> maximal(k.maximal_faces().begin(), k.maximal_faces().end());
  std::vector<int> p(static_cast<std::size_t>(k.vertex_count()));
  std::iota(p.begin(), p.end(), 1);
  std::size_t count = 0;
  do {
    std::set<Face> image;
    for (const Face& f : maximal) {
      Face g;
      for (int v : f) g.push_back(p[static_cast<std::size_t>(v - 1)]);
      std::sort(g.begin(), g.end());
      image.insert(g);
    }
    if (image == maximal) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

SimplicialComplex random_complex(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> size(1, 3);
  std::uniform_int_distribution<int> vertex(1, m);
  std::vector<Face> faces;
  for (int v = 1; v <= m; ++v) faces.push_back({v});
  const int count = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int i = 0; i < count; ++i) {
    std::set<int> s;
    const int want = size(rng);
    while (static_cast<int>(s.size()) < want) s.insert(vertex(rng));
    Face f(s.begin(), s.end());
    if (std::find(faces.begin(), faces.end(), f) == faces.end()) faces.push_back(f);
  }
  return SimplicialComplex(m, faces);
}

}  // namespace

TEST_CASE("constructors") {
  CHECK(polygon_boundary(3).maximal_faces() == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(polygon_boundary(4).maximal_faces() == std::vector<Face>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  const SimplicialComplex k6 = polygon_boundary(6);
  CHECK(k6.vertex_count() == 6);
  CHECK(k6.maximal_faces().size() == 6);
  for (int v = 1; v <= 6; ++v) {
    int degree = 0;
    for (const Face& f : k6.maximal_faces()) degree += std::count(f.begin(), f.end(), v);
    CHECK(degree == 2);
  }
  CHECK_THROWS_AS(polygon_boundary(2), InvalidArgument);

  CHECK(discrete_complex(3).maximal_faces() == std::vector<Face>{{1}, {2}, {3}});
  CHECK(discrete_complex(1).maximal_faces() == std::vector<Face>{{1}});
  CHECK(discrete_complex(4).maximal_faces().size() == 4);
  CHECK_THROWS_AS(discrete_complex(0), InvalidArgument);

  CHECK_THROWS_AS(SimplicialComplex(3, {{1, 4}}), InvalidArgument);
  CHECK_THROWS_AS(SimplicialComplex(3, {{2, 1}, {3}}), InvalidArgument);
  CHECK_THROWS_AS(SimplicialComplex(3, {{1, 2}}), InvalidArgument);
  CHECK(SimplicialComplex(3, {{1, 2}, {1}, {3}}).maximal_faces() == std::vector<Face>{{1, 2}, {3}});
}

TEST_CASE("full subcomplexes of the hexagon") {
  const SimplicialComplex k6 = polygon_boundary(6);
  FullSubcomplex a = full_subcomplex(k6, {1, 3, 5});
  CHECK(a.complex.maximal_faces() == std::vector<Face>{{1}, {2}, {3}});
  CHECK(a.vertices == std::vector<int>{1, 3, 5});

  FullSubcomplex b = full_subcomplex(k6, {1, 2, 4, 5});
  CHECK(b.complex.maximal_faces() == std::vector<Face>{{1, 2}, {3, 4}});
  std::vector<FGAbelianGroup> hb = simplicial_homology(b.complex);
  CHECK(hb[0] == FGAbelianGroup::free(2));
  CHECK(hb[1] == FGAbelianGroup());

  CHECK(full_subcomplex(k6, {1, 4}).complex.maximal_faces() == std::vector<Face>{{1}, {2}});
  CHECK_THROWS_AS(full_subcomplex(k6, {1, 7}), InvalidArgument);

  for (const SimplicialComplex& k : {k6, fig1_graph(), octahedron()}) {
    std::vector<int> all(static_cast<std::size_t>(k.vertex_count()));
    std::iota(all.begin(), all.end(), 1);
    CHECK(full_subcomplex(k, all).complex.maximal_faces() == k.maximal_faces());
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(polygon_boundary(6)).size() == 12);
  CHECK(automorphism_group(discrete_complex(3)).size() == 6);
  std::vector<VertexPermutation> fig1 = automorphism_group(fig1_graph());
  REQUIRE(fig1.size() == 2);
  CHECK(fig1[0] == VertexPermutation::identity(4));
  CHECK(fig1[1] == VertexPermutation({2, 1, 3, 4}));

  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    std::vector<VertexPermutation> g = automorphism_group(polygon_boundary(n));
    CHECK(g.size() == static_cast<std::size_t>(2 * n));
    CHECK(g.size() == automorphism_count_oracle(polygon_boundary(n)));
    std::set<VertexPermutation> set(g.begin(), g.end());
    for (const VertexPermutation& a : g) {
      CHECK(set.count(a.inverse()) == 1);
      for (const VertexPermutation& b : g) CHECK(set.count(a.compose(b)) == 1);
    }
    CHECK(set.count(VertexPermutation::rotation(n)) == 1);
  }
  CHECK(automorphism_group(octahedron()).size() == automorphism_count_oracle(octahedron()));
  CHECK_THROWS_AS(automorphism_group(discrete_complex(11)), ResourceLimit);
  CHECK_NOTHROW(automorphism_group(discrete_complex(5), 5));
}

TEST_CASE("vertex permutations") {
  VertexPermutation r = VertexPermutation::rotation(5);
  CHECK(r(5) == 1);
  CHECK(r.order() == 5);
  CHECK(r.compose(r.inverse()) == VertexPermutation::identity(5));
  CHECK(r.apply({4, 5}) == Face{1, 5});
  CHECK(VertexPermutation({2, 1, 3, 5, 4}).order() == 2);
  CHECK_THROWS_AS(VertexPermutation({1, 1, 2}), InvalidArgument);
}

TEST_CASE("barycentric subdivision") {
  BarycentricSubdivision edge = barycentric_subdivision(SimplicialComplex(2, {{1, 2}}));
  CHECK(edge.complex.vertex_count() == 3);
  CHECK(edge.complex.maximal_faces().size() == 2);

  BarycentricSubdivision tri = barycentric_subdivision(polygon_boundary(3));
  CHECK(tri.complex.vertex_count() == 6);
  CHECK(tri.complex.maximal_faces().size() == 6);
  CHECK(homology_sphere_report(tri.complex, 2).polygon_criterion == std::optional<bool>(true));

  CHECK(barycentric_subdivision(discrete_complex(2)).complex == discrete_complex(2));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const SimplicialComplex k = random_complex(rng, 3 + trial % 6);
    BarycentricSubdivision sd = barycentric_subdivision(k);
    std::size_t faces = 0;
    for (const auto& layer : k.faces_by_dimension()) faces += layer.size();
    CHECK(static_cast<std::size_t>(sd.complex.vertex_count()) == faces);
    CHECK(simplicial_homology(sd.complex) == simplicial_homology(k));
  }
  CHECK(simplicial_homology(barycentric_subdivision(octahedron()).complex) == simplicial_homology(octahedron()));
}

TEST_CASE("simplicial homology and sphere reports") {
  std::vector<FGAbelianGroup> point = simplicial_homology(discrete_complex(1));
  CHECK(point == std::vector<FGAbelianGroup>{FGAbelianGroup::free(1)});

  SphereReport hex = homology_sphere_report(polygon_boundary(6), 2);
  CHECK(hex.matches_sphere);
  CHECK(hex.homology == std::vector<FGAbelianGroup>{FGAbelianGroup::free(1), FGAbelianGroup::free(1)});
  CHECK(hex.polygon_criterion == std::optional<bool>(true));

  SphereReport fig1 = homology_sphere_report(fig1_graph(), 2);
  CHECK_FALSE(fig1.matches_sphere);
  CHECK(fig1.homology_matches);
  CHECK_FALSE(fig1.links_are_spheres);
  CHECK(fig1.polygon_criterion == std::optional<bool>(false));

  SphereReport octa = homology_sphere_report(octahedron(), 3);
  CHECK(octa.matches_sphere);
  CHECK(octa.homology ==
        std::vector<FGAbelianGroup>{FGAbelianGroup::free(1), FGAbelianGroup(), FGAbelianGroup::free(1)});
  CHECK_FALSE(octa.polygon_criterion.has_value());

  CHECK_FALSE(homology_sphere_report(octahedron(), 2).matches_sphere);
  CHECK_FALSE(homology_sphere_report(discrete_complex(3), 1).matches_sphere);
  CHECK(homology_sphere_report(discrete_complex(2), 1).matches_sphere);
}

TEST_CASE("links") {
  CHECK(link(polygon_boundary(5), {1}).maximal_faces() == std::vector<Face>{{1}, {2}});
  CHECK(link(polygon_boundary(5), {1, 2}).vertex_count() == 0);
  CHECK(link(octahedron(), {1}).maximal_faces().size() == 4);
}
