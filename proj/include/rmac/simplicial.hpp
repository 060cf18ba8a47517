#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rmac/abelian_group.hpp"

namespace rmac {

// Strictly increasing 1-based vertex labels.
using Face = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Validates labels, drops non-maximal faces; every vertex of [m] must occur.
  SimplicialComplex(int vertex_count, std::vector<Face> faces);

  int vertex_count() const noexcept { return m_; }
  const std::vector<Face>& maximal_faces() const noexcept { return maximal_; }
  int dimension() const;
  bool contains(const Face& f) const;
  // Non-empty faces of dimension k, lexicographic.
  std::vector<Face> faces_of_dimension(int k) const;
  // Non-empty faces grouped by dimension 0..dimension().
  std::vector<std::vector<Face>> faces_by_dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int m_ = 0;
  std::vector<Face> maximal_;
};

SimplicialComplex polygon_boundary(int n);
SimplicialComplex discrete_complex(int n);

struct FullSubcomplex {
  SimplicialComplex complex;
  std::vector<int> vertices;  // vertices[i] is the original label of new vertex i + 1
};

// K_I = {tau ∩ I}, relabelled to 1..|I| in increasing order of I.
FullSubcomplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& subset);

// Link of a non-empty face, relabelled to consecutive vertices; may be empty.
SimplicialComplex link(const SimplicialComplex& k, const Face& face);

class VertexPermutation {
 public:
  // images[i - 1] is the image of vertex i.
  explicit VertexPermutation(std::vector<int> images);
  static VertexPermutation identity(int m);
  // i -> i + 1 mod n
  static VertexPermutation rotation(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }
  Face apply(const Face& f) const;
  // (this ∘ other)(v) = this(other(v))
  VertexPermutation compose(const VertexPermutation& other) const;
  VertexPermutation inverse() const;
  int order() const;
  std::string to_cycle_string() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<int> images_;
};

// All simplicial automorphisms, sorted by image list; identity first.
std::vector<VertexPermutation> automorphism_group(const SimplicialComplex& k, int perm_cap = 10);

// Vertices are the faces of K in (dimension, lexicographic) order.
struct BarycentricSubdivision {
  SimplicialComplex complex;
  std::vector<Face> vertex_faces;
};
BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k);

// H_0 .. H_dim of |K| (not reduced); empty for the empty complex.
std::vector<FGAbelianGroup> simplicial_homology(const SimplicialComplex& k);

struct SphereReport {
  int n = 0;
  bool is_connected = false;
  std::vector<FGAbelianGroup> homology;
  bool homology_matches = false;   // H_* equals that of S^{n-1}
  bool links_are_spheres = false;  // every face link has homology of the right sphere
  bool matches_sphere = false;     // both of the above
  std::optional<bool> polygon_criterion;  // n == 2 only
};

SphereReport homology_sphere_report(const SimplicialComplex& k, int n);

}  // namespace rmac
