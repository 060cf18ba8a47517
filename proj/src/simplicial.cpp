#include "rmac/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rmac/chain.hpp"
#include "rmac/errors.hpp"

namespace rmac {
namespace {

bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string face_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> faces) : m_(vertex_count) {
  if (m_ < 0) throw InvalidArgument("negative vertex count");
  std::sort(faces.begin(), faces.end());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face& f = faces[i];
    if (f.empty()) throw InvalidArgument("empty face listed");
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] < 1 || f[j] > m_) throw InvalidArgument("vertex out of range in face " + face_string(f));
      if (j > 0 && f[j] <= f[j - 1]) throw InvalidArgument("face not strictly increasing: " + face_string(f));
    }
    if (i > 0 && faces[i - 1] == f) throw InvalidArgument("duplicate face " + face_string(f));
  }
  for (const Face& f : faces) {
    bool dominated = std::any_of(faces.begin(), faces.end(),
                                 [&](const Face& g) { return g.size() > f.size() && is_subset(f, g); });
    if (!dominated) maximal_.push_back(f);
  }
  std::vector<char> seen(static_cast<std::size_t>(m_) + 1, 0);
  for (const Face& f : maximal_)
    for (int v : f) seen[static_cast<std::size_t>(v)] = 1;
  for (int v = 1; v <= m_; ++v)
    if (!seen[static_cast<std::size_t>(v)]) throw InvalidArgument("vertex " + std::to_string(v) + " lies in no face");
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const Face& f : maximal_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::contains(const Face& f) const {
  if (f.empty()) return true;
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& g) { return is_subset(f, g); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::set<Face>> by_dim(static_cast<std::size_t>(dimension() + 1));
  for (const Face& f : maximal_) {
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) sub.push_back(f[i]);
      by_dim[sub.size() - 1].insert(std::move(sub));
    }
  }
  std::vector<std::vector<Face>> out;
  for (auto& s : by_dim) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int k) const {
  if (k < 0 || k > dimension()) return {};
  return faces_by_dimension()[static_cast<std::size_t>(k)];
}

SimplicialComplex polygon_boundary(int n) {
  if (n < 3) throw InvalidArgument("polygon needs n >= 3, got " + std::to_string(n));
  std::vector<Face> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return SimplicialComplex(n, std::move(edges));
}

SimplicialComplex discrete_complex(int n) {
  if (n < 1) throw InvalidArgument("discrete complex needs n >= 1");
  std::vector<Face> points;
  for (int i = 1; i <= n; ++i) points.push_back({i});
  return SimplicialComplex(n, std::move(points));
}

FullSubcomplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("repeated vertex in subset");
  }
  for (int v : sorted)
    if (v < 1 || v > k.vertex_count()) throw InvalidArgument("subset vertex out of range: " + std::to_string(v));
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[sorted[i]] = static_cast<int>(i) + 1;
  std::set<Face> faces;
  for (const Face& f : k.maximal_faces()) {
    Face g;
    for (int v : f)
      if (auto it = relabel.find(v); it != relabel.end()) g.push_back(it->second);
    if (!g.empty()) faces.insert(std::move(g));
  }
  return {SimplicialComplex(static_cast<int>(sorted.size()), {faces.begin(), faces.end()}), sorted};
}

SimplicialComplex link(const SimplicialComplex& k, const Face& face) {
  if (face.empty() || !k.contains(face)) throw InvalidArgument("link of a non-face " + face_string(face));
  std::set<Face> faces;
  for (const Face& f : k.maximal_faces()) {
    if (!is_subset(face, f)) continue;
    Face rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(), std::back_inserter(rest));
    if (!rest.empty()) faces.insert(std::move(rest));
  }
  std::set<int> verts;
  for (const Face& f : faces) verts.insert(f.begin(), f.end());
  std::map<int, int> relabel;
  for (int v : verts) relabel.emplace(v, static_cast<int>(relabel.size()) + 1);
  std::vector<Face> out;
  for (const Face& f : faces) {
    Face g;
    for (int v : f) g.push_back(relabel[v]);
    out.push_back(std::move(g));
  }
  return SimplicialComplex(static_cast<int>(verts.size()), std::move(out));
}

VertexPermutation::VertexPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || hit[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
}

VertexPermutation VertexPermutation::identity(int m) {
  std::vector<int> im(static_cast<std::size_t>(m));
  std::iota(im.begin(), im.end(), 1);
  return VertexPermutation(std::move(im));
}

VertexPermutation VertexPermutation::rotation(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return VertexPermutation(std::move(im));
}

Face VertexPermutation::apply(const Face& f) const {
  Face g;
  for (int v : f) g.push_back((*this)(v));
  std::sort(g.begin(), g.end());
  return g;
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
  if (size() != other.size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> im;
  for (int v : other.images_) im.push_back((*this)(v));
  return VertexPermutation(std::move(im));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return VertexPermutation(std::move(im));
}

int VertexPermutation::order() const {
  int ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    if (len) ord = std::lcm(ord, len);
  }
  return ord;
}

std::string VertexPermutation::to_cycle_string() const {
  std::string s;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i) + 1) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = 1;
      s += (j == i ? "" : " ") + std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::vector<VertexPermutation> automorphism_group(const SimplicialComplex& k, int perm_cap) {
  const int m = k.vertex_count();
  if (m > perm_cap) {
    throw ResourceLimit("automorphism search over " + std::to_string(m) + " vertices exceeds the cap of " +
                        std::to_string(perm_cap));
  }
  const std::set<Face> maximal(k.maximal_faces().begin(), k.maximal_faces().end());
  // faces checkable once their largest vertex has an image
  std::vector<std::vector<const Face*>> closing(static_cast<std::size_t>(m) + 1);
  for (const Face& f : k.maximal_faces()) closing[static_cast<std::size_t>(f.back())].push_back(&f);

  std::vector<int> image(static_cast<std::size_t>(m) + 1, 0);
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  std::vector<VertexPermutation> out;
  std::function<void(int)> extend = [&](int v) {
    if (v > m) {
      out.emplace_back(std::vector<int>(image.begin() + 1, image.end()));
      return;
    }
    for (int w = 1; w <= m; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      image[static_cast<std::size_t>(v)] = w;
      bool ok = true;
      for (const Face* f : closing[static_cast<std::size_t>(v)]) {
        Face g;
        for (int x : *f) g.push_back(image[static_cast<std::size_t>(x)]);
        std::sort(g.begin(), g.end());
        if (!maximal.count(g)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(w)] = 1;
      extend(v + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  extend(1);
  return out;
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k) {
  BarycentricSubdivision out;
  for (auto& layer : k.faces_by_dimension())
    for (auto& f : layer) out.vertex_faces.push_back(f);
  std::map<Face, int> index;
  for (std::size_t i = 0; i < out.vertex_faces.size(); ++i) index[out.vertex_faces[i]] = static_cast<int>(i) + 1;
  std::vector<Face> chains;
  for (const Face& f : k.maximal_faces()) {
    Face order = f;
    do {
      Face chain, prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(index.at(prefix));
      }
      std::sort(chain.begin(), chain.end());
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  out.complex = SimplicialComplex(static_cast<int>(out.vertex_faces.size()), std::move(chains));
  return out;
}

std::vector<FGAbelianGroup> simplicial_homology(const SimplicialComplex& k) {
  const auto faces = k.faces_by_dimension();
  const int dim = k.dimension();
  std::vector<SparseMatrix> boundary(static_cast<std::size_t>(dim + 2));
  boundary[0] = SparseMatrix(0, faces.empty() ? 0 : faces[0].size());
  for (int d = 1; d <= dim; ++d) {
    const auto& lower = faces[static_cast<std::size_t>(d - 1)];
    const auto& upper = faces[static_cast<std::size_t>(d)];
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    SparseMatrix b(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j)
      for (std::size_t i = 0; i < upper[j].size(); ++i) {
        Face f = upper[j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        b.add(index.at(f), j, Integer(i % 2 ? -1 : 1));
      }
    boundary[static_cast<std::size_t>(d)] = std::move(b);
  }
  if (dim >= 0) boundary[static_cast<std::size_t>(dim + 1)] = SparseMatrix(faces.back().size(), 0);
  std::vector<FGAbelianGroup> h;
  for (int d = 0; d <= dim; ++d)
    h.push_back(chain_homology(boundary[static_cast<std::size_t>(d)], boundary[static_cast<std::size_t>(d + 1)]));
  return h;
}

namespace {

bool has_sphere_homology(const std::vector<FGAbelianGroup>& h, int d) {
  if (d < 0) return h.empty();
  if (static_cast<int>(h.size()) <= d) return false;
  for (int i = 0; i < static_cast<int>(h.size()); ++i) {
    std::size_t rank = 0;
    if (i == 0) rank += 1;
    if (i == d) rank += 1;
    if (h[static_cast<std::size_t>(i)] != FGAbelianGroup::free(rank)) return false;
  }
  return true;
}

}  // namespace

SphereReport homology_sphere_report(const SimplicialComplex& k, int n) {
  if (n < 1) throw InvalidArgument("sphere dimension n - 1 needs n >= 1");
  SphereReport r;
  r.n = n;
  r.homology = simplicial_homology(k);
  r.is_connected = !r.homology.empty() && r.homology[0].rank() == 1;
  r.homology_matches = has_sphere_homology(r.homology, n - 1);
  r.links_are_spheres = true;
  for (const auto& layer : k.faces_by_dimension()) {
    for (const Face& f : layer) {
      int link_dim = n - 1 - static_cast<int>(f.size());
      if (!has_sphere_homology(simplicial_homology(link(k, f)), link_dim)) {
        r.links_are_spheres = false;
        break;
      }
    }
    if (!r.links_are_spheres) break;
  }
  r.matches_sphere = r.homology_matches && r.links_are_spheres;
  if (n == 2) {
    bool ok = r.is_connected && k.dimension() <= 1 && k.vertex_count() >= 3;
    std::vector<int> degree(static_cast<std::size_t>(k.vertex_count()) + 1, 0);
    for (const Face& f : k.maximal_faces())
      if (f.size() == 2)
        for (int v : f) degree[static_cast<std::size_t>(v)]++;
    for (int v = 1; v <= k.vertex_count(); ++v) ok = ok && degree[static_cast<std::size_t>(v)] == 2;
    r.polygon_criterion = ok;
  }
  return r;
}

}  // namespace rmac
