#include "rmac/polygon.hpp"

#include "rmac/errors.hpp"
#include "rmac/words.hpp"

namespace rmac {
namespace {

void check_polygon(int n) {
  if (n < 3) throw InvalidArgument("polygon needs n >= 3, got " + std::to_string(n));
}

Integer two_pow(int e) { return Integer::pow(2, static_cast<unsigned>(e)); }

}  // namespace

Integer genus_closed_form(int n) {
  check_polygon(n);
  return Integer(1) + Integer(n - 4) * two_pow(n - 3);
}

Integer genus_by_recursion(int n) {
  check_polygon(n);
  Integer g(0);
  for (int m = 3; m < n; ++m) g = Integer(2) * g + two_pow(m - 2) - Integer(1);
  return g;
}

Integer quotient_genus(int n) {
  check_polygon(n);
  const Integer necklaces = necklace_count(static_cast<unsigned>(n));
  if (!divides(Integer(2), necklaces)) throw VerificationFailure("odd necklace count for n = " + std::to_string(n));
  return Integer(1) + two_pow(n - 3) - necklaces / Integer(2);
}

GenusReport riemann_hurwitz_audit(int n) {
  check_polygon(n);
  if (n > 12) throw InvalidArgument("Riemann-Hurwitz audit supports 3 <= n <= 12");
  GenusReport r;
  r.n = n;
  r.genus_total = genus_closed_form(n);
  r.euler_total = Integer(2) - Integer(2) * r.genus_total;
  r.branch_terms = fixed_point_census(n);
  for (const FixedPointClass& c : r.branch_terms) {
    if (c.orbit_count != moreau_count(static_cast<unsigned>(c.period))) {
      throw VerificationFailure("census orbit count " + c.orbit_count.to_string() + " for period " +
                                std::to_string(c.period) + " differs from the Moreau count " +
                                moreau_count(static_cast<unsigned>(c.period)).to_string());
    }
    r.branch_sum += c.orbit_count * Integer(n - c.period);
  }
  Integer scaled = r.euler_total + r.branch_sum;
  if (!divides(Integer(n), scaled)) throw VerificationFailure("χ(X) + branch sum not divisible by n");
  r.euler_quotient = scaled / Integer(n);
  Integer twice = Integer(2) - r.euler_quotient;
  if (!divides(Integer(2), twice)) throw VerificationFailure("odd quotient Euler characteristic");
  r.genus_quotient = twice / Integer(2);
  Integer formula = quotient_genus(n);
  if (r.genus_quotient != formula) {
    throw VerificationFailure("Riemann-Hurwitz quotient genus " + r.genus_quotient.to_string() +
                              " differs from the necklace formula " + formula.to_string());
  }
  if (n <= 8) {
    CellComplex c = build_rmac(polygon_boundary(n));
    SurfaceReport q = surface_report(quotient_complex(c, rotation_action(c, n)));
    if (!q.genus || Integer(static_cast<std::int64_t>(*q.genus)) != formula ||
        Integer(static_cast<std::int64_t>(q.euler)) != r.euler_quotient) {
      throw VerificationFailure("quotient complex genus " + (q.genus ? std::to_string(*q.genus) : "none") +
                                " differs from Riemann-Hurwitz genus " + formula.to_string());
    }
    r.checked_against_complex = true;
  }
  return r;
}

HypercubeReport hypercube_report(int n) {
  check_polygon(n);
  HypercubeReport r;
  r.n = n;
  r.vertices = two_pow(n);
  r.edges = Integer(n) * two_pow(n - 1);
  r.faces = Integer(n) * two_pow(n - 2);
  r.euler = r.vertices - r.edges + r.faces;
  r.genus_lower_bound = genus_closed_form(n);
  r.quotient_upper_bound = quotient_genus(n);
  require(r.euler == Integer(2) - Integer(2) * r.genus_lower_bound, "hypercube embedding is not 2-cell");
  require(Integer(2) * r.edges == Integer(4) * r.faces, "faces of the embedding are not all quadrilaterals");
  return r;
}

bool hypercube_inclusion_check(int n, std::size_t cell_cap) {
  check_polygon(n);
  CellComplex graph = build_rmac(discrete_complex(n), cell_cap);
  CellComplex surface = build_rmac(polygon_boundary(n), cell_cap);
  if (graph.dimension() != 1) return false;
  for (int k = 0; k <= 1; ++k)
    if (graph.cells(k) != surface.cells(k)) return false;
  return graph.boundary_matrix(1) == surface.boundary_matrix(1);
}

}  // namespace rmac
