#include "rmac/json_io.hpp"

#include <set>

#include "rmac/errors.hpp"

namespace rmac {
namespace {

Json::number_integer_t checked_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<Json::number_integer_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer::from_string(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json to_json(const FGAbelianGroup& g) {
  Json factors = Json::array();
  for (const Integer& d : g.invariant_factors()) factors.push_back(integer_to_json(d));
  return Json{{"rank", g.rank()}, {"invariant_factors", factors}};
}

FGAbelianGroup group_from_json(const Json& j) {
  const auto rank = checked_int(field(j, "rank"), "rank");
  if (rank < 0) throw InvalidArgument("rank must be non-negative");
  const Json& factors = field(j, "invariant_factors");
  if (!factors.is_array()) throw InvalidArgument("invariant_factors must be an array");
  std::vector<Integer> orders;
  for (const Json& f : factors) orders.push_back(integer_from_json(f));
  FGAbelianGroup g(static_cast<std::size_t>(rank), orders);
  if (g.invariant_factors() != orders) throw InvalidArgument("invariant factors are not a canonical divisibility chain");
  return g;
}

Json to_json(const SimplicialComplex& k) {
  Json faces = Json::array();
  for (const Face& f : k.maximal_faces()) faces.push_back(f);
  return Json{{"vertices", k.vertex_count()}, {"maximal_faces", faces}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const auto m = checked_int(field(j, "vertices"), "vertices");
  if (m < 0 || m > 1000) throw InvalidArgument("vertex count out of range");
  const Json& faces = field(j, "maximal_faces");
  if (!faces.is_array()) throw InvalidArgument("maximal_faces must be an array");
  std::vector<Face> out;
  std::set<Face> seen;
  for (const Json& f : faces) {
    if (!f.is_array() || f.empty()) throw InvalidArgument("each face must be a non-empty array");
    Face face;
    for (const Json& v : f) {
      const auto x = checked_int(v, "vertex");
      if (x < 1 || x > m) throw InvalidArgument("vertex " + std::to_string(x) + " out of range 1.." + std::to_string(m));
      if (!face.empty() && x <= face.back()) throw InvalidArgument("face " + f.dump() + " is not strictly increasing");
      face.push_back(static_cast<int>(x));
    }
    if (!seen.insert(face).second) throw InvalidArgument("duplicate face " + f.dump());
    out.push_back(std::move(face));
  }
  return SimplicialComplex(static_cast<int>(m), std::move(out));
}

Json dump_json(const CellComplex& c) {
  Json cells = Json::array();
  for (int k = 0; k <= c.dimension(); ++k) {
    Json layer = Json::array();
    for (const Cell& cell : c.cells(k)) layer.push_back(c.label(cell));
    cells.push_back(layer);
  }
  Json boundaries = Json::array();
  for (int k = 1; k <= c.dimension(); ++k) {
    const SparseMatrix& b = c.boundary(k);
    Json entries = Json::array();
    for (std::size_t col = 0; col < b.cols(); ++col)
      for (const auto& e : b.column(col)) entries.push_back(Json::array({e.row, col, integer_to_json(e.value)}));
    boundaries.push_back(Json{{"k", k}, {"rows", b.rows()}, {"cols", b.cols()}, {"entries", entries}});
  }
  return Json{{"ambient", c.ambient_dimension()},
              {"model", c.model() == CubeModel::real_moment_angle ? "rmac" : "cc"},
              {"cells", cells},
              {"boundaries", boundaries}};
}

Json to_json(const E2Page& page) {
  Json entries = Json::object();
  for (const auto& [pq, g] : page.entries())
    entries[std::to_string(pq.first) + "," + std::to_string(pq.second)] = to_json(g);
  return Json{{"n", page.n()}, {"max_p", page.max_p()}, {"entries", entries}};
}

E2Page e2_page_from_json(const Json& j) {
  const auto n = checked_int(field(j, "n"), "n");
  const auto max_p = checked_int(field(j, "max_p"), "max_p");
  const Json& entries = field(j, "entries");
  if (!entries.is_object()) throw InvalidArgument("entries must be an object");
  std::map<std::pair<int, int>, FGAbelianGroup> out;
  for (const auto& [key, value] : entries.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw InvalidArgument("entry key must be \"p,q\", got " + key);
    int p = 0, q = 0;
    try {
      p = std::stoi(key.substr(0, comma));
      q = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("entry key must be \"p,q\", got " + key);
    }
    out[{p, q}] = group_from_json(value);
  }
  return E2Page(static_cast<int>(n), static_cast<int>(max_p), std::move(out));
}

Json to_json(const GenusReport& r) {
  Json branch = Json::array();
  for (const FixedPointClass& c : r.branch_terms) {
    branch.push_back(Json{{"period", c.period},
                          {"vertices", integer_to_json(c.vertex_count)},
                          {"orbits", integer_to_json(c.orbit_count)},
                          {"stabilizer_order", c.stabilizer_order}});
  }
  return Json{{"n", r.n},
              {"genus", integer_to_json(r.genus_total)},
              {"quotient_genus", integer_to_json(r.genus_quotient)},
              {"euler", integer_to_json(r.euler_total)},
              {"quotient_euler", integer_to_json(r.euler_quotient)},
              {"branch_terms", branch},
              {"branch_sum", integer_to_json(r.branch_sum)},
              {"checked_against_complex", r.checked_against_complex}};
}

Json to_json(const CyclicHomology& h) {
  return Json{{"zero", to_json(h.h0)}, {"odd", to_json(h.h_odd)}, {"even", to_json(h.h_even)}};
}

Json to_json(const H1Decomposition& dec) {
  Json summands = Json::array();
  for (const Summand& s : dec.summands) {
    const WordClass& w = s.word_class;
    Json item{{"word", w.word.bits()}, {"d", w.d}, {"iota", w.iota}, {"face", w.face}};
    if (s.kind == SummandKind::regular) {
      item["kind"] = "regular";
      item["copies"] = s.copies;
    } else {
      item["kind"] = "induced";
      item["stabilizer_order"] = s.stabilizer_order();
    }
    item["rank"] = s.rank();
    summands.push_back(std::move(item));
  }
  return Json{{"n", dec.n}, {"summary", module_summary(dec)}, {"total_rank", dec.total_rank}, {"summands", summands}};
}

}  // namespace rmac
