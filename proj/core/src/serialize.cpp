#include "toric_cobordism/serialize.hpp"

#include <limits>

namespace tcob {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json rational_vector(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

RationalVector rational_vector_from(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) {
    if (!x.is_string()) throw FormatError("rationals are encoded as \"p/q\" strings");
    try {
      v.push_back(parse_rational(x.get<std::string>()));
    } catch (const std::exception& e) {
      throw FormatError(e.what());
    }
  }
  return v;
}

Json integer(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw FormatError("expected an integer");
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

Json to_json(const SimplePolytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json facets = Json::array();
  for (std::size_t f = 0; f < p.facet_count(); ++f) facets.push_back({{"id", f}, {"tag", p.facet_tag(f)}});
  j["facets"] = facets;
  Json verts = Json::array();
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    Json vj;
    vj["facets"] = facets_of(p.vertex_facets(v));
    if (p.has_coordinates()) vj["coords"] = rational_vector(p.coordinates()[v]);
    verts.push_back(vj);
  }
  j["vertices"] = verts;
  if (p.has_coordinates() && p.dim() > 0) {
    Json frame = Json::array();
    for (const auto& v : p.frame()) frame.push_back(rational_vector(v));
    j["frame"] = frame;
  }
  return j;
}

SimplePolytope polytope_from_json(const Json& j) {
  const auto dim = get<std::size_t>(j, "dim");
  const Json& facets = field(j, "facets");
  if (!facets.is_array()) throw FormatError("'facets' must be an array");
  std::vector<std::string> tags(facets.size());
  std::vector<bool> seen(facets.size(), false);
  for (const auto& f : facets) {
    const auto id = get<std::size_t>(f, "id");
    if (id >= tags.size() || seen[id]) throw FormatError("facet ids must be 0..count-1 without repeats");
    seen[id] = true;
    tags[id] = get<std::string>(f, "tag");
  }
  const Json& verts = field(j, "vertices");
  if (!verts.is_array()) throw FormatError("'vertices' must be an array");
  std::vector<FacetMask> masks;
  std::vector<RationalVector> coords;
  bool has_coords = true;
  for (const auto& v : verts) {
    FacetMask m = 0;
    for (auto f : get<std::vector<std::size_t>>(v, "facets")) {
      if (f >= tags.size()) throw FormatError("vertex references unknown facet " + std::to_string(f));
      m |= facet_bit(f);
    }
    masks.push_back(m);
    if (v.contains("coords"))
      coords.push_back(rational_vector_from(v.at("coords")));
    else
      has_coords = false;
  }
  SimplePolytope p;
  try {
    p = SimplePolytope(dim, std::move(tags), std::move(masks));
  } catch (const PolytopeError& e) {
    throw FormatError(e.what());
  }
  if (has_coords && !coords.empty()) {
    p.set_coordinates(std::move(coords));
    if (j.contains("frame")) {
      std::vector<RationalVector> frame;
      for (const auto& v : j.at("frame")) frame.push_back(rational_vector_from(v));
      try {
        p.set_frame(std::move(frame));
      } catch (const DimensionError& e) {
        throw FormatError(e.what());
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------------------

Json to_json(const CharacteristicPair& pair) {
  Json j;
  j["polytope"] = to_json(pair.polytope);
  j["ring"] = to_string(pair.chi.ring());
  j["rank"] = pair.chi.rank();
  j["group_sign"] = pair.group_sign;
  Json vectors = Json::object();
  Json free = Json::array();
  for (std::size_t f = 0; f < pair.chi.facet_count(); ++f) {
    if (pair.chi.is_assigned(f)) vectors[std::to_string(f)] = pair.chi.vector(f);
    if (pair.chi.is_free(f)) free.push_back(f);
  }
  j["vectors"] = vectors;
  j["free"] = free;
  return j;
}

CharacteristicPair pair_from_json(const Json& j) {
  CharacteristicPair pair;
  pair.polytope = polytope_from_json(field(j, "polytope"));
  Ring ring;
  try {
    ring = parse_ring(get<std::string>(j, "ring"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const Json& vectors = field(j, "vectors");
  if (!vectors.is_object()) throw FormatError("'vectors' must map facet ids to integer lists");
  std::size_t rank = 0;
  if (j.contains("rank"))
    rank = get<std::size_t>(j, "rank");
  else if (!vectors.empty())
    rank = vectors.begin()->size();
  pair.chi = CharacteristicFunction(ring, rank, pair.polytope.facet_count());
  for (const auto& [key, value] : vectors.items()) {
    std::size_t f;
    try {
      std::size_t pos = 0;
      f = std::stoul(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw FormatError("facet key '" + key + "' is not an id");
    }
    if (f >= pair.polytope.facet_count()) throw FormatError("vector for unknown facet " + key);
    try {
      pair.chi.assign(f, value.get<IntVector>());
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("vector for facet " + key + ": " + e.what());
    } catch (const DimensionError& e) {
      throw FormatError(e.what());
    }
  }
  if (j.contains("free"))
    for (auto f : get<std::vector<std::size_t>>(j, "free")) {
      if (f >= pair.polytope.facet_count()) throw FormatError("unknown free facet");
      if (pair.chi.is_assigned(f)) throw FormatError("facet " + std::to_string(f) + " is both free and assigned");
      pair.chi.set_free(f);
    }
  try {
    pair.chi.require_complete();
  } catch (const CharacteristicError& e) {
    throw FormatError(e.what());
  }
  pair.group_sign = j.contains("group_sign") ? get<int>(j, "group_sign") : 1;
  if (pair.group_sign != 1 && pair.group_sign != -1) throw FormatError("group_sign must be 1 or -1");
  return pair;
}

// ---------------------------------------------------------------------------

Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer(m(r, c)));
    j.push_back(row);
  }
  return j;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from(j[r][c]);
  }
  return m;
}

Json to_json(const DeltaTranslation& t) { return {{"phi", t.phi}, {"delta", to_json(t.delta)}}; }

DeltaTranslation translation_from_json(const Json& j) {
  return DeltaTranslation{get<std::vector<std::size_t>>(j, "phi"), matrix_from_json(field(j, "delta"))};
}

Json to_json(const ValidityReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"vertex", f.vertex}, {"facets", f.facets}, {"reason", f.reason}});
  return {{"valid", r.valid}, {"vertices_checked", r.vertices_checked}, {"failures", failures}};
}

Json to_json(const HomologyTable& h) {
  Json j = Json::array();
  for (const auto& g : h) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer(t));
    j.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}});
  }
  return j;
}

HomologyTable homology_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("homology table must be an array");
  HomologyTable h;
  for (const auto& g : j) {
    HomologyGroup x;
    x.degree = get<std::size_t>(g, "degree");
    x.betti = get<std::size_t>(g, "betti");
    for (const auto& t : field(g, "torsion")) x.torsion.push_back(integer_from(t));
    h.push_back(std::move(x));
  }
  return h;
}

Json to_json(const LinearFunctional& l) {
  return {{"coefficients", l.coefficients}, {"seed", l.seed}, {"kind", l.kind}};
}

Json to_json(const IndexProfile& p, const SimplePolytope& polytope) {
  const auto edges = polytope.edges();
  Json sets = Json::object();
  for (std::size_t j = 1; j < p.I.size(); ++j) {
    Json pairs = Json::array();
    for (const auto& x : p.I[j]) {
      const auto& e = edges[x.edge];
      pairs.push_back({{"vertex", x.vertex}, {"edge", {e.a, e.b}}});
    }
    sets[std::to_string(j)] = pairs;
  }
  std::size_t old_edges = 0;
  for (bool b : p.edge_old) old_edges += b;
  return {{"index", p.index},
          {"index_counts", p.index_counts},
          {"I", sets},
          {"I_sizes", p.sizes()},
          {"old_edges", old_edges},
          {"edges", edges.size()}};
}

// ---------------------------------------------------------------------------

Json to_json(const FamilyDescriptor& fam) {
  Json j;
  j["k"] = fam.k;
  j["n"] = fam.n;
  j["ring"] = to_string(fam.ring);
  j["r1"] = to_string(fam.r1);
  j["r2"] = to_string(fam.r2);
  j["pair"] = to_json(fam.full);
  j["cut_facets"] = {{"P1", fam.cut_facets[0]}, {"P2", fam.cut_facets[1]}, {"P3", fam.cut_facets[2]}};
  j["boundary"] = {{"P1", to_json(fam.boundary[0])}, {"P2", to_json(fam.boundary[1])},
                   {"P3", to_json(fam.boundary[2])}};
  j["rho"] = fam.rho;
  j["phi_permutation"] = fam.phi_permutation;
  j["phi"] = fam.phi;
  j["h"] = to_json(fam.h);
  j["f"] = to_json(fam.f);
  j["hs"] = to_json(fam.hs);
  return j;
}

FamilyDescriptor family_from_json(const Json& j) {
  FamilyDescriptor fam;
  fam.k = get<std::size_t>(j, "k");
  fam.n = get<std::size_t>(j, "n");
  if (fam.n != 2 * fam.k) throw FormatError("n must equal 2k");
  try {
    fam.ring = parse_ring(get<std::string>(j, "ring"));
    fam.r1 = parse_rational(get<std::string>(j, "r1"));
    fam.r2 = parse_rational(get<std::string>(j, "r2"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  fam.full = pair_from_json(field(j, "pair"));
  const Json& cuts = field(j, "cut_facets");
  fam.cut_facets = {get<std::size_t>(cuts, "P1"), get<std::size_t>(cuts, "P2"), get<std::size_t>(cuts, "P3")};
  const Json& b = field(j, "boundary");
  fam.boundary = {pair_from_json(field(b, "P1")), pair_from_json(field(b, "P2")), pair_from_json(field(b, "P3"))};
  fam.rho = get<std::vector<std::size_t>>(j, "rho");
  fam.phi_permutation = get<std::vector<std::size_t>>(j, "phi_permutation");
  fam.phi = get<std::vector<std::size_t>>(j, "phi");
  fam.h = matrix_from_json(field(j, "h"));
  fam.f = matrix_from_json(field(j, "f"));
  fam.hs = matrix_from_json(field(j, "hs"));
  return fam;
}

}  // namespace tcob
