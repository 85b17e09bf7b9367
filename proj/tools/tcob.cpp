// tcob: build, check and certify the truncated-simplex cobordisms.
// Exit codes: 0 verified, 1 a check failed, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toric_cobordism/certificate.hpp"

using namespace tcob;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Config {
  std::size_t k = 0;
  std::string ring = "z";
  std::string kind = "complex";
  std::string r1 = "1/6";
  std::string r2 = "1/4";
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool strict = true;
  bool oracle = false;
  std::string functional = "anchored";
  std::string input;
  std::string second;
  std::string output;
  std::string exclude;
  bool cut = false;
};

std::uint64_t effective_seed(const Config& c) {
  if (c.seed_given) return c.seed;
  if (const char* env = std::getenv("TORIC_COBORDISM_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("TORIC_COBORDISM_SEED is not an unsigned integer: ") + env);
  }
  return c.seed;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  const std::string text = dump(j);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

bool is_family(const Json& j) { return j.is_object() && j.contains("pair") && j.contains("boundary"); }

void print_failures(const std::string& label, const ValidityReport& r) {
  for (const auto& f : r.failures) {
    std::cerr << label << ": vertex " << f.vertex << " (";
    for (std::size_t i = 0; i < f.facets.size(); ++i) std::cerr << (i ? "," : "") << f.facets[i];
    std::cerr << "): " << f.reason << "\n";
  }
}

int cmd_construct(const Config& c) {
  const auto fam = build_family(c.k, parse_ring(c.ring), parse_rational(c.r1), parse_rational(c.r2));
  write_json(to_json(fam), c.output);
  return kOk;
}

int cmd_validate(const Config& c) {
  const Json j = read_json(c.input);
  Json out;
  bool ok = true;
  if (is_family(j)) {
    const auto fam = family_from_json(j);
    const auto full = validate(fam.full);
    print_failures("pair", full);
    out["pair"] = to_json(full);
    ok = full.valid;
    const char* names[3] = {"P1", "P2", "P3"};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto r = validate(fam.boundary[i]);
      print_failures(names[i], r);
      out["boundary"][names[i]] = to_json(r);
      ok = ok && r.valid;
    }
  } else {
    const auto pair = pair_from_json(j);
    const auto r = validate(pair);
    print_failures("pair", r);
    out["pair"] = to_json(r);
    ok = r.valid;
  }
  out["valid"] = ok;
  write_json(out, c.output);
  return ok ? kOk : kFailed;
}

LinearFunctional make_functional(const Config& c, const SimplePolytope& p) {
  const auto seed = effective_seed(c);
  if (c.functional == "anchored") return anchored_functional(p, seed);
  if (c.functional == "random") return random_functional(p, seed);
  throw std::invalid_argument("--functional must be anchored or random");
}

int cmd_homology(const Config& c) {
  const auto fam = family_from_json(read_json(c.input));
  const auto& q = fam.full.polytope;
  const auto l = make_functional(c, q);
  Json out;
  out["k"] = fam.k;
  out["ring"] = to_string(fam.ring);
  out["functional"] = to_json(l);
  if (fam.ring == Ring::Z) {
    if (c.oracle) throw std::invalid_argument("--oracle needs a GF(2) family; the torus side has no chain-level oracle");
    const auto profile = vertex_indices(q, l, cut_facet_mask(q), c.strict);
    out["index_profile"] = to_json(profile, q);
    out["W_rel_boundary"] = to_json(homology_W_rel_boundary(fam, l));
    write_json(out, c.output);
    return kOk;
  }

  const auto rc = reflection_count(fam.n);
  const auto euler = euler_cross_check(fam, l);
  out["d_n"] = rc.d_n;
  out["orientable_by_parity"] = fam.n % 4 == 2;
  out["euler"] = {{"complex", euler.complex_side}, {"index", euler.index_side}, {"agree", euler.agree}};
  bool ok = euler.agree;
  if (c.oracle) {
    if (fam.n > kOracleMaxN)
      throw std::invalid_argument("--oracle is limited to n <= " + std::to_string(kOracleMaxN));
    try {
      const auto v = is_orientable_space(fam);
      out["S_rel_boundary"] = to_json(*v.oracle);
      out["orientable"] = v.orientable;
      out["agree"] = true;
    } catch (const ChainComplexError& e) {
      std::cerr << "oracle disagreement: " << e.what() << "\n";
      out["agree"] = false;
      ok = false;
    }
  }
  write_json(out, c.output);
  return ok ? kOk : kFailed;
}

FacetMask parse_exclude(const std::string& list, const SimplePolytope& p) {
  FacetMask m = 0;
  std::stringstream ss(list);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    if (tag.empty()) continue;
    bool found = false;
    for (std::size_t f = 0; f < p.facet_count(); ++f)
      if (p.facet_tag(f) == tag) {
        m |= facet_bit(f);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown facet tag '" + tag + "'");
  }
  return m;
}

int cmd_oracle(const Config& c) {
  const Json j = read_json(c.input);
  CharacteristicPair pair = is_family(j) ? family_from_json(j).full : pair_from_json(j);
  if (pair.chi.ring() != Ring::GF2) throw std::invalid_argument("the oracle takes GF(2) pairs");
  FacetMask excluded = parse_exclude(c.exclude, pair.polytope);
  if (c.cut) excluded |= cut_facet_mask(pair.polytope);
  const auto qc = build_quotient_complex(pair, excluded);
  Json out;
  out["ring"] = to_string(parse_ring(c.ring));
  std::vector<std::size_t> counts;
  for (const auto& d : qc.cells) counts.push_back(d.size());
  out["cells"] = counts;
  try {
    const auto cc = chain_complex(qc, parse_ring(c.ring));
    const auto h = homology(cc);
    out["homology"] = to_json(h);
    out["euler"] = euler_characteristic(cc);
    out["boundary_squares_to_zero"] = true;
    write_json(out, c.output);
    return kOk;
  } catch (const ChainComplexError& e) {
    std::cerr << e.what() << "\n";
    out["boundary_squares_to_zero"] = false;
    write_json(out, c.output);
    return kFailed;
  }
}

int cmd_equiv(const Config& c) {
  const auto a = pair_from_json(read_json(c.input));
  const auto b = pair_from_json(read_json(c.second));
  if (a.chi.ring() != b.chi.ring()) throw std::invalid_argument("pairs have different rings");
  Json out;
  const auto t = find_delta_translation(a, b);
  out["equivalent"] = t.has_value();
  if (t) {
    out["translation"] = to_json(*t);
    out["orientation_effect"] =
        a.chi.ring() == Ring::Z ? orientation_effect(a, b, *t) : small_cover_orientation_effect(a, b, *t);
  }
  write_json(out, c.output);
  return t ? kOk : kFailed;
}

int cmd_certify(const Config& c) {
  CertificateOptions opt;
  opt.r1 = parse_rational(c.r1);
  opt.r2 = parse_rational(c.r2);
  opt.seed = effective_seed(c);
  const auto cert = glue_certificate(c.k, parse_kind(c.kind), opt);
  write_json(to_json(cert, opt), c.output);
  if (!cert.passed()) {
    for (const auto& name : cert.failed_checks()) std::cerr << "failed check: " << name << "\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented cobordisms of CP^{2k-1} and RP^{4l+1} from the truncated simplex"};
  app.require_subcommand(1);
  Config c;

  auto seed_opt = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "functional seed (default 0, or TORIC_COBORDISM_SEED)")
        ->each([&](const std::string&) { c.seed_given = true; });
  };
  auto rationals = [&](CLI::App* s) {
    s->add_option("--r1", c.r1, "cut depth at the vertex, as p/q");
    s->add_option("--r2", c.r2, "cut depth at the edges, as p/q");
  };

  auto* construct = app.add_subcommand("construct", "write the family descriptor");
  construct->add_option("--k", c.k, "n = 2k")->required();
  construct->add_option("--ring", c.ring, "z or z2");
  rationals(construct);
  construct->add_option("-o,--output", c.output);

  auto* validate_cmd = app.add_subcommand("validate", "check a pair or family at every vertex");
  validate_cmd->add_option("-i,--input", c.input)->required();
  validate_cmd->add_option("-o,--output", c.output);

  auto* homology_cmd = app.add_subcommand("homology", "relative homology of a family");
  homology_cmd->add_option("-i,--input", c.input)->required();
  homology_cmd->add_option("--functional", c.functional, "anchored or random");
  homology_cmd->add_flag("--oracle", c.oracle, "add the chain-level table (GF(2) family, n <= 6)");
  homology_cmd->add_flag("!--no-strict", c.strict, "allow a vertex to contribute several index pairs");
  seed_opt(homology_cmd);
  homology_cmd->add_option("-o,--output", c.output);

  auto* oracle_cmd = app.add_subcommand("oracle", "homology of the quotient complex of a GF(2) pair");
  oracle_cmd->add_option("-i,--input", c.input)->required();
  oracle_cmd->add_option("--exclude", c.exclude, "comma separated facet tags to delete");
  oracle_cmd->add_flag("--cut", c.cut, "delete the cut facets (relative to the boundary)");
  oracle_cmd->add_option("--ring", c.ring, "coefficients, z or z2");
  oracle_cmd->add_option("-o,--output", c.output);

  auto* equiv = app.add_subcommand("equiv", "search a delta-translation between two pairs");
  equiv->add_option("first", c.input)->required();
  equiv->add_option("second", c.second)->required();
  equiv->add_option("-o,--output", c.output);

  auto* certify = app.add_subcommand("certify", "end-to-end certificate");
  certify->add_option("--k", c.k)->required();
  certify->add_option("--kind", c.kind, "complex or real");
  rationals(certify);
  seed_opt(certify);
  certify->add_option("-o,--output", c.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*construct) return cmd_construct(c);
    if (*validate_cmd) return cmd_validate(c);
    if (*homology_cmd) return cmd_homology(c);
    if (*oracle_cmd) return cmd_oracle(c);
    if (*equiv) return cmd_equiv(c);
    if (*certify) return cmd_certify(c);
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFailed;
  }
  return kInvalid;
}
