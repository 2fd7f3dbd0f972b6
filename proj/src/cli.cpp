#include "skewforms/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "skewforms/catalog.hpp"
#include "skewforms/json_io.hpp"
#include "skewforms/linsys.hpp"
#include "skewforms/planes.hpp"
#include "skewforms/scroll.hpp"
#include "skewforms/stability.hpp"

namespace skewforms {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string input;
  std::string builtin_name;
  std::vector<std::uint32_t> primes{5, 7, 11};
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool json = false;
};

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_primes(const std::vector<std::uint32_t>& primes) {
  if (primes.empty()) throw UsageError("--primes needs at least one prime");
  for (auto p : primes)
    if (!is_prime(p) || p < 3 || p > 65521) throw UsageError("--primes: " + std::to_string(p) + " is not an odd prime below 2^16");
}

void add_common(CLI::App* cmd, Common& c, bool with_source) {
  if (with_source) {
    auto* in = cmd->add_option("--input", c.input, "JSON file with a form or a system");
    auto* bi = cmd->add_option("--builtin", c.builtin_name, "name of a built-in system");
    in->excludes(bi);
  }
  cmd->add_option("--primes", c.primes, "comma-separated primes")->delimiter(',');
  cmd->add_option("--seed", c.seed, "seed for randomized sampling");
  cmd->add_option("--jobs", c.jobs, "worker cap")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", c.json, "emit JSON");
}

Json load_source(const Common& c) {
  if (!c.builtin_name.empty()) return system_to_json(builtin(c.builtin_name).system);
  if (c.input.empty()) throw UsageError("one of --input or --builtin is required");
  return read_json_file(c.input);
}

LinearSystem load_system(const Common& c) {
  Json j = load_source(c);
  if (j.is_object() && j.contains("terms")) return LinearSystem({form_from_json(j)});
  return system_from_json(j);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_rank(const Common& c, std::ostream& out) {
  LinearSystem a = load_system(c);
  GenericRankReport r = generic_rank(a, c.seed);
  if (c.json) {
    print_json(out, Json{{"generic_rank", r.rank}, {"pfaffian_vanishes", r.pfaffian_vanishes}, {"samples", r.samples}});
  } else {
    out << "generic rank " << r.rank << ", Pf-cubic " << (r.pfaffian_vanishes ? "≡ 0" : "≢ 0") << "\n";
  }
  return kExitOk;
}

int cmd_pfaffian(const Common& c, std::ostream& out) {
  Json j = load_source(c);
  if (j.is_object() && j.contains("terms")) {
    Rational pf = pfaffian(form_from_json(j));
    if (c.json) print_json(out, Json{{"pfaffian", pf.str()}});
    else out << "Pf = " << pf << "\n";
    return kExitOk;
  }
  std::string cubic = to_string(pfaffian_cubic(system_from_json(j)));
  if (c.json) print_json(out, Json{{"pfaffian_cubic", cubic}});
  else out << "Pf = " << cubic << "\n";
  return kExitOk;
}

int cmd_gr(const Common& c, std::ostream& out) {
  GrIntersectionReport r = gr_intersection(load_system(c), c.primes, c.jobs);
  if (c.json) {
    print_json(out, gr_report_to_json(r));
  } else {
    out << "p,count,type\n";
    for (const auto& [p, n] : r.counts) out << p << "," << n << "," << r.type << "\n";
  }
  return kExitOk;
}

int cmd_stability(const Common& c, bool assume_pi_g, std::ostream& out) {
  StabilityOptions o;
  o.primes = c.primes;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.assume_pi_g = assume_pi_g;
  StabilityVerdict v = decide_stability(load_system(c), o);
  if (c.json) {
    print_json(out, verdict_to_json(v));
    return kExitOk;
  }
  out << to_string(v.tag) << "\n";
  out << "exact path: " << (v.exact_path ? "yes" : "no") << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    out << "witness: s=" << w.s << ", " << to_string(w.severity) << ", dim U=" << w.u.dim()
        << ", dim U'=" << w.u_prime.dim() << "\n";
  }
  for (const auto& e : v.evidence) out << "evidence: " << e << "\n";
  return kExitOk;
}

int cmd_classify(const Common& c, std::ostream& out) {
  LinearSystem b = load_system(c);
  OrbitLabel label = classify_cr4_plane(b, c.primes, c.jobs);
  Json j{{"label", to_string(label)}};
  if (label == OrbitLabel::general) {
    try {
      j["cdf"] = cdf_to_json(recover_cdf(b));
      j["normalizer"] = matrix_to_json(normalize_general_plane(b).matrix());
    } catch (const std::exception& e) {
      j["note"] = std::string("no rational normalizer: ") + e.what();
    }
  }
  if (c.json) print_json(out, j);
  else out << to_string(label) << "\n";
  return kExitOk;
}

struct ScrollArgs {
  std::string plane;
  std::string member;
  bool quadric_dim = false;
  std::vector<std::uint32_t> count_primes;
};

int cmd_scroll(const Common& c, const ScrollArgs& s, std::ostream& out) {
  Common src = c;
  if (!s.plane.empty()) src.input = s.plane;
  ScrollDatum z = make_scroll(load_system(src));
  Json j = Json::object();
  if (s.quadric_dim) j["quadric_dim"] = restricted_quadric_system_dim(z);
  if (!s.member.empty()) {
    AlternatingForm w = form_from_json(read_json_file(s.member));
    Json m{{"rank", form_rank(w)}, {"in_scroll", z_membership(z, w)}, {"in_plane", z.base.contains(w)}};
    if (z.base.contains(w) && !w.is_zero()) {
      Json fiber = Json::array();
      for (auto [t0, t1] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{1, -1}})
        fiber.push_back(Json{{"t", {t0, t1}}, {"form", form_to_json(psi(z, w, t0, t1))}});
      m["fiber"] = fiber;
    }
    j["member"] = m;
  }
  if (!s.count_primes.empty()) {
    Json counts = Json::array();
    for (auto p : s.count_primes)
      counts.push_back(Json{{"p", p},
                            {"scroll_points", scroll_image_count(z, p, c.jobs)},
                            {"lambda_rank2_points", lambda_grassmannian_count(z, p, c.jobs)}});
    j["counts"] = counts;
  }
  if (j.empty()) throw UsageError("scroll needs --member, --quadric-dim or --count");
  if (c.json) {
    print_json(out, j);
    return kExitOk;
  }
  if (j.contains("quadric_dim")) out << "quadric system dimension: " << j["quadric_dim"].get<int>() << "\n";
  if (j.contains("member")) {
    const Json& m = j["member"];
    out << "member rank " << m["rank"].get<int>() << ", in scroll: " << (m["in_scroll"].get<bool>() ? "yes" : "no")
        << ", in plane: " << (m["in_plane"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (j.contains("counts")) {
    out << "p,scroll_points,lambda_rank2_points\n";
    for (const auto& r : j["counts"])
      out << r["p"].get<std::uint32_t>() << "," << r["scroll_points"].get<std::uint64_t>() << ","
          << r["lambda_rank2_points"].get<std::uint64_t>() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& theorem, int samples, std::ostream& out) {
  std::vector<std::string> names;
  if (theorem == "all") names = theorem_names();
  else names = {theorem};
  VerifyOptions o;
  o.primes = c.primes;
  o.jobs = c.jobs;
  o.seed = c.seed;
  o.pattern_samples = samples;
  bool ok = true;
  Json reports = Json::array();
  for (const auto& n : names) {
    TheoremReport r = verify_theorem(n, o);
    ok = ok && r.pass();
    reports.push_back(theorem_report_to_json(r));
    if (!c.json)
      for (const auto& cl : r.claims)
        out << (cl.pass ? "PASS" : "FAIL") << " | " << r.name << " | " << cl.claim << " | " << cl.detail << "\n";
  }
  if (c.json) print_json(out, Json{{"pass", ok}, {"reports", reports}});
  else out << (ok ? "all claims pass" : "some claims FAIL") << "\n";
  return ok ? kExitOk : kExitFailed;
}

int cmd_orbit_sample(const Common& c, int count, std::ostream& out) {
  LinearSystem a = load_system(c);
  std::mt19937_64 rng(c.seed);
  Json samples = Json::array();
  for (int k = 0; k < count; ++k) {
    GroupElement g = random_conjugator(rng);
    samples.push_back(Json{{"g", matrix_to_json(g.matrix())}, {"system", system_to_json(a.transformed(g))}});
  }
  if (count == 1 && !c.json) print_json(out, samples[0]["system"]);
  else print_json(out, Json{{"samples", samples}});
  return kExitOk;
}

int cmd_builtin(const std::string& name, std::ostream& out) {
  if (name.empty()) {
    for (const auto& n : builtin_names()) out << n << "\n";
    return kExitOk;
  }
  print_json(out, system_to_json(builtin(name).system));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for linear systems of skew-symmetric forms on a 6-dimensional space"};
  app.require_subcommand(1);
  Common c;

  auto* rank = app.add_subcommand("rank", "generic rank and Pfaffian cubic vanishing");
  add_common(rank, c, true);
  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a form or Pfaffian cubic of a system");
  add_common(pf, c, true);
  auto* gr = app.add_subcommand("gr-intersect", "rank-2 point counts and intersection type");
  add_common(gr, c, true);
  bool assume_pi_g = false;
  auto* st = app.add_subcommand("stability", "stability verdict with witness and evidence");
  add_common(st, c, true);
  st->add_flag("--assume-pi-g", assume_pi_g, "require the first generators to be the normal form plane");
  auto* cl = app.add_subcommand("classify-plane", "orbit label of a constant-rank-4 plane");
  add_common(cl, c, true);
  ScrollArgs sa;
  auto* sc = app.add_subcommand("scroll", "scroll attached to a general-type plane");
  add_common(sc, c, true);
  sc->add_option("--plane", sa.plane, "JSON file with the plane");
  sc->add_option("--member", sa.member, "JSON file with a form to test");
  sc->add_flag("--quadric-dim", sa.quadric_dim, "dimension of the restricted quadric system");
  sc->add_option("--count", sa.count_primes, "primes for exhaustive point counts")->delimiter(',');
  std::string theorem = "all";
  int samples = 100;
  auto* ve = app.add_subcommand("verify", "check theorem claims");
  add_common(ve, c, false);
  std::vector<std::string> choices = theorem_names();
  choices.insert(choices.begin(), "all");
  ve->add_option("--theorem", theorem, "theorem name or all")->check(CLI::IsMember(choices));
  ve->add_option("--samples", samples, "random systems per pattern")->check(CLI::PositiveNumber);
  int count = 1;
  auto* os = app.add_subcommand("orbit-sample", "random conjugates of a system");
  add_common(os, c, true);
  os->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
  std::string name;
  auto* bi = app.add_subcommand("builtin", "list built-in systems or print one as JSON");
  bi->add_option("name", name, "built-in name");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sc && !sa.plane.empty() && (!c.input.empty() || !c.builtin_name.empty()))
      throw UsageError("use --plane or --input/--builtin, not both");
    check_primes(c.primes);
    for (auto p : sa.count_primes) check_primes({p});
    if (*rank) return cmd_rank(c, out);
    if (*pf) return cmd_pfaffian(c, out);
    if (*gr) return cmd_gr(c, out);
    if (*st) return cmd_stability(c, assume_pi_g, out);
    if (*cl) return cmd_classify(c, out);
    if (*sc) return cmd_scroll(c, sa, out);
    if (*ve) return cmd_verify(c, theorem, samples, out);
    if (*os) return cmd_orbit_sample(c, count, out);
    if (*bi) return cmd_builtin(name, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const JsonFormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownName& e) {
    err << "unknown name: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DependentGenerators& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace skewforms
