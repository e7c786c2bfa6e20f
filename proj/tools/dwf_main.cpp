// dwf command-line interface.
//
// Subcommands: striations, mub, eval, cd, classify, plotdata, polytope.
// Exit codes: 0 success/verified, 1 verification failed, 2 invalid input,
// 3 resource limit exceeded.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "dwf/cd.hpp"
#include "dwf/json_io.hpp"

using namespace dwf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;

void emit(const Json& j, const std::string& out_path, bool to_stdout) {
  if (!out_path.empty()) write_json_file(out_path, j);
  if (to_stdout || out_path.empty()) std::cout << j.dump(2) << "\n";
}

int cmd_striations(int d, const std::string& out, bool json_stdout) {
  StriationSet s = StriationSet::build(Field::of_order(d));
  PropertyReport rep = s.verify_properties();
  emit(striations_to_json(s, rep), out, json_stdout);
  return rep.all() ? kExitOk : kExitVerifyFailed;
}

int cmd_mub(int d, bool check_only, const std::string& out, bool json_stdout) {
  MubSet m = MubSet::build(d);
  emit(mub_to_json(m, !check_only), out, json_stdout);
  bool ok = m.check_unbiased() <= 1e-10 && m.check_orthonormal() <= 1e-10;
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_eval(const std::string& state_path, const std::string& definition,
             const std::string& out, bool json_stdout) {
  Json sj = load_json_file(state_path);
  DensityMatrix rho = DensityMatrix::validated(density_from_json(sj));
  const int d = rho.d;
  StriationSet s = StriationSet::build(Field::of_order(d));
  MubSet m = MubSet::build(d);
  PMatrix p = p_matrix_from_state(rho, m);

  WignerDefinition defn = WignerDefinition::canonical(d);
  Json extra;
  if (definition == "worst") {
    double worst = 2;
    for (DefinitionEnumerator en(d, 100000); !en.done(); en.advance()) {
      WignerTable w = wigner_from_p(p, en.current(), s);
      if (w.min_entry() < worst) {
        worst = w.min_entry();
        defn = en.current();
      }
    }
  } else if (definition != "canonical") {
    std::int64_t index = std::stoll(definition);
    std::int64_t k = 0;
    DefinitionEnumerator en(d, 1000000);
    for (; !en.done() && k < index; en.advance(), ++k) {}
    if (en.done()) throw std::invalid_argument("definition index out of range");
    defn = en.current();
  }
  WignerTable w = wigner_from_p(p, defn, s);
  Json j{{"schema_version", 1},
         {"d", d},
         {"definition", definition_to_json(defn)},
         {"p", pmatrix_to_json(p)},
         {"wigner", wigner_table_to_json(w)},
         {"line_sum_deviation", line_sum_check(w, defn, s, p)}};
  emit(j, out, json_stdout);
  return kExitOk;
}

int cmd_cd(int d, bool verify, const std::string& backend_name, const std::string& state_path,
           const std::string& mode, double tol, long long max_den,
           const std::string& checkpoint, int checkpoint_every, std::size_t max_rays, int threads,
           const std::string& out, bool json_stdout, bool verbose) {
  Json j{{"schema_version", 1}, {"d", d}};
  int code = kExitOk;
  if (verify) {
    VerifyOptions opts;
    opts.backend = backend_name == "pivot" ? CdBackend::pivot : CdBackend::dd;
    opts.checkpoint_path = checkpoint;
    opts.checkpoint_every = checkpoint_every > 0 ? checkpoint_every : 1000;
    opts.max_rays = max_rays;
    if (verbose) {
      opts.progress = [](std::size_t done, std::size_t total, std::size_t rays) {
        if (done % 1000 == 0)
          std::cerr << "  [" << done << "/" << total << "] rays=" << rays << "\n";
      };
    }
    ConjectureReport rep = verify_conjecture(d, opts);
    j["verify"] = conjecture_report_to_json(rep);
    EasyDirectionReport easy = easy_direction_check(d, threads);
    j["easy_direction"] = {{"ok", easy.ok},
                           {"tight_counts", easy.tight_counts},
                           {"tight_ranks", easy.tight_ranks}};
    if (!rep.equal || !easy.ok) code = kExitVerifyFailed;
  }
  if (!state_path.empty()) {
    Json sj = load_json_file(state_path);
    PMatrix p = [&] {
      // a (d+1) x d table is a p-matrix; a d x d array is a density matrix
      if (sj.is_object() && sj.contains("rows")) return pmatrix_from_json(sj);
      if (sj.is_array() && sj.size() > 0 && sj.size() == sj[0].size() + 1)
        return pmatrix_from_json(sj);
      DensityMatrix rho = DensityMatrix::validated(density_from_json(sj));
      return p_matrix_from_state(rho, MubSet::build(rho.d));
    }();
    if (p.d != d) throw std::invalid_argument("state dimension does not match --d");
    CdMembershipOptions mopts;
    mopts.exact = mode == "exact" ? true : (mode == "float" ? false : p.exact);
    mopts.tol = tol;
    mopts.max_denominator = Int(max_den);
    j["membership"] = membership_to_json(cd_membership(p, mopts));
  }
  emit(j, out, json_stdout);
  return code;
}

int cmd_classify(int d, const std::string& out, bool json_stdout) {
  if (d != 2) {
    std::cerr << "classification is defined for d = 2 only\n";
    return kExitInvalidInput;
  }
  auto classes = classify_qubit_definitions(StriationSet::build(Field::of_order(2)));
  emit(classes_to_json(classes), out, json_stdout);
  return classes.size() == 2 ? kExitOk : kExitVerifyFailed;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream f(path);
  if (!f.good()) throw std::runtime_error("cannot write " + path);
  f << header << "\n";
  f.precision(17);
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
    f << "\n";
  }
}

// edges = vertex pairs whose common tight facets span dim-1 directions
std::vector<std::pair<int, int>> polytope_edges(const VPolytope& v, const HPolytope& facets) {
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < v.vertices.size(); ++a) {
    for (size_t b = a + 1; b < v.vertices.size(); ++b) {
      RatMatrix common;
      for (const auto& iq : facets.inequalities) {
        if (rdot(iq.a, v.vertices[a]) == iq.b && rdot(iq.a, v.vertices[b]) == iq.b)
          common.push_back(iq.a);
      }
      if (!common.empty() && rank(common) == v.dim - 1)
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return edges;
}

int cmd_plotdata(int d, const std::string& prefix, int samples, std::uint64_t seed) {
  if (d != 2) {
    std::cerr << "plot data is defined for d = 2 only\n";
    return kExitInvalidInput;
  }
  auto emit_solid = [&](const std::string& name, const RatMatrix& pts) {
    VPolytope v = VPolytope::from_points(3, pts);
    HPolytope facets = facet_enumeration(v);
    std::vector<std::vector<double>> vrows;
    for (const auto& p : v.vertices)
      vrows.push_back({to_double(p[0]), to_double(p[1]), to_double(p[2])});
    write_csv(prefix + name + "_vertices.csv", "p11,p21,p31", vrows);
    std::vector<std::vector<double>> erows;
    for (auto [a, b] : polytope_edges(v, facets))
      erows.push_back({static_cast<double>(a), static_cast<double>(b)});
    write_csv(prefix + name + "_edges.csv", "vertex_a,vertex_b", erows);
  };
  auto r = [](int num, int den) { return Rational(num, den); };
  emit_solid("t1", {{r(0, 1), r(0, 1), r(1, 1)},
                    {r(0, 1), r(1, 1), r(0, 1)},
                    {r(1, 1), r(0, 1), r(0, 1)},
                    {r(1, 1), r(1, 1), r(1, 1)}});
  emit_solid("t2", {{r(1, 1), r(1, 1), r(0, 1)},
                    {r(1, 1), r(0, 1), r(1, 1)},
                    {r(0, 1), r(1, 1), r(1, 1)},
                    {r(0, 1), r(0, 1), r(0, 1)}});
  emit_solid("octahedron", conjectured_vertices(2).vertices);

  // quantum states: the radius-1/2 sphere about (1/2,1/2,1/2)
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0, 1);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < samples; ++i) {
    double x = gauss(gen), y = gauss(gen), z = gauss(gen);
    double norm = std::sqrt(x * x + y * y + z * z);
    if (norm == 0) { --i; continue; }
    std::vector<double> pp = {0.5 + 0.5 * x / norm, 0.5 + 0.5 * y / norm, 0.5 + 0.5 * z / norm};
    double r2 = 0;
    for (double v : pp) r2 += (v - 0.5) * (v - 0.5);
    if (std::abs(r2 - 0.25) > 1e-12)
      throw std::runtime_error("sphere sample off the Bloch radius");
    rows.push_back(std::move(pp));
  }
  write_csv(prefix + "sphere_samples.csv", "p11,p21,p31", rows);
  return kExitOk;
}

int cmd_polytope(const std::string& from_h, const std::string& from_v, bool want_vertices,
                 bool want_facets, const std::string& out, bool json_stdout) {
  if (!from_h.empty() && want_vertices) {
    HPolytope h = hpolytope_from_json(load_json_file(from_h));
    auto res = vertex_enumeration(h);
    Json j = vpolytope_to_json(res.poly);
    j["feasible"] = res.feasible;
    emit(j, out, json_stdout);
    return kExitOk;
  }
  if (!from_v.empty() && want_facets) {
    VPolytope v = vpolytope_from_json(load_json_file(from_v));
    emit(hpolytope_to_json(facet_enumeration(v)), out, json_stdout);
    return kExitOk;
  }
  std::cerr << "use --from-h FILE --vertices or --from-v FILE --facets\n";
  return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Wigner functions on finite phase space and the MUB polytope C_d"};
  app.require_subcommand(1);

  int d = 2;
  std::string out, state_path, definition = "canonical", backend = "dd";
  std::string mode = "auto", checkpoint, from_h, from_v, prefix = "plot_";
  bool json_stdout = false, check_only = false, verify = false, verbose = false;
  bool want_vertices = false, want_facets = false;
  double tol = 1e-9;
  long long max_den = 1000000000LL;
  int checkpoint_every = 0, threads = 1, samples = 200;
  std::size_t max_rays = 0;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub, bool with_d = true) {
    if (with_d) sub->add_option("--d", d, "Hilbert-space dimension");
    sub->add_option("--out", out, "write JSON/CSV output to this path");
    sub->add_flag("--json", json_stdout, "print JSON to stdout");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--threads", threads, "worker threads for parallel scans");
    sub->add_option("--tol", tol, "float-mode tolerance");
  };

  auto* striations = app.add_subcommand("striations", "build striations and verify properties");
  add_common(striations);

  auto* mub = app.add_subcommand("mub", "build MUBs, report deviations and stabilizers");
  add_common(mub);
  mub->add_flag("--check-only", check_only, "omit the basis matrices from the output");

  auto* eval = app.add_subcommand("eval", "Wigner table of a density matrix");
  add_common(eval, false);
  eval->add_option("--state", state_path, "density matrix JSON (d x d of [re, im])")->required();
  eval->add_option("--definition", definition, "canonical | worst | <enumeration index>");

  auto* cd = app.add_subcommand("cd", "C_d verification and membership");
  add_common(cd);
  cd->add_flag("--verify", verify, "run the vertex-enumeration verification");
  cd->add_option("--backend", backend, "dd | pivot")->check(CLI::IsMember({"dd", "pivot"}));
  cd->add_option("--state", state_path, "p-table or density-matrix JSON for membership");
  cd->add_option("--mode", mode, "membership arithmetic: exact | float | auto")
      ->check(CLI::IsMember({"exact", "float", "auto"}));
  cd->add_option("--max-denominator", max_den, "float-mode rationalization bound");
  cd->add_option("--checkpoint", checkpoint, "enumeration checkpoint file");
  cd->add_option("--checkpoint-every", checkpoint_every, "insertions between checkpoints");
  cd->add_option("--max-rays", max_rays, "abort when the intermediate ray count exceeds this");
  cd->add_flag("--verbose", verbose, "progress to stderr");

  auto* classify = app.add_subcommand("classify", "group the 48 qubit definitions");
  add_common(classify);

  auto* plotdata = app.add_subcommand("plotdata", "CSV vertex/edge/sphere data for plots");
  add_common(plotdata);
  plotdata->add_option("--prefix", prefix, "output filename prefix");
  plotdata->add_option("--samples", samples, "sphere sample count");

  auto* polytope = app.add_subcommand("polytope", "H- to V-representation conversions");
  add_common(polytope, false);
  polytope->add_option("--from-h", from_h, "H-polytope JSON file");
  polytope->add_option("--from-v", from_v, "V-polytope JSON file");
  polytope->add_flag("--vertices", want_vertices, "enumerate vertices");
  polytope->add_flag("--facets", want_facets, "enumerate facets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (striations->parsed()) return cmd_striations(d, out, json_stdout);
    if (mub->parsed()) return cmd_mub(d, check_only, out, json_stdout);
    if (eval->parsed()) return cmd_eval(state_path, definition, out, json_stdout);
    if (cd->parsed())
      return cmd_cd(d, verify, backend, state_path, mode, tol, max_den, checkpoint,
                    checkpoint_every, max_rays, threads, out, json_stdout, verbose);
    if (classify->parsed()) return cmd_classify(d, out, json_stdout);
    if (plotdata->parsed()) return cmd_plotdata(d, prefix, samples, seed);
    if (polytope->parsed())
      return cmd_polytope(from_h, from_v, want_vertices, want_facets, out, json_stdout);
  } catch (const std::length_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitInvalidInput;
}
