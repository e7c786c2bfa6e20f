#include "dwf/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace dwf {

namespace {

Json rat_vec(const RatVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_frac_string(q));
  return out;
}

RatVec rat_vec_from(const Json& j) {
  RatVec out;
  for (const auto& e : j) {
    if (e.is_string()) out.push_back(parse_frac(e.get<std::string>()));
    else out.push_back(Rational(e.get<long long>()));
  }
  return out;
}

}  // namespace

Json field_to_json(const Field& f) {
  return Json{{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

Json striations_to_json(const StriationSet& s, const PropertyReport& rep) {
  Json striations = Json::array();
  for (const auto& st : s.striations()) {
    Json lines = Json::array();
    for (const auto& line : st.lines) {
      Json pts = Json::array();
      for (const auto& pt : line.points)
        pts.push_back({s.field().index(pt.q), s.field().index(pt.p)});
      lines.push_back(std::move(pts));
    }
    striations.push_back(std::move(lines));
  }
  return Json{{"schema_version", 1},
              {"d", s.d()},
              {"field", field_to_json(s.field())},
              {"striations", std::move(striations)},
              {"properties",
               {{"pair_unique_line", rep.pair_unique_line},
                {"parallel_exists_unique", rep.parallel_exists_unique},
                {"nonparallel_single_intersection", rep.nonparallel_single_intersection},
                {"counterexample", rep.counterexample}}}};
}

namespace {

Json complex_matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json mub_to_json(const MubSet& m, bool include_matrices) {
  Json j{{"schema_version", 1},
         {"d", m.d()},
         {"max_unbiased_deviation", m.check_unbiased()},
         {"max_orthonormal_deviation", m.check_orthonormal()},
         {"max_completeness_deviation", m.check_completeness()},
         {"stabilizers", m.stabilizer_check()}};
  if (include_matrices) {
    Json bases = Json::array();
    for (const auto& b : m.bases()) bases.push_back(complex_matrix_to_json(b.vectors));
    j["bases"] = std::move(bases);
  }
  return j;
}

CMatrix density_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("state: expected a d x d array");
  const int d = static_cast<int>(j.size());
  CMatrix m(d, d);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(j[r].size()) != d)
      throw std::invalid_argument("state: ragged matrix");
    for (int c = 0; c < d; ++c) {
      const auto& e = j[r][c];
      if (e.is_array() && e.size() == 2)
        m(r, c) = Cx(e[0].get<double>(), e[1].get<double>());
      else if (e.is_number())
        m(r, c) = Cx(e.get<double>(), 0);
      else
        throw std::invalid_argument("state: entries must be [re, im] or numeric");
    }
  }
  return m;
}

Json density_to_json(const CMatrix& m) { return complex_matrix_to_json(m); }

Json pmatrix_to_json(const PMatrix& p) {
  Json j{{"d", p.d}, {"exact", p.exact}};
  if (p.exact) {
    Json rows = Json::array();
    for (const auto& row : p.rows_exact) rows.push_back(rat_vec(row));
    j["rows"] = std::move(rows);
  } else {
    j["rows"] = p.rows;
  }
  return j;
}

PMatrix pmatrix_from_json(const Json& j) {
  const Json& rows = j.contains("rows") ? j.at("rows") : j;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("p table: expected rows");
  bool exact = false;
  for (const auto& row : rows)
    for (const auto& e : row)
      if (e.is_string()) exact = true;
  if (exact) {
    std::vector<RatVec> out;
    for (const auto& row : rows) out.push_back(rat_vec_from(row));
    return PMatrix::from_exact(std::move(out));
  }
  std::vector<std::vector<double>> out;
  for (const auto& row : rows) out.push_back(row.get<std::vector<double>>());
  return PMatrix::from_float(std::move(out));
}

Json wigner_table_to_json(const WignerTable& w) {
  Json j{{"d", w.d},
         {"w", w.w},
         {"negativity", {{"min_entry", w.min_entry()}, {"negative_sum", w.negative_sum()}}},
         {"sum", w.sum()}};
  if (w.exact) {
    Json rows = Json::array();
    for (const auto& row : w.w_exact) rows.push_back(rat_vec(row));
    j["w_exact"] = std::move(rows);
  }
  return j;
}

Json hpolytope_to_json(const HPolytope& h) {
  Json ineqs = Json::array();
  for (const auto& iq : h.inequalities) ineqs.push_back({{"a", rat_vec(iq.a)}, {"b", to_frac_string(iq.b)}});
  Json eqs = Json::array();
  for (const auto& eq : h.equalities) eqs.push_back({{"e", rat_vec(eq.e)}, {"f", to_frac_string(eq.f)}});
  return Json{{"schema_version", 1}, {"dim", h.dim}, {"inequalities", std::move(ineqs)}, {"equalities", std::move(eqs)}};
}

HPolytope hpolytope_from_json(const Json& j) {
  HPolytope h;
  h.dim = j.at("dim").get<int>();
  for (const auto& iq : j.value("inequalities", Json::array()))
    h.inequalities.push_back({rat_vec_from(iq.at("a")), parse_frac(iq.at("b").is_string() ? iq.at("b").get<std::string>() : iq.at("b").dump())});
  for (const auto& eq : j.value("equalities", Json::array()))
    h.equalities.push_back({rat_vec_from(eq.at("e")), parse_frac(eq.at("f").is_string() ? eq.at("f").get<std::string>() : eq.at("f").dump())});
  return h;
}

Json vpolytope_to_json(const VPolytope& v) {
  Json verts = Json::array();
  for (const auto& vert : v.vertices) verts.push_back(rat_vec(vert));
  return Json{{"schema_version", 1}, {"dim", v.dim}, {"vertices", std::move(verts)}};
}

VPolytope vpolytope_from_json(const Json& j) {
  RatMatrix pts;
  for (const auto& row : j.at("vertices")) pts.push_back(rat_vec_from(row));
  return VPolytope::from_points(j.at("dim").get<int>(), std::move(pts));
}

Json conjecture_report_to_json(const ConjectureReport& rep) {
  Json j{{"schema_version", 1},
         {"d", rep.d},
         {"backend", rep.backend == CdBackend::dd ? "dd" : "pivot"},
         {"bounded", rep.bounded},
         {"equal", rep.equal},
         {"inequality_count", rep.inequality_count},
         {"enumerated_vertex_count", rep.enumerated_count},
         {"conjectured_vertex_count", rep.conjectured_count},
         {"vertex_tight_counts", rep.vertex_tight_counts},
         {"max_intermediate_rays", rep.max_intermediate_rays},
         {"runtimes_ms",
          {{"bounded_check", rep.bounded_ms},
           {"enumeration", rep.enumeration_ms},
           {"compare", rep.compare_ms}}}};
  Json verts = Json::array(), missing = Json::array(), extra = Json::array();
  for (const auto& v : rep.vertices) verts.push_back(rat_vec(v));
  for (const auto& v : rep.missing) missing.push_back(rat_vec(v));
  for (const auto& v : rep.extra) extra.push_back(rat_vec(v));
  j["vertices"] = std::move(verts);
  j["missing_vertices"] = std::move(missing);
  j["extra_vertices"] = std::move(extra);
  return j;
}

Json membership_to_json(const MembershipCertificate& cert) {
  Json j{{"schema_version", 1},
         {"verdict", cert.verdict == CdVerdict::in ? "IN" : "OUT"},
         {"rationalization_error", cert.rationalization_error}};
  if (cert.verdict == CdVerdict::out) {
    Json tuple = Json::array();
    for (int t : cert.violated_tuple) tuple.push_back(t + 1);  // 1-based labels
    j["violated_tuple"] = std::move(tuple);
    j["tuple_value"] = to_frac_string(cert.tuple_value);
    j["violation"] = to_frac_string(cert.violation);
    j["violation_float"] = to_double(cert.violation);
  } else {
    Json weights = Json::array();
    for (const auto& [label, w] : cert.weights)
      weights.push_back({{"basis", label.first + 1}, {"vector", label.second + 1},
                         {"weight", to_frac_string(w)}});
    j["weights"] = std::move(weights);
    j["from_conjectured_hull"] = cert.from_conjectured_hull;
  }
  return j;
}

Json definition_to_json(const WignerDefinition& defn) {
  Json sp = Json::array();
  for (int v : defn.striation_perm) sp.push_back(v + 1);
  Json lps = Json::array();
  for (const auto& lp : defn.line_perms) {
    Json one = Json::array();
    for (int v : lp) one.push_back(v + 1);
    lps.push_back(std::move(one));
  }
  return Json{{"striation_perm", std::move(sp)}, {"line_perms", std::move(lps)}};
}

Json classes_to_json(const std::vector<DefinitionClass>& classes) {
  Json out = Json::array();
  for (const auto& cls : classes) {
    Json system = Json::array();
    for (const auto& r : cls.system) {
      Json a = Json::array();
      for (const auto& v : r.a) a.push_back(v.str());
      system.push_back({{"a", std::move(a)}, {"b", r.b.str()}});
    }
    Json verts = Json::array();
    for (const auto& v : cls.vertices) verts.push_back(rat_vec(v));
    out.push_back({{"system", std::move(system)},
                   {"vertices", std::move(verts)},
                   {"definition_count", cls.definition_indices.size()},
                   {"definition_indices", cls.definition_indices}});
  }
  return Json{{"schema_version", 1}, {"classes", std::move(out)}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out.good()) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace dwf
