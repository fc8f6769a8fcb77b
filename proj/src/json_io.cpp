#include "ckf/json_io.hpp"

#include <map>
#include <stdexcept>

#include "ckf/cartan.hpp"

namespace ckf::json_io {

namespace {

struct EmbeddedSchema {
  const char* file;
  const char* text;
};

const EmbeddedSchema kEmbedded[] = {
#include "ckf_schemas.inc"
};

const std::map<std::string, json, std::less<>>& schema_table() {
  static const auto table = [] {
    std::map<std::string, json, std::less<>> t;
    for (const auto& e : kEmbedded) {
      json s = json::parse(e.text);
      t.emplace(s.at("$id").get<std::string>(), std::move(s));
    }
    return t;
  }();
  return table;
}

bool has_type(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  return false;
}

void check_node(const json& root, const json& s, const json& v, const std::string& path, std::vector<std::string>& errs) {
  if (s.contains("$ref")) {
    const std::string ref = s["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) {
      errs.push_back(path + ": unsupported $ref " + ref);
      return;
    }
    check_node(root, root.at("definitions").at(ref.substr(prefix.size())), v, path, errs);
    return;
  }
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
    } else {
      ok = has_type(v, s["type"].get<std::string>());
    }
    if (!ok) {
      errs.push_back(path + ": expected " + s["type"].dump());
      return;
    }
  }
  if (s.contains("const") && v != s["const"]) errs.push_back(path + ": expected constant " + s["const"].dump());
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) errs.push_back(path + ": value " + v.dump() + " not in " + s["enum"].dump());
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
    errs.push_back(path + ": below minimum " + s["minimum"].dump());
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& key : s["required"])
        if (!v.contains(key.get<std::string>())) errs.push_back(path + ": missing key " + key.get<std::string>());
    if (s.contains("properties"))
      for (const auto& [key, sub] : s["properties"].items())
        if (v.contains(key)) check_node(root, sub, v[key], path + "/" + key, errs);
  }
  if (v.is_array() && s.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i) check_node(root, s["items"], v[i], path + "/" + std::to_string(i), errs);
}

json witness_to_json(const checker::Witness& w) {
  json j;
  j["name"] = w.name;
  j["d_H"] = w.d_H;
  j["d_Hprime"] = w.d_Hprime;
  j["branch"] = w.branch;
  if (w.trace_x0) j["trace_X0"] = *w.trace_x0;
  if (w.trace_expected) j["trace_expected"] = *w.trace_expected;
  if (w.trace_free_on_h) j["trace_free_on_h"] = *w.trace_free_on_h;
  j["mu_samples"] = w.mu_samples;
  j["mu_failures"] = w.mu_failures;
  j["mu_max_distance"] = w.mu_max_distance;
  if (!w.mu_model.empty()) j["mu_model"] = w.mu_model;
  j["c_radius"] = w.c_radius;
  return j;
}

json root_array(const rootsys::RootVector& r) { return json(r.coeffs()); }

}  // namespace

json matrix_to_json(Field f, const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (f == Field::R)
        row.push_back(m(i, j).real());
      else
        row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json rootsys_to_json(const rootsys::RestrictedRootSystem& rs) {
  json j;
  j["schema"] = "ckf.rootsys/1";
  j["family"] = std::string(rootsys::to_string(rs.family()));
  j["rank"] = rs.rank();
  j["order"] = std::string(rootsys::kOrderToken);
  json roots = json::array(), mult = json::array();
  for (const auto& r : rs.roots()) {
    roots.push_back(root_array(r));
    mult.push_back(rs.multiplicity(r));
  }
  j["roots"] = std::move(roots);
  j["multiplicities"] = std::move(mult);
  return j;
}

rootsys::RestrictedRootSystem rootsys_from_json(const json& doc) {
  const auto errs = validate(doc, "ckf.rootsys/1");
  if (!errs.empty()) throw std::invalid_argument("root system document: " + errs.front());
  const auto& roots = doc["roots"];
  const auto& mult = doc["multiplicities"];
  if (roots.size() != mult.size()) throw std::invalid_argument("root system document: roots and multiplicities differ in length");
  if (doc.contains("order") && doc["order"] != std::string(rootsys::kOrderToken))
    throw std::invalid_argument("root system document: unsupported order " + doc["order"].dump());
  std::vector<rootsys::RootVector> rv;
  std::map<std::vector<int>, int> mm;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto coeffs = roots[i].get<std::vector<int>>();
    rv.emplace_back(coeffs);
    mm[coeffs] = mult[i].get<int>();
  }
  return rootsys::RestrictedRootSystem(rootsys::family_from_string(doc["family"].get<std::string>()),
                                       doc["rank"].get<int>(), std::move(rv), std::move(mm));
}

json verdict_to_json(const checker::Verdict& v) {
  using F = checker::SpaceSpec::Family;
  json j;
  j["schema"] = "ckf.verdict/1";
  json space;
  const auto& s = v.space;
  switch (s.family) {
    case F::SLoverSL:
      space["family"] = "SL_over_SL";
      space["label"] = s.describe();
      space["n"] = s.n;
      space["m"] = s.m;
      space["field"] = std::string(to_string(s.field));
      break;
    case F::SLoverSO:
      space["family"] = "SL_over_SO";
      space["label"] = s.describe();
      space["p"] = s.p;
      space["q"] = s.q;
      break;
    case F::LeviSymmetric: {
      space["family"] = "LeviSymmetric";
      space["label"] = s.describe();
      space["rootsys"] = rootsys_to_json(*s.rs);
      json pp = json::array();
      for (int i : s.pi_prime) pp.push_back(i + 1);
      space["pi_prime"] = std::move(pp);
      break;
    }
  }
  j["space"] = std::move(space);
  j["conclusion"] = v.conclusion;
  j["theorem_applied"] = v.theorem_applied;
  if (v.threshold) j["threshold"] = *v.threshold;
  j["witness"] = witness_to_json(v.witness);
  if (v.alternative) j["alternative_witness"] = witness_to_json(*v.alternative);
  json checks = json::array();
  for (const auto& c : v.checks)
    checks.push_back(json{{"name", c.name}, {"role", c.role}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  json prior = json::array();
  for (const auto& p : v.prior_results)
    prior.push_back(json{{"tag", p.tag}, {"inequality", p.inequality}, {"applies", p.applies}, {"note", p.note}});
  j["prior_results"] = std::move(prior);
  j["notes"] = v.notes;
  json conv;
  conv["order"] = std::string(rootsys::kOrderToken);
  conv["seed"] = v.config.seed;
  conv["samples"] = v.config.samples;
  conv["quaternion_pair_tolerance"] = cartan::kQuaternionPairTol;
  conv["tolerances"] = json{{"mu_abs", v.config.tol_abs}, {"mu_rel", v.config.tol_rel}};
  j["conventions"] = std::move(conv);
  return j;
}

json epsilon_table_to_json(int max_m, const std::vector<checker::EpsilonRow>& rows) {
  json j;
  j["schema"] = "ckf.epsilon-table/1";
  j["max_m"] = max_m;
  bool all = true;
  json arr = json::array();
  for (const auto& r : rows) {
    all = all && r.matches;
    arr.push_back(json{{"m", r.m},
                       {"field", std::string(to_string(r.field))},
                       {"epsilon", checker::to_string(r.epsilon)},
                       {"threshold", checker::to_string(r.threshold)},
                       {"derived_min_n", r.derived_min_n},
                       {"matches", r.matches}});
  }
  j["rows"] = std::move(arr);
  j["all_match"] = all;
  return j;
}

json sequence_to_json(const construct::SymmetricLeviInstance& inst, const construct::SOSequence& seq,
                      const construct::SequenceChecks& c, const construct::MuEqualityReport& rep,
                      std::uint64_t samples) {
  json j;
  j["schema"] = "ckf.so-sequence/1";
  j["p"] = inst.p;
  j["q"] = inst.q;
  j["order"] = std::string(rootsys::kOrderToken);
  j["selection"] = "first orthonormal kernel vector, |X|_theta = sqrt(2)";
  j["r"] = seq.r();
  json lams = json::array(), vecs = json::array();
  for (int i = 0; i < seq.r(); ++i) {
    lams.push_back(root_array(seq.lambdas[static_cast<std::size_t>(i)]));
    vecs.push_back(matrix_to_json(Field::R, seq.vectors[static_cast<std::size_t>(i)]));
  }
  j["lambdas"] = std::move(lams);
  j["vectors"] = std::move(vecs);
  j["checks"] = json{{"increasing", c.increasing},
                     {"theta_bracket_residual", c.theta_bracket_residual},
                     {"sl2_residual", c.sl2_residual},
                     {"sl2_commutation_residual", c.sl2_commutation_residual},
                     {"a_prime_dim", c.a_prime_dim},
                     {"a_prime_in_ph_residual", c.a_prime_in_ph_residual},
                     {"centralizer_dim", c.centralizer_dim},
                     {"centralizer_gap", c.centralizer_gap},
                     {"u_dim", c.u_dim},
                     {"ph_dim", c.ph_dim},
                     {"f_rank_on_u_prime", c.f_rank_on_u_prime},
                     {"equivariance_residual", c.equivariance_residual},
                     {"f_image_residual", c.f_image_residual},
                     {"passed", c.passed()}};
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back(json{{"subgroup", r.subgroup},
                        {"samples", r.stats.samples},
                        {"failures", r.stats.failures + r.stats.errors},
                        {"max_distance", r.stats.max_distance}});
  j["mu_equalities"] = json{{"samples", samples},
                            {"rows", std::move(rows)},
                            {"preimage_max_difference", rep.preimage_max_difference},
                            {"a_prime_pattern_residual", rep.a_prime_pattern_residual}};
  j["passed"] = c.passed() && rep.passed() && seq.r() == std::min(inst.p, inst.q);
  return j;
}

json decay_to_json(int p, int q, const std::string& variant, std::uint64_t seed, const construct::DecayResult& d,
                   bool passed) {
  json j;
  j["schema"] = "ckf.decay/1";
  j["p"] = p;
  j["q"] = q;
  j["variant"] = variant;
  j["seed"] = seed;
  j["rate"] = d.rate;
  j["slope"] = d.slope;
  j["slope_ratio"] = d.slope_ratio;
  j["end_ratio"] = d.end_ratio;
  j["monotone_from"] = d.monotone_from;
  json pts = json::array();
  for (const auto& pt : d.points) pts.push_back(json{{"t", pt.t}, {"distance", pt.distance}});
  j["points"] = std::move(pts);
  j["passed"] = passed;
  return j;
}

std::vector<std::string> schema_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, s] : schema_table()) ids.push_back(id);
  return ids;
}

const json& schema(std::string_view id) {
  const auto& t = schema_table();
  auto it = t.find(id);
  if (it == t.end()) throw std::invalid_argument("unknown schema " + std::string(id));
  return it->second;
}

std::vector<std::string> validate(const json& doc, std::string_view schema_id) {
  std::vector<std::string> errs;
  const json& s = schema(schema_id);
  check_node(s, s, doc, "", errs);
  return errs;
}

}  // namespace ckf::json_io
