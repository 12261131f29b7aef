#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/rootsum.hpp"
#include "liecoh/tables.hpp"

namespace liecoh {

// Serialization of results to JSON and CSV. Output is byte-deterministic:
// ordered_json preserves insertion order, maps iterate in key order, and no
// floating point is involved anywhere.

using ojson = nlohmann::ordered_json;

inline std::string cochain_to_string(const RootSystem& rs, const Cochain& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, coeff] : c.terms) {
    if (!first) os << " + ";
    first = false;
    if (coeff != 1) os << coeff << "*";
    for (size_t i = 0; i < m.roots.size(); i++) {
      if (i) os << "*";
      os << "phi(";
      const auto& s = rs.positive_roots[m.roots[i]].simple;
      for (size_t k = 0; k < s.size(); k++) os << (k ? "," : "") << s[k];
      os << ")";
    }
  }
  return os.str();
}

inline ojson weight_json(const Weight& w) { return ojson(w.fund); }

inline ojson result_json(const RootSystem& rs, const CohomologyResult& res,
                         bool with_reps = true) {
  ojson j;
  j["system"] = {{"type", std::string(1, kind_letter(rs.kind))}, {"rank", rs.rank}};
  j["prime"] = res.p;
  j["degree"] = res.degree;
  j["group"] = res.group;
  if (res.group == "B1") j["lambda"] = weight_json(res.lambda);
  j["total_dim"] = res.total_dim();
  ojson ws = ojson::array();
  for (const auto& [w, e] : res.weights) {
    ojson row;
    row["fundamental"] = weight_json(w);
    auto sc = simple_coords(rs, w);
    ojson v = ojson::array();
    for (const auto& x : sc) {
      if (!x.is_integer()) { v = nullptr; break; }
      v.push_back(x.num);
    }
    row["simple"] = std::move(v);
    row["dim"] = e.dim;
    if (with_reps) {
      ojson reps = ojson::array();
      for (const auto& c : e.reps) reps.push_back(cochain_to_string(rs, c));
      row["reps"] = reps;
    }
    ws.push_back(std::move(row));
  }
  j["weights"] = std::move(ws);
  return j;
}

inline ojson diff_json(const DiffReport& rep) {
  ojson j;
  j["system"] = rep.system;
  j["table"] = rep.table;
  j["status"] = rep.entries.empty() ? "exact"
                : rep.clean()       ? "flagged_only"
                                    : "unexplained";
  ojson es = ojson::array();
  for (const auto& e : rep.entries) {
    ojson row;
    row["weight"] = weight_json(e.w);
    row["expected"] = e.expected;
    row["computed"] = e.computed;
    row["flags"] = e.flag;
    es.push_back(std::move(row));
  }
  j["entries"] = std::move(es);
  return j;
}

inline ojson expected_table_json(const ExpectedTable& t) {
  ojson j;
  j["table"] = t.table;
  j["system"] = t.system;
  ojson fs = ojson::array();
  for (const auto& f : t.families) {
    ojson row;
    row["anchor"] = f.anchor;
    ojson ws = ojson::array();
    for (const auto& w : f.weights) ws.push_back(weight_json(w));
    row["weights"] = std::move(ws);
    fs.push_back(std::move(row));
  }
  j["families"] = std::move(fs);
  j["total_dim"] = t.total_dim();
  return j;
}

namespace ioutil {

inline std::string ivec_str(const IVec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); i++) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace ioutil

// One line per solution: alpha,beta,beta1,beta2,i,m,t,sigma with roots in
// simple coordinates joined by '+' and t as a ';'-joined list.
inline std::string rootsum_csv(const RootSystem& rs, const std::vector<RootSumSolution>& sols) {
  std::ostringstream os;
  os << "alpha,beta,beta1,beta2,i,m,t,sigma\n";
  for (const auto& s : sols) {
    os << ioutil::ivec_str(s.alpha.simple) << "," << ioutil::ivec_str(s.beta.simple) << ",";
    if (s.beta1) os << ioutil::ivec_str(s.beta1->simple);
    os << ",";
    if (s.beta2) os << ioutil::ivec_str(s.beta2->simple);
    os << "," << s.i << "," << s.m << ",";
    for (size_t g = 0; g < s.t.size(); g++) os << (g ? ";" : "") << s.t[g];
    os << "," << ioutil::ivec_str(s.sigma_simple) << "\n";
  }
  return os.str();
}

inline ojson rootsum_json(const RootSystem& rs, const std::vector<RootSumSolution>& sols) {
  ojson arr = ojson::array();
  for (const auto& s : sols) {
    ojson row;
    row["alpha"] = s.alpha.simple;
    row["beta"] = s.beta.simple;
    row["beta1"] = s.beta1 ? ojson(s.beta1->simple) : ojson(nullptr);
    row["beta2"] = s.beta2 ? ojson(s.beta2->simple) : ojson(nullptr);
    row["i"] = s.i;
    row["m"] = s.m;
    row["t"] = s.t;
    row["sigma"] = s.sigma_simple;
    arr.push_back(std::move(row));
  }
  ojson j;
  j["system"] = rs.name();
  j["solutions"] = std::move(arr);
  return j;
}

}  // namespace liecoh
