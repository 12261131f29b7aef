#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cohomology.hpp"
#include "rootsystem.hpp"

namespace liecoh {

// Encoded reference tables for H^2(U_1,k), H^2(B_1,k) and H^2(B,lambda) at
// p = 2, together with a diff engine against the computed modules. Every
// family carries an anchor id into data/quote_anchors.json so each entry can
// be traced to the transcribed source line. Spots where the computed module
// disagrees with the transcription are catalogued in data/known_issues.json
// and instantiated as weight sets here; the diff marks them instead of
// pretending they match.

struct ExpectedFamily {
  std::string anchor;
  std::vector<Weight> weights;
};

struct ExpectedTable {
  std::string table, system;
  std::vector<ExpectedFamily> families;

  std::map<Weight, int> weights() const {
    std::map<Weight, int> m;
    for (const auto& f : families)
      for (const auto& w : f.weights) m[w]++;
    return m;
  }
  int total_dim() const {
    int s = 0;
    for (const auto& f : families) s += static_cast<int>(f.weights.size());
    return s;
  }
};

namespace tbl_detail {

inline std::string data_path(const char* file) {
  return std::string(LIECOH_DATA_DIR) + "/" + file;
}

inline Weight neg(const Weight& w) { return w * -1; }

// -(s_alpha s_beta).0 for the (possibly adjacent) 0-based pair (i, j), with
// s_i the outer reflection.
inline Weight minus_w0(const RootSystem& rs, int i, int j) {
  Weight zero;
  zero.fund.assign(rs.rank, 0);
  return neg(dot_action(rs, WeylWord{{i, j}}, zero));
}

inline Weight omega_combo(const RootSystem& rs, const std::vector<std::pair<int, int>>& terms) {
  Weight w;
  w.fund.assign(rs.rank, 0);
  for (auto [idx1, c] : terms) w.fund[idx1 - 1] += c;  // 1-based fundamental index
  return w;
}

inline IVec reversed(IVec v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace tbl_detail

// The direct-sum decomposition of H^2(U_1,k) as transcribed, one family per
// summand group. Weights are exactly the stated ones; transcription defects
// are left in place and handled by the known-issue catalogue.
inline ExpectedTable expected_h2_u1(const RootSystem& rs) {
  using tbl_detail::minus_w0;
  const int n = rs.rank;
  ExpectedTable t;
  t.table = "h2_u1";
  t.system = rs.name();
  std::string a(1, static_cast<char>('a' + static_cast<int>(rs.kind)));
  std::string anchor = "h2u1-" + a;
  auto W = [&](const IVec& s) { return to_fundamental(rs, s); };
  auto at = [&](std::initializer_list<std::pair<int, int>> terms) {
    IVec s(n, 0);
    for (auto [idx1, c] : terms) s[idx1 - 1] += c;  // 1-based simple index
    return W(s);
  };

  // (u*)^(1): the E_n statement describes the nilpotent radical instead and
  // has no twist summand.
  if (rs.kind != Kind::E) {
    ExpectedFamily twist{anchor, {}};
    for (const auto& r : rs.positive_roots) {
      IVec s = r.simple;
      for (auto& c : s) c *= 2;
      twist.weights.push_back(W(s));
    }
    t.families.push_back(std::move(twist));
  }

  // -(s_alpha s_beta).0 over non-adjacent simple pairs.
  ExpectedFamily pairs{anchor, {}};
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (rs.cartan[i][j] == 0) pairs.weights.push_back(minus_w0(rs, i, j));
  t.families.push_back(std::move(pairs));

  // -(s_alpha s_beta).0 + 2gamma with alpha + beta + gamma a root; the F_4
  // and G_2 statements carry no such family.
  if (rs.kind != Kind::F && rs.kind != Kind::G) {
    ExpectedFamily chains{anchor, {}};
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++) {
        if (rs.cartan[i][j] != 0) continue;
        for (int g = 0; g < n; g++) {
          IVec s(n, 0);
          s[i] += 1;
          s[j] += 1;
          s[g] += 1;
          if (!rs.is_positive_root(s)) continue;
          s[g] += 1;
          chains.weights.push_back(W(s));
        }
      }
    t.families.push_back(std::move(chains));
  }

  ExpectedFamily extra{anchor, {}};
  switch (rs.kind) {
    case Kind::A:
      break;
    case Kind::B: {
      for (int i = 1; i <= n - 3; i++)
        extra.weights.push_back(at({{i, 1}, {n - 1, 1}, {n, 2}}));
      for (int i = 1; i <= n - 1; i++) {
        IVec s(n, 0);
        for (int k = i; k <= n; k++) s[k - 1] = 2;
        extra.weights.push_back(W(s));
      }
      break;
    }
    case Kind::C: {
      for (int i = 1; i <= n - 3; i++)
        extra.weights.push_back(at({{i, 1}, {n, 1}, {n - 1, 2}}));
      for (int i = 1; i <= n - 1; i++) {
        IVec s(n, 0);
        for (int k = i; k <= n; k++) s[k - 1] = 2;
        extra.weights.push_back(W(s));
      }
      extra.weights.push_back(minus_w0(rs, n - 2, n - 1));  // adjacent pair
      break;
    }
    case Kind::D: {
      extra.weights.push_back(at({{n - 3, 1}, {n - 1, 1}, {n - 2, 2}, {n, 2}}));
      // second row as printed; repeats + 2(alpha_{n-2} + alpha_n)
      extra.weights.push_back(at({{n - 3, 1}, {n, 1}, {n - 2, 2}, {n, 2}}));
      for (int i = 1; i <= n - 3; i++) {
        IVec s(n, 0);
        s[n - 2] = s[n - 1] = 1;
        for (int k = i; k <= n - 2; k++) s[k - 1] += 2;
        extra.weights.push_back(W(s));
      }
      break;
    }
    case Kind::E: {
      for (int i = 5; i <= n; i++) {
        IVec s(n, 0);
        s[1] = s[2] = 1;
        for (int k = 4; k <= i; k++) s[k - 1] += 2;
        extra.weights.push_back(W(s));
      }
      extra.weights.push_back(at({{2, 1}, {5, 1}, {4, 2}}));
      extra.weights.push_back(at({{3, 1}, {5, 1}, {2, 2}, {4, 2}}));
      extra.weights.push_back(at({{2, 1}, {5, 1}, {1, 2}, {3, 2}, {4, 2}}));
      break;
    }
    case Kind::F: {
      extra.weights.push_back(at({{1, 1}, {3, 1}, {2, 2}}));
      extra.weights.push_back(at({{1, 1}, {3, 3}, {2, 2}}));
      extra.weights.push_back(at({{2, 2}, {3, 2}}));
      extra.weights.push_back(at({{1, 2}, {2, 2}, {3, 2}}));
      extra.weights.push_back(at({{2, 2}, {3, 2}, {4, 2}}));
      extra.weights.push_back(at({{1, 2}, {2, 2}, {3, 2}, {4, 2}}));
      extra.weights.push_back(at({{2, 2}, {3, 4}, {4, 2}}));
      extra.weights.push_back(at({{1, 2}, {2, 2}, {3, 2}, {4, 2}}));  // printed twice
      break;
    }
    case Kind::G:
      extra.weights.push_back(at({{1, 2}, {2, 2}}));
      break;
  }
  if (!extra.weights.empty()) t.families.push_back(std::move(extra));
  return t;
}

// H^2(B_1,k) as transcribed: generically (u*)^(1), with the listed extra
// one-dimensional summands per type. Weights here are the untwisted nu.
inline ExpectedTable expected_h2_b1_trivial(const RootSystem& rs) {
  using tbl_detail::omega_combo;
  const int n = rs.rank;
  ExpectedTable t;
  t.table = "h2_b1_trivial";
  t.system = rs.name();

  ExpectedFamily generic{"b1-generic", {}};
  for (const auto& r : rs.positive_roots) generic.weights.push_back(to_fundamental(rs, r));
  t.families.push_back(std::move(generic));

  auto om = [&](std::initializer_list<std::pair<int, int>> terms) {
    return omega_combo(rs, std::vector<std::pair<int, int>>(terms));
  };
  ExpectedFamily extra{"", {}};
  switch (rs.kind) {
    case Kind::A:
      if (n == 3) {
        extra.anchor = "b1-a3";
        extra.weights = {om({{1, 1}, {2, -1}, {3, 1}}), om({{2, 1}})};
      }
      break;
    case Kind::B:
      if (n == 3) {
        extra.anchor = "b1-b3";
        extra.weights = {om({{1, 1}}), om({{1, -1}, {2, 1}})};
      } else if (n == 4) {
        extra.anchor = "b1-b4";
        extra.weights = {om({{1, 1}, {2, -1}, {3, 1}, {4, -1}}), om({{2, 1}, {4, -1}}),
                         om({{2, -1}, {3, 1}}), om({{1, -1}, {2, 1}}), om({{1, 1}})};
      } else {
        extra.anchor = "b1-bn";
        for (int i = 2; i <= n - 1; i++) extra.weights.push_back(om({{i - 1, -1}, {i, 1}}));
        extra.weights.push_back(om({{1, 1}}));
      }
      break;
    case Kind::C:
      extra.anchor = "b1-cn";
      for (int i = 2; i <= n - 2; i++)
        extra.weights.push_back(om({{i - 1, -1}, {i, 1}, {n - 1, -1}, {n, 1}}));
      if (n >= 3) extra.weights.push_back(om({{n - 2, -1}, {n, 1}}));
      extra.weights.push_back(om({{1, 1}, {n - 1, -1}, {n, 1}}));
      break;
    case Kind::D:
      if (n == 4) {
        extra.anchor = "b1-d4";
        extra.weights = {om({{1, 1}, {2, -1}, {3, 1}}),  om({{2, 1}, {4, -1}}),
                         om({{2, 1}, {3, -1}}),          om({{1, 1}, {2, -1}, {4, 1}}),
                         om({{2, -1}, {3, 1}, {4, 1}}),  om({{1, -1}, {2, 1}})};
      } else {
        extra.anchor = "b1-dn";
        for (int i = 1; i <= n - 3; i++) extra.weights.push_back(om({{i, -1}, {i + 1, 1}}));
        extra.weights.push_back(om({{1, 1}}));
        extra.weights.push_back(om({{n - 2, -1}, {n - 1, 1}, {n, 1}}));
      }
      break;
    case Kind::E:
      break;
    case Kind::F:
      extra.anchor = "b1-f4";
      extra.weights = {om({{1, -1}, {2, 1}, {4, -1}}), om({{1, -1}, {2, 1}, {3, -1}, {4, 1}}),
                       om({{1, 1}, {3, -1}, {4, 1}}),  om({{1, 1}, {2, -1}, {3, 1}}),
                       om({{2, 1}, {3, -1}}),          om({{1, 1}, {4, -1}})};
      break;
    case Kind::G:
      extra.anchor = "b1-g2";
      extra.weights = {om({{1, -1}, {2, 1}})};
      break;
  }
  if (!extra.weights.empty()) t.families.push_back(std::move(extra));
  return t;
}

// T-basis weights of H^1(U_1,N) for the coefficient modules N used in the
// B_1 analysis of the doubly-laced types.
inline std::vector<Weight> coeff_h1_basis(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<IVec> simple;
  auto add = [&](std::initializer_list<std::pair<int, int>> terms) {
    IVec s(n, 0);
    for (auto [idx1, c] : terms) s[idx1 - 1] += c;
    simple.push_back(s);
  };
  switch (rs.kind) {
    case Kind::B:
      for (int i = 1; i <= n - 1; i++) add({{i, 1}});
      add({{n - 1, 1}, {n, 1}});
      add({{n, 2}});
      add({{n - 1, 1}, {n, 2}});
      break;
    case Kind::C:
      if (n < 3) throw std::invalid_argument("no coefficient basis table for " + rs.name());
      for (int i = 1; i <= n - 2; i++) add({{i, 1}});
      add({{n, 1}});
      add({{n - 1, 1}, {n, 1}});
      add({{n - 1, 2}});
      add({{n - 1, 2}, {n, 1}});
      add({{n - 2, 1}, {n - 1, 2}});
      break;
    case Kind::F:
      add({{1, 1}});
      add({{2, 1}});
      add({{4, 1}});
      add({{2, 1}, {3, 1}});
      add({{3, 2}});
      add({{2, 1}, {3, 2}});
      add({{3, 2}, {4, 1}});
      break;
    case Kind::G:
      add({{1, 1}});
      add({{1, 1}, {2, 1}});
      add({{2, 2}});
      add({{1, 2}, {2, 1}});
      break;
    default:
      throw std::invalid_argument("no coefficient basis table for " + rs.name());
  }
  std::vector<Weight> out;
  for (const auto& s : simple) out.push_back(to_fundamental(rs, s));
  return out;
}

// Extra indecomposable summands of H^2(B_1,k) beyond (u*)^(1), as lists of
// uniserial factors head to socle (untwisted nu weights).
inline std::vector<std::vector<Weight>> b1_indecomposables(const RootSystem& rs) {
  using tbl_detail::omega_combo;
  const int n = rs.rank;
  auto om = [&](std::initializer_list<std::pair<int, int>> terms) {
    return omega_combo(rs, std::vector<std::pair<int, int>>(terms));
  };
  switch (rs.kind) {
    case Kind::A:
      if (n == 3) return {{om({{1, 1}, {2, -1}, {3, 1}}), om({{2, 1}})}};
      return {};
    case Kind::B:
      if (n == 3) return {{om({{1, 1}}), om({{1, -1}, {2, 1}})}};
      if (n == 4)
        return {{om({{2, 1}, {4, -1}}), om({{1, 1}, {2, -1}, {3, 1}, {4, -1}})},
                {om({{1, 1}}), om({{1, -1}, {2, 1}}), om({{2, -1}, {3, 1}})}};
      {
        std::vector<Weight> m = {om({{1, 1}})};
        for (int i = 2; i <= n - 1; i++) m.push_back(om({{i - 1, -1}, {i, 1}}));
        return {m};
      }
    case Kind::C: {
      std::vector<Weight> m = {om({{1, 1}, {n - 1, -1}, {n, 1}})};
      for (int i = 2; i <= n - 2; i++)
        m.push_back(om({{i - 1, -1}, {i, 1}, {n - 1, -1}, {n, 1}}));
      m.push_back(om({{n - 2, -1}, {n, 1}}));
      return {m};
    }
    case Kind::D:
      if (n == 4)
        return {{om({{2, 1}, {4, -1}}), om({{1, 1}, {2, -1}, {3, 1}})},
                {om({{2, 1}, {3, -1}}), om({{1, 1}, {2, -1}, {4, 1}})},
                {om({{1, 1}}), om({{1, -1}, {2, 1}}), om({{2, -1}, {3, 1}, {4, 1}})}};
      {
        std::vector<Weight> m = {om({{1, 1}})};
        for (int i = 2; i <= n - 2; i++) m.push_back(om({{i - 1, -1}, {i, 1}}));
        m.push_back(om({{n - 2, -1}, {n - 1, 1}, {n, 1}}));
        return {m};
      }
    case Kind::E:
      return {};
    case Kind::F:
      return {{om({{2, 1}, {3, -1}}), om({{1, 1}, {2, -1}, {3, 1}}),
               om({{1, 1}, {3, -1}, {4, 1}}), om({{1, -1}, {2, 1}, {3, -1}, {4, 1}}),
               om({{1, 1}, {4, -1}}), om({{1, -1}, {2, 1}, {4, -1}})}};
    case Kind::G:
      return {{om({{1, -1}, {2, 1}})}};
  }
  return {};
}

// Weight tuples (simple-root coordinates, as printed) of the appendix class
// table for the types whose classes are listed explicitly.
inline std::vector<IVec> appendix_rows(const RootSystem& rs) {
  switch (rs.kind) {
    case Kind::E:
      if (rs.rank == 6)
        return {{0, 1, 1, 2, 2, 0}, {0, 1, 1, 2, 2, 2}, {0, 1, 2, 2, 1, 0},
                {2, 1, 2, 2, 1, 0}, {0, 2, 1, 2, 1, 0}};
      if (rs.rank == 7)
        return {{0, 1, 1, 2, 2, 0, 0}, {0, 1, 1, 2, 2, 2, 0}, {0, 1, 1, 2, 2, 2, 2},
                {0, 1, 2, 2, 1, 0, 0}, {2, 1, 2, 2, 1, 0, 0}, {0, 2, 1, 2, 1, 0, 0}};
      return {{0, 1, 1, 2, 2, 0, 0, 0}, {0, 1, 1, 2, 2, 2, 0, 0}, {0, 1, 1, 2, 2, 2, 2, 0},
              {0, 1, 2, 2, 1, 0, 0, 0}, {0, 1, 1, 2, 2, 2, 2, 2}, {2, 1, 2, 2, 1, 0, 0, 0},
              {0, 2, 1, 2, 1, 0, 0, 0}};
    case Kind::F:
      return {{1, 2, 1, 0}, {1, 2, 3, 0}, {0, 2, 2, 0}, {0, 2, 2, 2},
              {2, 2, 2, 0}, {2, 2, 2, 2}, {2, 2, 4, 2}, {2, 4, 4, 2}};
    case Kind::G:
      return {{2, 4}, {2, 3}};
    default:
      return {};
  }
}

// dim H^2(B,lambda) at p = 2 per the classification: nonzero exactly on
// 2^l w.0 (l(w) = 2), -2^l alpha (l > 0), -2^t beta - 2^l alpha (l < t), and
// the per-type exceptional strings. Powers are searched up to 2^bound.
inline int classify_b(const RootSystem& rs, const Weight& lambda, int bound = 12) {
  const int n = rs.rank;
  bool zero = true;
  for (auto c : lambda.fund) zero = zero && c == 0;
  if (zero) return 0;

  int hits = 0;
  std::set<Weight> w0s;
  Weight z;
  z.fund.assign(n, 0);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (i != j) w0s.insert(dot_action(rs, WeylWord{{i, j}}, z));
  auto alpha_f = [&](int i) { return to_fundamental(rs, rs.simple_roots[i]); };

  for (const auto& w0 : w0s)
    for (int l = 0; l <= bound; l++)
      if (lambda == w0 * (1LL << l)) hits++;
  for (int i = 0; i < n; i++)
    for (int l = 1; l <= bound; l++)
      if (lambda == alpha_f(i) * -(1LL << l)) hits++;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      for (int t = 1; t <= bound; t++)
        for (int l = 0; l < t; l++)
          if (lambda == alpha_f(i) * -(1LL << l) + alpha_f(j) * -(1LL << t)) hits++;

  auto string_hits = [&](const IVec& high, int low_idx) {
    // -2^{l+1} high - 2^l alpha_{low_idx} (low_idx < 0: no low term)
    Weight h = to_fundamental(rs, high);
    for (int l = 0; l + 1 <= bound; l++) {
      Weight cand = h * -(1LL << (l + 1));
      if (low_idx >= 0) cand = cand + alpha_f(low_idx) * -(1LL << l);
      if (lambda == cand) hits++;
    }
  };
  if (rs.kind == Kind::B) {
    IVec s(n, 0);
    s[n - 2] = s[n - 1] = 1;
    string_hits(s, n - 2);
  } else if (rs.kind == Kind::C) {
    IVec s(n, 0);
    s[n - 2] = s[n - 1] = 1;
    string_hits(s, -1);
  } else if (rs.kind == Kind::F) {
    IVec s1 = {0, 1, 1, 0}, s2 = {0, 0, 1, 1};
    string_hits(s1, 1);
    string_hits(s2, 1);
  } else if (rs.kind == Kind::G) {
    IVec s = {1, 1};
    string_hits(s, 1);
  }
  return hits > 0 ? 1 : 0;
}

struct KnownIssue {
  std::string id, anchor, note;
  std::string systems;  // type letters the issue applies to
};

inline const std::vector<KnownIssue>& known_issues() {
  static const std::vector<KnownIssue> issues = [] {
    std::ifstream in(tbl_detail::data_path("known_issues.json"));
    if (!in) throw std::runtime_error("cannot open known_issues.json");
    nlohmann::json j;
    in >> j;
    std::vector<KnownIssue> out;
    for (const auto& e : j)
      out.push_back({e.at("id"), e.at("anchor"), e.at("note"), e.at("systems")});
    return out;
  }();
  return issues;
}

// Verbatim quote for an anchor id; throws if the anchor is unknown.
inline std::string quote_for(const std::string& anchor) {
  static const nlohmann::json j = [] {
    std::ifstream in(tbl_detail::data_path("quote_anchors.json"));
    if (!in) throw std::runtime_error("cannot open quote_anchors.json");
    nlohmann::json q;
    in >> q;
    return q;
  }();
  return j.at(anchor).at("quote").get<std::string>();
}

// Affected H^2(U_1,k) weights per known issue, instantiated for one system.
inline std::map<std::string, std::set<Weight>> known_issue_weights_h2(const RootSystem& rs) {
  const int n = rs.rank;
  std::map<std::string, std::set<Weight>> out;
  auto W = [&](const IVec& s) { return to_fundamental(rs, s); };
  auto at = [&](std::initializer_list<std::pair<int, int>> terms) {
    IVec s(n, 0);
    for (auto [idx1, c] : terms) s[idx1 - 1] += c;
    return W(s);
  };
  switch (rs.kind) {
    case Kind::B: {
      auto& ws = out["bn-tail-weights"];
      ws.insert(at({{n - 1, 1}, {n, 3}}));
      if (n >= 3) ws.insert(at({{n - 2, 1}, {n - 1, 2}, {n, 3}}));
      if (n >= 4) {
        ws.insert(at({{n - 3, 1}, {n - 2, 2}, {n - 1, 3}, {n, 2}}));
        ws.insert(at({{n - 3, 1}, {n - 2, 2}, {n - 1, 1}, {n, 2}}));
        ws.insert(at({{n - 3, 1}, {n - 2, 2}, {n - 1, 3}, {n, 4}}));
      }
      break;
    }
    case Kind::C: {
      auto& ws = out["cn-tail-weights"];
      auto twoe = [&](int i) {  // 2e_i in simple coordinates
        IVec s(n, 0);
        for (int k = i; k <= n - 1; k++) s[k - 1] = 2;
        s[n - 1] = 1;
        return s;
      };
      auto ee = [&](int i, int j) {  // e_i + e_j, i < j <= n - 1
        IVec s(n, 0);
        for (int k = i; k <= j - 1; k++) s[k - 1] = 1;
        for (int k = j; k <= n - 1; k++) s[k - 1] = 2;
        s[n - 1] = 1;
        return s;
      };
      for (int i = 1; i <= n - 2; i++) {  // 3e_i - e_{i+1}
        IVec s = twoe(i);
        s[i - 1] += 1;
        ws.insert(W(s));
      }
      for (int i = 1; i <= n - 1; i++)  // 2e_i + e_j - e_{j+1} = 2e_i + alpha_j
        for (int j = i + 1; j <= n - 1; j++) {
          IVec s = twoe(i);
          s[j - 1] += 1;
          ws.insert(W(s));
        }
      for (int i = 1; i <= n - 1; i++)  // 2(e_i + e_j)
        for (int j = i + 1; j <= n - 1; j++) {
          IVec s = ee(i, j);
          for (auto& c : s) c *= 2;
          ws.insert(W(s));
        }
      for (int i = 1; i <= n - 3; i++) ws.insert(W(ee(i, i + 1)));
      for (int j = 3; j <= n - 2; j++)  // alpha_i + 2e_j, i <= j - 2
        for (int i = 1; i <= j - 2; i++) {
          IVec s = twoe(j);
          s[i - 1] += 1;
          ws.insert(W(s));
        }
      break;
    }
    case Kind::D:
      out["dn-second-row"] = {at({{n - 3, 1}, {n - 2, 2}, {n, 3}}),
                              at({{n - 3, 1}, {n - 2, 2}, {n - 1, 2}, {n, 1}})};
      break;
    case Kind::E: {
      auto& tw = out["en-twist-omitted"];
      for (const auto& r : rs.positive_roots) {
        IVec s = r.simple;
        for (auto& c : s) c *= 2;
        tw.insert(W(s));
      }
      out["en-chain-overlap"] = {at({{2, 1}, {4, 2}, {5, 1}})};
      out["en-missing-row"] = {at({{2, 1}, {3, 2}, {4, 2}, {5, 1}})};
      break;
    }
    case Kind::F:
      out["f4-duplicate-row"] = {at({{1, 2}, {2, 2}, {3, 2}, {4, 2}})};
      out["f4-mirrored-rows"] = {W({1, 2, 3, 0}), W({0, 2, 4, 2}), W({0, 1, 2, 1}),
                                 W({0, 3, 2, 1}), W({2, 4, 2, 0}), W({2, 4, 2, 2}),
                                 W({2, 4, 4, 2})};
      out["f4-unlisted-weights"] = {W({0, 3, 1, 0}), W({2, 3, 1, 0}), W({2, 3, 2, 1}),
                                    W({3, 2, 1, 0}), W({2, 6, 4, 2}), W({4, 6, 4, 2})};
      break;
    case Kind::G:
      out["g2-extra-twist"] = {at({{1, 4}, {2, 2}})};
      break;
    default:
      break;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

// Affected nu weights of H^2(B_1,k): halves of the even flagged U_1 weights
// plus the B_1-specific list defects.
inline std::map<std::string, std::set<Weight>> known_issue_nus_b1(const RootSystem& rs) {
  std::map<std::string, std::set<Weight>> out;
  for (const auto& [id, ws] : known_issue_weights_h2(rs)) {
    std::set<Weight> nus;
    for (const auto& w : ws) {
      bool even = true;
      for (auto c : w.fund) even = even && c % 2 == 0;
      if (!even) continue;
      Weight nu = w;
      for (auto& c : nu.fund) c /= 2;
      nus.insert(nu);
    }
    if (!nus.empty()) out[id] = std::move(nus);
  }
  auto om = [&](std::initializer_list<std::pair<int, int>> terms) {
    return tbl_detail::omega_combo(rs, std::vector<std::pair<int, int>>(terms));
  };
  if (rs.kind == Kind::B && rs.rank == 3)
    out["c1-b3-omission"] = {om({{1, 1}, {2, -1}, {3, 1}}), om({{2, 1}, {3, -1}})};
  if (rs.kind == Kind::B && rs.rank == 4)
    out["c1-b4-omission"] = {om({{1, 1}, {2, -1}, {4, 1}})};
  if (rs.kind == Kind::D && rs.rank == 4)
    out["c1-d4-omission"] = {om({{1, 1}}), om({{3, 1}}), om({{4, 1}})};
  if (rs.kind == Kind::F) {
    std::set<Weight> ws;
    auto table = expected_h2_b1_trivial(rs);
    for (const auto& w : table.families.back().weights) {
      ws.insert(w);
      Weight m;
      m.fund = tbl_detail::reversed(w.fund);
      ws.insert(m);
    }
    out["c1-f4-mirrored"] = std::move(ws);
  }
  return out;
}

struct DiffEntry {
  Weight w;
  int expected = 0, computed = 0;
  std::string flag;  // comma-joined known-issue ids, empty if unexplained
};

struct DiffReport {
  std::string system, table;
  std::vector<DiffEntry> entries;

  bool clean() const {
    for (const auto& e : entries)
      if (e.flag.empty()) return false;
    return true;
  }
  std::string text() const {
    std::ostringstream os;
    os << system << " " << table << ": "
       << (entries.empty() ? "exact match" : clean() ? "flagged differences only" : "UNEXPLAINED differences")
       << "\n";
    for (const auto& e : entries) {
      os << "  weight [";
      for (size_t i = 0; i < e.w.fund.size(); i++) os << (i ? " " : "") << e.w.fund[i];
      os << "] expected " << e.expected << " computed " << e.computed;
      if (!e.flag.empty()) os << "  (" << e.flag << ")";
      os << "\n";
    }
    return os.str();
  }
};

namespace tbl_detail {

inline DiffReport diff_weights(const std::string& system, const std::string& table,
                               const std::map<Weight, int>& expected,
                               const std::map<Weight, int>& computed,
                               const std::map<std::string, std::set<Weight>>& issues) {
  DiffReport rep;
  rep.system = system;
  rep.table = table;
  std::set<Weight> all;
  for (const auto& [w, d] : expected) all.insert(w);
  for (const auto& [w, d] : computed) all.insert(w);
  for (const auto& w : all) {
    int e = expected.count(w) ? expected.at(w) : 0;
    int c = computed.count(w) ? computed.at(w) : 0;
    if (e == c) continue;
    DiffEntry entry{w, e, c, ""};
    for (const auto& [id, ws] : issues)
      if (ws.count(w)) entry.flag += (entry.flag.empty() ? "" : ",") + id;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

inline std::map<Weight, int> weight_dims(const CohomologyResult& r) {
  std::map<Weight, int> m;
  for (const auto& [w, e] : r.weights) m[w] = e.dim;
  return m;
}

}  // namespace tbl_detail

inline DiffReport verify_h2_u1(const RootSystem& rs) {
  return tbl_detail::diff_weights(rs.name(), "h2_u1", expected_h2_u1(rs).weights(),
                                  tbl_detail::weight_dims(h_n_u1(rs, 2)),
                                  known_issue_weights_h2(rs));
}

inline DiffReport verify_h2_b1_trivial(const RootSystem& rs) {
  Weight zero;
  zero.fund.assign(rs.rank, 0);
  return tbl_detail::diff_weights(rs.name(), "h2_b1_trivial",
                                  expected_h2_b1_trivial(rs).weights(),
                                  tbl_detail::weight_dims(h2_b1(rs, zero)),
                                  known_issue_nus_b1(rs));
}

}  // namespace liecoh
