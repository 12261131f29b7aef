// Command line front end: compute cohomology, verify against the encoded
// tables, run the root-sum solver, print expected tables, dump weight spaces.
// Exit codes: 0 success (verify: at worst flagged differences), 1 verify found
// an unexplained difference, 2 usage error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "liecoh/json_io.hpp"

using namespace liecoh;

namespace {

struct Options {
  std::string type;
  int rank = 0;
  long long prime = 2;
  int degree = 2;
  std::string group = "u1";
  std::string coeffs;
  std::string lambda;
  std::string format = "text";
  std::string out;
  std::string variant = "torsion";
  bool no_filter = false;
  int max_m = 2;
  std::string table = "u1";
  bool all = false;
  int max_rank = 8;
  int threads = 0;
  int verbosity = 0;
};

std::ostream& output(const Options& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + o.out);
  return file;
}

RootSystem system_of(const Options& o) {
  if (o.type.size() != 1) throw CLI::ValidationError("--type", "expected one of A..G");
  return build_root_system(kind_from_letter(o.type[0]), o.rank);
}

Weight parse_lambda(const Options& o, int rank) {
  Weight w;
  w.fund.assign(rank, 0);
  if (o.lambda.empty()) return w;
  std::stringstream ss(o.lambda);
  std::string tok;
  size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= static_cast<size_t>(rank))
      throw CLI::ValidationError("--lambda", "too many coordinates");
    w.fund[i++] = std::stoll(tok);
  }
  if (i != static_cast<size_t>(rank))
    throw CLI::ValidationError("--lambda", "expected " + std::to_string(rank) + " coordinates");
  return w;
}

void print_result_text(std::ostream& os, const RootSystem& rs, const CohomologyResult& res) {
  os << rs.name() << " H^" << res.degree << "(" << res.group << ") p=" << res.p
     << " total dim " << res.total_dim() << "\n";
  for (const auto& [w, e] : res.weights) {
    os << "  [";
    for (size_t i = 0; i < w.fund.size(); i++) os << (i ? " " : "") << w.fund[i];
    os << "] dim " << e.dim << "\n";
  }
}

int cmd_compute(const Options& o) {
  auto rs = system_of(o);
  CohomologyResult res;
  if (!o.coeffs.empty()) {
    auto mod = coeff_module_for(rs);
    if (o.coeffs != "default" && o.coeffs != mod.name)
      throw CLI::ValidationError("--coeffs", "unknown module (use 'default' or " + mod.name + ")");
    res = h1_u_with_coeffs(rs, mod, o.prime);
  } else if (o.group == "u1") {
    res = h_n_u1(rs, o.degree, o.prime);
  } else if (o.group == "u") {
    res = h_n_u_ordinary(rs, o.degree, o.prime);
  } else if (o.group == "b1") {
    if (o.degree != 2) throw CLI::ValidationError("--degree", "group b1 supports degree 2 only");
    res = h2_b1(rs, parse_lambda(o, rs.rank), o.prime);
  } else {
    throw CLI::ValidationError("--group", "expected u1, u or b1");
  }
  std::ofstream file;
  std::ostream& os = output(o, file);
  if (o.format == "json")
    os << result_json(rs, res).dump(2) << "\n";
  else
    print_result_text(os, rs, res);
  return 0;
}

std::vector<std::pair<Kind, int>> default_matrix() {
  std::vector<std::pair<Kind, int>> m;
  for (int n = 1; n <= 7; n++) m.push_back({Kind::A, n});
  for (int n = 2; n <= 6; n++) m.push_back({Kind::B, n});
  for (int n = 2; n <= 6; n++) m.push_back({Kind::C, n});
  for (int n = 4; n <= 6; n++) m.push_back({Kind::D, n});
  for (int n = 6; n <= 8; n++) m.push_back({Kind::E, n});
  m.push_back({Kind::F, 4});
  m.push_back({Kind::G, 2});
  return m;
}

int thread_count(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("LIECOH_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

int cmd_verify(const Options& o) {
  std::vector<std::pair<Kind, int>> systems;
  if (o.all) {
    for (auto [k, n] : default_matrix())
      if (n <= o.max_rank) systems.push_back({k, n});
  } else {
    auto rs = system_of(o);
    systems.push_back({rs.kind, rs.rank});
  }

  struct Item {
    DiffReport u1, b1;
  };
  std::vector<Item> items(systems.size());
  int nthreads = thread_count(o);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= systems.size()) return;
      auto rs = build_root_system(systems[i].first, systems[i].second);
      items[i].u1 = verify_h2_u1(rs);
      items[i].b1 = verify_h2_b1_trivial(rs);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; t++) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool hard = false;
  std::ofstream file;
  std::ostream& os = output(o, file);
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (const auto& it : items) {
      arr.push_back(diff_json(it.u1));
      arr.push_back(diff_json(it.b1));
      hard = hard || !it.u1.clean() || !it.b1.clean();
    }
    os << arr.dump(2) << "\n";
  } else {
    for (const auto& it : items) {
      os << it.u1.text() << it.b1.text();
      hard = hard || !it.u1.clean() || !it.b1.clean();
    }
    os << (hard ? "FAIL: unexplained differences\n" : "OK\n");
  }
  return hard ? 1 : 0;
}

int cmd_rootsum(const Options& o) {
  auto rs = system_of(o);
  RootSumQuery q;
  if (o.variant == "2sigma" || o.variant == "3.1")
    q.variant = RootSumVariant::PLAIN_2SIGMA;
  else if (o.variant == "beta1" || o.variant == "3.2")
    q.variant = RootSumVariant::PLAIN_BETA1;
  else if (o.variant == "general" || o.variant == "3.3")
    q.variant = RootSumVariant::PLAIN_GENERAL;
  else if (o.variant == "torsion")
    q.variant = RootSumVariant::TORSION_GENERAL;
  else
    throw CLI::ValidationError("--variant", "expected 2sigma|beta1|general|torsion");
  q.max_m = o.max_m;
  q.apply_obstruction_filter = !o.no_filter;
  auto sols = solve(rs, q);
  std::ofstream file;
  std::ostream& os = output(o, file);
  if (o.format == "json") {
    os << rootsum_json(rs, sols).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << rootsum_csv(rs, sols);
  } else {
    os << rs.name() << " " << o.variant << ": " << sols.size() << " solutions\n";
    os << rootsum_csv(rs, sols);
  }
  return 0;
}

int cmd_tables(const Options& o) {
  auto rs = system_of(o);
  ExpectedTable t = o.table == "b1" ? expected_h2_b1_trivial(rs) : expected_h2_u1(rs);
  std::ofstream file;
  std::ostream& os = output(o, file);
  if (o.format == "json") {
    os << expected_table_json(t).dump(2) << "\n";
  } else {
    os << t.table << " " << t.system << " total dim " << t.total_dim() << "\n";
    for (const auto& f : t.families) {
      os << "  [" << f.anchor << "]\n";
      for (const auto& w : f.weights) {
        os << "    (";
        for (size_t i = 0; i < w.fund.size(); i++) os << (i ? " " : "") << w.fund[i];
        os << ")\n";
      }
    }
  }
  return 0;
}

int cmd_dump(const Options& o) {
  auto rs = system_of(o);
  auto res = h_n_u1(rs, o.degree, o.prime);
  std::ofstream file;
  std::ostream& os = output(o, file);
  os << rs.name() << " total " << res.total_dim() << "\n";
  for (const auto& [w, e] : res.weights) {
    auto sc = simple_coords(rs, w);
    os << "  fund(";
    for (size_t i = 0; i < w.fund.size(); i++) os << (i ? "," : "") << w.fund[i];
    os << ") simple(";
    for (size_t i = 0; i < sc.size(); i++) {
      if (i) os << ",";
      if (sc[i].is_integer())
        os << sc[i].num;
      else
        os << sc[i].num << "/" << sc[i].den;
    }
    os << ") dim " << e.dim << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restricted Lie algebra cohomology toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_system = [&](CLI::App* c, bool required = true) {
    auto* t = c->add_option("--type", o.type, "root system type A..G");
    auto* r = c->add_option("--rank", o.rank, "rank");
    if (required) {
      t->required();
      r->required();
    }
  };
  auto add_output = [&](CLI::App* c, const std::string& formats) {
    c->add_option("--format", o.format, "output format: " + formats);
    c->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* compute = app.add_subcommand("compute", "compute a cohomology module");
  add_system(compute);
  compute->add_option("--prime", o.prime, "prime (default 2)");
  compute->add_option("--degree", o.degree, "cohomological degree (default 2)");
  compute->add_option("--group", o.group, "u1 | u | b1");
  compute->add_option("--coeffs", o.coeffs, "coefficient module name ('default' for the built-in)");
  compute->add_option("--lambda", o.lambda, "comma separated fundamental coordinates");
  add_output(compute, "text|json");

  auto* verify = app.add_subcommand("verify", "diff computed modules against the encoded tables");
  add_system(verify, false);
  verify->add_flag("--all", o.all, "run the whole default matrix");
  verify->add_option("--max-rank", o.max_rank, "cap the rank in --all mode");
  verify->add_option("--threads", o.threads, "worker threads (or env LIECOH_THREADS)");
  add_output(verify, "text|json");

  auto* rootsum = app.add_subcommand("rootsum", "solve the degree-two lattice equations");
  add_system(rootsum);
  rootsum->add_option("--variant", o.variant, "2sigma | beta1 | general | torsion");
  rootsum->add_option("--max-m", o.max_m, "cap on the power of two (default 2)");
  rootsum->add_flag("--no-filter", o.no_filter, "disable the cocycle-support filter");
  add_output(rootsum, "text|json|csv");

  auto* tables = app.add_subcommand("tables", "print an expected table");
  add_system(tables);
  tables->add_option("--table", o.table, "u1 | b1");
  add_output(tables, "text|json");

  auto* dump = app.add_subcommand("dump", "dump computed weight spaces");
  add_system(dump);
  dump->add_option("--degree", o.degree, "cohomological degree (default 2)");
  dump->add_option("--prime", o.prime, "prime (default 2)");
  add_output(dump, "text");

  app.add_flag("-v,--verbose", o.verbosity, "increase verbosity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(o);
    if (verify->parsed()) return cmd_verify(o);
    if (rootsum->parsed()) return cmd_rootsum(o);
    if (tables->parsed()) return cmd_tables(o);
    if (dump->parsed()) return cmd_dump(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
