#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "qglf/coeffs.hpp"
#include "qglf/genfun.hpp"
#include "qglf/glnq.hpp"
#include "qglf/oracle.hpp"

namespace qglf::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Row {
  std::vector<int> dims;
  std::string value;
  std::vector<std::pair<std::string, std::string>> paths;
  std::optional<bool> pass;
  std::vector<std::pair<std::string, std::string>> extra;
};

struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<std::string> dim_names;
  std::vector<Row> rows;
  bool agreement = true;
  bool scalar = false;  // text output is the bare value
};

// q as given on the command line: "sym", "Sn" or an integer > 1.
struct QSpec {
  std::string text;
  bool symbolic() const { return text == "sym"; }
  bool sn() const { return text == "Sn"; }
  long value() const {
    if (symbolic() || sn()) throw UsageError("--q must be an integer here");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(text, &used);
    } catch (const std::exception&) {
      throw UsageError("--q must be an integer, \"sym\" or \"Sn\"");
    }
    if (used != text.size() || v < 2) throw UsageError("--q must be an integer greater than 1");
    return v;
  }
  long prime() const {
    const long v = value();
    if (!is_prime(v)) throw UsageError("--q must be prime for brute-force enumeration");
    return v;
  }
  Json json() const {
    if (symbolic() || sn()) return text;
    return value();
  }
};

template <class F>
auto with_domain(const QSpec& q, F&& f) {
  if (q.symbolic()) return f(SymbolicQ{});
  return f(NumericQ(q.value()));
}

std::string render(const QRational& v) { return v.to_string(); }
std::string render(const Rational& v) { return v.get_str(); }
std::string render(const BigInt& v) { return v.get_str(); }

template <class V>
std::map<std::vector<int>, std::string> rendered(const CountTable<V>& t) {
  std::map<std::vector<int>, std::string> out;
  for (const auto& [dims, value] : t.entries) out[dims] = render(value);
  return out;
}

std::vector<std::string> indexed_names(const std::string& stem, int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::string dims_text(const std::vector<int>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j;
    j["command"] = r.command;
    j["params"] = r.params;
    Json entries = Json::array();
    for (const auto& row : r.rows) {
      Json e;
      e["dims"] = row.dims;
      e["value"] = row.value;
      if (!row.paths.empty()) {
        Json p = Json::object();
        for (const auto& [name, v] : row.paths) p[name] = v;
        e["paths"] = p;
      }
      if (row.pass) e["pass"] = *row.pass;
      for (const auto& [name, v] : row.extra) e[name] = v;
      entries.push_back(e);
    }
    j["entries"] = entries;
    j["agreement"] = r.agreement;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (const auto& name : r.dim_names) out << name << ',';
    out << "value\n";
    for (const auto& row : r.rows) {
      for (int d : row.dims) out << d << ',';
      out << row.value << '\n';
    }
  } else {
    if (r.scalar && r.rows.size() == 1) {
      out << r.rows.front().value << '\n';
      return;
    }
    for (const auto& row : r.rows) {
      out << dims_text(row.dims) << ": " << row.value;
      if (row.pass) out << (*row.pass ? "  PASS" : "  FAIL");
      out << '\n';
    }
    if (!r.agreement) out << "agreement: false\n";
  }
}

// Merges tables from several paths cell by cell; missing cells are "0".
void merge_paths(Report& report, const std::vector<std::pair<std::string, std::map<std::vector<int>, std::string>>>& paths,
                 const std::vector<int>& prefix, bool mark_pass) {
  std::set<std::vector<int>> keys;
  for (const auto& [name, table] : paths) {
    for (const auto& [dims, v] : table) keys.insert(dims);
  }
  for (const auto& dims : keys) {
    Row row;
    row.dims = prefix;
    row.dims.insert(row.dims.end(), dims.begin(), dims.end());
    bool same = true;
    for (const auto& [name, table] : paths) {
      auto it = table.find(dims);
      const std::string v = it == table.end() ? "0" : it->second;
      if (row.paths.empty()) {
        row.value = v;
      } else if (v != row.value) {
        same = false;
      }
      if (paths.size() > 1) row.paths.emplace_back(name, v);
    }
    if (mark_pass) row.pass = same;
    report.agreement = report.agreement && same;
    report.rows.push_back(std::move(row));
  }
}

std::vector<std::pair<std::string, std::map<std::vector<int>, std::string>>> table_paths(const QSpec& q, int n, int k,
                                                                                      const std::string& method,
                                                                                      const OracleOptions& opt) {
  std::vector<std::pair<std::string, std::map<std::vector<int>, std::string>>> paths;
  const bool all = method == "all";
  if (all || method == "oracle") q.prime();  // validate before any work
  if (all || method == "closed") {
    paths.emplace_back("closed", with_domain(q, [&](const auto& d) { return rendered(a_table(d, n, k, Path::ClosedForm)); }));
  }
  if (all || method == "charsum") {
    paths.emplace_back("charsum",
                       with_domain(q, [&](const auto& d) { return rendered(a_table(d, n, k, Path::CharacterSum)); }));
  }
  if (all || method == "oracle") {
    const long p = q.prime();
    paths.emplace_back("oracle", rendered(brute_count_gl(n, p, k, find_regular_elliptic(n, p, false), opt)));
  }
  return paths;
}

int default_threads() {
  if (const char* env = std::getenv("QGLF_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed integer list: " + s);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization counts of regular elliptic elements in GL_n(F_q)", "qglf"};
  app.require_subcommand(1);

  std::string q_text;
  std::string format;
  int n = 2, k = 2, t = 0, u = 0, m = 0, l = 0, g = 1, r = 0, s = 0;
  int n_min = -1, n_max = -1;
  int threads = default_threads();
  double budget = 1e8;
  std::string kind, method = "closed", rs_text, p_text;
  const std::vector<std::string> formats{"json", "csv", "text"};

  // Defaults for --q differ per subcommand and are filled in after parsing.
  std::map<std::string, std::string> default_q;
  auto add_common = [&](CLI::App* sub, const std::string& fallback) {
    default_q[sub->get_name()] = fallback;
    sub->add_option("--q", q_text, "q: an integer > 1, or \"sym\" for the formal variable (default " + fallback + ")");
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember(formats));
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "oracle worker threads (default $QGLF_THREADS or 1)")->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, "maximum number of enumerated tuples")->check(CLI::PositiveNumber);
  };

  auto* coeff = app.add_subcommand("coeff", "a single closed-form coefficient");
  add_common(coeff, "sym");
  coeff->add_option("--kind", kind, "mq, b2, bk, tq, pg, a2 or genus0")
      ->required()
      ->check(CLI::IsMember({"mq", "b2", "bk", "tq", "pg", "a2", "genus0"}));
  coeff->add_option("--n", n, "rank");
  coeff->add_option("--t", t, "first falling index (b2)");
  coeff->add_option("--u", u, "second falling index (b2)");
  coeff->add_option("--m", m, "ambient size (mq)");
  coeff->add_option("--rs", rs_text, "comma-separated sizes (mq, genus0)");
  coeff->add_option("--p", p_text, "comma-separated falling indices (bk)");
  coeff->add_option("--l", l, "number of reflections (tq)");
  coeff->add_option("--g", g, "genus (pg)");
  coeff->add_option("--r", r, "first fixed dimension (a2)");
  coeff->add_option("--s", s, "second fixed dimension (a2)");

  auto* table = app.add_subcommand("table", "full table of factorization counts a_{r_1..r_k}");
  add_common(table, "sym");
  add_oracle(table);
  table->add_option("--n", n, "rank")->required();
  table->add_option("--k", k, "number of factors")->check(CLI::PositiveNumber);
  table->add_option("--method", method, "closed, charsum, oracle or all")
      ->check(CLI::IsMember({"closed", "charsum", "oracle", "all"}));

  auto* verify = app.add_subcommand("verify", "compare every computation path for n up to --n-max");
  add_common(verify, "2");
  add_oracle(verify);
  verify->add_option("--k", k, "number of factors")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max, "largest rank (default 3)");

  auto* asympt = app.add_subcommand("asympt", "growth ratio sweep for fixed genus");
  add_common(asympt, "2");
  asympt->add_option("--g", g, "genus")->check(CLI::NonNegativeNumber);
  asympt->add_option("--n-min", n_min, "smallest rank (default 2g+2)");
  asympt->add_option("--n-max", n_max, "largest rank (default 40)");

  auto* genus = app.add_subcommand("expected-genus", "expected genus of a random two-factor factorization");
  add_common(genus, "sym");
  genus->add_option("--n", n, "rank")->required();

  auto* fulman = app.add_subcommand("fulman", "number of elements of each fixed-space dimension");
  add_common(fulman, "sym");
  fulman->add_option("--n", n, "rank")->required();

  auto* oracle = app.add_subcommand("oracle", "raw brute-force count (q prime, or \"Sn\" for the symmetric group)");
  add_common(oracle, "2");
  add_oracle(oracle);
  oracle->add_option("--n", n, "rank")->required();
  oracle->add_option("--k", k, "number of factors")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kUsage;
  }

  Report report;
  report.command = app.get_subcommands().front()->get_name();
  const QSpec q{q_text.empty() ? default_q[report.command] : q_text};
  std::string default_format = "json";
  const OracleOptions opt{threads, budget};

  try {
    if (coeff->parsed()) {
      default_format = "text";
      report.scalar = true;
      report.params["kind"] = kind;
      report.params["q"] = q.json();
      Row row;
      if (kind == "mq") {
        const auto rs = parse_list(rs_text);
        report.params["m"] = m;
        report.params["rs"] = rs;
        report.dim_names = indexed_names("r", static_cast<int>(rs.size()));
        row.dims = rs;
        row.value = with_domain(q, [&](const auto& d) { return render(m_q(d, m, rs)); });
      } else if (kind == "b2") {
        report.params["n"] = n;
        report.dim_names = {"t", "u"};
        row.dims = {t, u};
        row.value = with_domain(q, [&](const auto& d) { return render(b_two(d, n, t, u)); });
      } else if (kind == "bk") {
        const auto p = parse_list(p_text);
        report.params["n"] = n;
        report.dim_names = indexed_names("p", static_cast<int>(p.size()));
        row.dims = p;
        row.value = with_domain(q, [&](const auto& d) { return render(b_multi(d, n, p)); });
      } else if (kind == "tq") {
        report.params["n"] = n;
        report.dim_names = {"l"};
        row.dims = {l};
        row.value = with_domain(q, [&](const auto& d) { return render(reflection_count(d, n, l)); });
      } else if (kind == "pg") {
        report.dim_names = {"g"};
        row.dims = {g};
        row.value = with_domain(q, [&](const auto& d) { return p_g_polynomial(d, g).to_string(); });
      } else if (kind == "a2") {
        report.params["n"] = n;
        report.dim_names = {"r", "s"};
        row.dims = {r, s};
        row.value = with_domain(q, [&](const auto& d) { return render(a_two_explicit(d, n, r, s)); });
      } else {
        const auto rs = parse_list(rs_text);
        report.params["n"] = n;
        report.dim_names = indexed_names("r", static_cast<int>(rs.size()));
        row.dims = rs;
        row.value = with_domain(q, [&](const auto& d) { return render(genus0_count(d, n, rs)); });
      }
      report.rows.push_back(std::move(row));
    } else if (table->parsed()) {
      report.params["n"] = n;
      report.params["q"] = q.json();
      report.params["k"] = k;
      report.params["method"] = method;
      report.dim_names = indexed_names("r", k);
      merge_paths(report, table_paths(q, n, k, method, opt), {}, false);
    } else if (verify->parsed()) {
      const long p = q.prime();
      if (n_max < 0) n_max = 3;
      report.params["q"] = p;
      report.params["k"] = k;
      report.params["n-max"] = n_max;
      report.dim_names = {"n"};
      for (const auto& name : indexed_names("r", k)) report.dim_names.push_back(name);
      // n = 1 has a regular elliptic element only when q > 2.
      for (int rank = p == 2 ? 2 : 1; rank <= n_max; ++rank) {
        merge_paths(report, table_paths(q, rank, k, "all", opt), {rank}, true);
      }
    } else if (asympt->parsed()) {
      const long qv = q.value();
      if (n_min < 0) n_min = 2 * g + 2;
      if (n_max < 0) n_max = 40;
      if (n_min <= g || n_max < n_min) throw UsageError("need g < n-min <= n-max");
      report.params["g"] = g;
      report.params["q"] = qv;
      report.params["n-min"] = n_min;
      report.params["n-max"] = n_max;
      report.dim_names = {"n"};
      for (int rank = n_min; rank <= n_max; ++rank) {
        const GrowthRatio gr = growth_ratio(g, qv, rank);
        Row row;
        row.dims = {rank};
        row.value = gr.decimal;
        row.extra.emplace_back("count", gr.count.get_str());
        row.extra.emplace_back("ratio_squared", gr.ratio_squared.get_str());
        report.rows.push_back(std::move(row));
      }
    } else if (genus->parsed()) {
      default_format = "text";
      report.scalar = true;
      report.params["n"] = n;
      report.params["q"] = q.json();
      report.rows.push_back(Row{{}, with_domain(q, [&](const auto& d) { return render(expected_genus(d, n)); }), {}, {}, {}});
    } else if (fulman->parsed()) {
      report.params["n"] = n;
      report.params["q"] = q.json();
      report.dim_names = {"r"};
      const auto values = with_domain(q, [&](const auto& d) {
        std::vector<std::string> v;
        for (const auto& x : fulman_series(d, n)) v.push_back(render(x));
        return v;
      });
      for (std::size_t i = 0; i < values.size(); ++i) report.rows.push_back(Row{{static_cast<int>(i)}, values[i], {}, {}, {}});
    } else if (oracle->parsed()) {
      report.params["n"] = n;
      report.params["q"] = q.json();
      report.params["k"] = k;
      report.dim_names = indexed_names("r", k);
      CountTable<BigInt> counts;
      if (q.sn()) {
        counts = brute_count_sn(n, k, opt);
      } else {
        const long p = q.prime();
        counts = brute_count_gl(n, p, k, find_regular_elliptic(n, p, false), opt);
      }
      merge_paths(report, {{"oracle", rendered(counts)}}, {}, false);
    }
  } catch (const UsageError& e) {
    err << "qglf: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "qglf: " << e.what() << '\n';
    return kBudget;
  } catch (const std::length_error& e) {
    err << "qglf: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "qglf: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "qglf: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "qglf: " << e.what() << '\n';
    return kUsage;
  }

  emit(report, format.empty() ? default_format : format, out);
  return report.agreement ? kOk : kMismatch;
}

}  // namespace qglf::cli
