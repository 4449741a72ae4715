#include "subchains/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

namespace subchains::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

template <typename T>
T parse_env_number(const char* name, T fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::istringstream in(raw);
  T v{};
  if (!(in >> v) || !in.eof() || v < 0) {
    throw std::invalid_argument(std::string(name) + " must be a non-negative integer, got '" +
                                raw + "'");
  }
  return v;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    return static_cast<double>(us) / 1000.0;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

OutputRecord make_record(std::int64_t p, int n, const ChainCounts& c, std::string method,
                         double ms) {
  return OutputRecord{p, n, to_decimal(c.F), to_decimal(c.D), to_decimal(c.C), std::move(method),
                      ms};
}

std::string render_number(double v) { return nlohmann::json(v).dump(); }

std::string render_p(const OutputRecord& r) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      r.p);
}

ordered_json record_json(const OutputRecord& r) {
  ordered_json j;
  std::visit([&](const auto& v) { j["p"] = v; }, r.p);
  j["n"] = r.n;
  j["F"] = r.F;
  j["D"] = r.D;
  j["C"] = r.C;
  j["method"] = r.method;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::text;
}

void emit(const OutputRecord& r, Format f, bool header, std::ostream& out) {
  switch (f) {
    case Format::text:
      out << to_text_line(r) << '\n';
      break;
    case Format::json:
      out << to_json_line(r) << '\n';
      break;
    case Format::csv:
      if (header) out << csv_header() << '\n';
      out << to_csv_line(r) << '\n';
      break;
  }
}

struct Options {
  std::int64_t p = 2;
  int n = 0;
  int max_n = 0;
  std::string method = "recurrence";
  std::string format;
  std::string dump_path;
  std::string oracle_grid;
  std::vector<std::int64_t> p_list;
  std::optional<std::uint64_t> budget;
};

int cmd_count(const Options& o, const Settings& s, std::ostream& out) {
  const Method m = parse_method(o.method);
  Stopwatch sw;
  ChainCounts c = chain_counts(o.n, o.p, m, s.closed_form_max_n);
  emit(make_record(o.p, o.n, c, std::string(method_name(m)), sw.elapsed_ms()),
       parse_format(o.format.empty() ? "text" : o.format), true, out);
  return kExitOk;
}

int cmd_poly(const Options& o, std::ostream& out) {
  require_rank(o.n);
  Stopwatch sw;
  const IntPolynomial f = f_n_polynomial(o.n);
  const double ms = sw.elapsed_ms();
  switch (parse_format(o.format.empty() ? "text" : o.format)) {
    case Format::text:
      out << f.to_text("p") << '\n';
      break;
    case Format::json: {
      ordered_json j;
      j["p"] = "p";
      j["n"] = o.n;
      j["F"] = f.to_text("p");
      j["coefficients"] = f.to_decimal_coefficients();
      j["elapsed_ms"] = ms;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv: {
      out << "n,power,coefficient\n";
      const auto coeffs = f.to_decimal_coefficients();
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out << o.n << ',' << i << ',' << coeffs[i] << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  require_base(o.p);
  require_rank(o.max_n);
  const Format f = parse_format(o.format.empty() ? "csv" : o.format);
  ChainCounter counter(o.p);
  for (int n = 0; n <= o.max_n; ++n) {
    Stopwatch sw;
    ChainCounts c = counter.counts(n);
    emit(make_record(o.p, n, c, "recurrence", sw.elapsed_ms()), f, n == 0, out);
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, const Settings& s, std::ostream& out) {
  require_rank(o.n);
  if (!is_prime(o.p)) {
    throw std::domain_error("p must be prime (got " + std::to_string(o.p) + ")");
  }
  Stopwatch sw;
  const SubgroupLattice lattice = build_lattice(o.p, o.n, o.budget.value_or(s.oracle_budget));
  const OracleCounts oc = count_chains(lattice);
  const double ms = sw.elapsed_ms();

  if (!o.dump_path.empty()) {
    std::ofstream file(o.dump_path);
    if (!file) throw std::invalid_argument("cannot open dump file '" + o.dump_path + "'");
    write_lattice_dump(lattice, file);
  }

  OutputRecord rec = make_record(o.p, o.n, oc.counts, "oracle", ms);
  std::vector<std::string> orders;
  for (const auto& a : oc.subgroups_by_order) orders.push_back(to_decimal(a));

  switch (parse_format(o.format.empty() ? "text" : o.format)) {
    case Format::text: {
      out << "subgroups_by_order:";
      for (std::size_t k = 0; k < orders.size(); ++k) out << (k ? "," : " ") << orders[k];
      out << '\n' << "total_subgroups: " << to_decimal(oc.total_subgroups) << '\n';
      out << to_text_line(rec) << '\n';
      break;
    }
    case Format::json: {
      ordered_json j = record_json(rec);
      j["subgroups_by_order"] = orders;
      j["total_subgroups"] = to_decimal(oc.total_subgroups);
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      emit(rec, Format::csv, true, out);
      break;
  }
  return kExitOk;
}

class CheckLog {
 public:
  explicit CheckLog(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& line) {
    ++total_;
    if (!ok) ++failed_;
    out_ << (ok ? "PASS " : "FAIL ") << line << '\n';
  }
  int finish() {
    out_ << "summary: " << total_ << " checks, " << failed_ << " failed\n";
    return failed_ == 0 ? kExitOk : kExitMismatch;
  }

 private:
  std::ostream& out_;
  int total_ = 0;
  int failed_ = 0;
};

int cmd_verify(const Options& o, bool method_requested, const Settings& s,
               const VerifyHooks& hooks, std::ostream& out) {
  const bool run_methods = method_requested || o.oracle_grid.empty();
  const bool run_oracle = !o.oracle_grid.empty() || !method_requested;
  const std::string grid_spec = o.oracle_grid.empty() ? "2:4,3:3,5:2,7:2" : o.oracle_grid;
  const std::vector<std::int64_t> ps =
      o.p_list.empty() ? std::vector<std::int64_t>{2, 3, 5, 7} : o.p_list;
  const int max_n = o.max_n;
  const std::uint64_t budget = o.budget.value_or(s.oracle_budget);

  // Reject bad input before printing any check lines.
  std::vector<std::pair<std::int64_t, int>> grid;
  if (run_methods) {
    require_rank(max_n);
    for (auto p : ps) require_base(p);
    if (max_n > s.closed_form_max_n) {
      throw std::length_error("--max-n " + std::to_string(max_n) +
                              " exceeds the closed-form limit " +
                              std::to_string(s.closed_form_max_n));
    }
  }
  if (run_oracle) {
    grid = parse_oracle_grid(grid_spec);
    for (const auto& [p, n] : grid) {
      if (!is_prime(p)) {
        throw std::domain_error("p must be prime in --oracle (got " + std::to_string(p) + ")");
      }
      if (galois_number(p, n) > BigCount(static_cast<unsigned long>(budget))) {
        throw BudgetExceeded("oracle grid entry " + std::to_string(p) + ":" + std::to_string(n) +
                                 " has " + galois_number(p, n).get_str() +
                                 " subspaces, over the budget of " + std::to_string(budget),
                             galois_number(p, n));
      }
    }
  }

  CheckLog log(out);
  if (run_methods) {
    for (auto p : ps) {
      for (int n = 1; n <= max_n; ++n) {
        const BigCount a = hooks.recurrence(n, p);
        const BigCount b = hooks.closed_form(n, p, s.closed_form_max_n);
        log.check(a == b, "method p=" + std::to_string(p) + " n=" + std::to_string(n) +
                              " recurrence=" + to_decimal(a) + " closed_form=" + to_decimal(b));
      }
    }
  }
  if (run_oracle) {
    for (const auto& [p, top] : grid) {
      QTable table(p);
      for (int n = 1; n <= top; ++n) {
        const std::string at = " p=" + std::to_string(p) + " n=" + std::to_string(n);
        const OracleCounts oc = count_chains(build_lattice(p, n, budget));
        const BigCount formula = 2 * hooks.recurrence(n, p);
        log.check(oc.counts.F == formula, "oracle-F" + at + " oracle=" + to_decimal(oc.counts.F) +
                                              " formula=" + to_decimal(formula));
        for (int k = 0; k <= n; ++k) {
          const BigCount& expect = table.binomial(n, k);
          const BigCount& got = oc.subgroups_by_order[static_cast<std::size_t>(k)];
          log.check(got == expect, "oracle-subgroups" + at + " k=" + std::to_string(k) +
                                       " oracle=" + to_decimal(got) +
                                       " formula=" + to_decimal(expect));
        }
        const auto& c = oc.counts;
        log.check(c.F == c.D + 1 && c.C == 2 * c.F - 1,
                  "oracle-identities" + at + " F=" + to_decimal(c.F) + " D=" + to_decimal(c.D) +
                      " C=" + to_decimal(c.C));
      }
    }
  }
  return log.finish();
}

}  // namespace

Settings Settings::from_environment() {
  Settings s;
  s.closed_form_max_n = parse_env_number<int>(kEnvClosedFormMaxN, s.closed_form_max_n);
  s.oracle_budget = parse_env_number<std::uint64_t>(kEnvOracleBudget, s.oracle_budget);
  return s;
}

std::string to_json_line(const OutputRecord& r) { return record_json(r).dump(); }

OutputRecord record_from_json(const std::string& line) {
  const auto j = ordered_json::parse(line);
  OutputRecord r;
  if (j.at("p").is_string()) {
    r.p = j.at("p").get<std::string>();
  } else {
    r.p = j.at("p").get<std::int64_t>();
  }
  r.n = j.at("n").get<int>();
  r.F = j.at("F").get<std::string>();
  r.D = j.at("D").get<std::string>();
  r.C = j.at("C").get<std::string>();
  r.method = j.at("method").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string csv_header() { return "p,n,F,D,C,method,elapsed_ms"; }

std::string to_csv_line(const OutputRecord& r) {
  return render_p(r) + "," + std::to_string(r.n) + "," + r.F + "," + r.D + "," + r.C + "," +
         r.method + "," + render_number(r.elapsed_ms);
}

std::string to_text_line(const OutputRecord& r) {
  return "p=" + render_p(r) + " n=" + std::to_string(r.n) + " method=" + r.method + " F=" + r.F +
         " D=" + r.D + " C=" + r.C + " elapsed_ms=" + render_number(r.elapsed_ms);
}

std::vector<std::pair<std::int64_t, int>> parse_oracle_grid(const std::string& spec) {
  std::vector<std::pair<std::int64_t, int>> grid;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    std::size_t used_p = 0;
    std::size_t used_n = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
      const std::string ps = item.substr(0, colon);
      const std::string ns = item.substr(colon + 1);
      const std::int64_t p = std::stoll(ps, &used_p);
      const int n = std::stoi(ns, &used_n);
      if (used_p != ps.size() || used_n != ns.size() || n < 0) {
        throw std::invalid_argument("trailing characters");
      }
      grid.emplace_back(p, n);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad --oracle entry '" + item + "' (expected <prime>:<max-n>)");
    }
  }
  if (grid.empty()) throw std::invalid_argument("empty --oracle grid");
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Settings& settings, const VerifyHooks& hooks) {
  CLI::App app{"Exact chain counts for subgroup lattices of elementary abelian p-groups Z_p^n"};
  app.footer(std::string("Environment:\n  ") + kEnvClosedFormMaxN +
             "  largest n for the closed-form method (default " +
             std::to_string(kDefaultClosedFormMaxN) + ")\n  " + kEnvOracleBudget +
             "      node budget for the lattice oracle (default " +
             std::to_string(kDefaultOracleBudget) + ")");
  app.require_subcommand(1);

  Options o;
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto* count = app.add_subcommand("count", "F, D and C of Z_p^n");
  count->add_option("--p", o.p, "base p >= 2")->required();
  count->add_option("--n", o.n, "rank n >= 0")->required();
  count->add_option("--method", o.method, "recurrence | closed_form")
      ->check(CLI::IsMember({"recurrence", "closed_form"}));
  count->add_option("--format", o.format, "text | json | csv")->check(formats);

  auto* poly = app.add_subcommand("poly", "F(Z_p^n) as a polynomial in p");
  poly->add_option("--n", o.n, "rank n >= 0")->required();
  poly->add_option("--format", o.format, "text | json | csv")->check(formats);

  auto* table = app.add_subcommand("table", "one record per n = 0..max-n");
  table->add_option("--p", o.p, "base p >= 2")->required();
  table->add_option("--max-n", o.max_n, "largest rank")->required();
  table->add_option("--format", o.format, "csv (default) | json | text")->check(formats);

  auto* verify = app.add_subcommand("verify", "cross-check recurrence, closed form and oracle");
  auto* opt_p_list =
      verify->add_option("--p", o.p_list, "comma-separated bases (default 2,3,5,7)")
          ->delimiter(',');
  o.max_n = 10;
  auto* opt_max_n = verify->add_option("--max-n", o.max_n, "largest rank for method checks");
  verify->add_option("--oracle", o.oracle_grid, "oracle grid, e.g. 2:4,3:3");
  verify->add_option("--budget", o.budget, "oracle node budget");

  auto* oracle = app.add_subcommand("oracle", "brute-force lattice counts (p prime)");
  oracle->add_option("--p", o.p, "prime p")->required();
  oracle->add_option("--n", o.n, "rank n >= 0")->required();
  oracle->add_option("--format", o.format, "text | json | csv")->check(formats);
  oracle->add_option("--dump", o.dump_path, "write the lattice to this file");
  oracle->add_option("--budget", o.budget, "oracle node budget");

  std::vector<std::string> argv_store{"subchains"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o, settings, out);
    if (poly->parsed()) return cmd_poly(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (oracle->parsed()) return cmd_oracle(o, settings, out);
    if (verify->parsed()) {
      const bool method_requested = opt_p_list->count() > 0 || opt_max_n->count() > 0;
      return cmd_verify(o, method_requested, settings, hooks, out);
    }
  } catch (const std::logic_error& e) {
    // domain_error, out_of_range, length_error and invalid_argument
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace subchains::cli
