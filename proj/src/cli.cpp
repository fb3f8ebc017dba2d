#include "severi/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "severi/cache.hpp"
#include "severi/gold.hpp"
#include "severi/irreducible.hpp"

namespace severi {

namespace {

struct KeyArgs {
  int d = 0;
  int delta = 0;
  long long genus_in = 0;
  std::string alpha_text = "0";
  std::string beta_text;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* genus_opt = nullptr;
};

void add_key_options(CLI::App* sub, KeyArgs& ka) {
  sub->add_option("--d", ka.d, "curve degree")->required()->check(CLI::Range(1, 512));
  ka.delta_opt = sub->add_option("--delta", ka.delta, "node count");
  ka.genus_opt =
      sub->add_option("--genus", ka.genus_in, "geometric genus, converted to delta");
  ka.delta_opt->excludes(ka.genus_opt);
  ka.genus_opt->excludes(ka.delta_opt);
  sub->add_option("--alpha", ka.alpha_text,
                  "assigned contacts, comma separated ('0' or '' for none)");
  sub->add_option("--beta", ka.beta_text,
                  "unassigned contacts, comma separated ('0' or '' for none)")
      ->required();
}

SeveriKey make_key(const KeyArgs& ka) {
  if (ka.delta_opt->count() == 0 && ka.genus_opt->count() == 0) {
    throw std::invalid_argument("exactly one of --delta or --genus is required");
  }
  int delta = ka.delta;
  if (ka.genus_opt->count() > 0) {
    long long from_genus = genus(ka.d, 0) - ka.genus_in;
    if (from_genus < 0) {
      throw std::invalid_argument(
          "genus " + std::to_string(ka.genus_in) + " exceeds the maximum (d-1)(d-2)/2 = " +
          std::to_string(genus(ka.d, 0)) + " for d = " + std::to_string(ka.d));
    }
    delta = static_cast<int>(from_genus);
  }
  SeveriKey key{ka.d, delta, parse_seq(ka.alpha_text), parse_seq(ka.beta_text)};
  if (!validate(key)) throw std::invalid_argument(validation_error(key));
  return key;
}

MemoStore open_memo(const std::optional<std::string>& cache_path) {
  if (cache_path && std::filesystem::exists(*cache_path)) return load(*cache_path);
  return MemoStore{};
}

void close_memo(const MemoStore& memo, const std::optional<std::string>& cache_path) {
  if (cache_path) save(memo, *cache_path);
}

std::string json_seq(const TangencySeq& a) {
  std::string out = "[";
  for (int i = 1; i <= a.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(a.at(i));
  }
  return out + "]";
}

std::string json_key(const SeveriKey& key) {
  return "{\"d\":" + std::to_string(key.d) + ",\"delta\":" + std::to_string(key.delta) +
         ",\"alpha\":" + json_seq(key.alpha) + ",\"beta\":" + json_seq(key.beta) + "}";
}

std::string json_result(const SeveriKey& key, const Degree& value) {
  std::string obj = json_key(key);
  obj.pop_back();
  return obj + ",\"N\":\"" + to_decimal(value) + "\"}";
}

void emit_value(std::ostream& out, const std::string& format, const SeveriKey& key,
                const Degree& value) {
  if (format == "json") {
    out << json_result(key, value) << "\n";
  } else if (format == "csv") {
    out << "d,delta,alpha,beta,N\n"
        << key.d << ',' << key.delta << ",\"" << to_string(key.alpha) << "\",\""
        << to_string(key.beta) << "\"," << to_decimal(value) << "\n";
  } else {
    out << to_decimal(value) << "\n";
  }
}

void emit_table(std::ostream& out, const std::string& format, int d,
                const std::vector<TableRow>& rows) {
  if (format == "json") {
    const TangencySeq beta{d};
    for (const TableRow& row : rows) {
      out << json_result(SeveriKey{d, row.delta, {}, beta}, row.value) << "\n";
    }
  } else if (format == "csv") {
    out << "delta,genus,N\n";
    for (const TableRow& row : rows) {
      out << row.delta << ',' << row.genus << ',' << to_decimal(row.value) << "\n";
    }
  } else {
    out << "delta genus N\n";
    for (const TableRow& row : rows) {
      out << row.delta << ' ' << row.genus << ' ' << to_decimal(row.value) << "\n";
    }
  }
}

void emit_terms(std::ostream& out, const std::string& format,
                const std::vector<RecursionTerm>& terms) {
  for (const RecursionTerm& t : terms) {
    const bool assign = t.kind == TermKind::AssignContact;
    if (format == "json") {
      out << "{\"kind\":\"" << (assign ? "assign" : "split") << "\"";
      if (assign) out << ",\"k\":" << t.contact_order;
      out << ",\"coeff\":\"" << to_decimal(t.coefficient())
          << "\",\"child\":" << json_key(t.child) << ",\"omega\":\""
          << to_decimal(t.omega_choices) << "\",\"branches\":\""
          << to_decimal(t.branch_count) << "\",\"mult\":" << t.branch_multiplicity
          << "}\n";
    } else if (format == "csv") {
      out << (assign ? "assign" : "split") << ',' << to_decimal(t.coefficient()) << ','
          << t.child.d << ',' << t.child.delta << ",\"" << to_string(t.child.alpha)
          << "\",\"" << to_string(t.child.beta) << "\"," << to_decimal(t.omega_choices)
          << ',' << to_decimal(t.branch_count) << ',' << t.branch_multiplicity << "\n";
    } else {
      out << (assign ? "assign" : "split");
      if (assign) out << " k=" << t.contact_order;
      out << " coeff=" << to_decimal(t.coefficient()) << " child="
          << render_compact(t.child);
      if (!assign) out << " omega=" << to_decimal(t.omega_choices);
      out << " branches=" << to_decimal(t.branch_count) << " mult="
          << t.branch_multiplicity << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degrees of Severi varieties of nodal plane curves with "
               "tangency conditions along a fixed line",
               "severi"};
  app.require_subcommand(1);

  std::string format = "plain";
  std::optional<std::string> cache_path;
  bool parallel = false;
  int max_d = 5;

  KeyArgs compute_args, irr_args, expand_args;
  int table_d = 0;

  CLI::App* compute = app.add_subcommand("compute", "degree of one Severi variety");
  add_key_options(compute, compute_args);

  CLI::App* irreducible =
      app.add_subcommand("irreducible", "degree of the irreducible-curve components");
  add_key_options(irreducible, irr_args);

  CLI::App* table_cmd =
      app.add_subcommand("table", "degrees for all node counts at fixed degree");
  table_cmd->add_option("--d", table_d, "curve degree")
      ->required()
      ->check(CLI::Range(1, 512));

  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "one step of the degeneration recursion, term by term");
  add_key_options(expand_cmd, expand_args);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "recompute every embedded reference value");

  CLI::App* crosscheck_cmd = app.add_subcommand(
      "crosscheck", "compare genus-0 irreducible degrees against Kontsevich's recursion");
  crosscheck_cmd->add_option("--max-d", max_d, "largest degree to check")
      ->check(CLI::Range(2, 16));

  for (CLI::App* sub : {compute, irreducible, table_cmd, expand_cmd}) {
    sub->add_option("--format", format, "plain, csv, or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
  }
  for (CLI::App* sub : {compute, irreducible, table_cmd, verify_cmd, crosscheck_cmd}) {
    sub->add_option("--cache", cache_path, "memo cache file to load and update");
    sub->add_flag("--parallel", parallel, "evaluate independent subtrees concurrently");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  EngineOptions opt;
  opt.parallel = parallel;

  try {
    if (app.got_subcommand(compute)) {
      SeveriKey key = make_key(compute_args);
      MemoStore memo = open_memo(cache_path);
      Degree value = degree(key, memo, opt);
      emit_value(out, format, key, value);
      close_memo(memo, cache_path);
    } else if (app.got_subcommand(irreducible)) {
      SeveriKey key = make_key(irr_args);
      MemoStore memo = open_memo(cache_path);
      Degree value = irr_degree(key, memo, opt);
      emit_value(out, format, key, value);
      close_memo(memo, cache_path);
    } else if (app.got_subcommand(table_cmd)) {
      MemoStore memo = open_memo(cache_path);
      emit_table(out, format, table_d, table(table_d, memo, opt));
      close_memo(memo, cache_path);
    } else if (app.got_subcommand(expand_cmd)) {
      emit_terms(out, format, expand(make_key(expand_args)));
    } else if (app.got_subcommand(verify_cmd)) {
      MemoStore memo = open_memo(cache_path);
      bool ok = run_verify(memo, out, opt);
      close_memo(memo, cache_path);
      if (!ok) {
        err << "error: verification failed\n";
        return 2;
      }
    } else if (app.got_subcommand(crosscheck_cmd)) {
      MemoStore memo = open_memo(cache_path);
      bool ok = true;
      for (int d = 2; d <= max_d; ++d) {
        SeveriKey key{d, static_cast<int>(genus(d, 0)), {}, TangencySeq{d}};
        Degree irr = irr_degree(key, memo, opt);
        Degree oracle = kontsevich_genus0(d);
        if (irr == oracle) {
          out << "ok d=" << d << ": " << to_decimal(irr) << "\n";
        } else {
          out << "FAIL d=" << d << ": irreducible " << to_decimal(irr)
              << ", oracle " << to_decimal(oracle) << "\n";
          ok = false;
        }
      }
      close_memo(memo, cache_path);
      if (!ok) {
        err << "error: crosscheck failed\n";
        return 2;
      }
    }
  } catch (const CacheCorruption& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const IntegrityError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace severi
