// Command line front end: evaluate diagram expressions, enumerate canonical
// hom-sets, and run the verification suites.
//
// Exit codes: 0 success, 1 suite failure, 2 parse error, 3 type error.

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "corel/expr.hpp"
#include "corel/verify.hpp"

namespace {

using corel::DimensionError;
using corel::ParseError;
using corel::PreconditionError;
using corel::TypeError;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitType = 3;

template <typename Fn>
auto with_engine(const std::string& name, Fn&& fn) {
  if (name == "finset") return fn(corel::FinSetEngine{});
  if (name == "pf") return fn(corel::PartialFnEngine{});
  if (name == "linq") return fn(corel::LinQEngine{});
  if (name.rfind("linfp:", 0) == 0) {
    long long p = 0;
    try {
      p = std::stoll(name.substr(6));
    } catch (const std::exception&) {
      throw ParseError("bad GF(p) engine name: " + name);
    }
    return fn(corel::LinFpEngine{corel::FpField(p)});
  }
  if (name == "z") return fn(corel::PidEngine{});
  throw ParseError("unknown engine '" + name + "' (use finset, pf, linq, linfp:<p>, z)");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
}

int cmd_compose(const std::string& file, const std::string& engine) {
  const json j = load_json_file(file);
  const auto ast = corel::expr::parse_expr(j);
  return with_engine(engine, [&](auto eng) {
    auto value = corel::expr::eval(eng, ast);
    std::cout << corel::expr::value_to_json(eng, value).dump() << "\n";
    return kExitOk;
  });
}

// Enumeration sizes are guarded; listing an exponential family needs an
// explicit higher cap.
int cmd_enumerate(const std::string& engine, int n, int m, const std::string& kind,
                  bool as_json, long long limit) {
  if (n < 0 || m < 0) throw ParseError("boundaries must be natural numbers");
  std::vector<json> items;
  if (engine == "finset") {
    corel::FinSetEngine e;
    if (kind == "corel") {
      if (n + m > 20) throw PreconditionError("boundaries too large to enumerate");
      const auto counts = corel::verify::bell_numbers(n + m);
      if (counts[n + m] > limit)
        throw PreconditionError("enumeration would produce " + std::to_string(counts[n + m]) +
                                " corelations; raise --limit to list them");
      for (auto& blocks : corel::enumerate::set_partitions(n + m))
        items.push_back(corel::io::encode(e, corel::Partition{n, m, std::move(blocks)}));
    } else {
      const long long cells = static_cast<long long>(n) * m;
      if (cells > 62 || (1LL << cells) > limit)
        throw PreconditionError("enumeration would produce 2^" + std::to_string(cells) +
                                " relations; raise --limit to list them");
      std::vector<std::pair<int, int>> universe;
      for (int i = 0; i < n; ++i)
        for (int jx = 0; jx < m; ++jx) universe.emplace_back(i, jx);
      for (long long mask = 0; mask < (1LL << cells); ++mask) {
        corel::RelationTable r{n, m, {}};
        for (std::size_t b = 0; b < universe.size(); ++b)
          if (mask & (1LL << b)) r.pairs.push_back(universe[b]);
        items.push_back(corel::io::encode(e, r));
      }
    }
  } else if (engine == "pf") {
    if (kind != "corel")
      throw TypeError("the pf engine has corelations only");
    corel::PartialFnEngine e;
    if (n + m > 14) throw PreconditionError("boundaries too large to enumerate");
    if (corel::verify::partial_partition_count(n + m) > limit)
      throw PreconditionError("enumeration too large; raise --limit");
    for (auto& blocks : corel::enumerate::partial_set_partitions(n + m))
      items.push_back(corel::io::encode(e, corel::PartialPartition{n, m, std::move(blocks)}));
  } else if (engine.rfind("linfp:", 0) == 0) {
    corel::LinFpEngine e{corel::FpField(std::stoll(engine.substr(6)))};
    const double mid = (n + m) / 2.0;
    if (std::pow(static_cast<double>(e.field.p), mid * mid) > 9e17)
      throw PreconditionError("boundaries too large to enumerate");
    if (corel::verify::fp_subspace_count(e.field.p, n + m) > limit)
      throw PreconditionError("enumeration too large; raise --limit");
    for (auto& basis : corel::enumerate::all_fp_subspace_bases(e.field, n + m)) {
      if (kind == "corel")
        items.push_back(
            corel::io::encode(e, corel::LinCorelForm<std::int64_t>{n, m, std::move(basis)}));
      else
        items.push_back(
            corel::io::encode(e, corel::LinRelForm<std::int64_t>{n, m, std::move(basis)}));
    }
  } else if (engine == "linq" || engine == "z") {
    throw TypeError("hom-sets over '" + engine + "' are infinite and cannot be enumerated");
  } else {
    throw ParseError("unknown engine '" + engine + "'");
  }

  if (as_json) {
    json out;
    out["engine"] = engine;
    out["kind"] = kind;
    out["dom"] = n;
    out["cod"] = m;
    out["count"] = items.size();
    out["items"] = items;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "count " << items.size() << "\n";
    for (const auto& it : items) std::cout << it.dump() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& suites, const corel::verify::RunOptions& opts,
               bool as_json) {
  std::vector<corel::verify::SuiteReport> reps;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    reps = corel::verify::run_battery(opts.seed);
  } else {
    for (const auto& name : suites) {
      auto batch = corel::verify::run_suite(name, opts);
      reps.insert(reps.end(), batch.begin(), batch.end());
    }
  }
  if (as_json)
    std::cout << corel::verify::reports_to_json(reps, opts.seed).dump(2) << "\n";
  else
    std::cout << corel::verify::reports_to_text(reps, opts.seed);
  return corel::verify::all_ok(reps) ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact span/cospan calculus with corelation and relation quotients"};
  app.require_subcommand(1);

  std::string engine = "finset";
  std::string file;
  auto* compose = app.add_subcommand("compose", "evaluate a diagram expression file");
  compose->add_option("file", file, "JSON expression file")->required();
  compose->add_option("--engine", engine, "finset | pf | linq | linfp:<p> | z");

  int en = 0, em = 0;
  std::string kind = "corel";
  bool ejson = false;
  long long elimit = 10000;
  auto* enumerate = app.add_subcommand("enumerate", "list canonical hom-set members");
  enumerate->add_option("--engine", engine, "finset | pf | linfp:<p>");
  enumerate->add_option("-n,--dom", en, "domain boundary")->required();
  enumerate->add_option("-m,--cod", em, "codomain boundary")->required();
  enumerate->add_option("--kind", kind, "corel | rel")
      ->check(CLI::IsMember({"corel", "rel"}));
  enumerate->add_flag("--json", ejson, "emit one JSON object");
  enumerate->add_option("--limit", elimit, "refuse enumerations beyond this many items");

  std::vector<std::string> suites;
  std::string subcat = "A";
  std::string lattice;
  bool dual = false, vjson = false;
  int bound = -1, samples = -1;
  std::uint64_t seed = corel::verify::kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suites", suites, "suite names, or 'all'");
  verify->add_option("--engine", engine, "finset | pf | linq | linfp:<p> | z");
  verify->add_option("--subcat", subcat, "M | A | all (F is an alias for all)");
  verify->add_flag("--dual", dual, "check the dual direction (assumption suite)");
  verify->add_option("--bound", bound, "instance size bound");
  verify->add_option("--samples", samples, "sample count for infinite engines");
  verify->add_option("--seed", seed, "seed for sampled suites");
  verify->add_option("--lattice", lattice, "builtin name or JSON file (lattice suite)");
  verify->add_flag("--json", vjson, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (compose->parsed()) return cmd_compose(file, engine);
    if (enumerate->parsed()) return cmd_enumerate(engine, en, em, kind, ejson, elimit);
    if (verify->parsed()) {
      corel::verify::RunOptions opts;
      opts.engine = engine;
      if (subcat == "M")
        opts.subcat = corel::verify::Subcat::M;
      else if (subcat == "A")
        opts.subcat = corel::verify::Subcat::A;
      else if (subcat == "all" || subcat == "F" || subcat == "C")
        opts.subcat = corel::verify::Subcat::All;
      else
        throw ParseError("unknown subcat '" + subcat + "'");
      opts.direction =
          dual ? corel::verify::Direction::dual : corel::verify::Direction::primal;
      opts.bound = bound;
      opts.samples = samples;
      opts.seed = seed;
      opts.lattice = lattice;
      return cmd_verify(suites, opts, vjson);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kExitType;
  } catch (const DimensionError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kExitType;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitType;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSuiteFailure;
  }
  return kExitOk;
}
