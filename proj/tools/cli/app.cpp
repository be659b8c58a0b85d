#include "app.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permstat/asymptotics.hpp"
#include "permstat/errors.hpp"
#include "permstat/indicator_moment.hpp"
#include "permstat/moments.hpp"
#include "permstat/oracle.hpp"
#include "permstat/parser.hpp"
#include "permstat/partitions.hpp"
#include "permstat/serialize.hpp"

namespace permstat::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string expr;
  int d = 1;
  std::vector<std::string> lambdas;
  bool variance = false;
  bool mean = false;
  int nmax = 6;
  bool json_output = false;
  std::string cache;
  std::optional<int> bell_cap;
};

json poly_json(const Polynomial& p, const VariableNaming& naming = VariableNaming::class_ring()) {
  return json::parse(polynomial_to_json(p, naming));
}

json header(const std::string& command, const Options& opt, const RegularStatistic& psi) {
  return json{{"command", command},
              {"statistic", opt.expr},
              {"power", psi.power()},
              {"shift", psi.shift()},
              {"size", psi.size()}};
}

json expectation_json(const RationalExpectation& e) {
  return json{{"numerator", poly_json(e.numerator())},
              {"denominator", e.denom_falling()},
              {"text", pretty(e)}};
}

std::vector<Partition> parse_lambdas(const std::vector<std::string>& texts) {
  std::vector<Partition> out;
  for (const auto& t : texts) out.push_back(parse_partition(t));
  return out;
}

int cmd_moment(const Options& opt, IndicatorMoments& moments, std::ostream& out) {
  RegularStatistic psi = parse_statistic(opt.expr);
  if (opt.d < 1) throw DomainError("-d must be at least 1");
  auto lambdas = parse_lambdas(opt.lambdas);
  RationalExpectation e = opt.variance ? variance(psi, moments) : moment(psi, opt.d, moments);
  const int d = opt.variance ? 2 : opt.d;

  json evaluations = json::array();
  std::vector<std::string> lines;
  for (const auto& lambda : lambdas) {
    Rational value;
    try {
      value = e.evaluate_at(lambda);
    } catch (const DegenerateEvaluation& err) {
      throw DomainError("cannot evaluate at lambda=" + partition_to_string(lambda) + ": " + err.what());
    }
    evaluations.push_back({{"lambda", lambda}, {"value", to_string(value)}});
    lines.push_back("at lambda=" + partition_to_string(lambda) + ": " + to_string(value));
  }

  if (opt.json_output) {
    json doc = header("moment", opt, psi);
    doc["d"] = d;
    doc["variance"] = opt.variance;
    doc["result"] = expectation_json(e);
    if (!lambdas.empty()) doc["result"]["evaluations"] = evaluations;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << pretty(e) << "\n";
  out << "numerator: " << e.numerator().to_string() << "\n";
  out << "denominator: " << denominator_to_string(e) << "\n";
  if (!opt.variance) {
    const int dq = d * psi.shift();
    Polynomial cleared = e.cleared_to_falling(dq);
    out << "degree: (n)_" << dq << " * E[psi^" << d << "] has graded degree "
        << (cleared.is_zero() ? std::string("-inf") : std::to_string(cleared.graded_degree()))
        << " <= " << d * psi.power() + dq << " = d*p + d*q (p=" << psi.power()
        << ", q=" << psi.shift() << ")\n";
  }
  for (const auto& line : lines) out << line << "\n";
  return kOk;
}

int cmd_limit(const Options& opt, IndicatorMoments& moments, std::ostream& out) {
  RegularStatistic psi = parse_statistic(opt.expr);
  if (opt.mean && opt.variance) throw DomainError("choose one of --mean and --variance");
  const auto& naming = VariableNaming::limits();
  json doc = header("limit", opt, psi);
  std::string text;
  if (opt.variance) {
    VarianceLimit v = variance_limit(psi, moments);
    doc["result"] = {{"kind", "variance"},
                     {"numerator", poly_json(v.v1 + v.v2 * Polynomial::variable(1), naming)},
                     {"denominator", json::array()},
                     {"v1", poly_json(v.v1, naming)},
                     {"v2", poly_json(v.v2, naming)},
                     {"text", "V1(alpha) = " + v.v1.to_string(naming) +
                                  ", V2(alpha) = " + v.v2.to_string(naming)}};
    text = "p=" + std::to_string(v.power) + ", V1(alpha) = " + v.v1.to_string(naming) +
           ", V2(alpha) = " + v.v2.to_string(naming);
  } else {
    Polynomial f = alpha_limit(psi, moments);
    Rational at_zero = f.constant_term();
    doc["result"] = {{"kind", "mean"},
                     {"numerator", poly_json(f, naming)},
                     {"denominator", json::array()},
                     {"f0", to_string(at_zero)},
                     {"text", "f(alpha) = " + f.to_string(naming)}};
    text = "p=" + std::to_string(psi.power()) + ", f(alpha) = " + f.to_string(naming) +
           "\nf(0) = " + to_string(at_zero);
  }
  if (opt.json_output) out << doc.dump(2) << "\n";
  else out << text << "\n";
  return kOk;
}

int cmd_verify(const Options& opt, IndicatorMoments& moments, std::ostream& out) {
  RegularStatistic psi = parse_statistic(opt.expr);
  if (opt.d < 1) throw DomainError("-d must be at least 1");
  if (opt.nmax < 1) throw DomainError("--nmax must be at least 1");
  if (opt.nmax > oracle::kDefaultMaxN) {
    throw ResourceLimit("--nmax " + std::to_string(opt.nmax) + " exceeds the oracle cap " +
                        std::to_string(oracle::kDefaultMaxN));
  }
  std::vector<RationalExpectation> class_moments, uniform_moments;
  for (int d = 1; d <= opt.d; ++d) {
    class_moments.push_back(moment(psi, d, moments));
    uniform_moments.push_back(uniform_moment(psi, d));
  }

  int passed = 0, failed = 0, skipped = 0;
  json cells = json::array();
  std::vector<std::string> lines;
  auto skip = [&](json& cell, std::string& line, int d, const std::string& where,
                  const std::string& why, const Rational& expected) {
    ++skipped;
    cell["status"] = "SKIP";
    line = "SKIP d=" + std::to_string(d) + " lambda=" + where + " (" + why +
           ") oracle=" + to_string(expected);
  };
  // The uniform form is exact once n reaches the size and shift of every
  // translate of psi^d; below that its cancelled factors can hide a 0/0.
  const int uniform_from = std::max(psi.size(), psi.shift());
  auto record = [&](int d, const std::string& where, const RationalExpectation& e,
                    const Partition& at, const Rational& expected, bool uniform) {
    json cell{{"d", d}, {"lambda", where}, {"oracle", to_string(expected)}};
    std::string line;
    try {
      if (uniform && partition_size(at) < d * uniform_from) {
        skip(cell, line, d, where, "n below the size of psi^d", expected);
        cells.push_back(cell);
        lines.push_back(line);
        return;
      }
      Rational value = e.evaluate_at(at);
      cell["engine"] = to_string(value);
      if (value == expected) {
        ++passed;
        cell["status"] = "PASS";
        line = "PASS d=" + std::to_string(d) + " lambda=" + where + " value=" + to_string(value);
      } else {
        ++failed;
        cell["status"] = "FAIL";
        line = "FAIL d=" + std::to_string(d) + " lambda=" + where + " engine=" + to_string(value) +
               " oracle=" + to_string(expected);
      }
    } catch (const DegenerateEvaluation&) {
      skip(cell, line, d, where, "n below the denominator length", expected);
    }
    cells.push_back(cell);
    lines.push_back(line);
  };

  for (int n = 1; n <= opt.nmax; ++n) {
    // Power sums of psi per class, from one pass over S_n.
    std::map<Partition, std::vector<Rational>> sums;
    std::map<Partition, long> counts;
    oracle::for_each_permutation(n, [&](const Permutation& pi) {
      Partition lambda = oracle::cycle_type(pi);
      auto& s = sums[lambda];
      s.resize(opt.d, Rational(0));
      Rational value = psi.evaluate(pi), power = 1;
      for (int d = 0; d < opt.d; ++d) {
        power *= value;
        s[d] += power;
      }
      ++counts[lambda];
    });
    std::vector<Rational> total(opt.d, Rational(0));
    long all = 0;
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= opt.d; ++d) {
        Rational expected = sums[lambda][d - 1] / Rational(counts[lambda]);
        record(d, partition_to_string(lambda), class_moments[d - 1], lambda, expected, false);
        total[d - 1] += sums[lambda][d - 1];
      }
      all += counts[lambda];
    }
    for (int d = 1; d <= opt.d; ++d) {
      record(d, "S_" + std::to_string(n), uniform_moments[d - 1], Partition{n},
             total[d - 1] / Rational(all), true);
    }
  }

  if (opt.json_output) {
    json doc = header("verify", opt, psi);
    doc["result"] = {{"numerator", poly_json(class_moments.front().numerator())},
                     {"denominator", class_moments.front().denom_falling()},
                     {"cells", cells},
                     {"passed", passed},
                     {"failed", failed},
                     {"skipped", skipped}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& line : lines) out << line << "\n";
    out << "verify: " << passed << " PASS, " << failed << " FAIL, " << skipped << " SKIP\n";
  }
  return failed == 0 ? kOk : kConsistency;
}

int cmd_expand(const Options& opt, std::ostream& out) {
  RegularStatistic psi = parse_statistic(opt.expr);
  auto translates = psi.translates();
  if (opt.json_output) {
    json list = json::array();
    for (const auto& t : translates) {
      list.push_back({{"translate", t.to_string()},
                      {"size", t.size()},
                      {"shift", t.shift()},
                      {"power", t.power()}});
    }
    json doc = header("expand", opt, psi);
    doc["result"] = {{"translates", list}, {"expression", psi.to_string()}};
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (translates.empty()) out << "0\n";
  for (std::size_t i = 0; i < translates.size(); ++i) {
    const auto& t = translates[i];
    out << (i ? "+ " : "") << t.to_string() << "  # size=" << t.size() << " shift=" << t.shift()
        << " power=" << t.power() << "\n";
  }
  out << "# translates=" << translates.size() << " size=" << psi.size() << " shift=" << psi.shift()
      << " power=" << psi.power() << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments of regular permutation statistics by cycle type", "permstat"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("expr", opt.expr, "Statistic expression")->required();
    sub->add_flag("--json", opt.json_output, "Emit JSON");
    sub->add_option("--cache", opt.cache, "On-disk indicator-moment cache (JSON)");
    sub->add_option("--bell-cap", opt.bell_cap, "Largest support for the set-partition sum")
        ->check(CLI::Range(1, 16));
  };

  auto* moment_cmd = app.add_subcommand("moment", "Symbolic E[psi^d] by cycle type");
  add_common(moment_cmd);
  moment_cmd->add_option("-d,--degree", opt.d, "Moment order")->check(CLI::PositiveNumber);
  moment_cmd->add_option("--lambda", opt.lambdas, "Evaluate at a cycle type, e.g. 4,2,1")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  moment_cmd->add_flag("--variance", opt.variance, "Class variance instead of a moment");

  auto* limit_cmd = app.add_subcommand("limit", "Scaled mean or variance limit");
  add_common(limit_cmd);
  limit_cmd->add_flag("--mean", opt.mean, "Mean limit f(alpha) (default)");
  limit_cmd->add_flag("--variance", opt.variance, "Variance limit V1(alpha) + beta V2(alpha)");

  auto* verify_cmd = app.add_subcommand("verify", "Compare against brute force over small S_n");
  add_common(verify_cmd);
  verify_cmd->add_option("--nmax", opt.nmax, "Largest n to enumerate");
  verify_cmd->add_option("-d,--degree", opt.d, "Check moments 1..d")->check(CLI::PositiveNumber);

  auto* expand_cmd = app.add_subcommand("expand", "Canonical translate expansion");
  add_common(expand_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  IndicatorMoments moments(opt.bell_cap.value_or(kDefaultBellCap));
  try {
    if (!opt.cache.empty()) moments.load(opt.cache);
    int code = kOk;
    if (*moment_cmd) code = cmd_moment(opt, moments, out);
    else if (*limit_cmd) code = cmd_limit(opt, moments, out);
    else if (*verify_cmd) code = cmd_verify(opt, moments, out);
    else code = cmd_expand(opt, out);
    if (!opt.cache.empty()) moments.save(opt.cache);
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const DivergenceError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace permstat::cli
