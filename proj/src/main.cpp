// Command line front end: generating functions for every model, cross
// checks between them, identity sweeps, involution verification and the
// plane partition utilities.  All output is JSON; exit status 0 means
// success, 1 a failed verification, 2 a usage error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsasm/amt.hpp"
#include "vsasm/identities.hpp"
#include "vsasm/involutions.hpp"
#include "vsasm/laurent.hpp"
#include "vsasm/model_json.hpp"
#include "vsasm/pairs.hpp"
#include "vsasm/paths.hpp"
#include "vsasm/poly_json.hpp"

namespace {

using nlohmann::json;
using namespace vsasm;

bool g_pretty = false;

void emit(const json& j) {
  std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int check_failure(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

unsigned thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* s = std::getenv("VSASM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return hw;
}

// Runs the tasks on up to thread_cap() workers; results keep task order.
std::vector<LaurentPoly> run_parallel(
    const std::vector<std::function<LaurentPoly()>>& tasks) {
  std::vector<LaurentPoly> out(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned workers = std::min<std::size_t>(thread_cap(), tasks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);
  return out;
}

Row parse_bottom(const std::string& s) {
  Row bottom;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    bottom.push_back(std::stoi(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return bottom;
}

// Evaluation points are given as comma separated assignments; u, v, w
// name single variables, X sets every X_i at once and X<k> a single one.
std::vector<Rat> parse_spec(const std::string& s, int n) {
  std::vector<Rat> values(3 + n, Rat(1));
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(pos, comma - pos);
    pos = comma + 1;
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad assignment '" + tok + "'");
    std::string key = tok.substr(0, eq);
    Rat value(tok.substr(eq + 1));
    if (key == "u") {
      values[0] = value;
    } else if (key == "v") {
      values[1] = value;
    } else if (key == "w") {
      values[2] = value;
    } else if (key == "X") {
      for (int i = 0; i < n; ++i) values[3 + i] = value;
    } else if (key.size() > 1 && key[0] == 'X') {
      int i = std::stoi(key.substr(1));
      if (i < 1 || i > n)
        throw std::invalid_argument("variable '" + key + "' out of range");
      values[2 + i] = value;
    } else {
      throw std::invalid_argument("unknown variable '" + key + "'");
    }
  }
  return values;
}

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {
      "brute", "operator", "antisym", "bialternant", "i1", "i1det",
      "i2",    "i2det",    "i3",      "i3det",       "jt4", "pairs"};
  return names;
}

bool model_takes_bottom(const std::string& model) {
  return model == "brute" || model == "operator" || model == "antisym";
}

bool model_is_enumerative(const std::string& model) {
  return model == "brute" || model == "i1" || model == "i2" ||
         model == "i3" || model == "pairs";
}

std::function<LaurentPoly()> model_task(const std::string& model, int n,
                                        const Row& bottom, RingPtr ring) {
  if (model == "brute") return [=] { return gf_brute(bottom, ring); };
  if (model == "operator") return [=] { return gf_operator(bottom, ring); };
  if (model == "antisym") return [=] { return gf_antisym(bottom, ring); };
  if (model == "bialternant") return [=] { return gf_bialternant(n, ring); };
  if (model == "i1") return [=] { return enum_gf_interp1(n, ring); };
  if (model == "i1det") return [=] { return det_gf_interp1(n, ring); };
  if (model == "i2") return [=] { return enum_gf_interp2(n, ring); };
  if (model == "i2det") return [=] { return det_gf_interp2(n, ring); };
  if (model == "i3") return [=] { return enum_gf_interp3(n, ring); };
  if (model == "i3det") return [=] { return det_gf_interp3(n, ring); };
  if (model == "jt4") return [=] { return det_gf_jt4(n, ring); };
  if (model == "pairs") return [=] { return enum_gf_pairs(n, ring); };
  throw std::invalid_argument("unknown model '" + model + "'");
}

int run_gf(const std::string& model, int n, const std::string& bottom_str) {
  Row bottom;
  if (!bottom_str.empty()) {
    if (!model_takes_bottom(model))
      return usage_error("model '" + model + "' is defined for the staircase "
                         "bottom row only");
    bottom = parse_bottom(bottom_str);
    if (static_cast<int>(bottom.size()) != n)
      return usage_error("--bottom needs exactly n entries");
    for (std::size_t i = 1; i < bottom.size(); ++i)
      if (bottom[i] <= bottom[i - 1])
        return usage_error("--bottom must be strictly increasing");
  } else {
    bottom = staircase_bottom(n);
  }
  auto ring = Ring::uvwx(n);
  emit(poly_to_json(model_task(model, n, bottom, ring)()));
  return 0;
}

int run_count(int n, const std::string& spec) {
  auto values = parse_spec(spec, n);
  Rat r = gf_eval(staircase_bottom(n), values);
  if (denominator(r) == 1) {
    std::cout << numerator(r).str() << "\n";
  } else {
    std::cout << "\"" << numerator(r).str() << "/" << denominator(r).str()
              << "\"\n";
  }
  return 0;
}

int run_crosscheck(int n, bool slow) {
  auto ring = Ring::uvwx(n);
  Row bottom = staircase_bottom(n);
  std::vector<std::string> models;
  std::vector<std::function<LaurentPoly()>> tasks;
  for (const auto& model : model_names()) {
    if (n >= 4 && !slow && model_is_enumerative(model) && model != "brute")
      continue;
    models.push_back(model);
    tasks.push_back(model_task(model, n, bottom, ring));
  }
  auto results = run_parallel(tasks);
  json matrix = json::array();
  bool all_equal = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < results.size(); ++j) {
      bool eq = results[i] == results[j];
      row.push_back(eq);
      if (!eq) {
        all_equal = false;
        if (i < j)
          std::cerr << "mismatch: " << models[i] << " != " << models[j]
                    << "\n";
      }
    }
    matrix.push_back(row);
  }
  emit({{"n", n},
        {"models", models},
        {"equal", matrix},
        {"all_equal", all_equal}});
  return all_equal ? 0 : 1;
}

int run_verify_identities(const std::string& only) {
  std::vector<std::string> names;
  if (only.empty()) {
    names = identity_names();
  } else {
    names.push_back(only);
  }
  bool all_pass = true;
  for (const auto& name : names) {
    for (const auto& params : identity_default_params(name)) {
      IdentityCase c = verify_identity(name, params);
      all_pass = all_pass && c.pass;
      emit({{"name", c.name},
            {"params", c.params},
            {"status", c.pass ? "pass" : "fail"}});
    }
  }
  return all_pass ? 0 : 1;
}

int permutation_sign(const std::vector<int>& sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

struct InvolutionReport {
  long inputs_checked = 0;
  long fixed_points = 0;
  Int signed_sum = 0;
  bool ok = true;
  std::string detail;

  void fail(const std::string& msg) {
    if (ok) detail = msg;
    ok = false;
  }
};

// Every plain path expands into signed colored copies that net to one,
// and uncoloring any copy recovers the source path; over all plain paths
// each colored path arises exactly once with its own sign.
void verify_ba(int max_p, int max_j, InvolutionReport& report) {
  for (int j = 1; j <= max_j; ++j) {
    for (int p = j; p <= max_p; ++p) {
      long plain_count = 0;
      long copy_count = 0;
      for_each_plain_path(p, j, [&](const ColoredPath& plain) {
        ++plain_count;
        ++report.inputs_checked;
        auto copies = expand_plain_path(plain, p, j);
        int net = 0;
        for (const auto& [copy, sign] : copies) {
          ++copy_count;
          net += sign;
          report.signed_sum += sign;
          validate_colored_path(copy, p, j);
          if (sign != colored_sign(copy))
            report.fail("copy sign differs from its path sign");
          if (!(colored_to_plain(copy, p, j) == plain))
            report.fail("uncoloring does not recover the source path");
        }
        if (net != 1) report.fail("signed copies of a path do not net to 1");
      });
      report.fixed_points += plain_count;
      long colored_count = 0;
      for_each_colored_path(p, j, [&](const ColoredPath& colored) {
        ++colored_count;
        auto copies = expand_plain_path(colored_to_plain(colored, p, j), p, j);
        long hits = 0;
        for (const auto& [copy, sign] : copies)
          if (copy == colored) ++hits;
        if (hits != 1)
          report.fail("a colored path is not produced exactly once");
      });
      if (copy_count != colored_count)
        report.fail("total copies differ from the colored path count");
    }
  }
}

// The shared-run shift is a sign reversing involution on reflected
// paths; the fixed paths are positive and counted by a single binomial.
void verify_sum2(int max_i, int max_j, InvolutionReport& report) {
  for (int i = 1; i <= max_i; ++i) {
    for (int j = 1; j <= max_j; ++j) {
      long fixed = 0;
      Int signed_here = 0;
      for_each_reflected_path(i, j, [&](const ColoredPath& path) {
        ++report.inputs_checked;
        int sign = reflected_sign(path);
        report.signed_sum += sign;
        signed_here += sign;
        ColoredPath image = reflected_involution(path, i, j);
        if (!(reflected_involution(image, i, j) == path))
          report.fail("applying the map twice does not restore the path");
        bool fixed_here = is_reflected_fixed(path, i, j);
        if (fixed_here != (image == path))
          report.fail("fixed point test disagrees with the map");
        if (fixed_here) {
          ++fixed;
          if (sign != 1) report.fail("a fixed path has negative sign");
        } else if (reflected_sign(image) != -sign) {
          report.fail("the map does not flip the sign");
        }
      });
      report.fixed_points += fixed;
      if (signed_here != binom(i + j - 1, 2 * j - i - 1))
        report.fail("signed sum differs from the binomial count");
    }
  }
}

// The straight-descent trade is a weight negating involution on colored
// paths whose fixed class carries the full generating function.
void verify_signless(int max_p, int max_j, InvolutionReport& report) {
  for (int j = 1; j <= max_j; ++j) {
    auto ring = Ring::uvwx(j);
    for (int p = j; p <= max_p; ++p) {
      LaurentPoly total = LaurentPoly::zero(ring);
      LaurentPoly fixed_total = LaurentPoly::zero(ring);
      for_each_colored_path(p, j, [&](const ColoredPath& path) {
        ++report.inputs_checked;
        report.signed_sum += colored_sign(path);
        LaurentPoly weight = colored_path_weight(path, ring);
        total += weight;
        ColoredPath image = signless_involution(path, p, j);
        if (!(signless_involution(image, p, j) == path))
          report.fail("applying the map twice does not restore the path");
        bool fixed_here = is_signless_fixed(path);
        if (fixed_here != (image == path))
          report.fail("fixed point test disagrees with the map");
        if (fixed_here) {
          ++report.fixed_points;
          fixed_total += weight;
        } else if (!(colored_path_weight(image, ring) == -weight)) {
          report.fail("the map does not negate the weight");
        }
      });
      LaurentPoly expected = signless_class_gf(p, j, ring);
      if (!(total == expected) || !(fixed_total == expected))
        report.fail("weights do not sum to the fixed class");
    }
  }
}

// Crossing the canonical strongly intersecting pair is a sign reversing
// involution on reduced families; the surviving families match the
// plane partition pairs.
void verify_touching(int max_n, InvolutionReport& report) {
  for (int n = 1; n <= max_n; ++n) {
    auto ring = Ring::uvwx(n);
    for_each_reduced_family(n, [&](const ReducedFamily& family) {
      ++report.inputs_checked;
      report.signed_sum += permutation_sign(family.sigma);
      ReducedFamily image = touching_involution(family);
      if (!(touching_involution(image) == family))
        report.fail("applying the map twice does not restore the family");
      bool fixed_here = is_touching_fixed(family);
      if (fixed_here != (image == family))
        report.fail("fixed point test disagrees with the map");
      if (fixed_here) {
        ++report.fixed_points;
      } else if (!(reduced_family_weight(image, ring) ==
                   -reduced_family_weight(family, ring))) {
        report.fail("the map does not flip the family sign");
      }
    });
    if (!(enum_gf_touching(n, ring) == enum_gf_pairs(n, ring)))
      report.fail("surviving families miss the pair model");
  }
}

// The step trade across the last baseline point is a weight negating
// involution on second-model paths; the fixed class carries the
// connection coefficient generating function.
void verify_counterpart(int max_i, int max_j, InvolutionReport& report) {
  for (int i = 1; i <= max_i; ++i) {
    for (int j = 1; j <= max_j; ++j) {
      auto ring = Ring::uvwx(i + j);
      LaurentPoly total = LaurentPoly::zero(ring);
      LaurentPoly fixed_total = LaurentPoly::zero(ring);
      for_each_lookback_path(i, j, [&](const ColoredPath& path) {
        ++report.inputs_checked;
        LaurentPoly weight = lookback_path_weight(path, ring);
        std::vector<Rat> ones(ring->size(), Rat(1));
        report.signed_sum += numerator(weight.eval(ones));
        total += weight;
        ColoredPath image = lookback_involution(path, i, j);
        if (!(lookback_involution(image, i, j) == path))
          report.fail("applying the map twice does not restore the path");
        bool fixed_here = is_lookback_fixed(path, i, j);
        if (fixed_here != (image == path))
          report.fail("fixed point test disagrees with the map");
        if (fixed_here) {
          ++report.fixed_points;
          fixed_total += weight;
        } else if (!(lookback_path_weight(image, ring) == -weight)) {
          report.fail("the map does not negate the weight");
        }
      });
      LaurentPoly expected = lookback_fixed_gf(i, j, ring);
      if (!(total == expected) || !(fixed_total == expected))
        report.fail("weights do not sum to the fixed class");
    }
  }
}

int run_verify_involutions(const std::string& system,
                           const std::string& max_params) {
  std::vector<long> params;
  if (!max_params.empty()) {
    std::size_t pos = 0;
    while (pos < max_params.size()) {
      std::size_t comma = max_params.find(',', pos);
      if (comma == std::string::npos) comma = max_params.size();
      params.push_back(std::stol(max_params.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } else if (system == "touching") {
    params = {2};
  } else if (system == "sum2") {
    params = {6, 6};
  } else if (system == "counterpart") {
    params = {3, 3};
  } else {
    params = {8, 3};
  }
  std::size_t arity = system == "touching" ? 1 : 2;
  if (params.size() != arity)
    return usage_error("--max-params needs " + std::to_string(arity) +
                       " value(s) for system '" + system + "'");
  for (long p : params)
    if (p < 1) return usage_error("--max-params values must be positive");

  InvolutionReport report;
  if (system == "ba") {
    verify_ba(static_cast<int>(params[0]), static_cast<int>(params[1]),
              report);
  } else if (system == "sum2") {
    verify_sum2(static_cast<int>(params[0]), static_cast<int>(params[1]),
                report);
  } else if (system == "signless") {
    verify_signless(static_cast<int>(params[0]), static_cast<int>(params[1]),
                    report);
  } else if (system == "touching") {
    verify_touching(static_cast<int>(params[0]), report);
  } else if (system == "counterpart") {
    verify_counterpart(static_cast<int>(params[0]),
                       static_cast<int>(params[1]), report);
  }
  emit({{"system", system},
        {"params", params},
        {"inputs_checked", report.inputs_checked},
        {"fixed_points", report.fixed_points},
        {"signed_sum", report.signed_sum.str()},
        {"status", report.ok ? "ok" : "fail"}});
  if (!report.ok) return check_failure(report.detail);
  return 0;
}

int run_magog(const std::string& file, int n_opt) {
  std::ifstream in(file);
  if (!in) return usage_error("cannot open '" + file + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) return usage_error("'" + file + "' is not JSON");
  PPRows q = rspp_from_json(j);
  int n = n_opt > 0 ? n_opt : static_cast<int>(q.size());
  validate_rspp(q, n);
  emit(magog_to_json(rspp_to_magog(q, n)));
  return 0;
}

int run_tilings(int n) {
  Int det = unrefined_det(n);
  Int direct = count_tilings(n);
  bool equal = det == direct;
  emit({{"n", n},
        {"determinant", det.str()},
        {"families", direct.str()},
        {"equal", equal}});
  if (!equal) return check_failure("determinant and family count differ");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact laboratory for the refined enumeration of vertically "
               "symmetric alternating sign matrices"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent JSON output");

  std::string model;
  int gf_n = 0;
  std::string bottom_str;
  auto* gf = app.add_subcommand("gf", "print a generating function as JSON");
  gf->add_option("--model", model, "route to evaluate")
      ->required()
      ->check(CLI::IsMember(model_names()));
  gf->add_option("--n", gf_n, "order")->required()->check(CLI::Range(1, 64));
  gf->add_option("--bottom", bottom_str,
                 "bottom row k1,k2,... for the triangle routes");

  int count_n = 0;
  std::string spec = "u=1,v=1,w=1,X=1";
  auto* count = app.add_subcommand("count", "evaluate the staircase "
                                            "generating function at a point");
  count->add_option("--n", count_n, "order")
      ->required()
      ->check(CLI::Range(1, 64));
  count->add_option("--spec", spec, "assignments like u=1,v=1,w=-1,X=1");

  int cross_n = 0;
  bool slow = false;
  auto* cross = app.add_subcommand("crosscheck",
                                   "compare all routes pairwise");
  cross->add_option("--n", cross_n, "order")
      ->required()
      ->check(CLI::Range(1, 8));
  cross->add_flag("--slow", slow,
                  "include the enumerative routes beyond n = 3");

  std::string only;
  auto* vid = app.add_subcommand("verify-identities",
                                 "run the identity sweeps, one JSON line "
                                 "per case");
  vid->add_option("--only", only, "restrict to a single identity")
      ->check(CLI::IsMember(identity_names()));

  std::string system;
  std::string max_params;
  auto* vinv = app.add_subcommand("verify-involutions",
                                  "exhaustively test one involution system");
  vinv->add_option("--system", system, "involution system")
      ->required()
      ->check(CLI::IsMember(
          {"ba", "sum2", "signless", "touching", "counterpart"}));
  vinv->add_option("--max-params", max_params,
                   "parameter bounds, comma separated");

  std::string rspp_file;
  int magog_n = 0;
  auto* magog = app.add_subcommand("magog", "convert a shifted plane "
                                            "partition to its triangle");
  magog->add_option("--rspp", rspp_file, "JSON file with the partition")
      ->required();
  magog->add_option("--n", magog_n, "order, default the row count")
      ->check(CLI::Range(1, 64));

  int tilings_n = 0;
  auto* tilings = app.add_subcommand("tilings", "compare the specialized "
                                                "determinant with the "
                                                "family count");
  tilings->add_option("--n", tilings_n, "order")
      ->required()
      ->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gf->parsed()) return run_gf(model, gf_n, bottom_str);
    if (count->parsed()) return run_count(count_n, spec);
    if (cross->parsed()) return run_crosscheck(cross_n, slow);
    if (vid->parsed()) return run_verify_identities(only);
    if (vinv->parsed()) return run_verify_involutions(system, max_params);
    if (magog->parsed()) return run_magog(rspp_file, magog_n);
    if (tilings->parsed()) return run_tilings(tilings_n);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    return check_failure(e.what());
  }
  return 2;
}
