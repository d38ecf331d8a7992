#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "awvec/awvec.hpp"

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitConfig = 2;

struct RawOptions {
  std::map<std::string, std::string> rationals;  // flag -> text, parsed after CLI parsing
  std::optional<int> n, nmax, maxdeg, steps;
  unsigned seed = 1;
  std::optional<double> tol;
  std::string format = "text";
  std::string out;
  std::string family = "aw";
  std::string mutation = "none";
  bool no_timing = false;
  std::string target;
};

void add_options(CLI::App* sub, RawOptions& o, const char* target_help) {
  sub->add_option("target", o.target, target_help)->required();
  for (const char* name : {"q", "a", "b", "c", "d", "alpha", "beta", "lambda", "x"})
    sub->add_option_function<std::string>(std::string("--") + name,
                                          [&o, name](const std::string& v) { o.rationals[name] = v; },
                                          "exact rational such as 1/3 or -2");
  sub->add_option("--n", o.n, "index");
  sub->add_option("--nmax", o.nmax, "largest index");
  sub->add_option("--maxdeg", o.maxdeg, "largest degree or series order");
  sub->add_option("--steps", o.steps, "number of limit steps");
  sub->add_option("--seed", o.seed, "seed for sampled parameter sets");
  sub->add_option("--tol", o.tol, "limit tolerance");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text", "csv"}));
  sub->add_option("--out", o.out, "write output to this file");
  sub->add_option("--mutation", o.mutation, "deliberately broken variant to run");
  sub->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");
}

awvec::RunConfig to_config(const RawOptions& o) {
  awvec::RunConfig cfg;
  cfg.target = o.target;
  cfg.family = o.family;
  std::map<std::string, std::optional<awvec::Rational>*> slots{
      {"q", &cfg.q},           {"a", &cfg.a},         {"b", &cfg.b},
      {"c", &cfg.c},           {"d", &cfg.d},         {"alpha", &cfg.alpha},
      {"beta", &cfg.beta},     {"lambda", &cfg.lambda}, {"x", &cfg.x}};
  for (const auto& [name, text] : o.rationals) *slots.at(name) = awvec::parse_rational(text);
  cfg.n = o.n;
  cfg.nmax = o.nmax;
  cfg.maxdeg = o.maxdeg;
  cfg.steps = o.steps;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  std::optional<awvec::Mutation> m = awvec::parse_mutation(o.mutation);
  if (!m) throw awvec::ConfigError("unknown mutation '" + o.mutation + "'");
  cfg.mutation = *m;
  return cfg;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw awvec::ConfigError("cannot write '" + path + "'");
  f << text;
}

std::string render(const awvec::Report& r, const std::string& format) {
  if (format == "json") return awvec::to_json(r).dump(2) + "\n";
  if (format == "csv") return awvec::to_csv(r);
  return awvec::to_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonsymmetric Askey-Wilson polynomials in vector-valued form, with their limits"};
  app.require_subcommand(1);
  RawOptions o;
  CLI::App* verify = app.add_subcommand("verify", "run the identity checks for one family");
  add_options(verify, o, "aw | daha | nonsym-aw | lqj | jacobi | bessel");
  CLI::App* limits = app.add_subcommand("limits", "run a convergence sweep");
  add_options(limits, o, "aw-to-lqj | aw-to-jacobi | lqj-to-jacobi | jacobi-to-bessel");
  CLI::App* compute = app.add_subcommand("compute", "print one object with exact coefficients");
  add_options(compute, o, "e-poly | e-vec | p-poly | h | gram");
  compute->add_option("--family", o.family, "aw | lqj | jacobi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    awvec::RunConfig cfg = to_config(o);
    if (compute->parsed()) {
      awvec::ComputeOutput c = awvec::run_compute(cfg);
      emit(o.format == "json" ? c.json.dump(2) + "\n" : o.format == "csv" ? c.csv : c.text, o.out);
      return kExitPass;
    }
    awvec::Report r = verify->parsed() ? awvec::run_verify(cfg) : awvec::run_limits(cfg);
    if (o.no_timing) r.elapsed_ms = 0;
    emit(render(r, o.format), o.out);
    return r.passed() ? kExitPass : kExitFail;
  } catch (const awvec::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const awvec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
