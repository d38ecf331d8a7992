#pragma once

// Verification suites, limit sweeps and single-object computations driven by
// a RunConfig. Shared by the command-line tool and the acceptance tests.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "awvec/askey_wilson.hpp"
#include "awvec/bessel.hpp"
#include "awvec/daha.hpp"
#include "awvec/jacobi.hpp"
#include "awvec/little_q_jacobi.hpp"
#include "awvec/mutation.hpp"
#include "awvec/nonsym_aw.hpp"
#include "awvec/report.hpp"

namespace awvec {

struct RunConfig {
  std::string target;  // family for verify, kind for limits, object for compute
  std::string family = "aw";  // compute only
  std::optional<Rational> q, a, b, c, d, alpha, beta, lambda, x;
  std::optional<int> n, nmax, maxdeg, steps;
  unsigned seed = 1;
  std::optional<double> tol;
  Mutation mutation = Mutation::None;
};

namespace detail {

inline std::string pad(int n) {
  std::ostringstream os;
  os << (n < 0 ? "-" : "+") << std::setw(2) << std::setfill('0') << std::abs(n);
  return os.str();
}

inline std::string pad_unsigned(int n) {
  std::ostringstream os;
  os << std::setw(2) << std::setfill('0') << n;
  return os.str();
}

template <class P>
std::string str(const P& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline const Rational& require(const std::optional<Rational>& v, const char* name) {
  if (!v) throw ConfigError(std::string("missing required parameter --") + name);
  return *v;
}

inline int nonnegative(const std::optional<int>& v, int fallback, const char* name) {
  int r = v.value_or(fallback);
  if (r < 0) throw ConfigError(std::string("--") + name + " must be >= 0");
  return r;
}

/// Runs body; a library error becomes a failing record with the message as witness.
inline void guarded(Report& r, const std::string& id, const std::string& ref, const std::function<void()>& body) {
  try {
    body();
  } catch (const IrrationalScaleFactor& e) {
    r.add_na(id, ref, e.what());
  } catch (const Error& e) {
    r.add(id, ref, false, std::string(e.what()));
  }
}

inline std::string first_nonzero_witness(const std::vector<LaurentPoly<Rational>>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].is_zero()) return "residual[" + std::to_string(i) + "] = " + to_string(parts[i]);
  return "";
}

inline bool all_zero(const std::vector<LaurentPoly<Rational>>& parts) {
  for (const auto& p : parts)
    if (!p.is_zero()) return false;
  return true;
}

/// Seeded AW parameter sets valid for (a,b,c,d) and (qa,qb,c,d).
inline std::vector<AWParams<Rational>> sample_aw(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> qd(2, 5), den(2, 9);
  auto small = [&]() {
    for (;;) {
      int d = den(rng);
      std::uniform_int_distribution<int> num(-(3 * d - 1) / 4, (3 * d - 1) / 4);
      int n = num(rng);
      if (n == 0) continue;
      Rational r(n, d);
      r.canonicalize();
      return r;
    }
  };
  std::vector<AWParams<Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    try {
      AWParams<Rational> p(Rational(1, qd(rng)), small(), small(), small(), small());
      (void)p.shifted();
      out.push_back(p);
    } catch (const Error&) {
    }
  }
  return out;
}

inline void aw_param_echo(Report& r, const AWParams<Rational>& p) {
  r.params["q"] = to_string(p.q);
  r.params["a"] = to_string(p.a);
  r.params["b"] = to_string(p.b);
  r.params["c"] = to_string(p.c);
  r.params["d"] = to_string(p.d);
}

inline AWParams<Rational> aw_from(const RunConfig& cfg, bool defaults) {
  if (defaults)
    return AWParams<Rational>(cfg.q.value_or(Rational(1, 2)), cfg.a.value_or(Rational(1, 3)),
                              cfg.b.value_or(Rational(-1, 4)), cfg.c.value_or(Rational(1, 5)),
                              cfg.d.value_or(Rational(2, 3)));
  return AWParams<Rational>(require(cfg.q, "q"), require(cfg.a, "a"), require(cfg.b, "b"), require(cfg.c, "c"),
                            require(cfg.d, "d"));
}

inline LQJParams<Rational> lqj_from(const RunConfig& cfg, bool defaults) {
  if (defaults)
    return LQJParams<Rational>(cfg.q.value_or(Rational(1, 4)), cfg.a.value_or(Rational(1, 3)),
                               cfg.b.value_or(Rational(1, 5)));
  return LQJParams<Rational>(require(cfg.q, "q"), require(cfg.a, "a"), require(cfg.b, "b"));
}

inline JacobiParams<Rational> jac_from(const RunConfig& cfg, bool defaults) {
  if (defaults) return JacobiParams<Rational>(cfg.alpha.value_or(Rational(1, 2)), cfg.beta.value_or(Rational(1, 3)));
  return JacobiParams<Rational>(require(cfg.alpha, "alpha"), require(cfg.beta, "beta"));
}

/// Parameter construction errors are configuration errors.
template <class F>
auto configured(F make) -> decltype(make()) {
  try {
    return make();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------

inline void verify_aw(Report& r, const RunConfig& cfg) {
  AWParams<Rational> p = configured([&] { return aw_from(cfg, false); });
  aw_param_echo(r, p);
  const int N = nonnegative(cfg.nmax, 8, "nmax");
  r.params["nmax"] = std::to_string(N);
  r.params["seed"] = std::to_string(cfg.seed);
  for (int n = 0; n <= N; ++n) {
    const std::string tag = "n=" + pad_unsigned(n);
    const std::string cross = "aw.cross." + tag, ref_cross = "4phi3 construction equals three-term recurrence";
    try {
      SymLaurentPoly<Rational> h = aw_poly(n, p, AWMethod::Hypergeometric), rec = aw_poly(n, p);
      r.add(cross, ref_cross, h == rec, "difference = " + str(h.laurent() - rec.laurent()));
    } catch (const ParameterSingularity& e) {
      r.add_na(cross, ref_cross, e.what());
    }
    guarded(r, "aw.eigen." + tag, "L P_n = (q^-n - 1)(1 - abcd q^{n-1}) P_n", [&] {
      SymLaurentPoly<Rational> P = aw_poly(n, p);
      LaurentPoly<Rational> res = aw_L_apply(P, p).laurent() - P.laurent() * aw_eigenvalue(n, p);
      r.add("aw.eigen." + tag, "L P_n = (q^-n - 1)(1 - abcd q^{n-1}) P_n", res.is_zero(), to_string(res));
    });
    guarded(r, "aw.norm." + tag, "h_n = C_1 ... C_n", [&] {
      Rational h = aw_norm(n, p), prod = aw_norm_product(n, p);
      r.add("aw.norm." + tag, "h_n = C_1 ... C_n", h == prod, to_string(h) + " vs " + to_string(prod));
    });
  }
  guarded(r, "aw.favard", "B_n real and C_n > 0 for n <= 50", [&] {
    FavardReport f = favard_check(p, 50);
    r.add("aw.favard", "B_n real and C_n > 0 for n <= 50", f.real_B && f.positive_C,
          f.first_nonpositive ? "C_n <= 0 at n=" + std::to_string(*f.first_nonpositive) : "");
  });
  int i = 0;
  for (const AWParams<Rational>& s : sample_aw(cfg.seed, 5)) {
    const std::string id = "aw.sampled." + pad_unsigned(i++);
    const std::string ref = "construction agreement and L eigen equation at seeded parameters";
    guarded(r, id, ref, [&] {
      std::vector<SymLaurentPoly<Rational>> rec = aw_polys_upto(std::min(N, 6), s);
      std::string bad;
      for (int n = 0; n <= std::min(N, 6) && bad.empty(); ++n) {
        try {
          if (aw_poly(n, s, AWMethod::Hypergeometric) != rec[n]) bad = "cross n=" + std::to_string(n);
        } catch (const ParameterSingularity&) {
        }
        if (aw_L_apply(rec[n], s) != aw_eigenvalue(n, s) * rec[n]) bad = "eigen n=" + std::to_string(n);
      }
      r.add(id, ref, bad.empty(), bad + " at q=" + to_string(s.q) + " a=" + to_string(s.a) + " b=" + to_string(s.b) +
                                      " c=" + to_string(s.c) + " d=" + to_string(s.d));
    });
  }
}

inline void verify_daha(Report& r, const RunConfig& cfg) {
  AWParams<Rational> p = configured([&] { return aw_from(cfg, false); });
  aw_param_echo(r, p);
  const int K = nonnegative(cfg.maxdeg, 12, "maxdeg");
  r.params["maxdeg"] = std::to_string(K);
  if (cfg.mutation != Mutation::None) r.params["mutation"] = std::string(mutation_name(cfg.mutation));
  const std::string span = " on z^k, |k| <= " + std::to_string(K);
  RelationsReport rel = daha_relations_check(p, K, cfg.mutation);
  for (std::size_t i = 0; i < rel.relations.size(); ++i) {
    const RelationResult& x = rel.relations[i];
    std::string w = x.first_failing_k ? "fails at k=" + std::to_string(*x.first_failing_k) : "";
    if (!x.error.empty()) w += " (" + x.error + ")";
    r.add("daha.relation." + std::to_string(i + 1), x.relation + " = 0" + span, x.passed, w);
  }
  RouteReport route = y_route_check(p, K, cfg.mutation);
  r.add("daha.y_route", "Y = T1 T0 equals the explicit q-difference-reflection operator" + span, route.passed,
        route.first_failing_k ? "fails at k=" + std::to_string(*route.first_failing_k) : "");
  ConsistencyReport cons = decomposition_consistency_check(p, K, cfg.mutation);
  std::string w;
  if (auto k = cons.first_failure()) {
    w = "fails at k=" + std::to_string(*k);
    for (const DegreeResult& d : cons.degrees)
      if (d.k == *k && !d.error.empty()) w += " (" + d.error + ")";
  }
  r.add("daha.matrix_form", "matrix Y on (f1, f2) agrees with scalar Y" + span, cons.all_passed(), w);
}

inline void verify_nonsym_aw(Report& r, const RunConfig& cfg) {
  AWParams<Rational> p = configured([&] { return aw_from(cfg, false); });
  aw_param_echo(r, p);
  const int N = nonnegative(cfg.nmax, 4, "nmax");
  r.params["nmax"] = std::to_string(N);
  if (cfg.mutation != Mutation::None) r.params["mutation"] = std::string(mutation_name(cfg.mutation));
  const std::pair<EigenRoute, const char*> routes[] = {
      {EigenRoute::Scalar, "scalar"}, {EigenRoute::Matrix, "matrix"}, {EigenRoute::FourEquations, "four_equations"}};
  for (int n = -N; n <= N; ++n)
    for (auto [route, name] : routes) {
      const std::string id = std::string("nonsym.eigen.") + name + ".n=" + pad(n);
      const std::string ref = n < 0 ? "Y E_n = q^n E_n" : "Y E_n = q^{n-1} abcd E_n";
      guarded(r, id, ref, [&] {
        EigenResidual<Rational> res = eigen_residual(n, p, route, cfg.mutation);
        r.add(id, ref, res.is_zero(), first_nonzero_witness(res.parts));
      });
    }
  guarded(r, "nonsym.gram.diagonal", "<E_m, E_n> = 0 for m != n", [&] {
    GramReport<Rational> g = gram_report(N, p);
    r.add("nonsym.gram.diagonal", "<E_m, E_n> = 0 for m != n, |m|,|n| <= " + std::to_string(N), g.diagonal());
  });
  for (int n = 1; n <= N; ++n)
    guarded(r, "nonsym.constant.n=" + pad_unsigned(n), "bilinear-form constant independent of n", [&] {
      Rational at = bilinear_constant_at(n, p), C = bilinear_constant(p);
      r.add("nonsym.constant.n=" + pad_unsigned(n), "bilinear-form constant independent of n", at == C,
            to_string(at) + " vs " + to_string(C));
    });
  guarded(r, "nonsym.positivity", "positive definiteness when ab < 0", [&] {
    PositivityCertificate cert = positivity_check(p, 50, N);
    if (!cert.applicable) {
      r.add_na("nonsym.positivity", "positive definiteness when ab < 0", "ab >= 0");
      return;
    }
    int i = 0;
    for (const CertificateItem& item : cert.items)
      r.add("nonsym.positivity." + pad_unsigned(i++), item.claim, item.holds, item.value);
  });
}

inline void verify_lqj(Report& r, const RunConfig& cfg) {
  LQJParams<Rational> p = configured([&] { return lqj_from(cfg, false); });
  r.params["q"] = to_string(p.q);
  r.params["a"] = to_string(p.a);
  r.params["b"] = to_string(p.b);
  const int N = nonnegative(cfg.nmax, 4, "nmax");
  r.params["nmax"] = std::to_string(N);
  for (int n = 0; n <= N; ++n) {
    const std::string id = "lqj.L_eigen.n=" + pad_unsigned(n);
    const std::string ref = "L P_n = (q^-n - 1)(1 - abq^{n+1}) P_n";
    guarded(r, id, ref, [&] {
      OrdinaryPoly<Rational> P = lqj_poly(n, p);
      OrdinaryPoly<Rational> res = lqj_L_apply(P, p) - P * lqj_eigenvalue(n, p.q, p.a, p.b);
      r.add(id, ref, res.is_zero());
    });
  }
  for (int n = -N; n <= N; ++n) {
    const std::string id = "lqj.Y_eigen.n=" + pad(n);
    const std::string ref = n < 0 ? "Y E_n = q^n E_n" : "Y E_n = q^{n+1} ab E_n";
    guarded(r, id, ref, [&] { r.add(id, ref, lqj_eigen_residual(n, p).is_zero()); });
  }
  guarded(r, "lqj.gram.diagonal", "<E_m, E_n> = 0 for m != n", [&] {
    GramReport<Rational> g = lqj_gram_report(N, p);
    r.add("lqj.gram.diagonal", "<E_m, E_n> = 0 for m != n", g.diagonal());
    if (p.positive_range())
      r.add("lqj.gram.positive", "<E_n, E_n> > 0 for a, b in (0, 1/q)", g.positive_diagonal());
    else
      r.add_na("lqj.gram.positive", "<E_n, E_n> > 0 for a, b in (0, 1/q)", "a or b outside (0, 1/q)");
  });
}

inline void verify_jacobi(Report& r, const RunConfig& cfg) {
  JacobiParams<Rational> p = configured([&] { return jac_from(cfg, false); });
  r.params["alpha"] = to_string(p.alpha);
  r.params["beta"] = to_string(p.beta);
  const int N = nonnegative(cfg.nmax, 6, "nmax");
  r.params["nmax"] = std::to_string(N);
  if (cfg.mutation != Mutation::None) r.params["mutation"] = std::string(mutation_name(cfg.mutation));
  for (int n = -N; n <= N; ++n)
    for (auto [route, name] : {std::pair{JacRoute::Scalar, "scalar"}, std::pair{JacRoute::Matrix, "matrix"}}) {
      const std::string id = std::string("jacobi.eigen.") + name + ".n=" + pad(n);
      const std::string ref = n < 0 ? "Y E_n = -n E_n" : "Y E_n = -(n + alpha + beta + 1) E_n";
      guarded(r, id, ref, [&] {
        auto res = jac_eigen_residual(n, p, route, cfg.mutation);
        r.add(id, ref, all_zero(res), first_nonzero_witness(res));
      });
    }
  for (int n = 0; n <= N; ++n) {
    const std::string id = "jacobi.rescaled.n=" + pad_unsigned(n);
    const std::string ref = "P_n[z] = (-1)^n 2^{2n} Ptilde_n((2 - z - 1/z)/4)";
    guarded(r, id, ref, [&] {
      LaurentPoly<Rational> res = jac_relation_residual(n, p);
      r.add(id, ref, res.is_zero(), to_string(res));
    });
  }
  guarded(r, "jacobi.shift", "off-diagonal entries lower P_n and raise P'_{n-1}", [&] {
    std::string bad;
    for (const ShiftEntry<Rational>& e : jac_shift_table(N, p))
      if (!e.lowering_exact || !e.raising_exact) bad = "n=" + std::to_string(e.n);
    r.add("jacobi.shift", "off-diagonal entries lower P_n and raise P'_{n-1}", bad.empty(), bad);
  });
  guarded(r, "jacobi.gram.diagonal", "<E_m, E_n> = 0 for m != n", [&] {
    GramReport<Rational> g = jac_gram_report(N, p);
    r.add("jacobi.gram.diagonal", "<E_m, E_n> = 0 for m != n", g.diagonal());
    if (p.positive_range())
      r.add("jacobi.gram.positive", "<E_n, E_n> > 0 for alpha, beta > -1", g.positive_diagonal());
    else
      r.add_na("jacobi.gram.positive", "<E_n, E_n> > 0 for alpha, beta > -1", "alpha or beta <= -1");
  });
  const std::string circle_ref = "circle integral of E_m conj(E_n) with the weight vanishes for m != n";
  for (auto [m, n] : {std::pair{1, -1}, std::pair{2, 1}}) {
    const std::string id = "jacobi.circle.m=" + pad(m) + ".n=" + pad(n);
    if (!p.positive_range()) {
      r.add_na(id, circle_ref, "alpha or beta <= -1");
      continue;
    }
    guarded(r, id, circle_ref, [&] {
      CircleResult c = circle_orthogonality(m, n, p, 2048);
      r.add(id, circle_ref, c.residual < 1e-8, "relative residual " + format_double(c.residual));
    });
  }
  if (p.positive_range())
    guarded(r, "jacobi.circle.constant", "circle integral / bilinear form = 2^{2a+2b+3} G(a+1)G(b+1)/G(a+b+2)", [&] {
      CircleResult c = circle_orthogonality(0, 0, p, 2048);
      r.add("jacobi.circle.constant", "circle integral / bilinear form = 2^{2a+2b+3} G(a+1)G(b+1)/G(a+b+2)",
            c.residual < 1e-8, "fitted " + format_double(c.fitted_constant));
    });
}

inline void verify_bessel(Report& r, const RunConfig& cfg) {
  const Rational alpha = require(cfg.alpha, "alpha"), lambda = require(cfg.lambda, "lambda");
  r.params["alpha"] = to_string(alpha);
  r.params["lambda"] = to_string(lambda);
  const int K = nonnegative(cfg.maxdeg, 32, "maxdeg");
  if (K < 3) throw ConfigError("--maxdeg must be at least 3 for the Bessel suite");
  r.params["maxdeg"] = std::to_string(K);
  if (cfg.mutation != Mutation::None) r.params["mutation"] = std::string(mutation_name(cfg.mutation));
  guarded(r, "bessel.dunkl", "Y E_alpha(lambda x) = i lambda E_alpha(lambda x)", [&] {
    auto [re, im] = dunkl_eigen_residual(alpha, lambda, K, cfg.mutation);
    int k = re.first_nonzero() >= 0 ? re.first_nonzero() : im.first_nonzero();
    r.add("bessel.dunkl", "Y E_alpha(lambda x) = i lambda E_alpha(lambda x) through x^" + std::to_string(K - 1),
          re.is_zero() && im.is_zero(), "nonzero at order " + std::to_string(k));
  });
  guarded(r, "bessel.vector", "vector form of the Dunkl eigen equation", [&] {
    auto [first, second] = vector_eigen_check(alpha, lambda, K, cfg.mutation);
    r.add("bessel.vector", "vector form of the Dunkl eigen equation through x^" + std::to_string(K - 2),
          first.is_zero() && second.is_zero());
  });
  guarded(r, "bessel.parity", "lambda -> -lambda fixes the even part and flips the odd part", [&] {
    NonsymBesselPair<Rational> u = nonsym_bessel(alpha, lambda, K), v = nonsym_bessel(alpha, Rational(-lambda), K);
    r.add("bessel.parity", "lambda -> -lambda fixes the even part and flips the odd part",
          u.even == v.even && u.odd == -v.odd);
  });
  auto special = [&](const char* id, const char* ref, Rational at, auto fn) {
    if (alpha != at) {
      r.add_na(id, ref, "alpha = " + to_string(alpha));
      return;
    }
    double worst = 0;
    const long double la = to_long_double(lambda);
    for (int i = 0; i <= 100; ++i) {
      long double t = la * i / 10.0L;
      worst = std::max(worst, static_cast<double>(std::fabs(bessel_value(to_long_double(alpha), t, 60).value - fn(t))));
    }
    r.add(id, ref, worst < 1e-12, "max deviation " + format_double(worst));
  };
  special("bessel.cos", "J_{-1/2}(x) = cos x on [0, 10 lambda]", Rational(-1, 2), [](long double t) { return std::cos(t); });
  special("bessel.sinc", "J_{1/2}(x) = sin(x)/x on [0, 10 lambda]", Rational(1, 2),
          [](long double t) { return t == 0 ? 1.0L : std::sin(t) / t; });
}

}  // namespace detail

inline Report run_verify(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.suite = "verify " + cfg.target;
  if (cfg.target == "aw") detail::verify_aw(r, cfg);
  else if (cfg.target == "daha") detail::verify_daha(r, cfg);
  else if (cfg.target == "nonsym-aw") detail::verify_nonsym_aw(r, cfg);
  else if (cfg.target == "lqj") detail::verify_lqj(r, cfg);
  else if (cfg.target == "jacobi") detail::verify_jacobi(r, cfg);
  else if (cfg.target == "bessel") detail::verify_bessel(r, cfg);
  else throw ConfigError("unknown family '" + cfg.target + "' (aw, daha, nonsym-aw, lqj, jacobi, bessel)");
  r.sort();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace detail {

inline void add_limit(Report& r, LimitReport t) {
  r.add(t.name + ".tolerance", t.name + ": final error below " + format_double(t.tolerance), t.below_tolerance(),
        "final error " + format_double(t.final_error()));
  r.add(t.name + ".monotone", t.name + ": error decreasing over the last " + std::to_string(t.monotone_window) + " steps",
        t.monotone_tail());
  r.tables.push_back(std::move(t));
}

}  // namespace detail

inline Report run_limits(const RunConfig& cfg) {
  using namespace detail;
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.suite = "limits " + cfg.target;
  if (cfg.steps && *cfg.steps <= 0) throw ConfigError("--steps must be positive");
  if (cfg.target == "aw-to-lqj") {
    LQJParams<Rational> p = configured([&] { return lqj_from(cfg, true); });
    const int n = cfg.n.value_or(1), steps = cfg.steps.value_or(20);
    r.params = {{"q", to_string(p.q)}, {"a", to_string(p.a)}, {"b", to_string(p.b)}, {"n", std::to_string(n)},
                {"steps", std::to_string(steps)}};
    const std::vector<Rational> grid{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    const double tol = cfg.tol.value_or(1e-6);
    guarded(r, "aw_to_lqj", "lambda^n P_n[x/lambda; AW] -> little q-Jacobi", [&] {
      if (n >= 0) add_limit(r, lqj_limit_check(n, p, steps, grid, LQJLimitForm::Polynomial, tol, std::min(10, steps - 1)));
      add_limit(r, lqj_limit_check(n, p, steps, grid, LQJLimitForm::VectorE, tol, std::min(10, steps - 1)));
    });
  } else if (cfg.target == "aw-to-jacobi" || cfg.target == "lqj-to-jacobi") {
    JacobiParams<Rational> p = configured([&] { return jac_from(cfg, true); });
    const int n = cfg.n.value_or(2), steps = cfg.steps.value_or(16);
    r.params = {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"n", std::to_string(n)},
                {"steps", std::to_string(steps)}};
    const double tol = cfg.tol.value_or(1e-4);
    guarded(r, cfg.target, "q -> 1 limit into Jacobi", [&] {
      if (cfg.target == "lqj-to-jacobi") {
        add_limit(r, jac_limit_check(JacobiLimitKind::FromLQJ, n, p, steps, tol));
        return;
      }
      if (n >= 0) add_limit(r, jac_limit_check(JacobiLimitKind::FromAW, n, p, steps, tol));
      add_limit(r, jac_limit_check(JacobiLimitKind::FromAWNonsym, n, p, steps, tol));
    });
  } else if (cfg.target == "jacobi-to-bessel") {
    JacobiParams<Rational> p = configured([&] { return jac_from(cfg, true); });
    const Rational lambda = cfg.lambda.value_or(Rational(1)), x = cfg.x.value_or(Rational(1));
    const int nmax = cfg.nmax.value_or(1024);
    if (nmax < 8) throw ConfigError("--nmax must be at least 8 for the Bessel limit");
    std::vector<int> ns;
    for (int n = 8; n <= nmax; n *= 2) ns.push_back(n);
    r.params = {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"lambda", to_string(lambda)},
                {"x", to_string(x)}, {"nmax", std::to_string(nmax)}};
    const double tol = cfg.tol.value_or(1e-3);
    guarded(r, "jacobi_to_bessel", "scaled Jacobi -> normalized Bessel", [&] {
      BesselLimitReport b = bessel_limit_check(p.alpha, p.beta, lambda, to_double(x), ns, tol, cfg.mutation);
      for (const LimitReport* t : b.all()) add_limit(r, *t);
      std::ostringstream os;
      os << "c(n) P_n[1] at n=" << b.ns.back() << ": " << format_double(b.x0_values.back());
      r.add("jacobi_to_bessel.x0", "scaled P_n at x = 0 tends to 1",
            std::abs(b.x0_values.back() - 1) <= std::abs(b.x0_values.front() - 1), os.str());
    });
  } else {
    throw ConfigError("unknown limit '" + cfg.target + "' (aw-to-lqj, aw-to-jacobi, lqj-to-jacobi, jacobi-to-bessel)");
  }
  r.sort();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------

struct ComputeOutput {
  nlohmann::ordered_json json;
  std::string text;
  std::string csv;
};

namespace detail {

template <class Poly>
nlohmann::ordered_json coeff_json(const Poly& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, c] : f.coeffs()) j[std::to_string(k)] = to_string(c);
  return j;
}

template <class Poly>
std::string coeff_csv(const Poly& f, const std::string& label = "") {
  std::ostringstream os;
  for (const auto& [k, c] : f.coeffs()) os << (label.empty() ? "" : label + ",") << k << "," << to_string(c) << "\n";
  return os.str();
}

}  // namespace detail

inline ComputeOutput run_compute(const RunConfig& cfg) {
  using namespace detail;
  ComputeOutput out;
  const std::string& fam = cfg.family;
  if (fam != "aw" && fam != "jacobi" && fam != "lqj") throw ConfigError("unknown family '" + fam + "' (aw, jacobi, lqj)");
  out.json["object"] = cfg.target;
  out.json["family"] = fam;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::optional<AWParams<Rational>> aw;
  std::optional<LQJParams<Rational>> lq;
  std::optional<JacobiParams<Rational>> jp;
  if (fam == "aw") {
    aw = configured([&] { return aw_from(cfg, true); });
    params = {{"q", to_string(aw->q)}, {"a", to_string(aw->a)}, {"b", to_string(aw->b)}, {"c", to_string(aw->c)},
              {"d", to_string(aw->d)}};
  } else if (fam == "lqj") {
    lq = configured([&] { return lqj_from(cfg, true); });
    params = {{"q", to_string(lq->q)}, {"a", to_string(lq->a)}, {"b", to_string(lq->b)}};
  } else {
    jp = configured([&] { return jac_from(cfg, true); });
    params = {{"alpha", to_string(jp->alpha)}, {"beta", to_string(jp->beta)}};
  }
  out.json["params"] = params;

  const std::string& obj = cfg.target;
  if (obj == "e-poly" || obj == "p-poly") {
    const int n = cfg.n.value_or(0);
    if (obj == "p-poly" && n < 0) throw ConfigError("p-poly needs --n >= 0");
    out.json["n"] = n;
    if (fam == "lqj") {
      if (obj == "e-poly") throw ConfigError("little q-Jacobi E_n exists only in vector form; use e-vec");
      OrdinaryPoly<Rational> P = lqj_poly(n, *lq);
      out.json["variable"] = "x";
      out.json["coeffs"] = coeff_json(P);
      out.text = str(P) + "\n";
      out.csv = "power,coeff\n" + coeff_csv(P);
      return out;
    }
    LaurentPoly<Rational> f;
    if (fam == "aw") f = obj == "e-poly" ? E_laurent(n, *aw) : aw_poly(n, *aw).laurent();
    else f = obj == "e-poly" ? jac_E_laurent(n, *jp) : jac_poly(n, *jp).laurent();
    out.json["variable"] = "z";
    out.json["coeffs"] = coeff_json(f);
    out.text = to_string(f) + "\n";
    out.csv = "power,coeff\n" + coeff_csv(f);
    return out;
  }
  if (obj == "e-vec") {
    const int n = cfg.n.value_or(0);
    out.json["n"] = n;
    if (fam == "lqj") {
      OrdPair<Rational> v = lqj_E_vec(n, *lq);
      out.json["f1"] = coeff_json(v.f1);
      out.json["f2"] = coeff_json(v.f2);
      out.text = "(" + str(v.f1) + ", " + str(v.f2) + ")\n";
      out.csv = "component,power,coeff\n" + coeff_csv(v.f1, "f1") + coeff_csv(v.f2, "f2");
      return out;
    }
    VecSymPair<Rational> v = fam == "aw" ? E_vec(n, *aw) : jac_E_vec(n, *jp);
    out.json["f1"] = coeff_json(v.f1.laurent());
    out.json["f2"] = coeff_json(v.f2.laurent());
    out.text = str(v) + "\n";
    out.csv = "component,power,coeff\n" + coeff_csv(v.f1.laurent(), "f1") + coeff_csv(v.f2.laurent(), "f2");
    return out;
  }
  if (obj == "h") {
    const int N = nonnegative(cfg.nmax, 5, "nmax");
    out.json["nmax"] = N;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    out.csv = "n,h\n";
    for (int n = 0; n <= N; ++n) {
      Rational h = fam == "aw" ? aw_norm(n, *aw) : fam == "lqj" ? lqj_norm(n, *lq) : jac_norm(n, *jp);
      list.push_back(to_string(h));
      out.text += "h_" + std::to_string(n) + " = " + to_string(h) + "\n";
      out.csv += std::to_string(n) + "," + to_string(h) + "\n";
    }
    out.json["h"] = list;
    return out;
  }
  if (obj == "gram") {
    const int M = nonnegative(cfg.nmax, 3, "nmax");
    out.json["nmax"] = M;
    GramReport<Rational> g = fam == "aw" ? gram_report(M, *aw) : fam == "lqj" ? lqj_gram_report(M, *lq) : jac_gram_report(M, *jp);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    out.csv = "m,n,value\n";
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < g.entries.size(); ++j) {
        row.push_back(to_string(g.entries[i][j]));
        out.csv += std::to_string(g.indices[i]) + "," + std::to_string(g.indices[j]) + "," + to_string(g.entries[i][j]) + "\n";
        out.text += (j ? "  " : "") + to_string(g.entries[i][j]);
      }
      out.text += "\n";
      rows.push_back(std::move(row));
    }
    out.json["indices"] = g.indices;
    out.json["entries"] = rows;
    out.json["diagonal"] = g.diagonal();
    return out;
  }
  throw ConfigError("unknown object '" + obj + "' (e-poly, e-vec, p-poly, h, gram)");
}

}  // namespace awvec
