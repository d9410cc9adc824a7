#include "rebax/suites.hpp"

#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

namespace rebax {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool contains(const std::vector<Scalar>& v, const Scalar& s) {
  for (const auto& e : v)
    if (e == s) return true;
  return false;
}

Scalar parse_scalar_cfg(const std::string& text, const char* flag) {
  try {
    return Scalar::parse(text);
  } catch (const Error& e) {
    throw ConfigError(std::string("bad value for ") + flag + ": " + e.what());
  }
}

Json config_echo(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["suite"] = cfg.suite;
  j["rep"] = cfg.rep;
  j["q"] = cfg.q;
  j["a"] = cfg.a;
  j["xi"] = cfg.xi;
  j["xi2"] = cfg.xi2;
  j["sites"] = cfg.sites;
  j["left"] = cfg.left;
  j["right"] = cfg.right;
  j["ltilde"] = cfg.ltilde;
  j["seeds"] = cfg.seeds;
  j["samples"] = cfg.samples;
  j["hams"] = cfg.hams;
  j["ham"] = cfg.ham;
  return j;
}

CheckResult guarded(const std::function<CheckResult()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    CheckResult r;
    r.ok = false;
    r.note = std::string("error: ") + e.what();
    return r;
  }
}

void add_guarded(Report& rpt, const std::string& name,
                 const std::string& identity, Json params,
                 const std::function<CheckResult()>& fn) {
  const auto t0 = Clock::now();
  CheckResult res = guarded(fn);
  CheckRecord rec;
  rec.name = name;
  rec.identity = identity;
  rec.params = std::move(params);
  rec.status = res.ok ? "pass"
                      : (res.note.rfind("error: ", 0) == 0 ? "error" : "fail");
  rec.witness = res.ok ? "" : res.note;
  rec.elapsed_ms = ms_since(t0);
  rpt.add(std::move(rec));
}

// Index-parallel execution with order-stable results; REBAX_THREADS drives
// the pool size through RunConfig::threads.
std::vector<std::pair<CheckResult, double>> parallel_checks(
    std::size_t count, int threads,
    const std::function<CheckResult(std::size_t)>& fn) {
  std::vector<std::pair<CheckResult, double>> out(count);
  auto run_one = [&](std::size_t i) {
    const auto t0 = Clock::now();
    CheckResult r = guarded([&] { return fn(i); });
    out[i] = {std::move(r), ms_since(t0)};
  };
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      run_one(i);
  };
  std::vector<std::thread> pool;
  const std::size_t width =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  pool.reserve(width);
  for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

void record_parallel(Report& rpt, const std::string& name,
                     const std::string& identity,
                     const std::vector<Json>& params, int threads,
                     const std::function<CheckResult(std::size_t)>& fn) {
  auto results = parallel_checks(params.size(), threads, fn);
  for (std::size_t i = 0; i < params.size(); ++i) {
    CheckRecord rec;
    rec.name = name;
    rec.identity = identity;
    rec.params = params[i];
    const CheckResult& res = results[i].first;
    rec.status = res.ok
                     ? "pass"
                     : (res.note.rfind("error: ", 0) == 0 ? "error" : "fail");
    rec.witness = res.ok ? "" : res.note;
    rec.elapsed_ms = results[i].second;
    rpt.add(std::move(rec));
  }
}

Scalar sample_avoiding(ScalarSampler& smp, const std::vector<Scalar>& excl,
                       int bits = 8) {
  return smp.sample(bits, excl);
}

// Sample a spectral pair (x, z) keeping x, z, x/z, xz and both inverses away
// from the listed poles.
std::pair<Scalar, Scalar> sample_re_pair(ScalarSampler& smp,
                                         const std::vector<Scalar>& x_excl,
                                         const std::vector<Scalar>& arg_excl) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Scalar x = sample_avoiding(smp, x_excl);
    Scalar z = sample_avoiding(smp, x_excl);
    if (x == z) continue;
    if (contains(arg_excl, x / z) || contains(arg_excl, z / x)) continue;
    if (contains(arg_excl, x * z) || contains(arg_excl, (x * z).inverse()))
      continue;
    return {x, z};
  }
  throw Error("could not sample a pole-free spectral pair");
}

Matrix random_matrix(ScalarSampler& smp, const std::vector<std::size_t>& factors) {
  std::size_t d = 1;
  for (auto f : factors) d *= f;
  Matrix m(d, factors);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = smp.sample(5);
  return m;
}

Scalar resolve_xi(const Representation& rep, const std::string& xi_cfg,
                  const std::function<Scalar()>& auto_xi) {
  if (xi_cfg == "auto") return auto_xi();
  if (xi_cfg == "wrong") return auto_xi() + Scalar(1);
  (void)rep;
  return parse_scalar_cfg(xi_cfg, "--xi");
}

}  // namespace

AChoice parse_a_choice(const std::string& text) {
  if (text == "q") return AChoice::PlusQ;
  if (text == "-1/q" || text == "qinv" || text == "minus-inv-q")
    return AChoice::MinusInvQ;
  throw ConfigError("--a must be 'q' or '-1/q', got '" + text + "'");
}

Matrix nonscalar_constant_solution(const Scalar& beta, const Scalar& gamma,
                                   const Scalar& delta) {
  return Matrix::from_rows(
      {{Scalar(0), beta}, {gamma, delta}});
}

namespace {

// Preferred non-scalar constant-RE solution for N = 2 representations. The
// sign of the (2,1) entry is chosen so that xi^2 = -a c / nu lands in the
// rationals for the given a.
std::optional<Matrix> default_nonscalar_L(const Representation& rep) {
  if (rep.N != 2) return std::nullopt;
  if (!rep.is_bmw())
    return nonscalar_constant_solution(Scalar(1), Scalar(1), Scalar(1));
  const bool a_is_q = rep.a == rep.q;
  return nonscalar_constant_solution(Scalar(1), a_is_q ? Scalar(-1) : Scalar(1),
                                     Scalar(1));
}

}  // namespace

BoundarySolution build_left_boundary(const Representation& rep,
                                     const std::string& name,
                                     const std::string& xi_cfg) {
  if (name == "trivial") return make_trivial_boundary(rep);
  if (name == "rational" || name == "evaluation" || name == "poly") {
    if (rep.is_bmw())
      throw ConfigError("boundary '" + name +
                        "' is Hecke-specific; use 'bmw-rational' for BMW");
    const Scalar xi = resolve_xi(rep, xi_cfg, [] { return Scalar(1); });
    if (rep.N == 2 && name != "rational") {
      EvaluationBoundary ev = evaluation_boundary(rep.q);
      return name == "poly" ? make_polynomial_boundary(rep, ev.L, xi, 2)
                            : make_rational_boundary(rep, ev.L, xi, 2,
                                                     "evaluation");
    }
    Matrix l = rep.N == 2 ? evaluation_boundary(rep.q).L
                          : Matrix::identity(std::vector<std::size_t>{rep.N});
    const std::size_t w = rep.N == 2 ? 2 : 0;
    return make_rational_boundary(rep, l, xi, w,
                                  rep.N == 2 ? "evaluation" : "rational");
  }
  if (name == "small") {
    if (rep.is_bmw() || rep.N != 2)
      throw ConfigError("boundary 'small' is provided for gl2 only");
    Matrix l = Matrix::diagonal({Scalar(0), Scalar(3)});
    return make_small_boundary(rep, l, Scalar(1));
  }
  if (name == "bmw-rational") {
    if (!rep.is_bmw())
      throw ConfigError("boundary 'bmw-rational' needs a BMW representation");
    Matrix l = default_nonscalar_L(rep).value_or(
        Matrix::identity(std::vector<std::size_t>{rep.N}));
    BmwBoundaryConstants bc = bmw_constants(rep, l);
    const Scalar xi =
        resolve_xi(rep, xi_cfg, [&] { return bmw_xi(rep, bc.c); });
    BoundarySolution b = make_bmw_boundary(rep, l, xi);
    return b;
  }
  if (name == "bmw4") {
    // no one-site L has a quartic minimal polynomial at desk scale; the
    // verify suite records the corresponding skipped check
    throw ConfigError(
        "boundary 'bmw4' has no rational quartic instance at these "
        "parameters");
  }
  if (name == "bmw2") {
    if (!rep.is_bmw() || rep.N != 2)
      throw ConfigError("boundary 'bmw2' is provided for the N = 2 BMW case");
    Matrix l = *default_nonscalar_L(rep);
    BmwBoundaryConstants bc = bmw_constants(rep, l);
    BmwDeg2 d2 = bmw_deg2_fixed_alphas(rep, bc.c, bc.q_of(1));
    const Scalar xi = bmw_xi(rep, bc.c);
    const Scalar a_const = bmw_deg2_special_A(rep, bc.c, xi);
    BoundarySolution b;
    b.kind = "bmw_deg2";
    b.L = l;
    b.xi = xi;
    b.alpha = {d2.alpha0, d2.alpha1};
    b.c = bc.c;
    b.Q = bc.q_pos;
    b.K.exclusions = {Scalar(0), Scalar(1), Scalar(-1)};
    b.K.build = [l, a1 = d2.alpha1, a_const](const Scalar& x) {
      return bmw_deg2_boundary(l, a1, a_const, x);
    };
    return b;
  }
  throw ConfigError("unknown left boundary '" + name + "'");
}

RightBoundary build_right_boundary(const Representation& rep,
                                   const std::string& name,
                                   const std::string& ltilde,
                                   const std::string& xi2_cfg,
                                   const BoundarySolution& left) {
  if (name == "trivial") return make_trivial_right();
  if (name != "conjugated")
    throw ConfigError("unknown right boundary '" + name + "'");
  Matrix lt;
  if (ltilde == "auto") {
    if (auto l = default_nonscalar_L(rep))
      lt = *l;
    else
      lt = Matrix::identity(std::vector<std::size_t>{rep.N}) * Scalar(2);
  } else if (ltilde == "swap") {
    if (rep.N != 2) throw ConfigError("ltilde 'swap' needs N = 2");
    lt = Matrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
  } else if (ltilde == "left") {
    if (left.L.dim() != rep.N || left.L.factors().size() != 1)
      throw ConfigError("ltilde 'left' needs a one-site left boundary matrix");
    lt = left.L;
  } else if (ltilde.rfind("scalar:", 0) == 0) {
    const Scalar v = parse_scalar_cfg(ltilde.substr(7), "--ltilde");
    lt = Matrix::identity(std::vector<std::size_t>{rep.N}) * v;
  } else {
    throw ConfigError("unknown ltilde '" + ltilde + "'");
  }
  Scalar xi2;
  if (xi2_cfg == "auto") {
    if (rep.is_bmw()) {
      BmwBoundaryConstants bc = bmw_constants(rep, lt);
      xi2 = bmw_xi(rep, bc.c);
    } else {
      xi2 = Scalar(1);
    }
  } else {
    xi2 = parse_scalar_cfg(xi2_cfg, "--xi2");
  }
  return make_conjugated_right(rep, lt, xi2);
}

namespace {

Representation build_rep_from_cfg(const RunConfig& cfg) {
  const Scalar q = parse_scalar_cfg(cfg.q, "--q");
  return make_representation(cfg.rep, q, parse_a_choice(cfg.a));
}

void suite_ybe(const Representation& rep, const RunConfig& cfg, Report& rpt) {
  const auto excl = baxt_exclusions(rep);
  for (auto seed : cfg.seeds) {
    ScalarSampler smp(seed);
    std::vector<Json> params;
    std::vector<std::pair<Scalar, Scalar>> points;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Scalar x, y;
      do {
        x = sample_avoiding(smp, excl);
        y = sample_avoiding(smp, excl);
      } while (contains(excl, x * y));
      points.emplace_back(x, y);
      params.push_back(
          {{"rep", rep.name}, {"a", rep.a.str()}, {"seed", seed},
           {"x", x.str()}, {"y", y.str()}});
    }
    record_parallel(rpt, "ybe",
                    "R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x)", params,
                    cfg.threads, [&](std::size_t i) {
                      return check_ybe(rep, points[i].first, points[i].second);
                    });
  }
}

void suite_unitarity(const Representation& rep, const RunConfig& cfg,
                     Report& rpt) {
  const auto excl = baxt_exclusions(rep);
  for (auto seed : cfg.seeds) {
    ScalarSampler smp(seed);
    std::vector<Json> params;
    std::vector<Scalar> xs;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Scalar x;
      do {
        x = sample_avoiding(smp, excl);
      } while (contains(excl, x.inverse()));
      xs.push_back(x);
      params.push_back({{"rep", rep.name}, {"a", rep.a.str()}, {"seed", seed},
                        {"x", x.str()}});
    }
    record_parallel(rpt, "unitarity", "stilde(x) stilde(1/x) = 1", params,
                    cfg.threads,
                    [&](std::size_t i) { return check_unitarity(rep, xs[i]); });
    record_parallel(rpt, "baxterized-forms",
                    "difference, kappa and product closed forms agree", params,
                    cfg.threads,
                    [&](std::size_t i) { return check_baxt_forms(rep, xs[i]); });
  }
}

void suite_cross_unitarity(const Representation& rep, const RunConfig& cfg,
                           Report& rpt) {
  std::vector<Scalar> excl = baxt_exclusions(rep);
  // keep the partner point off the poles as well
  excl.push_back(rep.is_bmw() ? rep.a * rep.a / (rep.nu * rep.nu) : rep.b);
  excl.push_back(-(rep.is_bmw() ? rep.a * rep.a / (rep.nu * rep.nu) : rep.b));
  for (auto seed : cfg.seeds) {
    ScalarSampler smp(seed);
    std::vector<std::pair<std::string, Matrix>> ys;
    ys.emplace_back("identity-1site",
                    Matrix::identity(std::vector<std::size_t>{rep.N}));
    ys.emplace_back("random-1site",
                    random_matrix(smp, {rep.N}));
    ys.emplace_back("random-2site", random_matrix(smp, {rep.N, rep.N}));
    if (rep.is_bmw()) ys.emplace_back("khat-2site", rep.Khat);
    std::vector<Json> params;
    std::vector<std::pair<Scalar, std::size_t>> points;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Scalar x;
      do {
        x = sample_avoiding(smp, excl);
      } while (contains(excl, cross_partner(rep, x)));
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        points.emplace_back(x, yi);
        params.push_back({{"rep", rep.name}, {"seed", seed}, {"x", x.str()},
                          {"z", cross_partner(rep, x).str()},
                          {"Y", ys[yi].first}});
      }
    }
    record_parallel(rpt, "cross-unitarity",
                    "Tr_D(R_n(x) Y R_n(z)) = eta(x) eta(z) Tr_D(Y)", params,
                    cfg.threads, [&](std::size_t i) {
                      return check_cross_unitarity(rep, ys[points[i].second].second,
                                                   points[i].first);
                    });
  }
}

void suite_constant_re(const Representation& rep, const RunConfig& cfg,
                       Report& rpt) {
  (void)cfg;
  add_guarded(rpt, "constant-re", "R L1 R L1 = L1 R L1 R with L = I",
              {{"rep", rep.name}, {"L", "identity"}}, [&] {
                return check_constant_re(
                    rep, Matrix::identity(std::vector<std::size_t>{rep.N}));
              });
  if (!rep.is_bmw() && rep.N == 2) {
    add_guarded(rpt, "constant-re", "R L1 R L1 = L1 R L1 R, evaluation L",
                {{"rep", rep.name}, {"L", "evaluation"}}, [&] {
                  return check_constant_re(rep, evaluation_boundary(rep.q).L);
                });
  }
  if (rep.N == 2) {
    add_guarded(rpt, "constant-re",
                "R L1 R L1 = L1 R L1 R on the vanishing-corner family",
                {{"rep", rep.name}, {"L", "[[0,1],[1,2]]"}}, [&] {
                  return check_constant_re(
                      rep, nonscalar_constant_solution(Scalar(1), Scalar(1),
                                                       Scalar(2)));
                });
  }
  add_guarded(rpt, "constant-re-negative-control",
              "diag(1,2,..) must violate the constant reflection equation",
              {{"rep", rep.name}, {"L", "diag(1..N)"}}, [&] {
                std::vector<Scalar> d;
                for (std::size_t i = 0; i < rep.N; ++i)
                  d.push_back(Scalar(static_cast<long long>(i + 1)));
                CheckResult res = check_constant_re(rep, Matrix::diagonal(d));
                CheckResult out;
                out.ok = !res.ok;
                if (!out.ok)
                  out.note = "checker accepted a non-solution";
                return out;
              });
}

std::vector<Scalar> merged_re_exclusions(const Representation& rep,
                                         const BoundarySolution& b) {
  std::vector<Scalar> ex = b.K.exclusions;
  ex.push_back(Scalar(0));
  ex.push_back(Scalar(1));
  ex.push_back(Scalar(-1));
  for (const auto& e : b.K.exclusions)
    if (!e.is_zero() && !contains(ex, e.inverse())) ex.push_back(e.inverse());
  (void)rep;
  return ex;
}

void re_battery(const Representation& rep, const RunConfig& cfg, Report& rpt,
                const BoundarySolution& b, const std::string& label) {
  const auto arg_excl = baxt_exclusions(rep);
  const auto x_excl = merged_re_exclusions(rep, b);
  for (auto seed : cfg.seeds) {
    ScalarSampler smp(seed);
    std::vector<Json> params;
    std::vector<std::pair<Scalar, Scalar>> pts;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      auto [x, z] = sample_re_pair(smp, x_excl, arg_excl);
      pts.emplace_back(x, z);
      params.push_back({{"rep", rep.name}, {"boundary", label}, {"seed", seed},
                        {"xi", b.xi.str()}, {"x", x.str()}, {"z", z.str()}});
    }
    record_parallel(rpt, "re",
                    "R(x/z) K(x) R(xz) K(z) = K(z) R(xz) K(x) R(x/z)", params,
                    cfg.threads, [&](std::size_t i) {
                      return check_re(rep, b.K, pts[i].first, pts[i].second, 1,
                                      b.w_dim);
                    });
    // unitarity of the boundary family at the same points
    std::vector<Json> uparams = params;
    record_parallel(rpt, "re-unitarity", "K(x) K(1/x) = 1", uparams,
                    cfg.threads, [&](std::size_t i) {
                      Matrix p = b.K(pts[i].first) * b.K(pts[i].first.inverse());
                      return compare_exact(p, Matrix::identity(p.dim()),
                                           "boundary unitarity");
                    });
  }
  if (contains(b.K.exclusions, Scalar(1))) {
    rpt.add_skipped("re-regularity", "K(1) = 1",
                    {{"rep", rep.name}, {"boundary", label},
                     {"xi", b.xi.str()}},
                    "xi lies in the spectrum of L; x = 1 is a pole");
  } else {
    add_guarded(rpt, "re-regularity", "K(1) = 1",
                {{"rep", rep.name}, {"boundary", label}, {"xi", b.xi.str()}},
                [&] {
                  Matrix k1 = b.K(Scalar(1));
                  return compare_exact(k1, Matrix::identity(k1.dim()),
                                       "boundary regularity");
                });
  }
  add_guarded(rpt, "re-locality",
              "[K_1(x), R_m] = 0 for m >= 2",
              {{"rep", rep.name}, {"boundary", label}}, [&] {
                ScalarSampler smp(cfg.seeds.front());
                const Scalar x = smp.sample(8, x_excl);
                std::vector<std::size_t> shape{rep.N, rep.N, rep.N};
                std::vector<std::size_t> ks{1};
                if (b.w_dim > 0) {
                  shape.push_back(b.w_dim);
                  ks.push_back(4);
                }
                Matrix k1 = embed_at(b.K(x), ks, shape);
                Matrix r2 = embed(rep.R, 2, shape);
                CheckResult out;
                if (!commutator_is_zero(k1, r2)) {
                  out.ok = false;
                  out.note = "K_1(x) does not commute with R_23";
                }
                return out;
              });
}

void suite_re(const Representation& rep, const RunConfig& cfg, Report& rpt) {
  if (!rep.is_bmw()) {
    std::vector<Scalar> xis;
    if (cfg.xi == "auto") {
      xis = {Scalar(1), Scalar(3, 2)};
    } else {
      xis = {resolve_xi(rep, cfg.xi, [] { return Scalar(1); })};
    }
    for (const auto& xi : xis) {
      re_battery(rep, cfg, rpt,
                 make_rational_boundary(
                     rep, Matrix::identity(std::vector<std::size_t>{rep.N}), xi),
                 "rational(L=I)");
      if (rep.N == 2) {
        EvaluationBoundary ev = evaluation_boundary(rep.q);
        BoundarySolution b =
            make_rational_boundary(rep, ev.L, xi, 2, "evaluation");
        re_battery(rep, cfg, rpt, b, "rational(L=evaluation)");
        // polynomial form equals the rational one
        BoundarySolution pb = make_polynomial_boundary(rep, ev.L, xi, 2);
        const auto x_excl = merged_re_exclusions(rep, pb);
        ScalarSampler smp(cfg.seeds.front());
        std::vector<Json> params;
        std::vector<Scalar> xs;
        for (std::size_t i = 0; i < cfg.samples; ++i) {
          Scalar x = smp.sample(8, x_excl);
          xs.push_back(x);
          params.push_back({{"rep", rep.name}, {"xi", xi.str()}, {"x", x.str()}});
        }
        record_parallel(rpt, "re-polynomial-equivalence",
                        "cyclotomic polynomial form equals the rational form",
                        params, cfg.threads, [&](std::size_t i) {
                          return compare_exact(pb.K(xs[i]), b.K(xs[i]),
                                               "polynomial vs rational");
                        });
      }
    }
    if (rep.N == 2) {
      BoundarySolution sb = make_small_boundary(
          rep, Matrix::diagonal({Scalar(0), Scalar(3)}), Scalar(1));
      re_battery(rep, cfg, rpt, sb, "small(diag(0,3))");
    }
    return;
  }

  // BMW: the rational solution needs xi^2 = -a c / nu. Both baxterization
  // branches are exercised; only the a = -1/q branch is rigid in the
  // degree-2 cyclotomic quotient (a = q admits a free constant), so the
  // negative control lives there.
  const Representation mirror = make_representation(
      rep.name, rep.q,
      rep.a == rep.q ? AChoice::MinusInvQ : AChoice::PlusQ);
  for (const Representation* r : {&rep, &mirror}) {
    std::vector<std::pair<std::string, Matrix>> ls;
    ls.emplace_back("identity",
                    Matrix::identity(std::vector<std::size_t>{r->N}));
    if (auto l = default_nonscalar_L(*r)) ls.emplace_back("nonscalar", *l);
    for (const auto& [label, l] : ls) {
      BmwBoundaryConstants bc = bmw_constants(*r, l);
      Scalar xi;
      try {
        xi = resolve_xi(*r, cfg.xi, [&] { return bmw_xi(*r, bc.c); });
      } catch (const Error& e) {
        rpt.add_skipped("re", "xi^2 = -a c / nu has no real solution",
                        {{"rep", r->name}, {"boundary", label},
                         {"a", r->a.str()}},
                        e.what());
        continue;
      }
      BoundarySolution b = make_bmw_boundary(*r, l, xi);
      re_battery(*r, cfg, rpt, b, "bmw_rational(" + label + ", a=" + r->a.str() + ")");
    }
  }
  const Representation& rigid = rep.a == rep.q ? mirror : rep;
  if (auto l = default_nonscalar_L(rigid)) {
    BmwBoundaryConstants bc = bmw_constants(rigid, *l);
    const Scalar xi = bmw_xi(rigid, bc.c);
    add_guarded(rpt, "re-negative-control-wrong-xi",
                "a detuned xi must break the reflection equation on the "
                "rigid baxterization branch",
                {{"rep", rigid.name}, {"a", rigid.a.str()},
                 {"xi", (xi + Scalar(1)).str()}},
                [&] {
                  BoundarySolution bad = make_bmw_boundary(rigid, *l,
                                                           xi + Scalar(1));
                  ScalarSampler smp(cfg.seeds.front());
                  auto [x, z] = sample_re_pair(
                      smp, merged_re_exclusions(rigid, bad),
                      baxt_exclusions(rigid));
                  CheckResult res = check_re(rigid, bad.K, x, z);
                  CheckResult out;
                  out.ok = !res.ok;
                  if (!out.ok)
                    out.note = "reflection equation held for wrong xi";
                  return out;
                });
    add_guarded(rpt, "re-xi-sign-branches",
                "both sign branches of xi^2 = -a c / nu solve the equation",
                {{"rep", rigid.name}, {"a", rigid.a.str()},
                 {"xi", xi.str()}},
                [&] {
                  ScalarSampler smp(cfg.seeds.front() + 5);
                  for (const Scalar& branch : {xi, -xi}) {
                    BoundarySolution b = make_bmw_boundary(rigid, *l, branch);
                    auto [x, z] = sample_re_pair(
                        smp, merged_re_exclusions(rigid, b),
                        baxt_exclusions(rigid));
                    CheckResult res = check_re(rigid, b.K, x, z);
                    if (!res.ok) return res;
                  }
                  return CheckResult{};
                });
  }

  if (rep.N == 2) {
    // the degree-2 exceptional family: case (1a) lives on the a = q branch
    const Representation& dg = rep.a == rep.q ? rep : mirror;
    const Matrix l = *default_nonscalar_L(dg);
    BmwBoundaryConstants bc = bmw_constants(dg, l);
    BmwDeg2 d2 = bmw_deg2_fixed_alphas(dg, bc.c, bc.q_of(1));
    add_guarded(rpt, "bmw-deg2-fixed-alphas",
                "fixed alpha_0, alpha_1 match the characteristic polynomial",
                {{"rep", rep.name}}, [&] {
                  auto mp = minimal_polynomial(l);
                  CheckResult out;
                  if (mp.size() != 3 || mp[0] != d2.alpha0 ||
                      mp[1] != d2.alpha1) {
                    out.ok = false;
                    out.note = "alpha values disagree with min poly";
                  }
                  return out;
                });
    add_guarded(rpt, "bmw-deg2-alpha1-consistency",
                "alpha_1 relation in terms of Q^(1) holds",
                {{"rep", rep.name}}, [&] {
                  return check_alpha1_relation(dg, bc.c, bc.q_of(1), d2.alpha0,
                                    d2.alpha1);
                });
    add_guarded(
        rpt, "bmw-deg2-q-compatibility",
        "degree-2 characteristic/Q compatibility relations hold",
        {{"rep", rep.name}}, [&] {
          return check_q_compatibility(dg, {d2.alpha0, d2.alpha1}, bc.c,
                              {bc.q_of(0), bc.q_of(1)});
        });
    // K(x) = L + (alpha_1 x + A)/(x - 1/x) solves the RE for any A
    BoundarySolution b2 = build_left_boundary(dg, "bmw2", "auto");
    ScalarSampler smp(cfg.seeds.front());
    const Scalar a_free(7, 5);
    std::vector<Json> params;
    std::vector<std::pair<Scalar, Scalar>> pts;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      auto [x, z] = sample_re_pair(smp, merged_re_exclusions(dg, b2),
                                   baxt_exclusions(dg));
      pts.emplace_back(x, z);
      params.push_back({{"rep", rep.name}, {"A", a_free.str()}, {"x", x.str()},
                        {"z", z.str()}});
    }
    record_parallel(rpt, "bmw-deg2-re",
                    "degree-2 boundary solves the reflection equation",
                    params, cfg.threads, [&](std::size_t i) {
                      SpectralOp k;
                      k.build = [&](const Scalar& x) {
                        return bmw_deg2_boundary(l, d2.alpha1, a_free, x);
                      };
                      return check_re(dg, k, pts[i].first, pts[i].second);
                    });
    add_guarded(
        rpt, "bmw-deg2-special-A",
        "A = xi + alpha_0/xi reproduces the rational solution up to scalar",
        {{"rep", rep.name}}, [&] {
          const Scalar xi = bmw_xi(dg, bc.c);
          const Scalar a_sp = bmw_deg2_special_A(dg, bc.c, xi);
          const Scalar x(3, 10);
          Matrix lhs = rational_boundary(l, xi, x);
          const Scalar pref =
              (x - x.inverse()) /
              (xi * qpow(x, -2) + d2.alpha1 * x.inverse() + d2.alpha0 / xi);
          Matrix rhs = bmw_deg2_boundary(l, d2.alpha1, a_sp, x) * pref;
          return compare_exact(lhs, rhs, "special-A comparison");
        });
    // degree 4: constraint arithmetic on synthetic central values; no
    // one-site L has a quartic minimal polynomial at N = 2
    add_guarded(rpt, "bmw-deg4-alphas",
                "degree-4 alpha values satisfy the compatibility relations",
                {{"rep", rep.name}}, [&] {
                  BmwDeg4 d4 = bmw_deg4_alphas(dg, bc.c, Scalar(2, 3),
                                               Scalar(5, 7), Scalar(1, 2));
                  return check_q_compatibility(
                      rep, d4.alpha, bc.c,
                      {bc.q_of(0), Scalar(2, 3), Scalar(5, 7), Scalar(1, 2)});
                });
    rpt.add_skipped("bmw-deg4-re",
                    "degree-4 boundary reflection equation",
                    {{"rep", rep.name}},
                    "skipped: no rational quartic instance at these parameters");
  }
}

void suite_conjugated_re(const Representation& rep, const RunConfig& cfg,
                         Report& rpt) {
  std::vector<std::tuple<std::string, Matrix, Scalar>> cands;
  if (rep.is_bmw()) {
    if (auto l = default_nonscalar_L(rep)) {
      BmwBoundaryConstants bc = bmw_constants(rep, *l);
      try {
        cands.emplace_back("nonscalar", *l, bmw_xi(rep, bc.c));
      } catch (const Error&) {
      }
    }
    try {
      Matrix id = Matrix::identity(std::vector<std::size_t>{rep.N});
      BmwBoundaryConstants bc = bmw_constants(rep, id);
      cands.emplace_back("identity", id, bmw_xi(rep, bc.c));
    } catch (const Error& e) {
      rpt.add_skipped("conjugated-re", "right boundary from the rational solution",
                      {{"rep", rep.name}, {"ltilde", "identity"}}, e.what());
    }
  } else {
    cands.emplace_back(
        "scalar", Matrix::identity(std::vector<std::size_t>{rep.N}) * Scalar(2),
        Scalar(1));
    if (rep.N == 2)
      cands.emplace_back(
          "swap",
          Matrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}),
          Scalar(2));
  }
  const auto arg_excl = baxt_exclusions(rep);
  for (const auto& [label, lt, xi2] : cands) {
    RightBoundary rb = make_conjugated_right(rep, lt, xi2);
    std::vector<Scalar> x_excl = rb.Kt.exclusions;
    x_excl.push_back(Scalar(0));
    x_excl.push_back(Scalar(1));
    x_excl.push_back(Scalar(-1));
    for (auto seed : cfg.seeds) {
      ScalarSampler smp(seed);
      std::vector<Json> params;
      std::vector<std::pair<Scalar, Scalar>> pts;
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        Scalar x, z;
        for (int attempt = 0;; ++attempt) {
          x = smp.sample(8, x_excl);
          z = smp.sample(8, x_excl);
          if (x == z) continue;
          if (contains(arg_excl, x / z) || contains(arg_excl, z / x)) continue;
          Scalar w = rep.b / (x * z);
          if (w.is_rational() && contains(arg_excl, w)) continue;
          break;
        }
        pts.emplace_back(x, z);
        params.push_back({{"rep", rep.name}, {"ltilde", label}, {"seed", seed},
                          {"xi2", xi2.str()}, {"x", x.str()}, {"z", z.str()}});
      }
      record_parallel(
          rpt, "conjugated-re",
          "R(x/z) Kt(z) R(b/xz) Kt(x) = Kt(x) R(b/xz) Kt(z) R(x/z)", params,
          cfg.threads, [&](std::size_t i) {
            return check_conjugated_re(rep, rb.Kt, pts[i].first,
                                       pts[i].second);
          });
    }
    add_guarded(rpt, "conjugated-re-regularity", "Kt(sqrt(b)) = K(1) = 1",
                {{"rep", rep.name}, {"ltilde", label}}, [&] {
                  Matrix k = rb.Kt(conjugation_b_sqrt(rep));
                  return compare_exact(k, Matrix::identity(k.dim()),
                                       "conjugated regularity");
                });
    add_guarded(
        rpt, "conjugated-re-invert-variant",
        "Kt(x) = K(x/sqrt(b))^{-1} also solves the conjugated equation",
        {{"rep", rep.name}, {"ltilde", label}}, [&] {
          SpectralOp direct;
          direct.exclusions = rational_boundary_exclusions(lt, xi2);
          direct.build = [&](const Scalar& x) {
            return rational_boundary(lt, xi2, x);
          };
          SpectralOp kt = conjugate_boundary(direct, conjugation_b_sqrt(rep),
                                             true);
          ScalarSampler smp(cfg.seeds.front() + 17);
          std::vector<Scalar> ex = kt.exclusions;
          ex.push_back(Scalar(0));
          ex.push_back(Scalar(1));
          ex.push_back(Scalar(-1));
          for (int attempt = 0; attempt < 100; ++attempt) {
            Scalar x = smp.sample(8, ex), z = smp.sample(8, ex);
            if (x == z) continue;
            try {
              return check_conjugated_re(rep, kt, x, z);
            } catch (const PoleError&) {
              continue;
            }
          }
          throw Error("could not sample a pole-free pair");
        });
  }
}

void suite_bmw_constants(const Representation& rep, const RunConfig& cfg,
                         Report& rpt, bool strict) {
  if (!rep.is_bmw()) {
    if (strict)
      throw ConfigError("suite 'bmw-constants' needs a BMW representation");
    return;
  }
  (void)cfg;
  std::vector<std::pair<std::string, Matrix>> ls;
  ls.emplace_back("identity", Matrix::identity(std::vector<std::size_t>{rep.N}));
  ls.emplace_back("scalar-2",
                  Matrix::identity(std::vector<std::size_t>{rep.N}) * Scalar(2));
  if (auto l = default_nonscalar_L(rep)) ls.emplace_back("nonscalar", *l);
  for (const auto& [label, l] : ls) {
    BmwBoundaryConstants bc;
    try {
      bc = bmw_constants(rep, l);
    } catch (const Error& e) {
      CheckRecord rec;
      rec.name = "bmw-constants";
      rec.identity = "central sandwich constants c, Q^(k)";
      rec.params = {{"rep", rep.name}, {"L", label}};
      rec.status = "error";
      rec.witness = e.what();
      rpt.add(std::move(rec));
      continue;
    }
    Json qs = Json::array();
    for (const auto& v : bc.q_pos) qs.push_back(v.str());
    add_guarded(rpt, "bmw-constants",
                "Khat L1 R L1 R = c Khat and Khat L1^k Khat = Q^(k) Khat",
                {{"rep", rep.name}, {"L", label}, {"c", bc.c.str()},
                 {"Q", qs}},
                [&] { return CheckResult{}; });
    add_guarded(rpt, "bmw-constants-reversed-word",
                "reversed sandwich word yields the same constant c",
                {{"rep", rep.name}, {"L", label}, {"c", bc.c.str()},
                 {"c_reversed", bc.c_reversed.str()}},
                [&] {
                  CheckResult out;
                  if (bc.c != bc.c_reversed) {
                    out.ok = false;
                    out.lhs = bc.c;
                    out.rhs = bc.c_reversed;
                    out.note = "reversed word constant differs";
                  }
                  return out;
                });
    add_guarded(rpt, "bmw-constants-negative-powers",
                "Q^(-n) relation for n <= 3",
                {{"rep", rep.name}, {"L", label}},
                [&] { return check_negative_power_relation(rep, bc, 3); });
  }
}

void suite_antisymmetrizers(const Representation& rep, const RunConfig& cfg,
                            Report& rpt) {
  (void)cfg;
  add_guarded(rpt, "antisymmetrizer-base", "A_{1->1} = 1",
              {{"rep", rep.name}}, [&] {
                return compare_exact(
                    antisymmetrizer(rep, 1),
                    Matrix::identity(std::vector<std::size_t>{rep.N}),
                    "A_{1->1}");
              });
  for (std::size_t k = 2; k <= 4; ++k) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < k; ++i) dim *= rep.N;
    if (dim > 100) break;
    Json params{{"rep", rep.name}, {"k", k}};
    try {
      Matrix a = antisymmetrizer(rep, k);
      add_guarded(rpt, "antisymmetrizer-idempotent", "A_{1->k}^2 = A_{1->k}",
                  params,
                  [&] { return compare_exact(a * a, a, "idempotence"); });
      if (a.is_zero()) break;  // the tower is zero from here on
    } catch (const PoleError& e) {
      rpt.add_skipped("antisymmetrizer-idempotent", "A_{1->k}^2 = A_{1->k}",
                      params, e.what());
      break;
    }
  }
  if (!rep.is_bmw()) {
    add_guarded(rpt, "antisymmetrizer-height",
                "least h with A_{1->h+1} = 0 and rank A_{1->h} = 1",
                {{"rep", rep.name}, {"expected", rep.N}}, [&] {
                  auto h = height(rep, rep.N + 1);
                  CheckResult out;
                  if (!h || *h != rep.N) {
                    out.ok = false;
                    out.note = "height " +
                               (h ? std::to_string(*h) : std::string("none")) +
                               " != N";
                  }
                  return out;
                });
  } else {
    // report the measured vanishing level and the rank just below it
    add_guarded(rpt, "antisymmetrizer-pattern",
                "vanishing level and preceding rank of the BMW tower",
                {{"rep", rep.name}}, [&] {
                  std::size_t level = 0, last_rank = rep.N;
                  for (std::size_t k = 2; k <= 4; ++k) {
                    Matrix a;
                    try {
                      a = antisymmetrizer(rep, k);
                    } catch (const PoleError&) {
                      break;
                    }
                    if (a.is_zero()) {
                      level = k;
                      break;
                    }
                    last_rank = rank(a);
                  }
                  CheckResult out;
                  if (level == 0) {
                    out.ok = false;
                    out.note = "tower does not vanish by level 4";
                  } else {
                    out.note = "A_{1->" + std::to_string(level) +
                               "} = 0, rank A_{1->" + std::to_string(level - 1) +
                               "} = " + std::to_string(last_rank);
                    out.ok = true;
                  }
                  return out;
                });
  }
}

}  // namespace

Report run_verify(const RunConfig& cfg) {
  Report rpt;
  rpt.config = config_echo(cfg);
  if (cfg.samples < 1) throw ConfigError("--samples must be >= 1");
  if (cfg.seeds.empty()) throw ConfigError("at least one --seed is required");
  const Representation rep = build_rep_from_cfg(cfg);
  const std::string& s = cfg.suite;
  bool known = false;
  auto is = [&](const char* name) {
    bool hit = s == name || s == "all";
    known = known || s == name;
    return hit;
  };
  if (is("ybe")) suite_ybe(rep, cfg, rpt);
  if (is("unitarity")) suite_unitarity(rep, cfg, rpt);
  if (is("cross-unitarity")) suite_cross_unitarity(rep, cfg, rpt);
  if (is("constant-re")) suite_constant_re(rep, cfg, rpt);
  if (is("re")) suite_re(rep, cfg, rpt);
  if (is("conjugated-re")) suite_conjugated_re(rep, cfg, rpt);
  if (is("bmw-constants")) suite_bmw_constants(rep, cfg, rpt, s != "all");
  if (is("antisymmetrizers")) suite_antisymmetrizers(rep, cfg, rpt);
  if (!known && s != "all")
    throw ConfigError("unknown suite '" + s + "'");
  rpt.sort_records();
  return rpt;
}

Report run_chain(const RunConfig& cfg) {
  Report rpt;
  rpt.config = config_echo(cfg);
  const Representation rep = build_rep_from_cfg(cfg);
  BoundarySolution left = build_left_boundary(rep, cfg.left, cfg.xi);
  RightBoundary right =
      build_right_boundary(rep, cfg.right, cfg.ltilde, cfg.xi2, left);
  ChainModel chain = make_chain(rep, cfg.sites, std::move(left),
                                std::move(right));

  std::vector<Scalar> x_excl = merged_re_exclusions(rep, chain.left);
  for (const auto& e : chain.right.Kt.exclusions) x_excl.push_back(e);
  const auto arg_excl = baxt_exclusions(rep);

  for (auto seed : cfg.seeds) {
    ScalarSampler smp(seed);
    std::vector<Json> params;
    std::vector<std::pair<Scalar, Scalar>> pts;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Scalar x, z;
      for (int attempt = 0;; ++attempt) {
        x = smp.sample(6, x_excl);
        z = smp.sample(6, x_excl);
        if (x == z || contains(arg_excl, x) || contains(arg_excl, z)) continue;
        if (contains(x_excl, x.inverse()) || contains(x_excl, z.inverse()))
          continue;
        break;
      }
      pts.emplace_back(x, z);
      params.push_back({{"rep", rep.name}, {"sites", cfg.sites}, {"seed", seed},
                        {"left", cfg.left}, {"right", cfg.right},
                        {"x", x.str()}, {"z", z.str()}});
    }
    record_parallel(rpt, "chain-commuting-family", "[t(x), t(z)] = 0", params,
                    cfg.threads, [&](std::size_t i) {
                      CheckResult out;
                      if (!commutator_is_zero(t_full(chain, pts[i].first),
                                              t_full(chain, pts[i].second))) {
                        out.ok = false;
                        out.note = "[t(x), t(z)] != 0";
                      }
                      return out;
                    });
  }

  if (chain.left.kind == "bmw_deg2") {
    // not a regular boundary; K(1) = L + alpha_1/2
  } else if (contains(chain.left.K.exclusions, Scalar(1)) ||
             contains(chain.right.Kt.exclusions, Scalar(1))) {
    rpt.add_skipped("chain-regular-collapse",
                    "t(1) is an exact multiple of the identity",
                    {{"rep", rep.name}, {"sites", cfg.sites}},
                    "x = 1 is a pole of a boundary at these parameters");
  } else {
    add_guarded(rpt, "chain-regular-collapse",
                "t(1) is an exact multiple of the identity",
                {{"rep", rep.name}, {"sites", cfg.sites}}, [&] {
                  Matrix t1 = t_full(chain, Scalar(1));
                  CheckResult out;
                  if (!t1.as_scalar_multiple_of_identity().has_value()) {
                    out.ok = false;
                    out.note = "t(1) is not a scalar matrix";
                  }
                  return out;
                });
  }

  // Dressed boundary solves the level-k reflection equation.
  for (std::size_t level = 2; level <= std::min<std::size_t>(3, chain.n());
       ++level) {
    add_guarded(
        rpt, "chain-dressed-re",
        "ybar_k(x) = R_{k-1}(x)..R_1(x) K_1(x) R_1(x)..R_{k-1}(x) solves the "
        "level-k reflection equation",
        {{"rep", rep.name}, {"level", level}}, [&, level] {
          SpectralOp dressed;
          dressed.exclusions = x_excl;
          dressed.build = [&, level](const Scalar& x) {
            std::vector<std::size_t> shape(level, rep.N);
            std::vector<std::size_t> ks{1};
            if (chain.w_dim() > 0) {
              shape.push_back(chain.w_dim());
              ks.push_back(level + 1);
            }
            Matrix m = embed_at(chain.left.K(x), ks, shape);
            for (std::size_t s = 1; s < level; ++s) {
              Matrix r = embed(baxt(rep, x), s, shape);
              m = r * m * r;
            }
            return m;
          };
          ScalarSampler smp(cfg.seeds.front() + 3);
          auto [x, z] = sample_re_pair(smp, x_excl, arg_excl);
          return check_re(rep, dressed, x, z, level, chain.w_dim());
        });
  }

  // Hamiltonian commutation at three spectral samples. Boundary kinds
  // without a closed-form boundary term have no default Hamiltonian.
  const bool left_has_term = chain.left.kind == "trivial" ||
                             chain.left.kind == "rational" ||
                             chain.left.kind == "polynomial" ||
                             chain.left.kind == "evaluation";
  std::vector<std::string> kinds = cfg.hams;
  if (kinds.empty() && !left_has_term) {
    rpt.add_skipped("chain-hamiltonian-commutes", "[H, t(z)] = 0",
                    {{"rep", rep.name}, {"left", cfg.left}},
                    "no closed-form boundary term for left boundary kind '" +
                        chain.left.kind + "'");
  } else if (kinds.empty()) {
    if (!rep.is_bmw()) {
      if (chain.left.kind == "trivial" && chain.right.kind == "trivial")
        kinds = {"H1"};
      else if (chain.right.kind == "trivial")
        kinds = {"H2"};
      else
        kinds = {"H0", "H3"};
    } else {
      if (chain.left.kind == "trivial" && chain.right.kind == "trivial")
        kinds = {"H5"};
      else if (chain.right.kind == "trivial")
        kinds = {"H4"};
      else
        kinds = {"H6", "H7"};
    }
  }
  ScalarSampler smp(cfg.seeds.front() + 11);
  std::vector<Scalar> zs;
  while (zs.size() < 3) {
    Scalar z = smp.sample(6, x_excl);
    if (!contains(arg_excl, z) && !contains(x_excl, z.inverse()))
      zs.push_back(z);
  }
  for (const auto& kind_name : kinds) {
    const Ham kind = ham_from_name(kind_name);
    Json zlist = Json::array();
    for (const auto& z : zs) zlist.push_back(z.str());
    Json params{{"rep", rep.name}, {"sites", cfg.sites}, {"kind", kind_name},
                {"z", zlist}};
    // a degenerate boundary configuration (no such Hamiltonian) is reported,
    // not failed; a nonzero commutator still fails
    try {
      hamiltonian(chain, kind);
    } catch (const Error& e) {
      rpt.add_skipped("chain-hamiltonian-commutes", "[H, t(z)] = 0", params,
                      e.what());
      continue;
    }
    add_guarded(rpt, "chain-hamiltonian-commutes", "[H, t(z)] = 0", params,
                [&] { return check_h_commutes(chain, kind, zs); });
  }
  rpt.sort_records();
  return rpt;
}

Report run_spectrum(const RunConfig& cfg) {
  Report rpt;
  rpt.config = config_echo(cfg);
  const Representation rep = build_rep_from_cfg(cfg);
  BoundarySolution left = build_left_boundary(rep, cfg.left, cfg.xi);
  RightBoundary right =
      build_right_boundary(rep, cfg.right, cfg.ltilde, cfg.xi2, left);
  ChainModel chain = make_chain(rep, cfg.sites, std::move(left),
                                std::move(right));
  const Ham kind = ham_from_name(cfg.ham);
  const auto t0 = Clock::now();
  Matrix h;
  try {
    h = hamiltonian(chain, kind);
  } catch (const Error& e) {
    CheckRecord rec;
    rec.name = "spectrum";
    rec.identity = "exact characteristic polynomial and spectrum";
    rec.params = {{"rep", rep.name}, {"sites", cfg.sites}, {"kind", cfg.ham}};
    rec.status = "error";
    rec.witness = e.what();
    rec.elapsed_ms = ms_since(t0);
    rpt.add(std::move(rec));
    rpt.sort_records();
    return rpt;
  }
  Spectrum s = spectrum(h);
  Json poly = Json::array();
  for (const auto& c : s.char_poly) poly.push_back(c.str());
  Json exact = Json::array();
  std::size_t mult_sum = 0;
  for (const auto& [root, mult] : s.exact_roots) {
    exact.push_back({{"root", root.str()}, {"multiplicity", mult}});
    mult_sum += mult;
  }
  Json approx = Json::array();
  for (const auto& [re, im] : s.approx_roots) {
    approx.push_back({{"re", re}, {"im", im}, {"approximate", true}});
  }
  CheckRecord rec;
  rec.name = "spectrum";
  rec.identity = "exact characteristic polynomial and spectrum";
  rec.params = {{"rep", rep.name},   {"sites", cfg.sites},
                {"kind", cfg.ham},   {"char_poly", poly},
                {"exact_roots", exact}, {"approx_roots", approx}};
  rec.status =
      (mult_sum + s.approx_roots.size() == h.dim()) ? "pass" : "fail";
  if (rec.status == "fail") rec.witness = "root multiplicities do not sum to dim";
  rec.elapsed_ms = ms_since(t0);
  rpt.add(std::move(rec));
  rpt.sort_records();
  return rpt;
}

Report run_command(const RunConfig& cfg) {
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "chain") return run_chain(cfg);
  if (cfg.command == "spectrum") return run_spectrum(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

}  // namespace rebax
