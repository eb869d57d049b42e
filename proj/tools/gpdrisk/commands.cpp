#include "commands.hpp"

#include <fmt/format.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gpdrisk/gpdrisk.hpp"
#include "io.hpp"

namespace gpdrisk::cli {

namespace {

using Json = nlohmann::ordered_json;

McmcConfig chain_config(const ChainFlags& f) {
  McmcConfig cfg;
  cfg.n_draws = f.draws;
  cfg.burn_in = f.burnin;
  cfg.thinning = f.thin;
  cfg.seed = f.seed;
  cfg.validate();
  return cfg;
}

PointEstimate parse_point(const std::string& s) {
  if (s == "mean") return PointEstimate::mean_of_draws;
  if (s == "predictive") return PointEstimate::predictive_quantile;
  raise(ErrorKind::invalid_argument, "unknown point estimate '" + s + "' (mean|predictive)");
}

std::string opt(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

std::string risk_csv(const RiskCurve& curve) {
  std::string out = "horizon_days,var_mean,var_lo,var_hi,es_mean,es_lo,es_hi,var_hist,var_normal\n";
  for (const RiskPoint& p : curve.points) {
    if (p.modeled) {
      out += fmt::format("{},{},{},{},{},{},{},{},{}\n", num(p.horizon), num(p.var_mean),
                         num(p.var_lo), num(p.var_hi), opt(p.es_mean), opt(p.es_lo), opt(p.es_hi),
                         opt(p.var_hist), opt(p.var_normal));
    } else {
      out += fmt::format("{},,,,,,,{},{}\n", num(p.horizon), opt(p.var_hist), opt(p.var_normal));
    }
  }
  return out;
}

Json pair_json(const std::pair<double, double>& p) { return Json::array({p.first, p.second}); }

std::vector<StudyScenario> read_scenarios(const std::string& path, std::size_t replications) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::invalid_argument, "cannot open '" + path + "'");
  std::string line;
  std::vector<std::string> header;
  std::vector<StudyScenario> out;
  std::size_t line_no = 0;
  const auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
      cells.push_back(cell);
    }
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split(line);
    if (header.empty()) {
      header = std::move(cells);
      continue;
    }
    if (cells.size() != header.size()) {
      raise(ErrorKind::parse, fmt::format("{}:{}: expected {} fields", path, line_no, header.size()));
    }
    StudyScenario sc;
    sc.replications = replications;
    bool have_n = false, have_sigma = false, have_gamma = false;
    for (std::size_t i = 0; i < header.size(); ++i) {
      try {
        if (header[i] == "n") {
          sc.n = std::stoul(cells[i]);
          have_n = true;
        } else if (header[i] == "sigma") {
          sc.sigma = std::stod(cells[i]);
          have_sigma = true;
        } else if (header[i] == "gamma") {
          sc.gamma = std::stod(cells[i]);
          have_gamma = true;
        } else if (header[i] == "replications") {
          sc.replications = std::stoul(cells[i]);
        }
      } catch (const std::logic_error&) {
        raise(ErrorKind::parse, fmt::format("{}:{}: bad value '{}'", path, line_no, cells[i]));
      }
    }
    if (!have_n || !have_sigma || !have_gamma) {
      raise(ErrorKind::parse, path + ": scenario file needs n, sigma and gamma columns");
    }
    out.push_back(sc);
  }
  if (out.empty()) raise(ErrorKind::parse, path + ": no scenarios");
  return out;
}

}  // namespace

std::string run_returns(const ReturnsArgs& a) {
  const LossSeries ls = log_losses(load_prices(a.prices));
  std::string out = "date,loss\n";
  for (std::size_t i = 0; i < ls.losses.size(); ++i) {
    out += fmt::format("{},{}\n", format_date(ls.dates[i]), num(ls.losses[i]));
  }
  return out;
}

std::string run_fit(const FitArgs& a) {
  const Method method = parse_method(a.method);
  const bool bayesian = method == Method::mode || method == Method::mean;
  if (!bayesian && a.prior) {
    raise(ErrorKind::invalid_argument, "--prior applies only to --method mode|mean");
  }
  if (!bayesian && a.chain_flags_given) {
    raise(ErrorKind::invalid_argument, "chain flags apply only to --method mode|mean");
  }
  const LossSeries ls = load_losses(a.losses);
  const ExceedanceSample s = extract_exceedances(ls.losses, a.threshold);

  FitResult fit;
  std::optional<PosteriorDraws> draws;
  switch (method) {
    case Method::mom: fit = fit_mom(s); break;
    case Method::pwm: fit = fit_pwm(s); break;
    case Method::mle: fit = fit_mle(s); break;
    case Method::mode:
    case Method::mean: {
      const Prior prior = parse_prior(a.prior.value_or("mdi"));
      draws = metropolis(s, prior, chain_config(a.chain));
      fit = method == Method::mode ? draws->start : posterior_mean_fit(s, prior, *draws);
      break;
    }
  }

  Json j;
  j["method"] = to_string(fit.method);
  j["prior"] = fit.prior ? Json(to_string(*fit.prior)) : Json(nullptr);
  j["threshold"] = s.threshold();
  j["n_total"] = s.n_total();
  j["n_exceed"] = s.n_exceed();
  j["sigma"] = fit.sigma;
  j["gamma"] = fit.gamma;
  j["converged"] = fit.converged;
  j["data_consistent"] = fit.data_consistent;
  if (draws) {
    j["acceptance_rate"] = draws->acceptance_rate;
    j["acceptance_warning"] = draws->acceptance_warning();
    j["n_draws"] = draws->draws.size();
    j["ci95_sigma"] = pair_json(credible_interval(draws->sigmas(), 0.95));
    j["ci95_gamma"] = pair_json(credible_interval(draws->gammas(), 0.95));
  }
  return j.dump(2) + "\n";
}

std::string run_risk(const RiskArgs& a) {
  const Prior prior = parse_prior(a.prior);
  const PointEstimate point = parse_point(a.point);
  const RiskQuery q = RiskQuery::from_horizons(a.horizons, a.level);
  const LossSeries ls = load_losses(a.losses);
  const ExceedanceSample s = extract_exceedances(ls.losses, a.threshold);
  const PosteriorDraws d = metropolis(s, prior, chain_config(a.chain));
  return risk_csv(risk_curve_with_baselines(d, s, ls.losses, q, point));
}

std::string run_sweep(const SweepArgs& a) {
  const RiskArgs& r = a.risk;
  const Prior prior = parse_prior(r.prior);
  SweepOptions options;
  options.point = parse_point(r.point);
  options.min_exceedances = a.min_exceedances;
  const RiskQuery q = RiskQuery::from_horizons(r.horizons, r.level);
  const LossSeries ls = load_losses(r.losses);
  const ThresholdSweep sw = sweep(ls.losses, a.thresholds, prior, chain_config(r.chain), q, options);

  const std::filesystem::path dir(a.out_dir);
  Json summary;
  summary["prior"] = to_string(prior);
  summary["level"] = r.level;
  summary["master_seed"] = r.chain.seed;
  summary["n_total"] = ls.losses.size();
  Json entries = Json::array();
  for (std::size_t k = 0; k < sw.entries.size(); ++k) {
    const SweepEntry& e = sw.entries[k];
    Json j;
    j["threshold"] = e.threshold;
    j["n_exceed"] = e.n_exceed;
    j["seed"] = e.seed;
    if (e.error) {
      j["error"] = *e.error;
    } else {
      const std::string file = fmt::format("risk_{}_u{:g}.csv", k, e.threshold);
      write_text(dir / file, risk_csv(*e.curve));
      j["sigma"] = e.fit->sigma;
      j["gamma"] = e.fit->gamma;
      j["acceptance_rate"] = *e.acceptance_rate;
      j["es_excluded_draws"] = e.curve->es_excluded_draws;
      j["curve"] = file;
    }
    entries.push_back(std::move(j));
  }
  summary["entries"] = std::move(entries);
  const std::string text = summary.dump(2) + "\n";
  write_text(dir / "summary.json", text);
  return text;
}

std::string run_diag(const DiagArgs& a) {
  const LossSeries ls = load_losses(a.losses);
  const std::filesystem::path dir(a.out_dir);

  std::string me = "u,mean_excess,n_above\n";
  for (const MeanExcessPoint& p : mean_excess_data(ls.losses)) {
    me += fmt::format("{},{},{}\n", num(p.u), num(p.mean_excess), p.n_above);
  }
  write_text(dir / "mean_excess.csv", me);

  std::string pq = "log_theoretical,log_empirical\n";
  for (const auto& [t, e] : pareto_quantile_data(ls.losses)) {
    pq += fmt::format("{},{}\n", num(t), num(e));
  }
  write_text(dir / "pareto_quantile.csv", pq);

  return (dir / "mean_excess.csv").string() + "\n" + (dir / "pareto_quantile.csv").string() + "\n";
}

std::string run_study(const StudyArgs& a) {
  if (a.replications == 0) raise(ErrorKind::invalid_argument, "--replications must be >= 1");
  std::vector<StudyScenario> scenarios = a.scenarios == "default"
                                             ? default_scenarios(a.replications)
                                             : read_scenarios(a.scenarios, a.replications);
  for (StudyScenario& sc : scenarios) {
    sc.mcmc.n_draws = a.draws;
    sc.mcmc.burn_in = a.burnin;
  }
  const StudyReport report = gpdrisk::run_study(scenarios, a.seed);

  std::string out = "n,sigma,gamma,parameter";
  for (Estimator e : kAllEstimators) out += fmt::format(",{}", label(e));
  out += "\n";
  for (const ScenarioResult& r : report.scenarios) {
    const auto row = [&](std::string_view name, auto value) {
      out += fmt::format("{},{},{},{}", r.scenario.n, num(r.scenario.sigma), num(r.scenario.gamma),
                         name);
      for (Estimator e : kAllEstimators) out += "," + value(r.cell(e));
      out += "\n";
    };
    row("sigma", [](const CellStats& c) { return c.used ? num(c.rmse_sigma()) : std::string(); });
    row("gamma", [](const CellStats& c) { return c.used ? num(c.rmse_gamma()) : std::string(); });
    row("failures", [](const CellStats& c) { return std::to_string(c.failures); });
  }
  return out;
}

std::string run_simulate(const SimulateArgs& a) {
  Rng rng(a.seed);
  std::string out = "x\n";
  for (double x : sample({a.mu, a.sigma, a.gamma}, a.n, rng)) out += num(x) + "\n";
  return out;
}

std::string run_fixture(const FixtureArgs& a) {
  SyntheticMarket m;
  m.n_days = a.days;
  m.n_exceed = a.exceedances;
  m.threshold = a.threshold;
  m.tail_sigma = a.tail_sigma;
  m.tail_gamma = a.tail_gamma;
  m.start_date = a.start;
  m.seed = a.seed;
  const PriceSeries p = synthetic_prices(m);
  std::string out;
  if (a.losses_only) {
    // The generator's own losses, so the exceedance count is exact.
    const std::vector<double> losses = synthetic_losses(m);
    out = "date,loss\n";
    for (std::size_t i = 0; i < losses.size(); ++i) {
      out += fmt::format("{},{}\n", format_date(p.points[i + 1].date), num(losses[i]));
    }
  } else {
    out = "date,close\n";
    for (const PricePoint& pt : p.points) {
      out += fmt::format("{},{}\n", format_date(pt.date), num(pt.close));
    }
  }
  return out;
}

}  // namespace gpdrisk::cli
