#include "orbital/cli.hpp"

#include "orbital/error.hpp"
#include "orbital/json.hpp"
#include "orbital/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace orbital::cli {
namespace {

enum class Format { JSON, CSV, TABLE };

struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<json> rows;
};

struct Report {
  std::string command;
  std::vector<Section> sections;
  std::vector<std::string> failures;  // witnesses; nonempty means exit 3
};

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render(const Report& rep, Format fmt, std::ostream& out) {
  if (fmt == Format::JSON) {
    json doc = {{"command", rep.command}};
    for (const auto& s : rep.sections) doc[s.name] = s.rows;
    doc["ok"] = rep.failures.empty();
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t si = 0; si < rep.sections.size(); ++si) {
    const auto& s = rep.sections[si];
    if (si) out << '\n';
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : s.rows) {
      std::vector<std::string> line;
      for (const auto& c : s.columns) line.push_back(row.contains(c) ? cell(row.at(c)) : "-");
      cells.push_back(std::move(line));
    }
    if (fmt == Format::CSV) {
      for (std::size_t i = 0; i < s.columns.size(); ++i) out << (i ? "," : "") << csv_escape(s.columns[i]);
      out << '\n';
      for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_escape(line[i]);
        out << '\n';
      }
      continue;
    }
    if (rep.sections.size() > 1) out << "# " << s.name << '\n';
    std::vector<std::size_t> width(s.columns.size());
    for (std::size_t i = 0; i < s.columns.size(); ++i) width[i] = s.columns[i].size();
    for (const auto& line : cells)
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    auto print = [&](const std::vector<std::string>& line) {
      std::string text;
      for (std::size_t i = 0; i < line.size(); ++i) {
        text += line[i];
        if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
      }
      out << text << '\n';
    };
    print(s.columns);
    for (const auto& line : cells) print(line);
  }
}

// Shared flag storage; each subcommand registers the subset it accepts.
struct Flags {
  std::string cls;
  std::optional<int> rank, p, k, max_rank;
  std::optional<double> t, lambda_max;
  bool regular = false;
  std::optional<std::string> cg;
  std::uint64_t seed = 20240601;
};

SpaceDescriptor space(const Flags& f) {
  if (f.cls.empty()) throw InvalidArgument("--class is required");
  return lookup_by_rank(parse_cartan_class(f.cls), f.rank, f.p);
}

json descriptor_cells(const SpaceDescriptor& s) {
  return {{"class", to_string(s.cartan_class)}, {"label", s.label()}, {"lie_type", to_string(s.lie_type)}};
}

Report cmd_catalog(const Flags& f) {
  Report rep{"catalog", {}, {}};
  std::optional<CartanClass> only;
  if (!f.cls.empty()) only = parse_cartan_class(f.cls);
  Section charts{"charts", {"chart", "root_type", "regime", "class", "dim", "mults"}, {}};
  for (const auto& r : chart_rows())
    if (!only || r.cls == *only) charts.rows.push_back(to_json(r));
  Section spaces{"spaces", {"class", "label", "lie_type", "rank", "eta0", "eta1", "eta2", "dim", "rank+sum_m"}, {}};
  for (const auto& s : all_spaces(f.max_rank.value_or(8))) {
    if (only && s.cartan_class != *only) continue;
    json row = descriptor_cells(s);
    row.update(to_json(s));
    row["eta0"] = s.mults.eta0;
    row["eta1"] = s.mults.eta1;
    row["eta2"] = s.mults.eta2;
    row["rank+sum_m"] = dimension_from_roots(s);
    if (row["rank+sum_m"] != s.dim_gk)
      rep.failures.push_back(s.label() + ": dim " + std::to_string(s.dim_gk) + " but rank+Σm = " +
                             row["rank+sum_m"].dump());
    spaces.rows.push_back(row);
  }
  rep.sections = {charts, spaces};
  return rep;
}

Report cmd_rho(const Flags& f) {
  const auto s = space(f);
  json row = descriptor_cells(s);
  row["rho"] = rho(s);
  row["rho_formula"] = s.lie_type.classical() ? json(rho_formula(s)) : json(nullptr);
  row["rho_sharp"] = s.lie_type.classical() ? json(rho_sharp(s)) : json(nullptr);
  return {"rho", {{"rows", {"class", "label", "lie_type", "rho", "rho_formula", "rho_sharp"}, {row}}}, {}};
}

Report cmd_kgate(const Flags& f) {
  const auto s = space(f);
  json row = descriptor_cells(s);
  row.update(to_json(k_gate(s)));
  return {"kgate", {{"rows", {"class", "label", "lie_type", "k_gate", "strict", "min_k", "rule"}, {row}}}, {}};
}

Report cmd_threshold(const Flags& f) {
  const auto s = space(f);
  json row = descriptor_cells(s);
  row["threshold"] = regular_threshold(s);
  return {"threshold", {{"rows", {"class", "label", "lie_type", "threshold"}, {row}}}, {}};
}

int need_k(const Flags& f) {
  if (!f.k) throw InvalidArgument("--k is required");
  return *f.k;
}

Report cmd_l2gate(const Flags& f) {
  const auto s = space(f);
  const int k = need_k(f);
  json row = descriptor_cells(s);
  row["k"] = k;
  row["regular"] = f.regular;
  row.update(to_json(l2_gate(s, k, f.regular)));
  return {"l2gate", {{"rows", {"class", "label", "k", "regular", "verdict", "rule"}, {row}}}, {}};
}

Report cmd_diff(const Flags& f) {
  const auto s = space(f);
  const int k = need_k(f);
  const auto d = diff_order(s, k, f.regular);
  const auto fast = diff_fast_path(s, k, f.regular);
  json row = descriptor_cells(s);
  row["k"] = k;
  row["regular"] = f.regular;
  row["order"] = d.order;
  row["rule"] = d.rule;
  row["fast_path"] = fast ? json(*fast) : json(nullptr);
  return {"diff", {{"rows", {"class", "label", "k", "regular", "order", "rule", "fast_path"}, {row}}}, {}};
}

Report cmd_subsystems(const Flags& f) {
  const auto s = space(f);
  Section sec{"rows", {"index", "type", "size", "witness", "roots"}, {}};
  int i = 0;
  for (const auto& sub : maximal_subsystems(s.lie_type)) {
    json j = to_json(sub);
    std::string roots;
    for (std::size_t r : sub.roots) roots += (roots.empty() ? "" : " ") + std::to_string(r);
    sec.rows.push_back({{"index", i++},
                        {"type", sub.type_name()},
                        {"size", sub.roots.size()},
                        {"witness", j["witness"].dump()},
                        {"roots", roots},
                        {"detail", j}});
  }
  return {"subsystems", {sec}, {}};
}

struct CountRow {
  json row;
  std::optional<std::string> failure;
};

std::vector<CountRow> count_rows(int max_rank, const std::optional<std::string>& cg, std::uint64_t seed) {
  std::vector<SpaceDescriptor> spaces;
  for (const auto& s : all_spaces(max_rank))
    if (s.lie_type.classical()) spaces.push_back(s);
  // Descriptors are independent; results are collected in catalog order.
  std::vector<std::future<CountRow>> jobs;
  for (const auto& s : spaces)
    jobs.push_back(std::async(std::launch::async, [s, cg, seed] {
      const Rational c = cg ? Rational::parse(*cg) : default_cg(s.lie_type);
      const auto r = rho_oracle_scan(s, c, seed);
      CountRow out;
      out.row = descriptor_cells(s);
      out.row.update({{"cg", c.str()},
                      {"formula", r.formula},
                      {"sharp", r.sharp},
                      {"oracle", r.minimum},
                      {"probes", r.probes},
                      {"bound_holds", r.bound_holds},
                      {"attained", r.attained},
                      {"argmin", to_json(r.argmin)}});
      if (!r.bound_holds || !r.attained) {
        std::ostringstream os;
        os << s.label() << ": formula " << r.formula << ", oracle minimum " << r.minimum << " at "
           << to_json(r.argmin).dump();
        if (r.violation) os << ", probe below formula at " << to_json(*r.violation).dump();
        out.failure = os.str();
      }
      return out;
    }));
  std::vector<CountRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

Report cmd_verify_counts(const Flags& f) {
  Report rep{"verify-counts", {}, {}};
  Section sec{"rows",
              {"label", "lie_type", "cg", "formula", "sharp", "oracle", "probes", "bound_holds", "attained"},
              {}};
  for (auto& r : count_rows(f.max_rank.value_or(6), f.cg, f.seed)) {
    sec.rows.push_back(r.row);
    if (r.failure) rep.failures.push_back(*r.failure);
  }
  rep.sections = {sec};
  return rep;
}

double need_t(const Flags& f) {
  if (!f.t) throw InvalidArgument("--t is required");
  return *f.t;
}

Report cmd_rank1_phi(const Flags& f) {
  const double t = need_t(f);
  const double lmax = f.lambda_max.value_or(200);
  if (!(lmax >= 0) || lmax > 1e6) throw InvalidArgument("--lambda-max must lie in [0, 1e6]");
  Section sec{"rows", {"lambda", "t", "phi_re", "phi_im", "c_inv_sq"}, {}};
  for (int i = 0; i <= static_cast<int>(std::floor(lmax)); ++i) {
    const double l = i;
    const cdouble phi = phi_rank1(l, t);
    // |c(λ)|^{−2} = 4πλ·tanh(πλ/2) vanishes at λ = 0.
    sec.rows.push_back({{"lambda", l}, {"t", t}, {"phi_re", phi.real()}, {"phi_im", phi.imag()},
                        {"c_inv_sq", l > 0 ? c_inv_sq(l) : 0.0}});
  }
  return {"rank1-phi", {sec}, {}};
}

Report cmd_rank1_plancherel(const Flags& f) {
  const double t = need_t(f);
  const int k = need_k(f);
  Report rep{"rank1-plancherel", {}, {}};
  std::vector<double> cps;
  if (f.lambda_max) {
    for (double c : divergence_checkpoints())
      if (c < *f.lambda_max) cps.push_back(c);
    cps.push_back(*f.lambda_max);
  } else {
    cps = divergence_checkpoints();
  }
  const auto F = plancherel_curve({k}, t, cps)[0];
  Section curve{"rows", {"k", "t", "Lambda", "F"}, {}};
  std::vector<std::pair<double, double>> samples;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    curve.rows.push_back({{"k", k}, {"t", t}, {"Lambda", cps[i]}, {"F", F[i]}});
    samples.emplace_back(cps[i], F[i]);
  }
  rep.sections.push_back(curve);
  if (!f.lambda_max) {
    if (k > 6 || t < 0.1 || t > 3) throw InvalidArgument("the divergence fit needs k in [1, 6] and t in [0.1, 3]");
    const auto fit = fit_divergence(k, t, samples);
    json row = to_json(fit);
    row.erase("samples");
    rep.sections.push_back({"fit", {"k", "t", "slope", "intercept", "residual", "increment_ratios", "verdict"}, {row}});
  }
  return rep;
}

Report cmd_verify_all(const Flags& f) {
  Report rep{"verify-all", {}, {}};
  Section sec{"checks", {"check", "passed", "detail"}, {}};
  auto add = [&](const CheckResult& r) {
    sec.rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) rep.failures.push_back(r.name + ": " + r.detail);
  };
  add(check_dimensions(8));
  {
    CheckResult r{"rho formula vs probe oracle", true, ""};
    int total = 0, bad = 0;
    std::string first;
    for (auto& row : count_rows(f.max_rank.value_or(6), f.cg, f.seed)) {
      ++total;
      if (row.failure) {
        if (bad++ < 3) first += (first.empty() ? "" : "; ") + *row.failure;
      }
    }
    r.passed = bad == 0;
    r.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " descriptors agree" +
               (bad ? "; " + first + (bad > 3 ? "; ..." : "") : "");
    add(r);
  }
  add(check_subsystems(3, f.seed, 1000));
  add(check_rank1_grid());
  add(check_divergence(f.t.value_or(1.0)));
  rep.sections = {sec};
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root-system combinatorics, decay gates and rank-one spherical functions", "orbital"};
  app.require_subcommand(1);
  Flags f;
  std::string format = "table";
  const std::map<std::string, Format> formats = {{"json", Format::JSON}, {"csv", Format::CSV}, {"table", Format::TABLE}};

  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  };
  auto desc = [&](CLI::App* c, bool required_class) {
    auto* o = c->add_option("--class", f.cls, "Cartan class, e.g. AIII or EIX");
    if (required_class) o->required();
    c->add_option("--rank", f.rank, "rank of the restricted root system");
    c->add_option("--p", f.p, "p for AIII, CII and BDI");
  };
  using Handler = Report (*)(const Flags&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* c = app.add_subcommand(name, help);
    fmt(c);
    commands.emplace_back(c, h);
    return c;
  };

  auto* catalog = sub("catalog", "appendix charts and instantiated descriptors", cmd_catalog);
  desc(catalog, false);
  catalog->add_option("--max-rank", f.max_rank, "largest rank to instantiate (default 8)");
  desc(sub("rho", "the exponent ϱ", cmd_rho), true);
  desc(sub("kgate", "the k_G gate", cmd_kgate), true);
  desc(sub("threshold", "regular-element threshold", cmd_threshold), true);
  for (auto [name, h] : {std::pair{"l2gate", cmd_l2gate}, std::pair{"diff", cmd_diff}}) {
    auto* c = sub(name, name == std::string("diff") ? "differentiability order" : "L² verdict", h);
    desc(c, true);
    c->add_option("--k", f.k, "convolution power")->required();
    c->add_flag("--regular", f.regular, "a is regular");
  }
  desc(sub("subsystems", "maximal proper subsystems", cmd_subsystems), true);
  auto* counts = sub("verify-counts", "rho_formula against the probe oracle", cmd_verify_counts);
  counts->add_option("--max-rank", f.max_rank, "largest rank (default 6)");
  counts->add_option("--cg", f.cg, "c_G override, e.g. 1/2");
  counts->add_option("--seed", f.seed, "probe seed");
  auto* phi = sub("rank1-phi", "φ_λ(t) and |c(λ)|^{-2} on λ = 0, 1, ..., lambda-max", cmd_rank1_phi);
  phi->add_option("--t", f.t, "t > 0")->required();
  phi->add_option("--lambda-max", f.lambda_max, "largest λ (default 200)");
  auto* pl = sub("rank1-plancherel", "truncated Plancherel integrals and divergence fit", cmd_rank1_plancherel);
  pl->add_option("--k", f.k, "power k")->required();
  pl->add_option("--t", f.t, "t > 0")->required();
  pl->add_option("--lambda-max", f.lambda_max, "single upper limit instead of the fit checkpoints");
  auto* all = sub("verify-all", "every verification suite", cmd_verify_all);
  all->add_option("--max-rank", f.max_rank, "largest rank for the count sweep (default 6)");
  all->add_option("--cg", f.cg, "c_G override for the count sweep");
  all->add_option("--seed", f.seed, "probe and sampling seed");
  all->add_option("--t", f.t, "t for the divergence check (default 1)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    for (auto [c, h] : commands) {
      if (!c->parsed()) continue;
      const Report rep = h(f);
      render(rep, formats.at(format), out);
      for (const auto& w : rep.failures) err << "verification failure: " << w << '\n';
      return rep.failures.empty() ? kExitOk : kExitVerification;
    }
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\nwitness: " << e.witness() << '\n';
    return kExitVerification;
  } catch (const InconclusiveFit& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const AccuracyError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace orbital::cli
