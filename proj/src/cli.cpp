#include "soblocks/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "soblocks/branching.hpp"
#include "soblocks/characters.hpp"
#include "soblocks/fock.hpp"
#include "soblocks/verlinde.hpp"

namespace soblocks::cli {

using nlohmann::json;

namespace {

struct Global {
  long precision = kDefaultPrecision;
  double tolerance = kIdentityTol;
  std::string format = "json";
  int jobs = 1;
  std::string out_file;
};

BWeight weight_from_json(const json& j, int rank, int level) {
  if (j.contains("fund")) {
    std::vector<int> a = j.at("fund").get<std::vector<int>>();
    BWeight w(rank, std::move(a));
    if (w.level() > level) throw domain_error("weight literal above level");
    return w;
  }
  if (j.contains("young")) {
    YoungDiagram y(j.at("young").get<std::vector<int>>());
    BWeight w = young_to_weight(y, rank);
    if (j.value("sigma", false)) w = sigma(w, level);
    if (w.level() > level) throw domain_error("weight literal above level");
    return w;
  }
  throw domain_error("weight literal must contain \"young\" or \"fund\"");
}

json weight_to_json(const BWeight& w) {
  json j;
  j["fund"] = w.fund;
  j["level"] = w.level();
  j["tensor"] = w.tensor_class();
  if (w.tensor_class()) {
    auto tl = w.two_l();
    std::vector<int> rows;
    for (int v : tl)
      if (v > 0) rows.push_back(v / 2);
    j["young"] = rows;  // row lengths of the parametrizing diagram
  }
  return j;
}

std::string fmt_resid(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

void emit(const json& j, const Global& g, std::ostream& out) {
  if (g.format == "csv") {
    // flat key,value view; arrays inline
    for (auto it = j.begin(); it != j.end(); ++it)
      out << it.key() << ',' << it.value().dump() << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

std::ostream& pick_stream(const Global& g, std::ofstream& file, std::ostream& main_out) {
  if (g.out_file.empty()) return main_out;
  file.open(g.out_file);
  if (!file) throw domain_error("cannot open output file " + g.out_file);
  return file;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open weights file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void warn_small_rank(std::ostream& err, int rank) {
  if (small_rank(rank))
    err << "warning: rank " << rank << " is below the validated range (r >= 3)\n";
}

std::vector<YoungDiagram> diagrams_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw domain_error("expected a JSON array of weight literals");
  std::vector<YoungDiagram> out;
  for (const auto& item : j) {
    if (!item.contains("young") || item.value("sigma", false))
      throw domain_error("duality weights must be plain {\"young\":[...]} literals");
    out.emplace_back(item.at("young").get<std::vector<int>>());
  }
  return out;
}

// ---- identity harnesses -------------------------------------------------

struct TrialResult {
  int trials = 0;
  int failures = 0;
};

// Each trial draws from its own child stream, so partitioning the trial
// index range over threads cannot change any outcome.
TrialResult run_trials(int trials, std::uint64_t seed, int jobs,
                       const std::function<bool(int, SplitMix64&)>& one) {
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
  SplitMix64 rng(seed);
  for (auto& s : seeds) s = rng.next();
  std::vector<char> ok(static_cast<std::size_t>(trials), 1);
  auto work = [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      SplitMix64 local(seeds[static_cast<std::size_t>(t)]);
      ok[static_cast<std::size_t>(t)] = one(t, local) ? 1 : 0;
    }
  };
  int nthreads = std::max(1, jobs);
  if (nthreads == 1 || trials < 2) {
    work(0, trials);
  } else {
    std::vector<std::thread> pool;
    int chunk = (trials + nthreads - 1) / nthreads;
    for (int b = 0; b < trials; b += chunk)
      pool.emplace_back(work, b, std::min(trials, b + chunk));
    for (auto& th : pool) th.join();
  }
  TrialResult res;
  res.trials = trials;
  for (char c : ok)
    if (!c) ++res.failures;
  return res;
}

long long laplace_det(const std::vector<std::vector<long long>>& m) {
  if (m.size() == 1) return m[0][0];
  long long acc = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long long>> sub;
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    long long term = m[0][c] * laplace_det(sub);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

bool one_surprise(SplitMix64& local) {
  const int n = 6, r = 3;
  std::vector<std::vector<long long>> a;
  do {
    a.assign(n, std::vector<long long>(n));
    for (auto& row : a)
      for (auto& x : row) x = local.range(-5, 5);
  } while (laplace_det(a) == 0);
  auto pick_subset = [&](SplitMix64& g) {
    std::vector<int> pool{1, 2, 3, 4, 5, 6}, out;
    for (int i = 0; i < r; ++i) {
      std::size_t idx = static_cast<std::size_t>(g.below(pool.size()));
      out.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
  };
  std::vector<int> u = pick_subset(local), t = pick_subset(local);
  return verify_minor_identity(a, u, t);
}

bool one_trig(int which, SplitMix64& local, long prec, double tol) {
  int a = static_cast<int>(local.range(2, 8));
  if (which == 1) {
    std::vector<int> v;
    for (int x = 1; x <= a - 1; ++x)
      if (local.below(2)) v.push_back(x);
    return verify_trig1(v, a, prec, tol);
  }
  std::vector<int> v;
  for (int tx = 1; tx <= 2 * a - 1; tx += 2)
    if (local.below(2)) v.push_back(tx);
  return verify_trig2(v, a, prec, tol);
}

bool one_charduality(int t, SplitMix64& local, long prec, double tol) {
  int r = 3, s = (t % 2 == 0) ? 3 : 4;
  auto diagrams = diagrams_in_box(r, s);
  const YoungDiagram& lam = diagrams[local.below(diagrams.size())];
  bool zero_class = local.below(2) != 0;
  auto reps = zero_class ? orbit_reps_zero(r, s) : orbit_reps_integer(r, s);
  const ULabel& u = reps[local.below(reps.size())];
  return verify_char_duality(lam, u, r, s, prec, tol).pass;
}

bool one_centertrace(SplitMix64& local, long prec, double tol) {
  const int r = 3, s = 3, level = 2 * s + 1;
  auto diagrams = diagrams_in_box(r, s);
  auto mus = level_set(r, level, WeightClass::all);
  const YoungDiagram* l1;
  const YoungDiagram* l2;
  do {
    l1 = &diagrams[local.below(diagrams.size())];
    l2 = &diagrams[local.below(diagrams.size())];
  } while ((l1->size() + l2->size()) % 2 != 0);
  const BWeight& mu = mus[local.below(mus.size())];
  return verify_center_trace({young_to_weight(*l1, r), young_to_weight(*l2, r)}, mu, r, level,
                             prec, tol);
}

}  // namespace

BWeight parse_weight_literal(const std::string& text, int rank, int level) {
  return weight_from_json(json::parse(text), rank, level);
}

std::vector<BWeight> parse_weight_list(const std::string& text, int rank, int level) {
  json j = json::parse(text);
  if (!j.is_array()) throw domain_error("expected a JSON array of weight literals");
  std::vector<BWeight> out;
  for (const auto& item : j) out.push_back(weight_from_json(item, rank, level));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out_stream, std::ostream& err) {
  CLI::App app{"conformal-block dimensions and rank-level dualities for odd orthogonal algebras"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--precision", g.precision, "working precision in bits")->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "identity-check tolerance")->capture_default_str();
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", g.jobs, "worker threads for sums and trials")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_file, "write the report to a file");

  // levelset
  auto* cmd_levelset = app.add_subcommand("levelset", "enumerate dominant weights at a level");
  int ls_r = 3, ls_level = 7;
  bool ls_tensor = false;
  cmd_levelset->add_option("--r", ls_r)->required();
  cmd_levelset->add_option("--level", ls_level)->required();
  cmd_levelset->add_flag("--tensor", ls_tensor, "restrict to tensor-class weights");

  // dim
  auto* cmd_dim = app.add_subcommand("dim", "conformal-block dimension");
  int dim_r = 3, dim_level = 1, dim_genus = 0;
  std::string dim_weights;
  cmd_dim->add_option("--r", dim_r)->required();
  cmd_dim->add_option("--level", dim_level)->required();
  cmd_dim->add_option("--genus", dim_genus)->capture_default_str();
  cmd_dim->add_option("--weights", dim_weights, "JSON file with an array of weight literals")
      ->required();

  // fusion
  auto* cmd_fusion = app.add_subcommand("fusion", "three-point genus-0 coefficient");
  int fu_r = 3, fu_level = 7;
  std::string fu_triple;
  cmd_fusion->add_option("--r", fu_r)->required();
  cmd_fusion->add_option("--level", fu_level)->required();
  cmd_fusion->add_option("--triple", fu_triple, "comma-separated weight literals W,W,W")->required();

  // duality
  auto* cmd_duality = app.add_subcommand("duality", "rank-level dimension comparison");
  int du_r = 3, du_s = 3;
  std::string du_case = "even", du_weights;
  cmd_duality->add_option("--r", du_r)->required();
  cmd_duality->add_option("--s", du_s)->required();
  cmd_duality->add_option("--case", du_case)->check(CLI::IsMember({"even", "odd", "sigma0"}));
  cmd_duality->add_option("--weights", du_weights, "JSON file with diagram literals")->required();

  // branch
  auto* cmd_branch = app.add_subcommand("branch", "level-1 branching components");
  int br_r = 3, br_s = 3, br_max = 4;
  std::string br_source = "vacuum";
  cmd_branch->add_option("--r", br_r)->required();
  cmd_branch->add_option("--s", br_s)->required();
  cmd_branch->add_option("--source", br_source)->check(CLI::IsMember({"vacuum", "vector"}));
  cmd_branch->add_option("--max-size", br_max)->capture_default_str();

  // anomaly
  auto* cmd_anomaly = app.add_subcommand("anomaly", "embedding anomaly data");
  int an_r = 3, an_s = 3;
  cmd_anomaly->add_option("--r", an_r)->required();
  cmd_anomaly->add_option("--s", an_s)->required();

  // fock
  auto* cmd_fock = app.add_subcommand("fock", "level-1 spin-module computations");
  int fo_r = 3, fo_s = 3;
  cmd_fock->add_option("--r", fo_r)->required();
  cmd_fock->add_option("--s", fo_s)->required();
  auto* cmd_hwv = cmd_fock->add_subcommand("hwv", "highest-weight wedge vector");
  std::string hw_lambda = "[]", hw_variant = "plain";
  bool hw_verify = false;
  cmd_hwv->add_option("--lambda", hw_lambda, "diagram rows, e.g. [2,1]");
  cmd_hwv->add_option("--variant", hw_variant)
      ->check(CLI::IsMember({"plain", "sigmaL", "sigmaR", "sigmaLR"}));
  cmd_hwv->add_flag("--verify", hw_verify);
  auto* cmd_gauge = cmd_fock->add_subcommand("gauge", "mode-1 vanishing instances");
  int ga_max = 4;
  cmd_gauge->add_option("--max-size", ga_max)->capture_default_str();

  // identities
  auto* cmd_ident = app.add_subcommand("identities", "randomized identity harnesses");
  std::string id_check;
  int id_trials = 50;
  std::uint64_t id_seed = 1;
  cmd_ident->add_option("--check", id_check)
      ->check(CLI::IsMember({"surprise", "minor", "trig1", "trig2", "charduality", "centertrace"}))
      ->required();
  cmd_ident->add_option("--trials", id_trials)->capture_default_str();
  cmd_ident->add_option("--seed", id_seed)->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("soblocks");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out_stream << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream& out = pick_stream(g, file, out_stream);

  try {
    if (*cmd_levelset) {
      warn_small_rank(err, ls_r);
      auto ws = level_set(ls_r, ls_level, ls_tensor ? WeightClass::tensor : WeightClass::all);
      if (g.format == "csv") {
        out << "fund,level,tensor\n";
        for (const auto& w : ws) {
          out << '"';
          for (int i = 0; i < w.rank; ++i) out << (i ? " " : "") << w.fund[static_cast<std::size_t>(i)];
          out << "\"," << w.level() << ',' << (w.tensor_class() ? 1 : 0) << '\n';
        }
      } else {
        json j;
        j["rank"] = ls_r;
        j["level"] = ls_level;
        j["class"] = ls_tensor ? "tensor" : "all";
        j["count"] = ws.size();
        json arr = json::array();
        for (const auto& w : ws) arr.push_back(weight_to_json(w));
        j["weights"] = arr;
        out << j.dump() << '\n';
      }
      return 0;
    }

    if (*cmd_dim) {
      warn_small_rank(err, dim_r);
      auto ws = parse_weight_list(read_file(dim_weights), dim_r, dim_level);
      DimResult res = verlinde_dim(dim_r, dim_level, dim_genus, ws, g.precision, g.jobs);
      json j;
      j["algebra"] = "B" + std::to_string(dim_r);
      j["level"] = dim_level;
      j["genus"] = dim_genus;
      json arr = json::array();
      for (const auto& w : ws) arr.push_back(weight_to_json(w));
      j["weights"] = arr;
      j["dim"] = res.dim;
      j["residual"] = fmt_resid(res.residual);
      emit(j, g, out);
      return 0;
    }

    if (*cmd_fusion) {
      warn_small_rank(err, fu_r);
      auto ws = parse_weight_list("[" + fu_triple + "]", fu_r, fu_level);
      if (ws.size() != 3) throw domain_error("fusion expects exactly three weights");
      DimResult res = verlinde_dim(fu_r, fu_level, 0, ws, g.precision, g.jobs);
      json j;
      j["algebra"] = "B" + std::to_string(fu_r);
      j["level"] = fu_level;
      json arr = json::array();
      for (const auto& w : ws) arr.push_back(weight_to_json(w));
      j["triple"] = arr;
      j["dim"] = res.dim;
      j["residual"] = fmt_resid(res.residual);
      emit(j, g, out);
      return 0;
    }

    if (*cmd_duality) {
      warn_small_rank(err, du_r);
      warn_small_rank(err, du_s);
      auto ys = diagrams_from_json(read_file(du_weights));
      DualityCase c = du_case == "even"   ? DualityCase::even
                      : du_case == "odd"  ? DualityCase::odd
                                          : DualityCase::sigma0;
      DualityReport rep = duality_check(du_r, du_s, ys, c, g.precision, g.jobs);
      json j;
      j["r"] = du_r;
      j["s"] = du_s;
      j["case"] = du_case;
      j["lhs"] = rep.lhs;
      j["rhs"] = rep.rhs;
      j["pass"] = rep.pass;
      emit(j, g, out);
      return rep.pass ? 0 : 1;
    }

    if (*cmd_branch) {
      warn_small_rank(err, br_r);
      warn_small_rank(err, br_s);
      Level1 src = br_source == "vacuum" ? Level1::vacuum : Level1::vector;
      auto pairs = branch_set(br_r, br_s, src, br_max);
      if (g.format == "csv") {
        out << "lambda,variant,left,right,source\n";
        for (const auto& bp : pairs)
          out << '"' << soblocks::to_string(bp.generator) << "\"," << soblocks::to_string(bp.variant) << ",\""
              << soblocks::to_string(bp.left) << "\",\"" << soblocks::to_string(bp.right) << "\","
              << soblocks::to_string(bp.source) << '\n';
      } else {
        for (const auto& bp : pairs) {
          json j;
          j["lambda"] = bp.generator.rows();
          j["variant"] = soblocks::to_string(bp.variant);
          j["left"] = weight_to_json(bp.left);
          j["right"] = weight_to_json(bp.right);
          j["source"] = soblocks::to_string(bp.source);
          out << j.dump() << '\n';
        }
      }
      return 0;
    }

    if (*cmd_anomaly) {
      warn_small_rank(err, an_r);
      warn_small_rank(err, an_s);
      EmbeddingData e = embedding_data(an_r, an_s);
      bool conf = conformal_check(an_r, an_s);
      auto idx = dynkin_index(an_r, an_s);
      bool dsum_ok = true;
      for (const auto& y : diagrams_in_box(an_r, an_s))
        if (!delta_sum_check(y, an_r, an_s)) dsum_ok = false;
      json j;
      j["r"] = an_r;
      j["s"] = an_s;
      j["N"] = e.big_n;
      j["c_left"] = rational_string(central_charge(an_r, e.level_left));
      j["c_right"] = rational_string(central_charge(an_s, e.level_right));
      j["c_ambient"] = rational_string(central_charge(e.d, 1));
      j["conformal"] = conf;
      j["dynkin"] = {idx.first, idx.second};
      j["delta_sum_ok"] = dsum_ok;
      emit(j, g, out);
      return (conf && dsum_ok) ? 0 : 1;
    }

    if (*cmd_fock) {
      warn_small_rank(err, fo_r);
      warn_small_rank(err, fo_s);
      FockContext ctx(fo_r, fo_s);
      if (*cmd_hwv) {
        YoungDiagram lam(json::parse(hw_lambda).get<std::vector<int>>());
        Variant var = hw_variant == "plain"    ? Variant::plain
                      : hw_variant == "sigmaL" ? Variant::sigma_left
                      : hw_variant == "sigmaR" ? Variant::sigma_right
                                               : Variant::sigma_both;
        FockVector v = hwv_wedge(lam, var, ctx);
        json j;
        j["lambda"] = lam.rows();
        j["variant"] = hw_variant;
        j["vector"] = soblocks::to_string(v);
        int rc = 0;
        if (hw_verify) {
          int ll = 2 * fo_s + 1, lr = 2 * fo_r + 1;
          BWeight wl = young_to_weight(lam, fo_r), wr = young_to_weight(transpose(lam), fo_s);
          if (var == Variant::sigma_left || var == Variant::sigma_both) wl = sigma(wl, ll);
          if (var == Variant::sigma_right || var == Variant::sigma_both) wr = sigma(wr, lr);
          HwvReport rep = verify_hwv(v, wl, wr, ctx);
          j["verified"] = rep.pass;
          j["energy"] = rational_string(rep.energy);
          j["parity"] = rep.wedge_parity;
          j["source"] = soblocks::to_string(rep.source);
          if (!rep.pass) j["failures"] = rep.failures;
          rc = rep.pass ? 0 : 1;
        }
        emit(j, g, out);
        return rc;
      }
      if (*cmd_gauge) {
        int failures = 0, instances = 0;
        // display instances on tiny vectors
        {
          FockVector base = current_apply(CurrentOp{-1, -1, 1, 2, -1}, FockVector::vacuum(), ctx);
          ++instances;
          if (!current_apply(CurrentOp{1, 2, -2, -1, 1}, base, ctx).is_zero()) ++failures;
          FockVector one = FockVector::monomial({Mode{1, 1, -1}});
          ++instances;
          if (!current_apply(CurrentOp{-1, -1, 1, 2, 1}, one, ctx).is_zero()) ++failures;
        }
        for (const auto& lam : diagrams_in_box(fo_r, fo_s)) {
          if (lam.size() == 0 || lam.size() % 2 != 0 || lam.size() > ga_max) continue;
          auto seq = box_pair_sequence(lam);
          if (seq.empty()) continue;
          auto last = seq.back();
          FockVector phi3 = lowest_wedge(lam, ctx);
          for (int pick = 0; pick < 2; ++pick) {
            int a = pick == 0 ? last[0] : last[2];
            int b = pick == 0 ? last[1] : last[3];
            // boxes addable to lam inside the grid
            auto rows = lam.rows();
            rows.resize(static_cast<std::size_t>(fo_r), 0);
            for (int i = 1; i <= fo_r; ++i) {
              int next = rows[static_cast<std::size_t>(i - 1)] + 1;
              if (next > fo_s) continue;
              if (i > 1 && rows[static_cast<std::size_t>(i - 2)] < next) continue;
              ++instances;
              if (!verify_gauge_vanishing(a, b, i, next, phi3, ctx)) ++failures;
            }
          }
        }
        json j;
        j["instances"] = instances;
        j["failures"] = failures;
        j["pass"] = failures == 0;
        emit(j, g, out);
        return failures == 0 ? 0 : 1;
      }
      err << "usage error: fock needs a subcommand (hwv or gauge)\n";
      return 2;
    }

    if (*cmd_ident) {
      TrialResult res;
      if (id_check == "surprise" || id_check == "minor")
        res = run_trials(id_trials, id_seed, g.jobs,
                         [](int, SplitMix64& rng) { return one_surprise(rng); });
      else if (id_check == "trig1")
        res = run_trials(id_trials, id_seed, g.jobs, [&](int, SplitMix64& rng) {
          return one_trig(1, rng, g.precision, g.tolerance);
        });
      else if (id_check == "trig2")
        res = run_trials(id_trials, id_seed, g.jobs, [&](int, SplitMix64& rng) {
          return one_trig(2, rng, g.precision, g.tolerance);
        });
      else if (id_check == "charduality")
        res = run_trials(id_trials, id_seed, g.jobs, [&](int t, SplitMix64& rng) {
          return one_charduality(t, rng, g.precision, g.tolerance);
        });
      else
        res = run_trials(id_trials, id_seed, g.jobs, [&](int, SplitMix64& rng) {
          return one_centertrace(rng, g.precision, g.tolerance);
        });
      json j;
      j["check"] = id_check;
      j["trials"] = res.trials;
      j["seed"] = id_seed;
      j["failures"] = res.failures;
      j["pass"] = res.failures == 0;
      emit(j, g, out);
      return res.failures == 0 ? 0 : 1;
    }
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const precision_error& e) {
    err << "precision error: " << e.what() << '\n';
    return 3;
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << '\n';
    return 3;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace soblocks::cli
