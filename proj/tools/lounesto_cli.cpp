// lounesto-cli: reports for the extended spinor classification.
//
// Exit codes: 0 success, 1 usage error, 2 --verify mismatch against a reference table.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lounesto/bilinears.hpp"
#include "lounesto/classifier.hpp"
#include "lounesto/clifford.hpp"
#include "lounesto/config.hpp"
#include "lounesto/duals.hpp"
#include "lounesto/report.hpp"
#include "lounesto/spinors.hpp"
#include "lounesto/spinsum.hpp"

using namespace lounesto;

namespace {

constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommonFlags {
  std::string config_file;
  std::uint64_t seed = 0;
  double mass = 0.0;
  std::string momentum;
  std::uint64_t trials = 0;
  std::string format;
  double tol_zero = 0, tol_fpk = 0, tol_cls = 0, tol_fit = 0;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_file, "flat key = value file (CLI flags override it)");
  cmd->add_option("--seed", f.seed, "base seed for all randomness (default 42)");
  cmd->add_option("--mass", f.mass, "mass m > 0 (default 1)");
  cmd->add_option("--momentum", f.momentum, "px,py,pz or p0,px,py,pz (default rest frame)");
  cmd->add_option("--trials", f.trials, "random trials per item (default 100)");
  cmd->add_option("--format", f.format, "json | csv | markdown (default json)");
  cmd->add_option("--tol-zero", f.tol_zero, "absolute zero tolerance (1e-10)");
  cmd->add_option("--tol-fpk", f.tol_fpk, "relative FPK tolerance (1e-8)");
  cmd->add_option("--tol-cls", f.tol_cls, "relative vanishing threshold (1e-8)");
  cmd->add_option("--tol-fit", f.tol_fit, "relative covariance-fit tolerance (1e-7)");
}

RunConfig resolve(const CLI::App* cmd, const CommonFlags& f) {
  RunConfig c;
  if (!f.config_file.empty()) c = load_config_file(f.config_file, c);
  auto set = [cmd](const char* flag) { return cmd->count(flag) > 0; };
  if (set("--seed")) c.seed = f.seed;
  if (set("--mass")) c.mass = f.mass;
  if (set("--momentum")) c.momentum = parse_reals(f.momentum);
  if (set("--trials")) c.trials = f.trials;
  if (set("--format")) c.format = parse_format(f.format);
  if (set("--tol-zero")) c.tol.zero = f.tol_zero;
  if (set("--tol-fpk")) c.tol.fpk = f.tol_fpk;
  if (set("--tol-cls")) c.tol.cls = f.tol_cls;
  if (set("--tol-fit")) c.tol.fit = f.tol_fit;
  c.validate();
  return c;
}

std::string header_comment(const std::string& command, const RunConfig& c, const char* prefix) {
  std::ostringstream out;
  out << prefix << ' ' << kSchemaVersion << " version=" << version() << " command=" << command << " seed=" << c.seed
      << " trials=" << c.trials << " mass=" << c.mass << " tol.zero=" << c.tol.zero << " tol.fpk=" << c.tol.fpk
      << " tol.cls=" << c.tol.cls << " tol.fit=" << c.tol.fit << '\n';
  return out.str();
}

void emit_json(const std::string& command, const RunConfig& c, json result) {
  std::cout << envelope(command, c, std::move(result)).dump(2) << '\n';
}

void emit_table(const std::string& command, const RunConfig& c, const std::string& markdown, const std::string& csv,
                json result) {
  switch (c.format) {
    case OutputFormat::Json:
      emit_json(command, c, std::move(result));
      break;
    case OutputFormat::Markdown:
    {
      std::string header = header_comment(command, c, "<!--");
      header.pop_back();
      std::cout << header << " -->\n\n" << markdown;
    }
      break;
    case OutputFormat::Csv:
      std::cout << header_comment(command, c, "#") << csv;
      break;
  }
}

void require_json(const std::string& command, const RunConfig& c) {
  if (c.format != OutputFormat::Json) throw UsageError(command + " only emits json");
}

json set_to_json(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Lounesto classification: bilinears, duals, spin sums"};
  app.require_subcommand(1);
  CommonFlags common;

  // classify / bilinears / fpk-check share the spinor + dual inputs.
  std::string spinor_text, dual_text = "1";
  auto* classify_cmd = app.add_subcommand("classify", "classify one spinor under one dual");
  auto* bilinears_cmd = app.add_subcommand("bilinears", "bilinear covariants, Fierz aggregate and identities");
  auto* fpk_cmd = app.add_subcommand("fpk-check", "FPK identities for a spinor, or viability of a dual");
  for (auto* cmd : {classify_cmd, bilinears_cmd, fpk_cmd}) {
    add_common(cmd, common);
    cmd->add_option("--dual", dual_text, "dual label, e.g. 1, CT, g0, CT*g51, -1 (default 1)");
  }
  classify_cmd->add_option("--spinor", spinor_text, "8 comma-separated reals: re0,im0,re1,im1,...")->required();
  bilinears_cmd->add_option("--spinor", spinor_text, "8 comma-separated reals: re0,im0,re1,im1,...")->required();
  fpk_cmd->add_option("--spinor", spinor_text, "8 comma-separated reals; omit to test random spinors");

  bool verify = false;
  std::string convention_text = "dagger";
  auto* enum_cmd = app.add_subcommand("enumerate-duals", "candidate grid filtered to admissible duals");
  add_common(enum_cmd, common);
  enum_cmd->add_flag("--verify", verify, "exit 2 unless the grid equals the published one");
  enum_cmd->add_option("--convention", convention_text, "antilinear constraint: dagger | transpose");

  std::vector<std::string> dual_list;
  auto* census_cmd = app.add_subcommand("census", "class frequencies of random spinors per dual");
  add_common(census_cmd, common);
  census_cmd->add_option("--duals", dual_list, "dual labels (default: all admissible)")->delimiter(',');

  std::string target_text;
  std::uint64_t budget = 2000;
  auto* witness_cmd = app.add_subcommand("witness", "search for a spinor/dual pair in a target class");
  add_common(witness_cmd, common);
  witness_cmd->add_option("--target", target_text, "allowed class label, e.g. 1.6")->required();
  witness_cmd->add_option("--duals", dual_list, "dual labels (default: all admissible)")->delimiter(',');
  witness_cmd->add_option("--budget", budget, "trial budget (default 2000)");

  std::string family_text = "regular", policy_text = "strict";
  auto* spin_cmd = app.add_subcommand("spin-sum", "spin sum, propagator core and covariance fit");
  add_common(spin_cmd, common);
  spin_cmd->add_option("--family", family_text, "regular | singular | degenerate");
  spin_cmd->add_option("--dual", dual_text, "one of 1,P,C,T,CP,CT,PT,CPT (default 1)");
  spin_cmd->add_option("--policy", policy_text, "octet policy: strict | best-effort");

  std::size_t probe_count = 5;
  auto* tablev_cmd = app.add_subcommand("table-v", "spin-sum covariance grid");
  add_common(tablev_cmd, common);
  tablev_cmd->add_flag("--verify", verify, "exit 2 unless the grid equals the published one");
  tablev_cmd->add_option("--policy", policy_text, "octet policy: strict | best-effort");
  tablev_cmd->add_option("--probes", probe_count, "number of probe momenta (default 5)");

  std::string which = "classes";
  auto* tables_cmd = app.add_subcommand("tables", "class tables or the operator relation table");
  add_common(tables_cmd, common);
  tables_cmd->add_option("--which", which, "classes | relations");
  tables_cmd->add_flag("--verify", verify, "relations only: exit 2 on mismatch");

  bool parity_flag = false;
  std::string reality_text = "real";
  auto* eta_cmd = app.add_subcommand("derive-eta", "solve {K_i, eta} = 0 for the dual metric");
  add_common(eta_cmd, common);
  eta_cmd->add_flag("--parity", parity_flag, "also impose gamma_0 eta gamma_0 = eta");
  eta_cmd->add_option("--reality", reality_text, "real | hermitian");

  auto* octet_cmd = app.add_subcommand("octet-search", "rerun the octet phase search on seeded probes");
  add_common(octet_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    const RunConfig config = resolve(cmd, common);
    const Momentum p = config.resolved_momentum();

    if (cmd == classify_cmd || cmd == bilinears_cmd || (cmd == fpk_cmd && !spinor_text.empty())) {
      require_json(name, config);
      const Vector4c psi = parse_spinor(spinor_text);
      if (psi.norm() == 0.0) throw UsageError("spinor must be nonzero");
      const DualOperator delta = make_dual(parse_operator(dual_text, p));
      const BilinearSet b = bilinears(psi, delta);
      json result{{"dual", to_json(delta.op)}, {"admissible", delta.admissible}};
      const FpkReport fpk = fpk_check(b, config.tol.fpk);
      if (cmd == classify_cmd) {
        const LounestoLabel label = classify(b, config.tol.cls);
        result["label"] = label.name();
        result["pattern"] = to_json(vanishing_pattern(b, config.tol.cls));
        result["residuals"] = to_json(fpk);
        result["constraints"] = to_json(verify_constraints(label, b, config.tol.fpk));
      } else if (cmd == bilinears_cmd) {
        const FierzAggregate z = fierz_aggregate(b);
        result["bilinears"] = to_json(b);
        result["fpk"] = to_json(fpk);
        result["Z"] = to_json(z.Z);
        result["boomerang"] = boomerang_check(z, config.tol.fpk);
        result["aggregate_identities"] = to_json(aggregate_identities_check(z, config.tol.fpk));
        result["trace_identities"] = to_json(trace_identities_check(z, config.tol.zero));
      } else {
        result["fpk"] = to_json(fpk);
      }
      emit_json(name, config, result);
      return 0;
    }

    if (cmd == fpk_cmd) {
      require_json(name, config);
      const DualOperator delta = make_dual(parse_operator(dual_text, p));
      const ViabilityOptions opts{static_cast<int>(config.trials), config.seed, config.tol.fpk};
      emit_json(name, config,
                {{"dual", to_json(delta.op)},
                 {"admissible", delta.admissible},
                 {"fpk_viable_regular", fpk_viability(delta.op, opts)},
                 {"fpk_viable_singular", singular_fpk_viability(delta.op, opts)}});
      return 0;
    }

    if (cmd == enum_cmd) {
      const auto convention = parse_convention(convention_text);
      if (!convention) throw UsageError("convention must be dagger or transpose");
      const CandidateGrid grid = enumerate_candidates(p, *convention);
      const ViabilityOptions opts{static_cast<int>(config.trials), config.seed, config.tol.fpk};
      const AdmissibleGrid filtered = filter_admissible(grid, opts);
      const auto mismatches = compare_cells(filtered.survivors, reference_admissible_table());
      json cells = json::array();
      for (Discrete r : kAllDiscrete) {
        for (std::size_t c = 0; c < kGridColumns.size(); ++c) {
          json ops = json::array();
          for (const auto& cand : filtered.evaluated.cells[index_of(r)][c]) {
            ops.push_back({{"entry", cand.entry},
                           {"label", cand.dual.label},
                           {"constraint", cand.constraint},
                           {"fpk", cand.fpk},
                           {"fpk_singular", cand.singular_fpk}});
          }
          cells.push_back({{"row", to_string(r)},
                           {"column", kGridColumns[c]},
                           {"admissible", set_to_json(filtered.survivors[index_of(r)][c])},
                           {"operators", ops}});
        }
      }
      json diff = json::array();
      for (const auto& m : mismatches) {
        diff.push_back({{"row", m.row}, {"column", m.column}, {"measured", set_to_json(m.measured)},
                        {"expected", set_to_json(m.expected)}});
      }
      json result{{"convention", to_string(*convention)},
                  {"candidates", grid.total()},
                  {"cells", cells},
                  {"matches_reference", mismatches.empty()},
                  {"mismatches", diff}};
      emit_table(name, config, filtered.markdown(), filtered.csv(), result);
      if (verify && !mismatches.empty()) {
        std::cerr << "enumerate-duals: " << mismatches.size() << " of 112 cells differ from the reference\n";
        return kMismatch;
      }
      return 0;
    }

    if (cmd == census_cmd || cmd == witness_cmd) {
      std::vector<DualOperator> duals;
      if (dual_list.empty()) {
        duals = admissible_duals();
      } else {
        for (const auto& d : dual_list) duals.push_back(make_dual(parse_operator(d, p)));
      }
      if (cmd == census_cmd) {
        const auto rows = census(duals, config.trials, config.seed, config.tol.cls);
        std::ostringstream md, csv;
        md << "| dual | class | count |\n|---|---|---|\n";
        csv << "dual,class,count\n";
        json result = json::array();
        for (const auto& row : rows) {
          for (const auto& [label, count] : row.counts) {
            md << "| " << row.dual << " | " << label << " | " << count << " |\n";
            csv << '"' << row.dual << "\"," << label << ',' << count << '\n';
          }
          result.push_back({{"dual", row.dual}, {"counts", row.counts}});
        }
        emit_table(name, config, md.str(), csv.str(), result);
        return 0;
      }
      require_json(name, config);
      const auto target = parse_label(target_text);
      if (!target) throw UsageError("unknown class label '" + target_text + "'");
      WitnessOptions opts;
      opts.budget = budget;
      opts.seed = config.seed;
      opts.tol = config.tol;
      try {
        const Witness w = find_witness(*target, duals, opts);
        emit_json(name, config,
                  {{"found", true},
                   {"target", target->name()},
                   {"trial", w.trial},
                   {"from_pool", w.from_pool},
                   {"spinor", to_json(w.spinor.components)},
                   {"dual", to_json(w.dual.op)},
                   {"bilinears", to_json(w.bilinears)},
                   {"constraints", to_json(w.constraints)}});
      } catch (const NotFound& e) {
        emit_json(name, config, {{"found", false}, {"target", target->name()}, {"message", e.what()}});
      }
      return 0;
    }

    if (cmd == spin_cmd || cmd == tablev_cmd) {
      OctetPolicy policy;
      if (policy_text == "strict") {
        policy = OctetPolicy::Strict;
      } else if (policy_text == "best-effort") {
        policy = OctetPolicy::BestEffort;
      } else {
        throw UsageError("policy must be strict or best-effort");
      }
      if (cmd == tablev_cmd) {
        if (probe_count < 2) throw UsageError("--probes must be >= 2");
        TableVOptions opts;
        opts.probes = probe_momenta(probe_count, config.seed, config.mass);
        opts.policy = policy;
        opts.fit_tol = config.tol.fit;
        const TableV t = table_v(opts);
        const auto& ref = reference_table_v();
        json rows = json::array();
        int mismatches = 0;
        const std::array<FamilyKind, 3> kinds{FamilyKind::Regular, FamilyKind::Singular,
                                              FamilyKind::SingularDegenerate};
        for (Discrete d : kAllDiscrete) {
          json cells = json::array();
          for (std::size_t k = 0; k < 3; ++k) {
            const SpinSumReport& cell = t.cells[index_of(d)][k];
            const std::string sym = TableV::symbol(cell.verdict);
            if (sym != ref[index_of(d)][k]) ++mismatches;
            json jc{{"family", to_string(kinds[k])},
                    {"verdict", sym},
                    {"expected", ref[index_of(d)][k]},
                    {"residual", cell.residual}};
            if (cell.verdict == CovarianceVerdict::Error) {
              jc["error"] = cell.error;
            } else {
              const StarForm form = star_form(cell, kinds[k], config.mass, config.tol.fit);
              jc["fit"] = form.measured;
              if (cell.verdict == CovarianceVerdict::CovariantStar) jc["star_form_matches"] = form.matches;
            }
            cells.push_back(jc);
          }
          rows.push_back({{"dual", to_string(d)}, {"cells", cells}});
        }
        json result{{"policy", policy_text}, {"rows", rows}, {"mismatches", mismatches}};
        emit_table(name, config, t.markdown(), t.csv(), result);
        if (verify && mismatches > 0) {
          std::cerr << "table-v: " << mismatches << " of 24 cells differ from the reference\n";
          return kMismatch;
        }
        return 0;
      }
      require_json(name, config);
      FamilyKind kind;
      if (family_text == "regular") {
        kind = FamilyKind::Regular;
      } else if (family_text == "singular") {
        kind = FamilyKind::Singular;
      } else if (family_text == "degenerate") {
        kind = FamilyKind::SingularDegenerate;
      } else {
        throw UsageError("family must be regular, singular or degenerate");
      }
      const auto d = parse_discrete(dual_text);
      if (!d) throw UsageError("spin-sum dual must be one of 1,P,C,T,CP,CT,PT,CPT");
      const FamilyBuilder family = family_builder(kind, pinned_octet_phases(), policy);
      const SpinorFamily members = family(p);
      const Matrix4 sum = spin_sum(members.particles, discrete_operator(*d, p));
      const PropagatorCore core = propagator_core(p, family, dual_builder(*d));
      const SpinSumReport fit = covariance_analysis(family, dual_builder(*d),
                                                    probe_momenta(5, config.seed, config.mass), config.tol.fit);
      emit_json(name, config,
                {{"family", to_string(kind)},
                 {"dual", to_string(*d)},
                 {"momentum", {p.energy(), p.px(), p.py(), p.pz()}},
                 {"spin_sum", to_json(sum)},
                 {"propagator_core", to_json(core.S_of_p)},
                 {"verdict", to_string(fit.verdict)},
                 {"fit_residual", fit.residual},
                 {"fit", star_form(fit, kind, config.mass, config.tol.fit).measured}});
      return 0;
    }

    if (cmd == tables_cmd) {
      if (which == "classes") {
        json allowed = json::array(), forbidden = json::array();
        for (const auto& r : kAllowedClasses) allowed.push_back({{"name", r.name}, {"nonzero", r.nonzero}});
        for (const auto& r : kForbiddenClasses) forbidden.push_back({{"name", r.name}, {"nonzero", r.nonzero}});
        std::ostringstream csv;
        csv << "table,class,sigma,omega,J,K,S\n";
        auto rows = [&csv](const char* t, const auto& list) {
          for (const auto& r : list) {
            csv << t << ',' << r.name;
            for (bool nz : r.nonzero) csv << ',' << (nz ? "!=0" : "=0");
            csv << '\n';
          }
        };
        rows("allowed", kAllowedClasses);
        rows("forbidden", kForbiddenClasses);
        emit_table(name, config, tables_markdown(), csv.str(), {{"allowed", allowed}, {"forbidden", forbidden}});
        return 0;
      }
      if (which == "relations") {
        const RelationTable t = relation_table(p, config.tol.zero);
        const auto& ref = reference_relation_table();
        int mismatches = 0;
        json rows = json::array();
        for (Discrete r : kAllDiscrete) {
          json row = json::array();
          for (Discrete c : kAllDiscrete) {
            const std::string got = t.cells[index_of(r)][index_of(c)].text();
            if (got != ref[index_of(r)][index_of(c)]) ++mismatches;
            row.push_back(got);
          }
          rows.push_back({{"row", to_string(r)}, {"products", row}});
        }
        emit_table(name, config, t.markdown(), t.csv(), {{"rows", rows}, {"mismatches", mismatches}});
        if (verify && mismatches > 0) return kMismatch;
        return 0;
      }
      throw UsageError("--which must be classes or relations");
    }

    if (cmd == eta_cmd) {
      require_json(name, config);
      EtaReality reality;
      if (reality_text == "real") {
        reality = EtaReality::RealEntries;
      } else if (reality_text == "hermitian") {
        reality = EtaReality::Hermitian;
      } else {
        throw UsageError("reality must be real or hermitian");
      }
      const EtaFamily fam = derive_eta(parity_flag, reality);
      json basis = json::array();
      for (const auto& m : fam.basis) basis.push_back(to_json(m));
      emit_json(name, config,
                {{"parity", parity_flag},
                 {"reality", reality_text},
                 {"real_dimension", fam.real_dimension()},
                 {"basis", basis},
                 {"gamma0_distance", fam.distance_to_span(gamma(0))}});
      return 0;
    }

    if (cmd == octet_cmd) {
      require_json(name, config);
      const OctetPhases found = search_octet_phases(probe_momenta(5, config.seed, config.mass), config.tol.fpk);
      json phases = json::array(), anti = json::array();
      for (const auto& c : found.particle) phases.push_back(to_json(c));
      for (const auto& c : found.antiparticle) anti.push_back(to_json(c));
      emit_json(name, config,
                {{"found", found.found},
                 {"residual", found.residual},
                 {"particle_phases", phases},
                 {"antiparticle_phases", anti},
                 {"members", {"S+", "S-", "A+", "A-"}}});
      return 0;
    }
    throw UsageError("unknown subcommand");
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotFound& e) {
    std::cerr << "not found: " << e.what() << '\n';
    return kUsage;
  }
}
