// heyting_cli: every capability as a subcommand, JSON on stdout.
// Exit codes: 0 ok, 1 property violated, 2 usage or parse error, 3 budget exceeded.
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heyting/heyting.hpp"

using namespace heyting;

namespace {

constexpr int kOk = 0, kViolated = 1, kUsage = 2, kBudget = 3;

struct AlgebraInput {
  std::optional<std::size_t> chain_n, boolean_n;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--chain", chain_n, "n-element chain");
    auto* b = cmd->add_option("--boolean", boolean_n, "Boolean algebra with n atoms");
    auto* f = cmd->add_option("--algebra", file, "algebra JSON file {\"size\", \"leq\"}");
    c->excludes(b)->excludes(f);
    b->excludes(f);
  }
  bool given() const { return chain_n || boolean_n || !file.empty(); }
  HeytingAlgebra load() const {
    if (chain_n) return chain(*chain_n);
    if (boolean_n) return boolean_algebra(*boolean_n);
    if (!file.empty()) return load_algebra(file);
    throw Error(ErrorKind::InvalidArgument, "one of --chain, --boolean, --algebra is required");
  }
};

/// --eq, --principle or --term (read as term = top).
struct EquationInput {
  std::string eq, principle, term;

  void attach(CLI::App* cmd) {
    auto* e = cmd->add_option("--eq", eq, "equation, e.g. \"x | ~x = top\"");
    auto* p = cmd->add_option("--principle", principle, "catalog principle name");
    auto* t = cmd->add_option("--term", term, "term t, read as t = top");
    e->excludes(p)->excludes(t);
    p->excludes(t);
  }
  bool given() const { return !eq.empty() || !principle.empty() || !term.empty(); }
  Equation load() const {
    if (!eq.empty()) return parse_equation(eq);
    if (!principle.empty()) return classical_principle(principle).equation;
    if (!term.empty()) return {parse_term(term), Term::top()};
    throw Error(ErrorKind::InvalidArgument, "one of --eq, --principle, --term is required");
  }
};

Json ds_json(const DsResult& r) {
  Json failing = Json::array();
  for (const auto& f : r.witnesses_failing) failing.push_back(f);
  return Json{{"ds", rational_json(r.value)},
              {"variables", r.variables},
              {"satisfying", r.satisfying_count.str()},
              {"total", r.total_count.str()},
              {"failing_sample", failing}};
}

Json rn_json(const RNFormula& f) { return Json{{"name", f.name()}, {"term", to_string(f.term)}}; }

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ClassificationBudgetExceeded:
    case ErrorKind::NotFoundWithinBudget:
      return kBudget;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees of satisfiability in finite Heyting algebras"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "JSONL of all Heyting algebras up to a size");
  std::size_t en_max = 8;
  std::optional<std::size_t> en_ji;
  en->add_option("--max-size", en_max, "largest algebra size")->check(CLI::Range(2, 20));
  en->add_option("--max-ji", en_ji, "largest join-irreducible poset (default max-size - 1)");

  // ds
  auto* ds = app.add_subcommand("ds", "degree of satisfiability of an equation or formula");
  AlgebraInput ds_alg;
  EquationInput ds_eq;
  std::string ds_formula_src;
  bool ds_details = false;
  ds_alg.attach(ds);
  ds_eq.attach(ds);
  ds->add_option("--formula", ds_formula_src, "first-order formula");
  ds->add_flag("--details", ds_details, "include counts and failing assignments");

  // gap-scan
  auto* gs = app.add_subcommand("gap-scan", "ds over every enumerated algebra");
  EquationInput gs_eq;
  std::size_t gs_max = 8;
  gs_eq.attach(gs);
  gs->add_option("--max-size", gs_max, "largest algebra size")->check(CLI::Range(2, 20));

  // classify1
  auto* c1 = app.add_subcommand("classify1", "finite-gap classification of a one-variable equation");
  EquationInput c1_eq;
  unsigned c1_cap = 32;
  c1_eq.attach(c1);
  c1->add_option("--cap", c1_cap, "largest Rieger-Nishimura index tried");

  // witness
  auto* wi = app.add_subcommand("witness", "no-gap witness family for a one-variable term");
  std::string wi_term;
  std::size_t wi_k = 30;
  wi->add_option("--term", wi_term, "one-variable term")->required();
  wi->add_option("--k-max", wi_k, "largest family index");

  // matimpl
  auto* mi = app.add_subcommand("matimpl", "material implication on B_n + top");
  std::size_t mi_n = 1;
  mi->add_option("--n", mi_n, "number of atoms")->required()->check(CLI::Range(1, 10));

  // rn
  auto* rn = app.add_subcommand("rn", "Rieger-Nishimura formulas, classification and Hasse edges");
  std::optional<unsigned> rn_index, rn_edges;
  std::string rn_kind = "i", rn_term;
  rn->add_option("--index", rn_index, "formula index");
  rn->add_option("--kind", rn_kind, "d or i")->check(CLI::IsMember({"d", "i"}));
  rn->add_option("--classify", rn_term, "one-variable term to classify");
  rn->add_option("--edges", rn_edges, "list Hasse edges up to this index");

  // ipc
  auto* ip = app.add_subcommand("ipc", "intuitionistic provability");
  std::string ip_term;
  std::vector<std::string> ip_hyps;
  ip->add_option("--term", ip_term, "goal term")->required();
  ip->add_option("--hyp", ip_hyps, "hypothesis term (repeatable)");

  // decompose
  auto* de = app.add_subcommand("decompose", "central decomposition or maximal non-central analysis");
  AlgebraInput de_alg;
  std::optional<unsigned> de_elem;
  bool de_sigma = false;
  de_alg.attach(de);
  de->add_option("--element", de_elem, "central element to split along");
  de->add_flag("--maximal-noncentral", de_sigma, "report on the least maximal non-central element");

  // topo
  auto* to = app.add_subcommand("topo", "finite topology: open-set algebra and clopens");
  std::string to_file;
  std::optional<std::size_t> to_points, to_census;
  std::vector<std::uint32_t> to_opens;
  to->add_option("--topology", to_file, "topology JSON file {\"points\", \"opens\"}");
  to->add_option("--points", to_points, "number of points");
  to->add_option("--opens", to_opens, "open sets as bitmasks");
  to->add_option("--census", to_census, "summarize every topology on this many points (<= 5)");

  // blackbox-test
  auto* bb = app.add_subcommand("blackbox-test", "Monte Carlo Boolean test on a hidden algebra");
  AlgebraInput bb_alg;
  std::optional<std::uint64_t> bb_seed;
  unsigned bb_rounds = 2, bb_ell = 16;
  std::uint64_t bb_trials = 10000;
  bb_alg.attach(bb);
  bb->add_option("--seed", bb_seed, "RNG seed")->required();
  bb->add_option("--rounds", bb_rounds, "samples per test");
  bb->add_option("--trials", bb_trials, "independent tests")->check(CLI::PositiveNumber);
  bb->add_option("--ell", bb_ell, "cryptoelement bit length");

  // verify
  auto* ve = app.add_subcommand("verify", "run the acceptance suite");
  std::optional<int> ve_only;
  ve->add_option("--criterion", ve_only, "run a single criterion")->check(CLI::Range(1, acceptance::kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) {
      EnumerationBudget budget{en_max, en_ji ? *en_ji : en_max - 1};
      write_enumeration_jsonl(std::cout, enumerate_heyting(budget, jobs));
      return kOk;
    }

    if (*ds) {
      const HeytingAlgebra h = ds_alg.load();
      if (!ds_formula_src.empty()) {
        if (ds_eq.given()) throw Error(ErrorKind::InvalidArgument, "--formula excludes --eq, --principle, --term");
        DsResult r = ds_formula(h, parse_formula(ds_formula_src), jobs);
        emit(ds_details ? ds_json(r) : rational_json(r.value));
      } else {
        DsResult r = ds_equation(h, ds_eq.load(), jobs);
        emit(ds_details ? ds_json(r) : rational_json(r.value));
      }
      return kOk;
    }

    if (*gs) {
      const Equation eq = gs_eq.load();
      GapReport r = gap_scan(eq, EnumerationBudget{gs_max, gs_max - 1}, jobs);
      Json below = Json::array();
      for (const auto& e : r.algebras_below_one)
        below.push_back({{"code", e.code}, {"size", e.size}, {"ds", rational_json(e.ds.value)}});
      emit({{"equation", to_string(eq)},
            {"max_size", gs_max},
            {"algebras_scanned", r.algebras_scanned},
            {"below_one", below},
            {"sup_below_one", r.sup_below_one ? rational_json(*r.sup_below_one) : Json(nullptr)},
            {"epsilon", rational_json(r.epsilon())}});
      return kOk;
    }

    if (*c1) {
      const Equation eq = c1_eq.load();
      Classification c = classify_one_var(eq, c1_cap);
      Json out{{"outcome", to_string(c.outcome)}, {"rn", c.rn}};
      if (c.epsilon) out["epsilon"] = rational_json(*c.epsilon);
      emit(out);
      return kOk;
    }

    if (*wi) {
      WitnessFamily f = witness_family(parse_term(wi_term), wi_k);
      Json members = Json::array();
      for (const auto& m : f.members)
        members.push_back({{"k", m.k},
                           {"size", m.algebra.size()},
                           {"ds", rational_json(m.ds.value)},
                           {"lower_bound", rational_json(m.lower_bound)}});
      const bool ok = f.all_below_one() && f.bounds_hold();
      emit({{"rn", f.rn},
            {"recipe", f.recipe},
            {"base_size", f.base_size},
            {"members", members},
            {"all_below_one", f.all_below_one()},
            {"bounds_hold", f.bounds_hold()}});
      return ok ? kOk : kViolated;
    }

    if (*mi) {
      MaterialImplicationProfile p = material_implication_profile(mi_n, jobs);
      emit({{"n", p.n},
            {"size", p.algebra.size()},
            {"ds", rational_json(p.ds.value)},
            {"lower_bound", rational_json(p.lower_bound)},
            {"materializer_total", p.materializer_total.str()},
            {"materializer_bound", p.materializer_bound.str()},
            {"below_one", p.below_one()},
            {"meets_lower_bound", p.meets_lower_bound()},
            {"materializer_bound_holds", p.materializer_bound_holds()}});
      return p.holds() ? kOk : kViolated;
    }

    if (*rn) {
      if (!rn_term.empty()) {
        RnClass c = rn_classify(parse_term(rn_term));
        emit({{"rn", c.name()}, {"term", to_string(c.term())}});
      } else if (rn_edges) {
        Json edges = Json::array();
        for (const auto& [lo, hi] : rn_hasse_edges(*rn_edges)) edges.push_back({rn_json(lo), rn_json(hi)});
        emit({{"edges", edges}});
      } else if (rn_index) {
        emit(rn_json(rn_formula(rn_kind == "d" ? RnKind::Disjunctive : RnKind::Implicative, *rn_index)));
      } else {
        throw Error(ErrorKind::InvalidArgument, "one of --index, --classify, --edges is required");
      }
      return kOk;
    }

    if (*ip) {
      std::vector<Term> hyps;
      for (const auto& s : ip_hyps) hyps.push_back(parse_term(s));
      IpcProver prover;
      emit({{"provable", prover.proves(hyps, parse_term(ip_term))}});
      return kOk;
    }

    if (*de) {
      const HeytingAlgebra h = de_alg.load();
      if (de_sigma) {
        auto s = maximal_noncentral(h);
        if (!s) {
          emit({{"boolean", true}, {"sigma", nullptr}});
          return kOk;
        }
        TwoToOneReport r = lem_two_to_one(h, *s);
        Json mapping = Json::array();
        for (auto [x, fx] : r.mapping) mapping.push_back({x, fx});
        const bool ok = r.holds() && is_dense(h, *s) && belt_check(h, *s) && central_pair_check(h, *s);
        emit({{"boolean", false},
              {"sigma", *s},
              {"dense", is_dense(h, *s)},
              {"belt", belt_check(h, *s)},
              {"central_pair", central_pair_check(h, *s)},
              {"two_to_one", mapping},
              {"center_size", r.center_size},
              {"noncentral_size", r.noncentral_size},
              {"max_fiber", r.max_fiber},
              {"holds", r.holds()}});
        return ok ? kOk : kViolated;
      }
      if (!de_elem) throw Error(ErrorKind::InvalidArgument, "one of --element, --maximal-noncentral is required");
      if (*de_elem >= h.size()) throw Error(ErrorKind::InvalidArgument, "element out of range");
      Decomposition d = central_decompose(h, static_cast<Element>(*de_elem));
      emit({{"c", d.c},
            {"upper", algebra_json(d.upper)},
            {"upper_elements", d.upper_elements},
            {"lower", algebra_json(d.lower)},
            {"lower_elements", d.lower_elements},
            {"forward", d.forward}});
      return kOk;
    }

    if (*to) {
      auto describe = [](const FiniteTopology& t) {
        ClopenCensus c = clopen_census(t);
        Json out = topology_json(t);
        out["clopen"] = c.clopen;
        out["non_clopen"] = c.non_clopen;
        out["discrete"] = is_discrete(t);
        out["t0"] = is_t0(t);
        if (t.opens.size() >= 2) {
          OpenSetAlgebra a = open_set_algebra(t);
          out["center_size"] = center(a.algebra).count();
          out["boolean"] = is_boolean(a.algebra);
        }
        return out;
      };
      if (to_census) {
        Json all = Json::array();
        for (const auto& t : enumerate_topologies(*to_census)) all.push_back(describe(t));
        emit({{"points", *to_census}, {"count", all.size()}, {"topologies", all}});
        return kOk;
      }
      FiniteTopology t;
      if (!to_file.empty()) {
        std::ifstream in(to_file);
        if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + to_file);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const Json::parse_error& e) {
          throw Error(ErrorKind::InvalidArgument, to_file + ": " + e.what());
        }
        t = topology_from_json(j);
      } else if (to_points) {
        t = make_topology(*to_points, to_opens);
      } else {
        throw Error(ErrorKind::InvalidArgument, "one of --topology, --points, --census is required");
      }
      emit(describe(t));
      return kOk;
    }

    if (*bb) {
      const HeytingAlgebra h = bb_alg.load();
      BlackBoxHandle handle = bb_wrap(h, bb_ell, *bb_seed);
      AcceptRate r = monte_carlo_accept_rate(handle, bb_rounds, bb_trials);
      const double bound = std::pow(2.0 / 3.0, bb_rounds);
      const bool boolean = is_boolean(h);
      // Boolean: always accepted. Otherwise the rate may exceed the bound by
      // sampling noise only; allow four standard deviations.
      const double slack = 4 * std::sqrt(bound * (1 - bound) / static_cast<double>(bb_trials));
      const bool pass = boolean ? r.accepted == r.trials : r.rate() <= bound + slack;
      emit({{"accept_rate", r.rate()},
            {"accepted", r.accepted},
            {"trials", r.trials},
            {"rounds", bb_rounds},
            {"bound", bound},
            {"boolean", boolean},
            {"pass", pass}});
      return pass ? kOk : kViolated;
    }

    if (*ve) {
      Json rows = Json::array();
      bool all = true;
      for (int id = 1; id <= acceptance::kCriteria; ++id) {
        if (ve_only && id != *ve_only) continue;
        CriterionResult r = run_criterion(id, jobs);
        all = all && r.pass;
        rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      emit({{"criteria", rows}, {"all_pass", all}});
      return all ? kOk : kViolated;
    }
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::cerr << app.help();
  return kUsage;
}
