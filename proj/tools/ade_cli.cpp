#include <ade/blowup.hpp>
#include <ade/branching.hpp>
#include <ade/descent.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ade;

namespace {

struct Config {
  std::string type = "A1";
  int node = 1;
  std::string format = "text";
  int workers = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  bool exhaustive = false;
  std::string remove;
  int component = 0;
  std::string script;
  std::string recipe = "table";
  bool emit_script = false;
};

struct Result {
  json payload = json::object();
  std::vector<Report> reports;
  std::string dot;

  bool ok() const
  {
    for (const auto& r : reports)
      if (!r.ok)
        return false;
    return true;
  }
};

DynkinSpec spec_of(const Config& c) { return DynkinSpec::parse(c.type, c.node); }

struct Built {
  IntersectionLattice L;
  RootSystem R;
  StructureConstants SC;
  CurveSet I;
};

Built build(const DynkinSpec& s)
{
  auto L = build_lattice(s);
  auto R = enumerate_roots(L);
  auto SC = compute_structure_constants(R);
  auto I = enumerate_curves(L);
  return {L, R, SC, I};
}

Report count_check(const std::string& name, long found, long expected)
{
  Report r(name);
  r.data["found"] = found;
  r.data["expected"] = expected;
  if (found != expected)
    r.fail({{"found", found}, {"expected", expected}});
  return r;
}

Result cmd_roots(const Config& c)
{
  auto s = spec_of(c);
  auto b = build(s);
  Result out;
  out.payload["roots"] = b.R.to_json();
  out.payload["highest"] = b.R.root(b.R.highest()).to_json();
  out.reports.push_back(count_check("root_count", b.R.size(), dynkin_root_count(s.family, s.rank)));
  JacobiOptions opt;
  opt.exhaustive = c.exhaustive;
  opt.samples = c.samples;
  opt.seed = c.seed;
  opt.workers = c.workers;
  out.reports.push_back(verify_jacobi(b.SC, opt));
  out.dot = dynkin_dot(b.L);
  return out;
}

Result cmd_curves(const Config& c)
{
  auto s = spec_of(c);
  auto L = build_lattice(s);
  auto I = enumerate_curves(L);
  Result out;
  out.payload["curves"] = I.to_json();
  out.reports.push_back(count_check("curve_count", I.size(), expected_curve_count(s)));
  out.dot = curves_dot(I);
  return out;
}

RepAction action_of(const DynkinSpec& s)
{
  if (s.adjoint())
    throw SpecError("E8 has no minuscule representation; use roots, dbar-check or branch");
  auto L = build_lattice(s);
  return build_action(enumerate_curves(L), compute_structure_constants(enumerate_roots(L)));
}

Result cmd_rep(const Config& c)
{
  auto A = action_of(spec_of(c));
  Result out;
  out.payload["dim"] = A.dim();
  out.payload["signs"] = A.sign_table();
  out.reports.push_back(verify_module(A, c.workers));
  out.reports.push_back(weyl_transitivity(A));
  out.reports.push_back(faithfulness(A));
  out.dot = curves_dot(A.curves());
  return out;
}

// (degree, target) of the invariant form, or degree 0 when there is none
std::pair<int, DivisorClass> form_target(const CurveSet& I)
{
  const auto& s = I.spec();
  if (s.family == 'D' && s.node == 1)
    return {2, I.special().at("F")};
  if (s.family == 'E' && s.rank == 6)
    return {3, I.special().at("K'")};
  if (s.family == 'E' && s.rank == 7)
    return {4, Integer(2) * I.special().at("K'")};
  return {0, DivisorClass()};
}

Result cmd_form(const Config& c)
{
  auto s = spec_of(c);
  auto A = action_of(s);
  const auto& I = A.curves();
  Result out;
  auto [degree, target] = form_target(I);
  int expected = A.roots().size() + s.rank;
  if (degree == 0) {
    if (s.family != 'A')
      throw SpecError("no invariant form for " + s.name() + " node " + std::to_string(s.node));
    int dim = aut_dimension(I, nullptr, true);
    out.payload["form"] = nullptr;
    out.reports.push_back(count_check("aut_dimension", dim, expected));
    return out;
  }
  auto f = solve_invariant_form(A, degree, target);
  out.payload["form"] = f.to_json();
  out.reports.push_back(verify_aut(A, f));
  out.reports.push_back(unit_coefficients(f));
  out.reports.push_back(count_check("aut_dimension", aut_dimension(I, &f, false), expected));
  return out;
}

Result cmd_dbar(const Config& c)
{
  auto s = spec_of(c);
  Result out;
  auto SC = compute_structure_constants(enumerate_roots(build_lattice(s)));
  out.reports.push_back(nilpotence_adjoint(SC, c.workers));
  if (s.adjoint())
    return out;
  auto A = action_of(s);
  const auto& I = A.curves();
  auto eta = eta_from_rep(A);
  out.reports.push_back(upper_triangular(eta));
  out.reports.push_back(nilpotence_rep(eta, SC, c.workers));
  auto [degree, target] = form_target(I);
  if (degree == 2) {
    auto f = solve_invariant_form(A, degree, target);
    auto g = positive_gauge(A.dim(), f);
    auto B = A.regauged(*g);
    auto e = eta_from_rep(B);
    out.reports.push_back(partner_check(I, e));
    out.reports.push_back(form_compatibility_check(I, e, quadratic_q(I)));
    out.payload["gauge"] = *g;
    out.payload["eta"] = e.to_json(A.roots());
  } else if (degree > 2) {
    auto g = balanced_gauge(A);
    if (!g)
      throw std::logic_error("no balanced gauge found");
    auto B = A.regauged(*g);
    auto e = eta_from_rep(B);
    auto f = solve_invariant_form(A, degree, target).regauged(*g);
    out.reports.push_back(balanced_pattern_check(e, A.roots(), s.rank == 6 ? 6 : 12));
    out.reports.push_back(orthogonal_entries(I, e));
    out.reports.push_back(form_compatibility_check(I, e, f));
    out.payload["gauge"] = *g;
    out.payload["eta"] = e.to_json(A.roots());
  } else {
    out.payload["eta"] = eta.to_json(A.roots());
  }
  for (int k = 1; k <= s.rank; ++k)
    out.reports.push_back(block_shape_check(I, eta, k));
  return out;
}

Result cmd_restrict(const Config& c)
{
  auto s = spec_of(c);
  auto I = enumerate_curves(build_lattice(s));
  Result out;
  json list = json::array();
  for (int k = 1; k <= s.rank; ++k)
    if (c.component == 0 || c.component == k)
      list.push_back(splitting_type(I, k).to_json());
  out.payload["splitting"] = list;
  return out;
}

Result cmd_descent(const Config& c)
{
  auto s = spec_of(c);
  auto A = action_of(s);
  Result out;
  out.reports.push_back(descent_report(A.curves(), eta_from_rep(A)));
  out.reports.push_back(twist_check(A.curves().lattice(), descent_twist(s)));
  return out;
}

Result cmd_branch(const Config& c)
{
  auto s = spec_of(c);
  Result out;
  BranchReport b;
  if (s.adjoint()) {
    std::string r = c.remove.empty() ? "C8" : c.remove;
    if (r != "C8" && r != "C7")
      throw SpecError("E8 branching removes C8 or C7");
    b = branch_e8(enumerate_roots(build_lattice(s)), r == "C8" ? 8 : 7);
  } else {
    auto I = enumerate_curves(build_lattice(s));
    if (s.family == 'A')
      b = branch_an_wedge(I);
    else if (s.family == 'D' && s.node == 1)
      b = branch_dn_std(I);
    else if (s.family == 'D' && s.node == s.rank)
      b = branch_dn_spinor(I);
    else if (s.family == 'E')
      b = branch_exceptional(I);
    else
      throw SpecError("no branching rule for " + s.name() + " node " + std::to_string(s.node));
  }
  out.payload["branch"] = b.to_json();
  out.reports.push_back(b.check);
  return out;
}

Result cmd_blowup(const Config& c)
{
  auto s = spec_of(c);
  Configuration conf;
  if (!c.script.empty()) {
    std::ifstream in(c.script);
    if (!in)
      throw std::invalid_argument("cannot open script " + c.script);
    conf = run_script(json::parse(in));
  } else if (c.recipe == "chain") {
    if (s.family != 'A' || s.node != 1)
      throw SpecError("the chain recipe builds A_n node 1");
    conf = construct_chain(s.rank);
  } else if (c.recipe == "ruling") {
    if (s.family != 'D' || s.node != 1)
      throw SpecError("the ruling recipe builds D_n node 1");
    conf = construct_ruling(s.rank);
  } else {
    conf = construct_from_table(s);
  }
  Result out;
  if (c.emit_script) {
    auto script = configuration_script(conf);
    script["type"] = s.name();
    script["node"] = s.node;
    out.payload["script"] = script;
  }
  out.payload["surface"] = conf.S.to_json();
  out.reports.push_back(verify_configuration(conf, s));
  return out;
}

Result cmd_chern(const Config& c)
{
  auto s = spec_of(c);
  auto L = build_lattice(s);
  Result out;
  out.reports.push_back(chern_report(enumerate_roots(L)));
  if (!s.adjoint())
    out.payload["c1_curve_bundle"] = chern_c1(enumerate_curves(L)).to_json();
  return out;
}

void emit_text(std::ostream& os, const std::string& command, const DynkinSpec& s, const Result& r)
{
  os << command << " " << s.name() << " node " << s.node << "\n";
  for (const auto& [k, v] : r.payload.items()) {
    if (v.is_primitive())
      os << "  " << k << ": " << v.dump() << "\n";
    else if (v.is_object() && v.contains("count"))
      os << "  " << k << ": " << v["count"].dump() << " entries\n";
    else if (v.is_array())
      os << "  " << k << ": " << v.size() << " entries\n";
  }
  if (r.payload.contains("splitting"))
    for (const auto& st : r.payload["splitting"])
      os << "  C" << st["component"] << ": zeros " << st["zeros"] << ", pairs " << st["pairs"].size() << ", twos "
         << st["twos"].size() << "\n";
  if (r.payload.contains("branch"))
    for (const auto& m : r.payload["branch"]["summands"])
      os << "  " << m["description"].get<std::string>() << ": " << m["size"] << "\n";
  for (const auto& rep : r.reports) {
    os << "  " << rep.check << ": " << (rep.ok ? "PASS" : "FAIL");
    if (!rep.ok)
      os << " (" << rep.failures << " failures)";
    os << "\n";
  }
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"ADE resolution lattices, minuscule bundles and their checks"};
  Config c;
  app.add_option("--type", c.type, "Dynkin type, e.g. A3, D5, E6");
  app.add_option("--node", c.node, "node carrying C0");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--workers", c.workers, "worker threads (default: ADE_WORKERS or 1)");
  app.add_option("--seed", c.seed, "seed for sampled checks");
  app.add_option("--samples", c.samples, "sampled Jacobi triples for E8");
  app.add_flag("--exhaustive", c.exhaustive, "check every Jacobi triple");
  app.add_option("--remove", c.remove, "node removed for E8 branching (C8 or C7)");
  app.add_option("--component", c.component, "restrict: only this C_i");
  app.add_option("--script", c.script, "blowup: JSON construction script");
  app.add_option("--recipe", c.recipe, "blowup: table, chain or ruling")->check(CLI::IsMember({"table", "chain", "ruling"}));
  app.add_flag("--emit-script", c.emit_script, "blowup: include the replayable script");

  using Fn = Result (*)(const Config&);
  const std::vector<std::pair<std::string, Fn>> commands = {
      {"roots", cmd_roots},     {"curves", cmd_curves},   {"rep", cmd_rep},         {"form", cmd_form},
      {"dbar-check", cmd_dbar}, {"restrict", cmd_restrict}, {"descent", cmd_descent}, {"branch", cmd_branch},
      {"blowup", cmd_blowup},   {"chern", cmd_chern}};
  for (const auto& [name, fn] : commands)
    app.add_subcommand(name)->fallthrough();
  app.require_subcommand(1);
  CLI11_PARSE(app, argc, argv);

  std::string command = app.get_subcommands().front()->get_name();
  Fn fn = nullptr;
  for (const auto& [name, f] : commands)
    if (name == command)
      fn = f;

  try {
    auto s = spec_of(c);
    Result r = fn(c);
    if (c.format == "json") {
      json j;
      j["schema"] = 1;
      j["command"] = command;
      j["type"] = s.name();
      j["node"] = s.node;
      j["ok"] = r.ok();
      for (const auto& [k, v] : r.payload.items())
        j[k] = v;
      json reps = json::array();
      for (const auto& rep : r.reports)
        reps.push_back(rep.to_json());
      j["reports"] = reps;
      std::cout << j.dump(2) << "\n";
    } else if (c.format == "dot") {
      if (r.dot.empty())
        throw std::invalid_argument("no DOT output for " + command);
      std::cout << r.dot;
    } else {
      emit_text(std::cout, command, s, r);
    }
    return r.ok() ? 0 : 1;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
