#include "homalg/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homalg/duality.hpp"
#include "homalg/extension.hpp"
#include "homalg/identity_suite.hpp"
#include "homalg/registry.hpp"

namespace homalg {

namespace {

CheckReport make_report(const std::string& id, std::string check, const DefectReport& d) {
  return {id, std::move(check), d.holds(), d.witnesses()};
}

CheckReport note_report(const std::string& id, std::string check, bool ok, const std::string& why) {
  CheckReport r{id, std::move(check), ok, {}};
  if (!ok) r.witnesses.push_back({why, {}, {}});
  return r;
}

bool has_algebra(const StructureFile& f) { return f.kind != StructureKind::coalgebra; }
bool has_coalgebra(const StructureFile& f) { return f.kind != StructureKind::algebra; }
bool is_bi(const StructureFile& f) { return f.kind == StructureKind::bialgebra || f.kind == StructureKind::hopf; }

void need(bool ok, const std::string& suite, const StructureFile& f) {
  if (!ok) throw UsageError("suite " + suite + " does not apply to kind " + to_string(f.kind));
}

std::vector<std::string> default_suites(const StructureFile& f) {
  switch (f.kind) {
    case StructureKind::algebra: return {"hom-assoc", "unital"};
    case StructureKind::coalgebra: return {"coassoc", "counital"};
    case StructureKind::bialgebra: return {"hom-assoc", "unital", "coassoc", "counital", "bialgebra-weak"};
    case StructureKind::hopf: return {"hom-assoc", "unital", "coassoc", "counital", "bialgebra-weak", "antipode"};
  }
  return {};
}

Bindings collect_bindings(const std::vector<std::string>& params) {
  Bindings b;
  for (const auto& p : params) {
    auto [k, v] = parse_binding(p);
    b[k] = v;
  }
  return b;
}

struct Loaded {
  StructureFile file;
  std::string id;
};

Loaded load(const std::string& where, const std::vector<std::string>& params) {
  static const std::string prefix = "registry:";
  if (where.rfind(prefix, 0) == 0) {
    StructureFile f = registry_entry(where.substr(prefix.size())).build(collect_bindings(params));
    return {f, *f.name};
  }
  if (!params.empty()) throw UsageError("--param only applies to registry:NAME arguments");
  StructureFile f = read_structure_file(where);
  return {f, f.name.value_or(where)};
}

void print_map(std::ostream& os, const LinearMap& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
}

void print_point(std::ostream& os, const std::vector<std::string>& names, const std::vector<Scalar>& p) {
  os << "   ";
  for (std::size_t i = 0; i < p.size(); ++i) os << ' ' << names[i] << '=' << p[i];
  os << '\n';
}

void print_verdict(std::ostream& os, const std::string& label, const std::vector<std::string>& names,
                   const std::vector<Poly>& system, const SystemVerdict& v, bool show_certificate) {
  os << label << " (" << system.size() << " equations): " << describe(v) << '\n';
  if (const auto* s = std::get_if<RationalSolutions>(&v)) {
    for (const auto& p : s->points) print_point(os, names, p);
  } else if (const auto* c = std::get_if<Inconsistent>(&v); c && show_certificate) {
    for (std::size_t i = 0; i < c->cofactors.size(); ++i) {
      if (c->cofactors[i].is_zero()) continue;
      os << "    (" << c->cofactors[i] << ") * (" << system[i] << ")\n";
    }
  }
}

}  // namespace

std::vector<CheckReport> run_suites(const StructureFile& f, const std::string& id, const std::vector<std::string>& suites) {
  const std::vector<std::string> chosen = suites.empty() ? default_suites(f) : suites;
  std::vector<CheckReport> out;
  for (const auto& s : chosen) {
    if (s == "hom-assoc") {
      need(has_algebra(f), s, f);
      out.push_back(make_report(id, s, check_hom_associative(to_algebra(f))));
    } else if (s == "unital") {
      need(has_algebra(f), s, f);
      const UnitCheck u = check_unital(to_algebra(f));
      out.push_back(note_report(id, s, u == UnitCheck::unital,
                                u == UnitCheck::no_unit_declared ? "no unit declared" : "eta(1) is not a two-sided unit"));
    } else if (s == "coassoc") {
      need(has_coalgebra(f), s, f);
      out.push_back(make_report(id, s, check_hom_coassociative(to_coalgebra(f))));
    } else if (s == "counital") {
      need(has_coalgebra(f), s, f);
      const CounitCheck u = check_counital(to_coalgebra(f));
      out.push_back(note_report(id, s, u == CounitCheck::counital,
                                u == CounitCheck::no_counit_declared ? "no counit declared" : "counit axiom fails"));
    } else if (s.size() == 2 && s[0] == 'G') {
      const Subgroup g = parse_subgroup(s);
      if (has_algebra(f)) out.push_back(make_report(id, s + " (algebra)", check_G_hom_associative(to_algebra(f), g)));
      if (has_coalgebra(f)) out.push_back(make_report(id, s + " (coalgebra)", check_G_hom_coalgebra(to_coalgebra(f), g)));
    } else if (s == "lie-admissible") {
      if (has_algebra(f)) {
        out.push_back(make_report(id, s + " (algebra)", check_hom_jacobi(commutator_bracket(to_algebra(f)))));
      }
      if (has_coalgebra(f)) {
        out.push_back(make_report(id, s + " (coalgebra)", check_hom_lie_admissible(to_coalgebra(f)).cyclic));
      }
    } else if (s == "hom-lie") {
      need(has_algebra(f), s, f);
      const HomBracket l = commutator_bracket(to_algebra(f));
      DefectReport d = check_skew(l);
      d.merge(check_hom_jacobi(l));
      out.push_back(make_report(id, s, d));
    } else if (s == "bialgebra-weak") {
      need(is_bi(f), s, f);
      out.push_back(make_report(id, s, check_bialgebra_weak(to_bialgebra(f))));
    } else if (s == "bialgebra-strict") {
      need(is_bi(f), s, f);
      out.push_back(make_report(id, s, check_bialgebra_strict(to_bialgebra(f))));
    } else if (s == "module") {
      need(has_algebra(f), s, f);
      const HomAlgebra a = to_algebra(f);
      out.push_back(make_report(id, s, check_module(a, a.alpha(), self_action(a))));
    } else if (s == "comodule") {
      need(has_coalgebra(f), s, f);
      const HomCoalgebra c = to_coalgebra(f);
      out.push_back(make_report(id, s, check_comodule(c, c.beta(), self_coaction(c))));
    } else if (s == "antipode") {
      need(f.kind == StructureKind::hopf, s, f);
      out.push_back(note_report(id, s, is_antipode(to_bialgebra(f), *f.antipode), "S is not a convolution inverse of id"));
    } else {
      throw UsageError("unknown suite: " + s);
    }
  }
  return out;
}

void print_report(std::ostream& os, const CheckReport& r) {
  os << r.structure << "  " << r.check << "  " << (r.holds ? "PASS" : "FAIL") << '\n';
  for (const auto& w : r.witnesses) os << "    " << w << '\n';
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for finite-dimensional Hom-algebraic structures"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string target;
  std::vector<std::string> params;
  const auto add_target = [&](CLI::App* sub) {
    sub->add_option("structure", target, "structure file, or registry:NAME")->required();
    sub->add_option("--param", params, "registry binding name=p/q (repeatable)");
  };

  std::vector<std::string> suites;
  auto* check = app.add_subcommand("check", "run structural checks");
  add_target(check);
  check->add_option("--suite", suites, "check suite (repeatable)");

  std::string output;
  auto* dualize = app.add_subcommand("dualize", "write the dual structure");
  add_target(dualize);
  dualize->add_option("-o,--output", output, "output file (default: stdout)");

  auto* antipode = app.add_subcommand("antipode", "solve for an antipode");
  add_target(antipode);
  auto* primitives = app.add_subcommand("primitives", "basis of the primitive elements");
  add_target(primitives);
  auto* gprimitives = app.add_subcommand("gprimitives", "basis of the generalized primitive elements");
  add_target(gprimitives);

  std::size_t samples = 20;
  std::uint64_t seed = 7;
  auto* convolution = app.add_subcommand("convolution-test", "Hom-associativity of the convolution product");
  add_target(convolution);
  convolution->add_option("--samples", samples, "random triples besides the matrix units")->capture_default_str();
  convolution->add_option("--seed", seed)->capture_default_str();

  std::size_t dim = 2;
  std::size_t id_samples = 200;
  auto* identities = app.add_subcommand("identities", "universal identity suite on random (Delta, beta)");
  identities->add_option("--dim", dim)->capture_default_str()->check(CLI::Range(1, 6));
  identities->add_option("--samples", id_samples)->capture_default_str();
  identities->add_option("--seed", seed)->capture_default_str();

  GroebnerOptions gopt;
  bool show_certificate = false;
  auto* search = app.add_subcommand("search-extension", "search bialgebra structures on a 2-dimensional algebra");
  add_target(search);
  search->add_option("--degree-cap", gopt.degree_cap)->capture_default_str();
  search->add_option("--pair-cap", gopt.pair_cap)->capture_default_str();
  search->add_flag("--show-certificate", show_certificate, "print the cofactors of an inconsistency certificate");

  std::string write_dir;
  auto* examples = app.add_subcommand("examples", "list (or write) the built-in structures");
  examples->add_option("--write", write_dir, "write instantiated structure files into this directory");
  examples->add_option("--param", params, "binding name=p/q applied to every entry declaring it");

  std::vector<std::string> argv_storage{"homalg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      const Loaded l = load(target, params);
      bool ok = true;
      for (const auto& r : run_suites(l.file, l.id, suites)) {
        print_report(out, r);
        ok = ok && r.holds;
      }
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (dualize->parsed()) {
      const Loaded l = load(target, params);
      StructureFile d;
      switch (l.file.kind) {
        case StructureKind::algebra: d = from_coalgebra(dual_coalgebra_of_algebra(to_algebra(l.file))); break;
        case StructureKind::coalgebra: d = from_algebra(dual_algebra_of_coalgebra(to_coalgebra(l.file))); break;
        case StructureKind::bialgebra: d = from_bialgebra(dual_bialgebra(to_bialgebra(l.file))); break;
        case StructureKind::hopf: d = from_hopf(dual_hopf(to_hopf(l.file))); break;
      }
      d.name = "dual-of-" + l.id;
      d.parameters = l.file.parameters;
      if (output.empty()) {
        out << serialize_structure(d);
      } else {
        write_structure_file(output, d);
        out << "wrote " << output << '\n';
      }
      return kExitOk;
    }
    if (antipode->parsed()) {
      const Loaded l = load(target, params);
      if (!is_bi(l.file)) throw UsageError("antipode needs a bialgebra or hopf structure");
      const AntipodeResult r = solve_antipode(to_bialgebra(l.file));
      if (std::holds_alternative<NoAntipode>(r)) {
        out << l.id << ": no antipode\n";
        return kExitCheckFailed;
      }
      if (const auto* u = std::get_if<UniqueAntipode>(&r)) {
        out << l.id << ": unique antipode S =\n";
        print_map(out, u->hopf.antipode());
        out << "S(eta(1)) = eta(1): " << (u->fixes_unit ? "yes" : "no") << '\n';
        out << "eps o S = eps: " << (u->preserves_counit ? "yes" : "no") << '\n';
        return kExitOk;
      }
      const auto& fam = std::get<AntipodeFamily>(r);
      out << l.id << ": antipodes form an affine family of dimension " << fam.kernel.size() << "; particular S =\n";
      print_map(out, fam.particular);
      for (std::size_t i = 0; i < fam.kernel.size(); ++i) {
        out << "direction " << i + 1 << ":\n";
        print_map(out, fam.kernel[i]);
      }
      return kExitOk;
    }
    if (primitives->parsed() || gprimitives->parsed()) {
      const Loaded l = load(target, params);
      if (!is_bi(l.file)) throw UsageError("primitives need a bialgebra or hopf structure");
      const HomBialgebra b = to_bialgebra(l.file);
      const bool general = gprimitives->parsed();
      const std::vector<Vector> basis =
          general ? generalized_primitive_subspace(b).basis : primitive_subspace(b).basis;
      out << l.id << ": " << (general ? "GPrim" : "Prim") << " has dimension " << basis.size() << '\n';
      for (const auto& v : basis) out << "  " << v << '\n';
      if (general) {
        const auto g = generalized_primitive_subspace(b);
        out << "contains Prim: " << (g.contains_primitives ? "yes" : "no") << '\n';
        out << "closed under commutators: " << (g.bracket_closed ? "yes" : "no") << '\n';
      } else {
        const auto p = primitive_subspace(b);
        out << "eps vanishes: " << (p.counit_vanishes ? "yes" : "no") << '\n';
        out << "closed under commutators: " << (p.bracket_closed ? "yes" : "no") << '\n';
      }
      return kExitOk;
    }
    if (convolution->parsed()) {
      const Loaded l = load(target, params);
      if (!is_bi(l.file)) throw UsageError("convolution-test needs a bialgebra or hopf structure");
      switch (check_convolution_hom_associative(to_bialgebra(l.file), samples, seed)) {
        case ConvolutionCheck::holds:
          out << l.id << ": gamma(f)*(g*h) = (f*g)*gamma(h) on all tested triples\n";
          return kExitOk;
        case ConvolutionCheck::fails:
          out << l.id << ": convolution identity fails\n";
          return kExitCheckFailed;
        case ConvolutionCheck::premises_not_met:
          out << l.id << ": algebra not Hom-associative or coalgebra not Hom-coassociative\n";
          return kExitCheckFailed;
      }
    }
    if (identities->parsed()) {
      const IdentitySuiteResult r = run_identity_suite(dim, id_samples, seed);
      out << "dim " << r.dim << ", " << r.samples << " instances, seed " << r.seed << '\n';
      for (const auto& t : r.tallies) {
        out << (t.failed == 0 ? "PASS  " : "FAIL  ") << t.name << "  (" << t.passed << "/" << t.passed + t.failed
            << ")\n";
      }
      out << "admissible instances: " << r.admissible_instances << '\n';
      return r.all_hold() ? kExitOk : kExitCheckFailed;
    }
    if (search->parsed()) {
      const Loaded l = load(target, params);
      if (!has_algebra(l.file)) throw UsageError("search-extension needs an algebra");
      const HomAlgebra a = to_algebra(l.file);
      const ExtensionSearch r = search_bialgebra_extension(a, gopt);
      out << l.id << ": unknowns Delta(e2) = sum d_ij e_i (x) e_j, eps(e2) = eps2 (degree cap " << gopt.degree_cap
          << ", pair cap " << gopt.pair_cap << ")\n";
      print_verdict(out, "weak B3 + counit", extension_variables(), r.weak_system, r.weak, show_certificate);
      print_verdict(out, "strict (alpha-compatible)", extension_variables(), r.strict_system, r.strict,
                    show_certificate);
      if (r.beta) {
        print_verdict(out, "weak + Hom-coassociativity, beta unknown", extension_variables_with_beta(),
                      *r.beta_system, *r.beta, show_certificate);
      } else {
        out << "beta pass skipped: weak system " << (is_definitive(r.weak) ? "inconsistent" : "inconclusive") << "\n";
      }
      return is_definitive(r.weak) ? kExitOk : kExitInconclusive;
    }
    if (examples->parsed()) {
      const Bindings given = collect_bindings(params);
      for (const auto& e : registry()) {
        out << e.name << " (" << to_string(e.kind) << "): " << e.summary << "; parameters:";
        for (const auto& p : e.parameters) {
          out << ' ' << p.name;
          if (p.default_value) out << '=' << *p.default_value;
        }
        out << '\n';
      }
      if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        for (const auto& e : registry()) {
          Bindings mine;
          for (const auto& p : e.parameters)
            if (given.count(p.name)) mine[p.name] = given.at(p.name);
          const std::string path = (std::filesystem::path(write_dir) / (e.name + ".json")).string();
          write_structure_file(path, e.build(mine));
          out << "wrote " << path << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace homalg
