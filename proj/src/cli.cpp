// Copyright 2026 The lefschetz-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lefschetz/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lefschetz/catalog.hpp"
#include "lefschetz/document.hpp"
#include "lefschetz/lefschetz_maps.hpp"

namespace lefschetz::cli {

namespace {

using nlohmann::ordered_json;

struct Inputs {
  LieAlgebra algebra;
  std::optional<SymplecticStructure> symplectic;
  std::optional<ContactStructure> contact;
  std::optional<catalog::LatticeFixture> lattice;
};

Inputs load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path, "cannot open input file");
  std::stringstream buf;
  buf << in.rdbuf();
  Document doc = parse_document(buf.str());
  Inputs r{doc.algebra, std::nullopt, std::nullopt, std::nullopt};
  if (doc.omega.has_value())
    r.symplectic = verify_symplectic(doc.algebra, *doc.omega);
  if (doc.eta.has_value()) r.contact = verify_contact(doc.algebra, *doc.eta);
  if (doc.lattice.has_value()) {
    Subspace ideal(doc.algebra.field(), doc.algebra.dim());
    for (int i : doc.lattice->ideal_indices) {
      if (i < 0 || i >= doc.algebra.dim())
        throw DocumentError("lattice.ideal", "basis index out of range");
      ideal.add(unit_vec(doc.algebra.field(), doc.algebra.dim(), i));
    }
    r.lattice = catalog::LatticeFixture{"(document)", doc.algebra, ideal,
                                        doc.lattice->spec,
                                        doc.lattice->candidate, Matrix()};
  }
  return r;
}

Inputs load_catalog(const std::string& id) {
  const catalog::Entry* e = catalog::find_entry(id);
  if (e == nullptr) throw DocumentError("catalog", "unknown catalog id '" + id + "'");
  catalog::CatalogObjects objs = e->build();
  Inputs r{objs.algebra, objs.symplectic, objs.contact, std::nullopt};
  if (e->build_lattice) r.lattice = e->build_lattice();
  return r;
}

std::string tristate_str(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    default:
      return "unknown";
  }
}

ordered_json degree_json(const DegreeVerdict& d, const LieAlgebra& g,
                         bool contact_mode, bool witnesses) {
  ordered_json jd;
  jd["k"] = d.k;
  if (contact_mode) {
    jd["domain_covered"] = d.domain_covered;
    jd["well_defined"] = d.well_defined;
  }
  jd["injective"] = d.injective;
  jd["surjective"] = d.surjective;
  jd["verdict"] = d.verdict;
  if (witnesses) {
    if (d.uncovered_witness.has_value())
      jd["uncovered_class"] = d.uncovered_witness->str(g.names());
    if (d.broken_pair_witness.has_value())
      jd["broken_pair"] = d.broken_pair_witness->str(g.names());
    if (d.kernel_witness.has_value())
      jd["kernel_witness"] = d.kernel_witness->str(g.names());
  }
  return jd;
}

void print_degree_text(std::ostream& out, const DegreeVerdict& d,
                       const LieAlgebra& g, bool contact_mode, bool witnesses) {
  out << "  k=" << d.k << ":";
  if (contact_mode) {
    out << " covered=" << (d.domain_covered ? "yes" : "no")
        << " well-defined=" << (d.well_defined ? "yes" : "no");
  }
  out << " injective=" << (d.injective ? "yes" : "no")
      << " surjective=" << (d.surjective ? "yes" : "no") << " -> "
      << (d.verdict ? "pass" : "FAIL") << "\n";
  if (witnesses || !d.verdict) {
    if (d.uncovered_witness.has_value())
      out << "    uncovered class: " << d.uncovered_witness->str(g.names())
          << "\n";
    if (d.broken_pair_witness.has_value())
      out << "    functionality breaks at: "
          << d.broken_pair_witness->str(g.names()) << "\n";
    if (d.kernel_witness.has_value())
      out << "    kernel witness: " << d.kernel_witness->str(g.names()) << "\n";
  }
}

int report_lefschetz(std::ostream& out, const LefschetzReport& rep,
                     const LieAlgebra& g, const std::string& format,
                     bool witnesses) {
  bool contact_mode = rep.mode == LefschetzMode::contact;
  if (format == "structured") {
    ordered_json j;
    j["mode"] = contact_mode ? "contact" : "symplectic";
    j["s"] = rep.s;
    ordered_json ds = ordered_json::array();
    for (const auto& d : rep.degrees)
      ds.push_back(degree_json(d, g, contact_mode, witnesses));
    j["degrees"] = ds;
    j["verdict"] = rep.verdict;
    out << j.dump(2) << "\n";
  } else {
    out << (contact_mode ? "contact" : "symplectic") << " " << rep.s
        << "-Lefschetz check:\n";
    for (const auto& d : rep.degrees)
      print_degree_text(out, d, g, contact_mode, witnesses);
    out << "verdict: " << (rep.verdict ? "holds" : "fails") << "\n";
  }
  return rep.verdict ? 0 : 1;
}

int do_betti(std::ostream& out, const Inputs& in, const std::string& format,
             bool witnesses) {
  const LieAlgebra& g = in.algebra;
  Classification cls = g.classify();
  std::vector<int> table;
  for (int k = 0; k <= g.dim(); ++k) table.push_back(betti(g, k));
  if (format == "structured") {
    ordered_json j;
    j["dim"] = g.dim();
    j["field"] = g.field()->describe();
    j["unimodular"] = g.is_unimodular();
    j["nilpotent"] = cls.nilpotent;
    j["solvable"] = cls.solvable;
    j["completely_solvable"] = tristate_str(cls.completely_solvable);
    j["heisenberg"] = g.is_heisenberg();
    j["betti"] = table;
    if (witnesses) {
      ordered_json reps;
      for (int k = 0; k <= g.dim(); ++k) {
        CohomologyDescriptor d = cohomology(g, k);
        ordered_json forms = ordered_json::array();
        for (const auto& r : d.representatives) forms.push_back(r.str(g.names()));
        reps[std::to_string(k)] = forms;
      }
      j["representatives"] = reps;
    }
    if (in.symplectic.has_value())
      j["frobenius"] = in.symplectic->frobenius;
    out << j.dump(2) << "\n";
  } else {
    out << "dimension " << g.dim() << " over " << g.field()->describe() << "\n";
    out << "unimodular: " << (g.is_unimodular() ? "yes" : "no")
        << "  nilpotent: " << (cls.nilpotent ? "yes" : "no")
        << "  solvable: " << (cls.solvable ? "yes" : "no")
        << "  completely solvable: " << tristate_str(cls.completely_solvable)
        << "\n";
    out << "heisenberg: " << (g.is_heisenberg() ? "yes" : "no") << "\n";
    if (in.symplectic.has_value())
      out << "symplectic form verified"
          << (in.symplectic->frobenius ? " (exact: Frobenius)" : " (non-exact)")
          << "\n";
    if (in.contact.has_value()) {
      out << "contact form verified; Reeb vector:";
      for (int i = 0; i < g.dim(); ++i) {
        const Scalar& c = in.contact->xi[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        out << " + (" << c.str() << ")*" << g.names()[static_cast<std::size_t>(i)];
      }
      out << "\n";
    }
    out << "betti:";
    for (int k = 0; k <= g.dim(); ++k) out << " b" << k << "=" << table[static_cast<std::size_t>(k)];
    out << "\n";
    if (witnesses) {
      for (int k = 0; k <= g.dim(); ++k) {
        CohomologyDescriptor d = cohomology(g, k);
        out << "H^" << k << ":";
        if (d.representatives.empty()) out << " 0";
        for (const auto& r : d.representatives)
          out << "  [" << r.str(g.names()) << "]";
        out << "\n";
      }
    }
  }
  return 0;
}

int do_lefschetz(std::ostream& out, const Inputs& in, const std::string& mode,
                 int s, const std::string& format, bool witnesses) {
  if (mode == "symplectic") {
    if (!in.symplectic.has_value())
      throw DocumentError("omega", "the input carries no symplectic structure");
    int bound = std::min(s, in.symplectic->n);
    return report_lefschetz(out, symplectic_lefschetz(*in.symplectic, bound),
                            in.symplectic->algebra, format, witnesses);
  }
  if (mode == "contact") {
    if (!in.contact.has_value())
      throw DocumentError("eta", "the input carries no contact structure");
    int bound = std::min(s, in.contact->n);
    return report_lefschetz(out, contact_lefschetz(*in.contact, bound),
                            in.contact->algebra, format, witnesses);
  }
  throw DocumentError("--mode", "mode must be symplectic or contact");
}

int do_theorem_main(std::ostream& out, const Inputs& in,
                    const std::string& format) {
  if (!in.symplectic.has_value())
    throw DocumentError("omega", "theorem-main needs a symplectic structure");
  TheoremMainCheck r = theorem_main_check(*in.symplectic);
  if (format == "structured") {
    ordered_json j;
    j["h_verdict"] = r.h_verdict;
    j["g_verdict"] = r.g_verdict;
    j["agree"] = r.agree;
    out << j.dump(2) << "\n";
  } else {
    out << "symplectic side 1-Lefschetz: " << (r.h_verdict ? "holds" : "fails")
        << "\ncontactization 1-Lefschetz: " << (r.g_verdict ? "holds" : "fails")
        << "\nagreement: " << (r.agree ? "yes" : "NO (engine inconsistency)")
        << "\n";
  }
  if (!r.agree) return 1;
  return r.h_verdict ? 0 : 1;
}

int do_bg_check(std::ostream& out, const Inputs& in,
                const std::vector<int>& complement, const std::string& format) {
  if (!in.symplectic.has_value())
    throw DocumentError("omega", "bg-check needs a symplectic structure");
  const LieAlgebra& h = in.algebra;
  Subspace cand(h.field(), h.dim());
  for (int i : complement) {
    if (i < 0 || i >= h.dim())
      throw DocumentError("--complement", "basis index out of range");
    cand.add(unit_vec(h.field(), h.dim(), i));
  }
  BgReport rep = verify_bg_conditions(*in.symplectic, cand);
  if (format == "structured") {
    ordered_json j;
    j["abelian_complement"] = rep.abelian_complement;
    j["even_dimensions"] = rep.even_dimensions;
    j["center_meets_trivially"] = rep.center_meets_trivially;
    j["split_cohomologous"] = rep.split_cohomologous;
    j["parts_nondegenerate"] = rep.parts_nondegenerate;
    j["infinitesimal_symplectic"] = rep.infinitesimal_symplectic;
    j["all"] = rep.all();
    if (rep.obstruction.has_value())
      j["obstruction"] = rep.obstruction->str(h.names());
    out << j.dump(2) << "\n";
  } else {
    out << "(i)   abelian complement:        "
        << (rep.abelian_complement ? "yes" : "no") << "\n"
        << "(ii)  even dimensions:           "
        << (rep.even_dimensions ? "yes" : "no") << "\n"
        << "(iii) center misses commutator:  "
        << (rep.center_meets_trivially ? "yes" : "no") << "\n"
        << "(iv)  split representative:      "
        << (rep.split_cohomologous ? "yes" : "no") << "\n"
        << "(v)   nondegenerate parts:       "
        << (rep.parts_nondegenerate ? "yes" : "no") << "\n"
        << "(vi)  infinitesimally symplectic:"
        << (rep.infinitesimal_symplectic ? " yes" : " no") << "\n"
        << "all six: " << (rep.all() ? "hold" : "fail") << "\n";
    if (rep.obstruction.has_value())
      out << "obstruction: " << rep.obstruction->str(h.names()) << "\n";
  }
  return rep.all() ? 0 : 1;
}

int do_lattice(std::ostream& out, const Inputs& in, const std::string& format) {
  if (!in.lattice.has_value())
    throw DocumentError("lattice", "the input carries no lattice block");
  const catalog::LatticeFixture& fix = *in.lattice;
  LatticeCertificate cert =
      lattice_check(fix.algebra, fix.ideal, fix.spec, fix.candidate, fix.id);
  if (format == "structured") {
    ordered_json j;
    j["algebra"] = cert.algebra_id;
    j["rational_basis_ok"] = cert.rational_basis_ok;
    j["integral_ok"] = cert.integral_ok;
    j["derivation_consistent"] = cert.derivation_consistent;
    j["valid"] = cert.valid();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < cert.exp_matrix.rows; ++i) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < cert.exp_matrix.cols; ++c)
        row.push_back(cert.exp_matrix.a[i][c].str());
      rows.push_back(row);
    }
    j["exp_matrix"] = rows;
    j["offending"] = cert.offending;
    out << j.dump(2) << "\n";
  } else {
    out << "rational basis: " << (cert.rational_basis_ok ? "yes" : "NO") << "\n";
    out << "integral exponential: " << (cert.integral_ok ? "yes" : "NO") << "\n";
    out << "exp(t0 D) in the candidate basis:\n" << cert.exp_matrix.str();
    for (const auto& o : cert.offending) out << "offending: " << o << "\n";
    out << "certificate: " << (cert.valid() ? "valid" : "INVALID") << "\n";
  }
  return cert.valid() ? 0 : 1;
}

int dispatch_check(std::ostream& out, const Inputs& in, const std::string& check,
                   int s, const std::string& format, bool witnesses,
                   const std::vector<int>& complement) {
  if (check == "betti" || check == "classify") return do_betti(out, in, format, witnesses);
  if (check == "symplectic-lefschetz")
    return do_lefschetz(out, in, "symplectic", s, format, witnesses);
  if (check == "contact-lefschetz")
    return do_lefschetz(out, in, "contact", s, format, witnesses);
  if (check == "theorem-main") return do_theorem_main(out, in, format);
  if (check == "bg-conditions") return do_bg_check(out, in, complement, format);
  if (check == "lattice") return do_lattice(out, in, format);
  throw DocumentError("--check", "unknown check '" + check + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact Lefschetz-condition laboratory for Lie algebras"};
  app.require_subcommand(1);

  std::string input, mode = "symplectic", format = "text", check = "betti";
  std::string complement_arg;
  int s = 1;
  bool witnesses = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--s", s, "degree bound for Lefschetz checks");
    cmd->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag("--witnesses", witnesses, "include witness forms");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "classification and betti table");
  analyze->add_option("input", input, "document path")->required();
  analyze->add_option("--check", check,
                      "betti | symplectic-lefschetz | contact-lefschetz | "
                      "theorem-main | bg-conditions | lattice");
  analyze->add_option("--complement", complement_arg,
                      "comma-separated basis indices for bg-conditions");
  add_common(analyze);

  CLI::App* lef = app.add_subcommand("lefschetz", "decide the s-Lefschetz condition");
  lef->add_option("input", input, "document path")->required();
  lef->add_option("--mode", mode, "symplectic or contact")
      ->check(CLI::IsMember({"symplectic", "contact"}));
  add_common(lef);

  CLI::App* ctz = app.add_subcommand("contactize", "emit the contactization document");
  ctz->add_option("input", input, "document path")->required();

  CLI::App* dctz = app.add_subcommand("decontactize", "emit the symplectic base document");
  dctz->add_option("input", input, "document path")->required();

  CLI::App* bgc = app.add_subcommand("bg-check", "the six splitting conditions");
  bgc->add_option("input", input, "document path")->required();
  bgc->add_option("--complement", complement_arg,
                  "comma-separated basis indices spanning the candidate")
      ->required();
  add_common(bgc);

  CLI::App* lat = app.add_subcommand("lattice-check", "certify a lattice witness");
  lat->add_option("input", input, "document path")->required();
  add_common(lat);

  CLI::App* cat = app.add_subcommand("catalog", "built-in examples");
  CLI::App* cat_list = cat->add_subcommand("list", "list catalog ids");
  std::string cat_id;
  CLI::App* cat_run = cat->add_subcommand("run", "run checks on a catalog entry");
  cat_run->add_option("id", cat_id, "catalog id")->required();
  cat_run->add_option("--check", check,
                      "manifest | betti | symplectic-lefschetz | "
                      "contact-lefschetz | theorem-main | lattice");
  add_common(cat_run);

  try {
    // CLI11 wants argc/argv-style parsing, reversed
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with success
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<int> complement;
  if (!complement_arg.empty()) {
    std::stringstream ss(complement_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        complement.push_back(std::stoi(tok));
      } catch (...) {
        err << "error: --complement expects comma-separated integers\n";
        return 2;
      }
    }
  }

  try {
    if (analyze->parsed()) {
      Inputs in = load_document(input);
      if (check == "bg-conditions" && complement.empty()) {
        err << "error: bg-conditions needs --complement\n";
        return 2;
      }
      return dispatch_check(out, in, check, s, format, witnesses, complement);
    }
    if (lef->parsed()) {
      Inputs in = load_document(input);
      return do_lefschetz(out, in, mode, s, format, witnesses);
    }
    if (ctz->parsed()) {
      Inputs in = load_document(input);
      if (!in.symplectic.has_value())
        throw DocumentError("omega", "contactize needs a symplectic structure");
      ContactStructure c = contactize(*in.symplectic);
      out << emit_document(document_from_algebra(c.algebra, std::nullopt, c.eta));
      return 0;
    }
    if (dctz->parsed()) {
      Inputs in = load_document(input);
      if (!in.contact.has_value())
        throw DocumentError("eta", "decontactize needs a contact structure");
      Decontactization d = decontactize(*in.contact);
      out << emit_document(document_from_algebra(d.structure.algebra,
                                                 d.structure.omega, std::nullopt));
      return 0;
    }
    if (bgc->parsed()) {
      Inputs in = load_document(input);
      return do_bg_check(out, in, complement, format);
    }
    if (lat->parsed()) {
      Inputs in = load_document(input);
      return do_lattice(out, in, format);
    }
    if (cat_list->parsed()) {
      for (const auto& e : catalog::entries())
        out << e.id << "  -  " << e.description << "\n";
      return 0;
    }
    if (cat_run->parsed()) {
      if (check == "manifest") {
        const catalog::Entry* e = catalog::find_entry(cat_id);
        if (e == nullptr) {
          err << "error: unknown catalog id '" << cat_id << "'\n";
          return 2;
        }
        std::vector<std::string> failures = catalog::run_manifest(*e);
        if (failures.empty()) {
          out << cat_id << ": manifest matches\n";
          return 0;
        }
        for (const auto& f : failures) out << cat_id << ": " << f << "\n";
        return 1;
      }
      Inputs in = load_catalog(cat_id);
      return dispatch_check(out, in, check, s, format, witnesses, complement);
    }
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ScalarParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const JacobiViolation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotClosedError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace lefschetz::cli
