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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lefschetz/catalog.hpp"
#include "lefschetz/cli.hpp"
#include "lefschetz/document.hpp"

using namespace lefschetz;

namespace {

struct RunResult {
  int status;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "cli_test_" + name;
  std::ofstream f(path);
  f << text;
  return path;
}

const char* kH3Doc = R"({
  "field": {"kind": "rationals"},
  "dim": 3,
  "basis": ["e1", "e2", "e3"],
  "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}],
  "eta": "e3"
})";

}  // namespace

TEST_CASE("document parse mirrors programmatic construction") {
  Document doc = parse_document(kH3Doc);
  auto f = Field::rationals();
  LieAlgebra h3 = LieAlgebra::build(f, 3, {"e1", "e2", "e3"},
                                    {{0, 1, {{2, f->one()}}}});
  CHECK(doc.algebra == h3);
  REQUIRE(doc.eta.has_value());
  CHECK(*doc.eta == KForm::monomial(f, 3, {2}, f->one()));
  // emit -> parse is the identity on the objects
  Document again = parse_document(emit_document(doc));
  CHECK(again.algebra == doc.algebra);
  CHECK(*again.eta == *doc.eta);
}

TEST_CASE("document round trip over each field kind, lattice block included") {
  catalog::LatticeFixture fix = catalog::lattice_fixture_split(3, 1);
  Document doc{fix.algebra, std::nullopt, std::nullopt, std::nullopt};
  Document::LatticeBlock block;
  block.ideal_indices = {0, 2, 3, 4};
  block.spec = fix.spec;
  block.candidate = fix.candidate;
  doc.lattice = block;
  Document again = parse_document(emit_document(doc));
  CHECK(again.algebra == doc.algebra);
  REQUIRE(again.lattice.has_value());
  CHECK(again.lattice->candidate == fix.candidate);
  CHECK(again.lattice->spec.k == 3);
  REQUIRE(again.lattice->spec.blocks.size() == 3);
  CHECK(again.lattice->spec.blocks[1].power == 1);
  CHECK(again.lattice->spec.blocks[1].nilpotent == fix.spec.blocks[1].nilpotent);

  auto quad = catalog::bg_family_quadratic(3);
  Document qdoc{quad.symplectic->algebra, quad.symplectic->omega, std::nullopt,
                std::nullopt};
  Document qback = parse_document(emit_document(qdoc));
  CHECK(qback.algebra == qdoc.algebra);
  CHECK(*qback.omega == *qdoc.omega);
}

TEST_CASE("schema violations carry field paths") {
  CHECK_THROWS_AS(parse_document("{\"dim\": 3}"), DocumentError);
  try {
    parse_document(R"({"field": {"kind": "nope"}, "dim": 1})");
    FAIL("expected a document error");
  } catch (const DocumentError& e) {
    CHECK(e.field_path == "field.kind");
  }
  try {
    parse_document(
        R"({"field": {"kind": "rationals"}, "dim": 2,
            "brackets": [{"i": 0, "j": 1, "terms": [{"k": 0, "c": "1/0"}]}]})");
    FAIL("expected a document error");
  } catch (const DocumentError& e) {
    CHECK(e.field_path == "brackets[0].terms[0].c");
  }
}

TEST_CASE("cli: catalog run with a passing contact check") {
  RunResult r = run_cli({"catalog", "run", "heisenberg-5", "--check",
                         "contact-lefschetz", "--s", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict: holds") != std::string::npos);
}

TEST_CASE("cli: the bg contactization fails at s = 2 with the stated witness") {
  // produce the contact document through the cli itself
  auto objs = catalog::bg_family();
  ContactStructure g = contactize(*objs.symplectic);
  std::string path = write_temp(
      "bg.json",
      emit_document(document_from_algebra(g.algebra, std::nullopt, g.eta)));
  RunResult r = run_cli({"analyze", path, "--check", "contact-lefschetz",
                         "--s", "2", "--witnesses"});
  CHECK(r.status == 1);
  CHECK(r.out.find("kernel witness") != std::string::npos);
  CHECK(r.out.find("x1^x2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli: a Jacobi violation is an input error with the witness triple") {
  std::string path = write_temp("broken.json", R"({
    "field": {"kind": "rationals"},
    "dim": 3,
    "basis": ["e1", "e2", "e3"],
    "brackets": [
      {"i": 0, "j": 1, "terms": [{"k": 0, "c": "1"}]},
      {"i": 0, "j": 2, "terms": [{"k": 1, "c": "1"}]}
    ]
  })");
  RunResult r = run_cli({"analyze", path});
  CHECK(r.status == 2);
  CHECK(r.err.find("Jacobi") != std::string::npos);
  CHECK(r.err.find("(0,1,2)") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli: unknown catalog ids and unknown checks are usage errors") {
  CHECK(run_cli({"catalog", "run", "nope"}).status == 2);
  CHECK(run_cli({"catalog", "run", "bg", "--check", "nope"}).status == 2);
  CHECK(run_cli({"analyze", "no_such_file.json"}).status == 2);
}

TEST_CASE("cli: deterministic output bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"catalog", "run", "bg", "--check", "betti",
                                 "--format", "structured", "--witnesses"},
        std::vector<std::string>{"catalog", "run", "jordan-3-2", "--check",
                                 "contact-lefschetz", "--s", "2", "--format",
                                 "structured", "--witnesses"}}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: contactize then decontactize returns the original document") {
  std::string kt = write_temp("kt.json", R"({
    "field": {"kind": "rationals"},
    "dim": 4,
    "basis": ["e1", "e2", "e3", "e4"],
    "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}],
    "omega": "e1^e4 + e2^e3"
  })");
  RunResult up = run_cli({"contactize", kt});
  REQUIRE(up.status == 0);
  std::string contact_path = write_temp("kt_contact.json", up.out);
  RunResult down = run_cli({"decontactize", contact_path});
  REQUIRE(down.status == 0);
  Document original = parse_document(std::string(R"({
    "field": {"kind": "rationals"},
    "dim": 4,
    "basis": ["e1", "e2", "e3", "e4"],
    "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}],
    "omega": "e1^e4 + e2^e3"
  })"));
  Document back = parse_document(down.out);
  CHECK(back.algebra == original.algebra);
  CHECK(*back.omega == *original.omega);
  std::remove(kt.c_str());
  std::remove(contact_path.c_str());
}

TEST_CASE("cli: lattice-check on a document certifies") {
  catalog::LatticeFixture fix = catalog::lattice_fixture_split(3, 1);
  Document doc{fix.algebra, std::nullopt, std::nullopt, std::nullopt};
  Document::LatticeBlock block;
  block.ideal_indices = {0, 2, 3, 4};
  block.spec = fix.spec;
  block.candidate = fix.candidate;
  doc.lattice = block;
  std::string path = write_temp("lattice.json", emit_document(doc));
  RunResult r = run_cli({"lattice-check", path, "--format", "structured"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rational_basis_ok"] == true);
  CHECK(j["integral_ok"] == true);
  CHECK(j["valid"] == true);
  std::remove(path.c_str());
}

TEST_CASE("cli: bg-check splits the diagonal family") {
  auto objs = catalog::split_family({3}, catalog::TRelation::independent);
  std::string path = write_temp(
      "split.json", emit_document(document_from_algebra(
                        objs.symplectic->algebra, objs.symplectic->omega,
                        std::nullopt)));
  RunResult good = run_cli({"bg-check", path, "--complement", "0,1"});
  CHECK(good.status == 0);
  CHECK(good.out.find("all six: hold") != std::string::npos);
  RunResult bad = run_cli({"bg-check", path, "--complement", "0,2"});
  CHECK(bad.status == 1);
  std::remove(path.c_str());
}

TEST_CASE("cli: theorem-main through the catalog") {
  CHECK(run_cli({"catalog", "run", "bg", "--check", "theorem-main"}).status == 0);
  RunResult kt = run_cli({"catalog", "run", "h3xr", "--check", "theorem-main"});
  CHECK(kt.status == 1);  // verdicts agree but are negative
  CHECK(kt.out.find("agreement: yes") != std::string::npos);
}

TEST_CASE("cli: manifest runs for every catalog id") {
  for (const auto& e : catalog::entries()) {
    RunResult r = run_cli({"catalog", "run", e.id});
    CAPTURE(e.id);
    CAPTURE(r.out);
    CHECK(r.status == 0);
  }
}

TEST_CASE("cli: a missing structure for the requested check is an input error") {
  std::string path = write_temp("eta_only.json", kH3Doc);
  RunResult r = run_cli({"lefschetz", path, "--mode", "symplectic"});
  CHECK(r.status == 2);
  CHECK(r.err.find("no symplectic structure") != std::string::npos);
  RunResult r2 = run_cli({"analyze", path, "--check", "lattice"});
  CHECK(r2.status == 2);
  std::remove(path.c_str());
}

TEST_CASE("cli: usage without a subcommand is an error, help succeeds") {
  CHECK(run_cli({}).status == 2);
  RunResult help = run_cli({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("analyze") != std::string::npos);
}
