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

#include "lefschetz/document.hpp"

#include "json.hpp"

namespace lefschetz {

namespace {

using nlohmann::ordered_json;

const ordered_json& need(const ordered_json& j, const std::string& key,
                         const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(path + "." + key, "missing field");
  return *it;
}

FieldPtr parse_field(const ordered_json& j) {
  if (!j.is_object()) throw DocumentError("field", "must be an object");
  std::string kind = need(j, "kind", "field").get<std::string>();
  try {
    if (kind == "rationals") return Field::rationals();
    if (kind == "quadratic")
      return Field::quadratic(need(j, "d", "field").get<long long>());
    if (kind == "rational_functions")
      return Field::rational_functions(
          need(j, "vars", "field").get<std::vector<std::string>>());
  } catch (const FieldError& e) {
    throw DocumentError("field", e.what());
  }
  throw DocumentError("field.kind", "unknown kind '" + kind + "'");
}

ordered_json emit_field(const FieldPtr& f) {
  ordered_json j;
  switch (f->kind()) {
    case FieldKind::rationals:
      j["kind"] = "rationals";
      break;
    case FieldKind::quadratic:
      j["kind"] = "quadratic";
      j["d"] = f->d();
      break;
    case FieldKind::rational_functions:
      j["kind"] = "rational_functions";
      j["vars"] = f->vars();
      break;
  }
  return j;
}

Matrix parse_matrix(const ordered_json& j, const FieldPtr& f,
                    const std::string& path) {
  if (!j.is_array() || j.empty())
    throw DocumentError(path, "expected a nonempty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<std::size_t>(i)].size()) != cols)
      throw DocumentError(path, "ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const auto& cell = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      try {
        if (cell.is_number_integer()) {
          m.a[i][c] = f->integer(cell.get<long long>());
        } else {
          m.a[i][c] = f->parse(cell.get<std::string>());
        }
      } catch (const ScalarParseError& e) {
        throw DocumentError(path + "[" + std::to_string(i) + "][" +
                                std::to_string(c) + "]",
                            e.what());
      }
    }
  }
  return m;
}

}  // namespace

Document parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("(document)", e.what());
  }
  if (!j.is_object()) throw DocumentError("(document)", "must be an object");

  FieldPtr field = parse_field(need(j, "field", "(document)"));
  int dim = need(j, "dim", "(document)").get<int>();
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = j["basis"].get<std::vector<std::string>>();

  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    const auto& br = j["brackets"];
    if (!br.is_array()) throw DocumentError("brackets", "expected an array");
    for (std::size_t t = 0; t < br.size(); ++t) {
      const auto& e = br[t];
      std::string path = "brackets[" + std::to_string(t) + "]";
      BracketEntry out{need(e, "i", path).get<int>(),
                       need(e, "j", path).get<int>(),
                       {}};
      const auto& terms = need(e, "terms", path);
      if (!terms.is_array()) throw DocumentError(path + ".terms", "expected an array");
      for (std::size_t s = 0; s < terms.size(); ++s) {
        const auto& term = terms[s];
        std::string tpath = path + ".terms[" + std::to_string(s) + "]";
        int k = need(term, "k", tpath).get<int>();
        const auto& c = need(term, "c", tpath);
        try {
          Scalar v = c.is_number_integer() ? field->integer(c.get<long long>())
                                           : field->parse(c.get<std::string>());
          out.terms.push_back({k, v});
        } catch (const ScalarParseError& err) {
          throw DocumentError(tpath + ".c", err.what());
        }
      }
      entries.push_back(std::move(out));
    }
  }

  Document doc{[&] {
                 try {
                   return LieAlgebra::build(field, dim, basis, entries);
                 } catch (const std::invalid_argument& e) {
                   throw DocumentError("(algebra)", e.what());
                 }
               }(),
               std::nullopt,
               std::nullopt,
               std::nullopt};

  auto parse_form_field = [&](const char* key) -> std::optional<KForm> {
    if (!j.contains(key)) return std::nullopt;
    try {
      return parse_form(field, dim, doc.algebra.names(),
                        j[key].get<std::string>());
    } catch (const ScalarParseError& e) {
      throw DocumentError(key, e.what());
    }
  };
  doc.omega = parse_form_field("omega");
  doc.eta = parse_form_field("eta");

  if (j.contains("lattice")) {
    const auto& lj = j["lattice"];
    Document::LatticeBlock block;
    block.ideal_indices = need(lj, "ideal", "lattice").get<std::vector<int>>();
    block.spec.k = need(lj, "k", "lattice").get<long long>();
    FieldPtr kf;
    try {
      kf = alpha_for_k(block.spec.k).first;
    } catch (const FieldError& e) {
      throw DocumentError("lattice.k", e.what());
    }
    const auto& blocks = need(lj, "blocks", "lattice");
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      const auto& bj = blocks[t];
      std::string path = "lattice.blocks[" + std::to_string(t) + "]";
      std::string type = need(bj, "type", path).get<std::string>();
      DerivationBlock b;
      if (type == "nilpotent") {
        b.scaled = false;
      } else if (type == "scaled") {
        b.scaled = true;
        b.power = need(bj, "power", path).get<long long>();
      } else {
        throw DocumentError(path + ".type", "must be nilpotent or scaled");
      }
      b.nilpotent = parse_matrix(need(bj, "n", path), kf, path + ".n");
      block.spec.blocks.push_back(std::move(b));
    }
    block.candidate =
        parse_matrix(need(lj, "candidate", "lattice"), kf, "lattice.candidate");
    doc.lattice = std::move(block);
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  ordered_json j;
  j["field"] = emit_field(doc.algebra.field());
  j["dim"] = doc.algebra.dim();
  j["basis"] = doc.algebra.names();
  ordered_json brackets = ordered_json::array();
  for (const auto& e : doc.algebra.bracket_entries()) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : e.terms)
      terms.push_back({{"k", t.k}, {"c", t.c.str()}});
    brackets.push_back({{"i", e.i}, {"j", e.j}, {"terms", terms}});
  }
  j["brackets"] = brackets;
  if (doc.omega.has_value())
    j["omega"] = doc.omega->str(doc.algebra.names());
  if (doc.eta.has_value()) j["eta"] = doc.eta->str(doc.algebra.names());
  if (doc.lattice.has_value()) {
    ordered_json lj;
    lj["ideal"] = doc.lattice->ideal_indices;
    lj["k"] = doc.lattice->spec.k;
    ordered_json blocks = ordered_json::array();
    for (const auto& b : doc.lattice->spec.blocks) {
      ordered_json bj;
      bj["type"] = b.scaled ? "scaled" : "nilpotent";
      if (b.scaled) bj["power"] = b.power;
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < b.nilpotent.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < b.nilpotent.cols; ++c)
          row.push_back(b.nilpotent.a[i][c].str());
        rows.push_back(row);
      }
      bj["n"] = rows;
      blocks.push_back(bj);
    }
    lj["blocks"] = blocks;
    ordered_json cand = ordered_json::array();
    for (int i = 0; i < doc.lattice->candidate.rows; ++i) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < doc.lattice->candidate.cols; ++c)
        row.push_back(doc.lattice->candidate.a[i][c].str());
      cand.push_back(row);
    }
    lj["candidate"] = cand;
    j["lattice"] = lj;
  }
  return j.dump(2) + "\n";
}

Document document_from_algebra(const LieAlgebra& g,
                               const std::optional<KForm>& omega,
                               const std::optional<KForm>& eta) {
  return Document{g, omega, eta, std::nullopt};
}

}  // namespace lefschetz
