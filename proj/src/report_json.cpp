#include "ainf/report_json.hpp"

#include <sstream>

namespace ainf {

json word_json(const TensorWord& w) {
  json out = json::array();
  for (const auto& x : w) out.push_back({x.i, x.j});
  return out;
}

json element_json(const Element& x) {
  json terms = json::array();
  for (const auto& [w, c] : x) terms.push_back({{"word", word_json(w)}, {"coeff", c}});
  return {{"k", x.tensor_length()}, {"terms", std::move(terms)}};
}

json report_json(const RelationReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"input", word_json(w.input)},
                         {"input_text", to_string(w.input)},
                         {"residual", element_json(w.residual)},
                         {"note", w.note}});
  return {{"relation_id", r.relation_id},
          {"inputs_checked", r.inputs_checked},
          {"failures", r.failures},
          {"pass", r.pass()},
          {"witnesses", std::move(witnesses)}};
}

json face_json(const OrderedPartition& f) { return f.blocks(); }

json tree_json(const PlanarTree& t) {
  if (t.is_leaf()) return t.label();
  json out = json::array();
  for (const auto& c : t.children()) out.push_back(tree_json(c));
  return out;
}

json certificate_json(const Certificate& c) {
  json reports = json::array();
  for (const auto& r : c.reports) reports.push_back(report_json(r));
  return {{"schema", kSchemaVersion},
          {"command", "certify"},
          {"p", c.params.p.value()},
          {"m", c.params.m},
          {"max_j", c.max_j},
          {"v_degree", c.params.v_degree()},
          {"w_degree", c.params.w_degree()},
          {"pass", c.pass()},
          {"reports", std::move(reports)}};
}

json perm_diagonal_json(int n, const DiagonalElement& d, bool chain_map) {
  json terms = json::array();
  json text = json::array();
  for (const auto& [a, b] : d) {
    terms.push_back({face_json(a), face_json(b)});
    text.push_back(a.to_string() + " x " + b.to_string());
  }
  return {{"schema", kSchemaVersion},
          {"command", "diagonal"},
          {"polytope", "perm"},
          {"n", n},
          {"term_count", d.size()},
          {"chain_map", chain_map},
          {"pass", chain_map},
          {"terms", std::move(terms)},
          {"terms_text", std::move(text)}};
}

json assoc_diagonal_json(int n, const AssocDiagonal& d, std::size_t degenerate_terms,
                         bool chain_map) {
  json terms = json::array();
  json text = json::array();
  for (const auto& [a, b] : d) {
    terms.push_back({tree_json(a), tree_json(b)});
    text.push_back(a.to_string() + " x " + b.to_string());
  }
  return {{"schema", kSchemaVersion},
          {"command", "diagonal"},
          {"polytope", "assoc"},
          {"n", n},
          {"leaves", n + 1},
          {"term_count", d.size()},
          {"degenerate_terms", degenerate_terms},
          {"chain_map", chain_map},
          {"pass", chain_map},
          {"terms", std::move(terms)},
          {"terms_text", std::move(text)}};
}

json factors_json(Prime p, const std::vector<StructureParams>& factors,
                  const std::vector<std::optional<Certificate>>& certificates) {
  json list = json::array();
  bool all = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    json entry = {{"index", i},
                  {"m", factors[i].m},
                  {"v_degree", factors[i].v_degree()},
                  {"w_degree", factors[i].w_degree()}};
    if (i < certificates.size() && certificates[i]) {
      entry["certificate"] = certificate_json(*certificates[i]);
      entry["pass"] = certificates[i]->pass();
      all = all && certificates[i]->pass();
    }
    list.push_back(std::move(entry));
  }
  return {{"schema", kSchemaVersion},
          {"command", "factors"},
          {"p", p.value()},
          {"count", factors.size()},
          {"pass", all},
          {"factors", std::move(list)}};
}

json lemma_json(const LemmaSweep& s) {
  json failures = json::array();
  for (const auto& f : s.failures)
    failures.push_back({{"z", f.z}, {"i", f.i}, {"lhs", f.result.lhs}, {"rhs", f.result.rhs}});
  return {{"schema", kSchemaVersion},
          {"command", "lemma"},
          {"p", s.p.value()},
          {"seed", s.seed},
          {"trials", s.trials},
          {"passed", s.passed},
          {"pass", s.passed == s.trials},
          {"failures", std::move(failures)}};
}

namespace {

const char* verdict(const json& doc) { return doc.value("pass", false) ? "PASS" : "FAIL"; }

void render_reports(std::ostream& os, const json& cert, const std::string& indent) {
  for (const auto& r : cert["reports"]) {
    os << indent << verdict(r) << "  " << r["relation_id"].get<std::string>() << "  ("
       << r["inputs_checked"].get<std::size_t>() << " inputs";
    if (r["failures"].get<std::size_t>()) os << ", " << r["failures"].get<std::size_t>() << " failing";
    os << ")\n";
    for (const auto& w : r["witnesses"])
      os << indent << "    witness " << w["input_text"].get<std::string>() << ": "
         << w["note"].get<std::string>() << " (" << w["residual"]["terms"].size()
         << " residual terms)\n";
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  const std::string command = doc.value("command", "");
  if (command == "certify") {
    os << "certify p=" << doc["p"] << " m=" << doc["m"] << " max_j=" << doc["max_j"]
       << "  |v|=" << doc["v_degree"] << " |w|=" << doc["w_degree"] << "\n";
    render_reports(os, doc, "  ");
    os << verdict(doc) << "\n";
  } else if (command == "diagonal") {
    os << "diagonal " << doc["polytope"].get<std::string>() << " n=" << doc["n"] << ": "
       << doc["term_count"] << " terms";
    if (doc.contains("degenerate_terms"))
      os << " (" << doc["degenerate_terms"] << " degenerate terms dropped)";
    os << "\n";
    for (const auto& t : doc["terms_text"]) os << "  " << t.get<std::string>() << "\n";
    os << "chain map: " << (doc["chain_map"].get<bool>() ? "yes" : "no") << "\n"
       << verdict(doc) << "\n";
  } else if (command == "factors") {
    os << "factors p=" << doc["p"] << "\n";
    for (const auto& f : doc["factors"]) {
      os << "  i=" << f["index"] << " m=" << f["m"] << " |v|=" << f["v_degree"]
         << " |w|=" << f["w_degree"];
      if (f.contains("pass")) os << "  " << verdict(f);
      os << "\n";
      if (f.contains("certificate")) render_reports(os, f["certificate"], "      ");
    }
    os << verdict(doc) << "\n";
  } else if (command == "lemma") {
    os << "lemma p=" << doc["p"] << " seed=" << doc["seed"] << ": " << doc["passed"] << "/"
       << doc["trials"] << " pass\n";
    for (const auto& f : doc["failures"])
      os << "  z=" << f["z"].dump() << " i=" << f["i"] << " lhs=" << f["lhs"]
         << " rhs=" << f["rhs"] << "\n";
    os << verdict(doc) << "\n";
  } else {
    os << doc.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace ainf
