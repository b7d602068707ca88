#include "wittkit/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace wittkit {

using nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

ordered_json form_json(const DiagForm& q) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : q.entries) arr.push_back(rat_to_string(a));
  return arr;
}

DiagForm form_from(const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("form: expected an array of rationals");
  std::vector<Rat> entries;
  for (const auto& e : j) entries.push_back(rat_from_string(e.get<std::string>()));
  return DiagForm(std::move(entries));
}

Quat quat_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("pure quaternion: expected [\"x\",\"y\",\"z\"]");
  return Quat::pure(rat_from_string(j[0].get<std::string>()),
                    rat_from_string(j[1].get<std::string>()),
                    rat_from_string(j[2].get<std::string>()));
}

ordered_json quat_json(const Quat& z) {
  return ordered_json::array({rat_to_string(z.c[1]), rat_to_string(z.c[2]), rat_to_string(z.c[3])});
}

QuaternionAlgebra algebra_from(const ordered_json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw std::invalid_argument("algebra: expected {\"a\":...,\"b\":...}");
  return QuaternionAlgebra(rat_from_string(j["a"].get<std::string>()),
                           rat_from_string(j["b"].get<std::string>()));
}

}  // namespace

std::string form_to_json(const DiagForm& q) { return form_json(q).dump(); }

DiagForm form_from_json(const std::string& text) { return form_from(parse(text)); }

std::string gw_to_json(const GWClass& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [s, m] : x.terms()) {
    terms.push_back(ordered_json{{"class", s.rep.str()}, {"mult", m}});
  }
  return ordered_json{{"terms", terms}}.dump();
}

std::string coh_to_json(const CohClass& x) {
  ordered_json syms = ordered_json::array();
  for (const auto& s : x.symbols) {
    ordered_json tuple = ordered_json::array();
    for (const auto& a : s) tuple.push_back(a.rep.str());
    syms.push_back(tuple);
  }
  return ordered_json{{"degree", x.degree}, {"symbols", syms}}.dump();
}

std::string algebra_to_json(const QuaternionAlgebra& alg) {
  return ordered_json{{"a", rat_to_string(alg.a)}, {"b", rat_to_string(alg.b)}}.dump();
}

QuaternionAlgebra algebra_from_json(const std::string& text) { return algebra_from(parse(text)); }

std::string pure_quat_to_json(const Quat& z) { return quat_json(z).dump(); }

Quat pure_quat_from_json(const std::string& text) { return quat_from(parse(text)); }

std::string herm_to_json(const HermDiagForm& h) {
  ordered_json gens = ordered_json::array();
  for (const auto& z : h.gens) gens.push_back(quat_json(z));
  ordered_json alg{{"a", rat_to_string(h.alg.a)}, {"b", rat_to_string(h.alg.b)}};
  return ordered_json{{"algebra", alg}, {"gens", gens}}.dump();
}

HermDiagForm herm_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object() || !j.contains("algebra") || !j.contains("gens"))
    throw std::invalid_argument("hermitian form: expected {\"algebra\":...,\"gens\":[...]}");
  QuaternionAlgebra alg = algebra_from(j["algebra"]);
  std::vector<Quat> gens;
  for (const auto& g : j["gens"]) gens.push_back(quat_from(g));
  return HermDiagForm(alg, std::move(gens));
}

std::string subset_to_json(const SubsetF2& s, const Universe& u) {
  ordered_json arr = ordered_json::array();
  for (int i : s.indices()) {
    if (i >= u.size()) throw std::invalid_argument("subset: index outside the universe");
    arr.push_back(u.labels[i]);
  }
  return arr.dump();
}

SubsetF2 subset_from_json(const std::string& text, const Universe& u) {
  ordered_json j = parse(text);
  if (!j.is_array()) throw std::invalid_argument("subset: expected a label array");
  SubsetF2 s;
  for (const auto& label : j) {
    auto it = std::find(u.labels.begin(), u.labels.end(), label.get<std::string>());
    if (it == u.labels.end()) throw std::invalid_argument("subset: unknown label");
    s = s | SubsetF2::singleton(static_cast<int>(it - u.labels.begin()));
  }
  return s;
}

std::string morphism_to_json(const SquareClassMorphism& f) {
  ordered_json j;
  for (int i = 0; i < f.universe.size(); ++i) {
    j[f.universe.labels[i]] = f.on_singletons[i].rep.str();
  }
  return j.dump();
}

SquareClassMorphism morphism_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object()) throw std::invalid_argument("morphism: expected a label -> class map");
  SquareClassMorphism f;
  std::vector<std::string> labels;
  for (const auto& [label, _] : j.items()) labels.push_back(label);
  f.universe = Universe(labels);
  for (const auto& label : labels) {
    SquareClass cls = squarefree_rep(Rat(Int(j[label].get<std::string>())));
    f.on_singletons.push_back(cls);
  }
  return f;
}

}  // namespace wittkit
