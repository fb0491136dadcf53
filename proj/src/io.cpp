#include "relaxed/io.hpp"

#include "relaxed/error.hpp"

namespace relaxed::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("missing field '") + name + "'", {});
  return j.at(name);
}

std::vector<std::string> label_list(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of strings", {});
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ValidationError(std::string(what) + " must be an array of strings", {e.dump()});
    out.push_back(e.get<std::string>());
  }
  return out;
}

pairing::FinMap map_from_json(const json& j, const pairing::FinDomain& from, const pairing::FinDomain& to,
                              const char* name) {
  if (!j.is_object()) throw ValidationError(std::string(name) + " must be an object", {});
  pairing::FinMap m{from, to, std::vector<std::size_t>(from.size(), to.size())};
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ValidationError(std::string(name) + " values must be labels", {k});
    m.image[from.index_of(k)] = to.index_of(v.get<std::string>());
  }
  for (std::size_t a = 0; a < from.size(); ++a) {
    if (m.image[a] == to.size()) throw ValidationError(std::string(name) + " is not total", {from.label(a)});
  }
  return m;
}

}  // namespace

json to_json(const pairing::FinPairing& p) {
  json rel = json::array();
  for (std::size_t a = 0; a < p.left().size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < p.right().size(); ++b) row.push_back(p.at(a, b));
    rel.push_back(std::move(row));
  }
  return {{"left", p.left().labels()}, {"right", p.right().labels()}, {"rel", std::move(rel)}};
}

pairing::FinPairing pairing_from_json(const json& j) {
  pairing::FinDomain left(label_list(field(j, "left"), "left"));
  pairing::FinDomain right(label_list(field(j, "right"), "right"));
  const auto& rel = field(j, "rel");
  if (!rel.is_array() || rel.size() != left.size()) throw ValidationError("rel must have one row per left label", {});
  std::vector<pairing::Subset> rows;
  for (std::size_t a = 0; a < rel.size(); ++a) {
    const auto& row = rel[a];
    if (!row.is_array() || row.size() != right.size()) {
      throw ValidationError("rel row must have one entry per right label", {left.label(a)});
    }
    pairing::Subset r(right.size());
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (!row[b].is_boolean()) throw ValidationError("rel entries must be booleans", {left.label(a), right.label(b)});
      r[b] = row[b].get<bool>();
    }
    rows.push_back(std::move(r));
  }
  return pairing::FinPairing(std::move(left), std::move(right), std::move(rows));
}

json to_json(const wo::FinWellOrder& w) { return w.ranked(); }

wo::FinWellOrder well_order_from_json(const json& j) { return wo::FinWellOrder(label_list(j, "well-order")); }

wo::ChoiceTable choice_table_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("choice table must be an object", {});
  wo::ChoiceTable t;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ValidationError("choice table values must be labels", {key});
    std::set<std::string> subset;
    std::size_t start = 0;
    while (!key.empty() && start <= key.size()) {
      auto comma = key.find(',', start);
      if (comma == std::string::npos) comma = key.size();
      subset.insert(key.substr(start, comma - start));
      start = comma + 1;
    }
    t.entries.emplace(std::move(subset), value.get<std::string>());
  }
  return t;
}

json to_json(const wo::ChoiceTable& t) {
  json out = json::object();
  for (const auto& [subset, chosen] : t.entries) {
    std::string key;
    for (const auto& s : subset) {
      if (!key.empty()) key += ",";
      key += s;
    }
    out[key] = chosen;
  }
  return out;
}

std::pair<pairing::FinMap, pairing::FinMap> injections_from_json(const json& j) {
  pairing::FinDomain a(label_list(field(j, "A"), "A"));
  pairing::FinDomain b(label_list(field(j, "B"), "B"));
  auto f = map_from_json(field(j, "f"), a, b, "f");
  auto g = map_from_json(field(j, "g"), b, a, "g");
  return {std::move(f), std::move(g)};
}

json to_json(const pairing::FinMap& m) {
  json out = json::object();
  for (std::size_t a = 0; a < m.image.size(); ++a) out[m.from.label(a)] = m.to.label(m.image[a]);
  return out;
}

wf::WFGraph graph_from_json(const json& j) { return wf::WFGraph(pairing_from_json(j)); }

json collapse_to_json(const wf::WFGraph& g, const std::vector<hf::HFCode>& codes, std::size_t braces_bit_limit) {
  json out = json::object();
  for (std::size_t v = 0; v < g.size(); ++v) {
    json entry = {{"code", codes[v].str()}};
    if (codes[v].bit_length() <= braces_bit_limit) entry["braces"] = hf::decode(codes[v]);
    out[g.vertices().label(v)] = std::move(entry);
  }
  return out;
}

json to_json(const zfc::AxiomReport& r) {
  json out = {{"axiom", zfc::to_string(r.axiom)},
              {"verdict", zfc::to_string(r.verdict)},
              {"exhaustive", r.exhaustive},
              {"failures", r.failures}};
  if (!r.note.empty()) out["note"] = r.note;
  if (r.witness) {
    json w = {{"elements", r.witness->elements}};
    if (!r.witness->detail.empty()) w["detail"] = r.witness->detail;
    if (!r.witness->subset.empty()) w["subset"] = r.witness->subset;
    if (!r.witness->mapping.empty()) {
      json m = json::object();
      for (const auto& [k, v] : r.witness->mapping) m[k] = v;
      w["mapping"] = std::move(m);
    }
    out["witness"] = std::move(w);
  }
  return out;
}

json to_json(const std::vector<zfc::AxiomReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace relaxed::io
