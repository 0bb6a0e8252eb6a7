#include "ghdinc/modification.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ghdinc/error.hpp"

namespace ghdinc {

using nlohmann::json;

ModClass class_of(const Modification& m) { return static_cast<ModClass>(m.index()); }

const char* to_string(ModClass c) {
  switch (c) {
    case ModClass::AddVar: return "AddVar";
    case ModClass::DelVar: return "DelVar";
    case ModClass::AddConstr: return "AddConstr";
    case ModClass::DelConstr: return "DelConstr";
    case ModClass::AddEq: return "AddEq";
    case ModClass::DelEq: return "DelEq";
  }
  return "unknown";
}

std::optional<ModClass> mod_class_from_string(std::string_view s) {
  for (ModClass c : kAllModClasses)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

EdgeCorrespondence identity_correspondence(const Hypergraph& h) {
  EdgeCorrespondence s;
  for (const auto& e : h.edge_names()) s.emplace(e, e);
  return s;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

Applied finish(std::vector<EdgeSpec> specs, EdgeCorrespondence s) {
  require(!specs.empty(), "modification leaves an empty hypergraph");
  return {Hypergraph::from_edges(specs), std::move(s)};
}

std::vector<std::string> rewrite(const std::vector<std::string>& vertices,
                                 const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> out;
  for (const auto& v : vertices) {
    std::string w = f(v);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

Applied apply_one(const AddVar& m, const Hypergraph& h) {
  require(is_valid_identifier(m.new_vertex), "AddVar: invalid vertex name '" + m.new_vertex + "'");
  require(!h.find_vertex(m.new_vertex), "AddVar: vertex '" + m.new_vertex + "' already exists");
  require(!m.edges.empty(), "AddVar: target edge set E' must be non-empty");
  EdgeSet target = h.edge_set(m.edges);
  auto specs = h.to_specs();
  for (EdgeId e = 0; e < specs.size(); ++e)
    if (target.test(e)) specs[e].vertices.push_back(m.new_vertex);
  return finish(std::move(specs), identity_correspondence(h));
}

Applied apply_one(const DelVar& m, const Hypergraph& h) {
  require(h.find_vertex(m.vertex).has_value(), "DelVar: unknown vertex '" + m.vertex + "'");
  std::vector<EdgeSpec> specs;
  EdgeCorrespondence s;
  for (auto& spec : h.to_specs()) {
    std::erase(spec.vertices, m.vertex);
    if (spec.vertices.empty()) {
      s.emplace(spec.name, std::nullopt);
    } else {
      s.emplace(spec.name, spec.name);
      specs.push_back(std::move(spec));
    }
  }
  return finish(std::move(specs), std::move(s));
}

Applied apply_one(const AddConstr& m, const Hypergraph& h) {
  require(is_valid_identifier(m.name), "AddConstr: invalid edge name '" + m.name + "'");
  require(!h.find_edge(m.name), "AddConstr: edge '" + m.name + "' already exists");
  require(!m.vertices.empty(), "AddConstr: the new edge must be non-empty");
  const NameSet wanted = make_name_set(m.vertices);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    require(h.names_of(h.edge(e)) != wanted,
            "AddConstr: edge '" + h.edge_name(e) + "' already has these vertices");
  auto specs = h.to_specs();
  specs.push_back({m.name, wanted});
  return finish(std::move(specs), identity_correspondence(h));
}

Applied apply_one(const DelConstr& m, const Hypergraph& h) {
  require(h.find_edge(m.name).has_value(), "DelConstr: unknown edge '" + m.name + "'");
  std::vector<EdgeSpec> specs;
  EdgeCorrespondence s = identity_correspondence(h);
  s[m.name] = std::nullopt;
  for (auto& spec : h.to_specs())
    if (spec.name != m.name) specs.push_back(std::move(spec));
  return finish(std::move(specs), std::move(s));
}

Applied apply_one(const AddEq& m, const Hypergraph& h) {
  const NameSet merged = make_name_set(m.merged);
  require(merged.size() >= 2, "AddEq: at least two vertices must be merged");
  h.vertex_set(merged);  // throws on unknown vertices
  require(is_valid_identifier(m.into), "AddEq: invalid vertex name '" + m.into + "'");
  const bool survivor = std::binary_search(merged.begin(), merged.end(), m.into);
  require(survivor || !h.find_vertex(m.into),
          "AddEq: target '" + m.into + "' must be one of the merged vertices or fresh");
  auto specs = h.to_specs();
  for (auto& spec : specs)
    spec.vertices = rewrite(spec.vertices, [&](const std::string& v) {
      return std::binary_search(merged.begin(), merged.end(), v) ? m.into : v;
    });
  return finish(std::move(specs), identity_correspondence(h));
}

Applied apply_one(const DelEq& m, const Hypergraph& h) {
  auto w = h.find_vertex(m.vertex);
  require(w.has_value(), "DelEq: unknown vertex '" + m.vertex + "'");
  require(m.parts.size() >= 2, "DelEq: a split needs at least two parts");
  std::map<std::string, std::string> replacement;  // edge name -> new vertex
  std::set<std::string> names;
  for (const auto& part : m.parts) {
    require(is_valid_identifier(part.new_vertex), "DelEq: invalid vertex name '" + part.new_vertex + "'");
    require(part.new_vertex == m.vertex || !h.find_vertex(part.new_vertex),
            "DelEq: part vertex '" + part.new_vertex + "' is not fresh");
    require(names.insert(part.new_vertex).second,
            "DelEq: part vertex '" + part.new_vertex + "' used twice");
    require(!part.edges.empty(), "DelEq: part '" + part.new_vertex + "' has no edges");
    for (const auto& e : part.edges) {
      auto id = h.find_edge(e);
      require(id.has_value(), "DelEq: unknown edge '" + e + "'");
      require(h.edge(*id).test(*w), "DelEq: edge '" + e + "' is not incident on '" + m.vertex + "'");
      require(replacement.emplace(e, part.new_vertex).second,
              "DelEq: edge '" + e + "' assigned to two parts");
    }
  }
  require(replacement.size() == h.degree(*w),
          "DelEq: parts must cover every edge incident on '" + m.vertex + "'");
  auto specs = h.to_specs();
  for (auto& spec : specs) {
    auto it = replacement.find(spec.name);
    if (it == replacement.end()) continue;
    for (auto& v : spec.vertices)
      if (v == m.vertex) v = it->second;
  }
  return finish(std::move(specs), identity_correspondence(h));
}

}  // namespace

Applied apply(const Modification& m, const Hypergraph& h) {
  return std::visit([&](const auto& x) { return apply_one(x, h); }, m);
}

Ghd invert_trivial_delvar(const DelVar& d, const Ghd& g, const EdgeCorrespondence& s) {
  std::function<std::vector<GhdNode>(const GhdNode&)> rebuild = [&](const GhdNode& n) {
    GhdNode out{n.id, {}, {}, {}};
    for (const auto& v : n.bag)
      if (v != d.vertex) out.bag.push_back(v);
    std::vector<std::string> cover;
    for (const auto& e : n.cover) {
      auto it = s.find(e);
      if (it == s.end()) {
        cover.push_back(e);
      } else if (it->second) {
        cover.push_back(*it->second);
      }
    }
    out.cover = make_name_set(std::move(cover));
    for (const auto& c : n.children)
      for (auto& x : rebuild(c)) out.children.push_back(std::move(x));
    // A node whose cover vanished has an empty bag; its children can hang
    // off its parent without breaking connectedness.
    if (out.cover.empty()) return std::move(out.children);
    return std::vector<GhdNode>{std::move(out)};
  };

  auto forest = rebuild(g.root());
  if (forest.empty()) throw PreconditionError("DelVar leaves no decomposition nodes");
  GhdNode root = std::move(forest.front());
  for (std::size_t i = 1; i < forest.size(); ++i) root.children.push_back(std::move(forest[i]));
  return Ghd(std::move(root));
}

// ---- JSON -----------------------------------------------------------------

namespace {

json names_json(const NameSet& names) { return json(names); }

struct ToJson {
  json operator()(const AddVar& m) const {
    return {{"class", "AddVar"}, {"new_vertex", m.new_vertex}, {"edges", names_json(m.edges)}};
  }
  json operator()(const DelVar& m) const { return {{"class", "DelVar"}, {"vertex", m.vertex}}; }
  json operator()(const AddConstr& m) const {
    return {{"class", "AddConstr"}, {"name", m.name}, {"vertices", names_json(m.vertices)}};
  }
  json operator()(const DelConstr& m) const { return {{"class", "DelConstr"}, {"name", m.name}}; }
  json operator()(const AddEq& m) const {
    return {{"class", "AddEq"}, {"merged", names_json(m.merged)}, {"into", m.into}};
  }
  json operator()(const DelEq& m) const {
    json parts = json::array();
    for (const auto& p : m.parts) parts.push_back({{"new_vertex", p.new_vertex}, {"edges", names_json(p.edges)}});
    return {{"class", "DelEq"}, {"vertex", m.vertex}, {"parts", std::move(parts)}};
  }
};

std::string get_string(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_string())
    throw ParseError(std::string("modification needs a string field '") + field + "'");
  return j.at(field).get<std::string>();
}

NameSet get_names(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array())
    throw ParseError(std::string("modification needs an array field '") + field + "'");
  std::vector<std::string> out;
  for (const auto& x : j.at(field)) {
    if (!x.is_string()) throw ParseError(std::string("field '") + field + "' must hold strings");
    out.push_back(x.get<std::string>());
  }
  return make_name_set(std::move(out));
}

}  // namespace

std::string modification_to_json(const Modification& m, int indent) {
  return std::visit(ToJson{}, m).dump(indent);
}

Modification modification_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed modification JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("modification JSON must be an object");
  auto cls = mod_class_from_string(get_string(j, "class"));
  if (!cls) throw ParseError("unknown modification class '" + get_string(j, "class") + "'");
  switch (*cls) {
    case ModClass::AddVar: return AddVar{get_string(j, "new_vertex"), get_names(j, "edges")};
    case ModClass::DelVar: return DelVar{get_string(j, "vertex")};
    case ModClass::AddConstr: return AddConstr{get_string(j, "name"), get_names(j, "vertices")};
    case ModClass::DelConstr: return DelConstr{get_string(j, "name")};
    case ModClass::AddEq: return AddEq{get_names(j, "merged"), get_string(j, "into")};
    case ModClass::DelEq: {
      DelEq d{get_string(j, "vertex"), {}};
      if (!j.contains("parts") || !j.at("parts").is_array())
        throw ParseError("DelEq needs a 'parts' array");
      for (const auto& p : j.at("parts")) {
        if (!p.is_object()) throw ParseError("DelEq part must be an object");
        d.parts.push_back({get_string(p, "new_vertex"), get_names(p, "edges")});
      }
      return d;
    }
  }
  throw ParseError("unknown modification class");
}

Modification read_modification_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open modification file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return modification_from_json(buffer.str());
}

}  // namespace ghdinc
