#include "ghdinc/ghd.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "ghdinc/error.hpp"

namespace ghdinc {

using nlohmann::json;

namespace {

void visit(const GhdNode& n, const std::function<void(const GhdNode&)>& f) {
  f(n);
  for (const auto& c : n.children) visit(c, f);
}

}  // namespace

std::size_t Ghd::width() const {
  std::size_t w = 0;
  visit(root_, [&](const GhdNode& n) { w = std::max(w, n.cover.size()); });
  return w;
}

std::size_t Ghd::size() const {
  std::size_t count = 0;
  visit(root_, [&](const GhdNode&) { ++count; });
  return count;
}

FlatGhd::FlatGhd(const Ghd& g) {
  struct Frame {
    const GhdNode* node;
    int parent;
  };
  std::vector<Frame> stack{{&g.root(), -1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const std::size_t idx = nodes_.size();
    nodes_.push_back(f.node);
    parent_.push_back(f.parent);
    children_.emplace_back();
    if (f.parent >= 0) children_[static_cast<std::size_t>(f.parent)].push_back(idx);
    index_.emplace(f.node->id, idx);
    for (auto it = f.node->children.rbegin(); it != f.node->children.rend(); ++it)
      stack.push_back({&*it, static_cast<int>(idx)});
  }
}

std::vector<std::size_t> FlatGhd::neighbours(std::size_t i) const {
  std::vector<std::size_t> out = children_[i];
  if (parent_[i] >= 0) out.push_back(static_cast<std::size_t>(parent_[i]));
  return out;
}

std::optional<std::size_t> FlatGhd::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FlatGhd::subtree(std::size_t i) const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{i};
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (auto it = children_[x].rbegin(); it != children_[x].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<std::size_t> FlatGhd::postorder() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    for (std::size_t c : children_[x]) rec(c);
    out.push_back(x);
  };
  if (!nodes_.empty()) rec(0);
  return out;
}

void renumber(Ghd& g) {
  std::size_t next = 1;
  std::function<void(GhdNode&)> rec = [&](GhdNode& n) {
    n.id = "n" + std::to_string(next++);
    for (auto& c : n.children) rec(c);
  };
  rec(g.root());
}

namespace {

json node_to_json(const GhdNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(node_to_json(c));
  return json{{"id", n.id}, {"bag", n.bag}, {"cover", n.cover}, {"children", std::move(children)}};
}

NameSet read_names(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array())
    throw ParseError(std::string("node field '") + field + "' must be an array");
  std::vector<std::string> names;
  for (const auto& x : j.at(field)) {
    if (!x.is_string()) throw ParseError(std::string("node field '") + field + "' must hold strings");
    names.push_back(x.get<std::string>());
  }
  return make_name_set(std::move(names));
}

GhdNode node_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("GHD node must be an object");
  GhdNode n;
  if (!j.contains("id") || !j.at("id").is_string()) throw ParseError("GHD node needs a string 'id'");
  n.id = j.at("id").get<std::string>();
  n.bag = read_names(j, "bag");
  n.cover = read_names(j, "cover");
  if (j.contains("children")) {
    if (!j.at("children").is_array()) throw ParseError("node field 'children' must be an array");
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
  }
  return n;
}

}  // namespace

std::string ghd_to_json(const Ghd& g, int indent) {
  json j{{"width", g.width()}, {"root", node_to_json(g.root())}};
  return j.dump(indent) + "\n";
}

Ghd ghd_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed GHD JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("root")) throw ParseError("GHD JSON needs a 'root' node");
  Ghd g(node_from_json(j.at("root")));
  if (j.contains("width")) {
    if (!j.at("width").is_number_integer()) throw ParseError("GHD 'width' must be an integer");
    if (j.at("width").get<long long>() != static_cast<long long>(g.width()))
      throw ParseError("declared width " + j.at("width").dump() + " differs from cover sizes (" +
                       std::to_string(g.width()) + ")");
  }
  return g;
}

Ghd read_ghd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open GHD file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ghd_from_json(buffer.str());
}

}  // namespace ghdinc
