#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ghdinc/ghd.hpp"
#include "ghdinc/hypergraph.hpp"

namespace ghdinc {

// Elementary modifications. Edge and vertex sets are given by name.
struct AddVar {
  std::string new_vertex;
  NameSet edges;  // E', non-empty
};
struct DelVar {
  std::string vertex;
};
struct AddConstr {
  std::string name;
  NameSet vertices;
};
struct DelConstr {
  std::string name;
};
struct AddEq {
  NameSet merged;    // U, at least two vertices
  std::string into;  // w: a member of U (survivor) or a fresh vertex
};
struct DelEq {
  struct Part {
    std::string new_vertex;
    NameSet edges;
  };
  std::string vertex;
  std::vector<Part> parts;  // edge sets partition the edges incident on `vertex`
};

using Modification = std::variant<AddVar, DelVar, AddConstr, DelConstr, AddEq, DelEq>;

enum class ModClass { AddVar, DelVar, AddConstr, DelConstr, AddEq, DelEq };

inline constexpr ModClass kAllModClasses[] = {ModClass::AddVar,    ModClass::DelVar,
                                              ModClass::AddConstr, ModClass::DelConstr,
                                              ModClass::AddEq,     ModClass::DelEq};

ModClass class_of(const Modification& m);
const char* to_string(ModClass c);
std::optional<ModClass> mod_class_from_string(std::string_view s);

// s_δ: old edge name -> successor name, or nullopt when the edge vanished.
using EdgeCorrespondence = std::map<std::string, std::optional<std::string>>;

struct Applied {
  Hypergraph hypergraph;
  EdgeCorrespondence correspondence;
};

// δ(H) together with s_δ. Throws PreconditionError naming the violated
// precondition, or when the result would have no edges.
Applied apply(const Modification& m, const Hypergraph& h);

// Identity δ: δ(H) = H and s_δ maps every edge to itself.
EdgeCorrespondence identity_correspondence(const Hypergraph& h);

// Seeded generator following the experimental protocol: AddVar puts a fresh
// vertex into ⌈avg degree⌉ random edges, DelVar and DelConstr pick a uniform
// vertex/edge, AddConstr draws ⌈avg rank⌉ existing vertices, AddEq merges two
// random vertices and DelEq splits a vertex of degree >= 2 half and half.
// Fresh names are `_v<seed>` / `_e<seed>`. Throws PreconditionError when h
// does not admit the class.
Modification generate(ModClass c, const Hypergraph& h, std::uint64_t seed);

// GHD of δ(H) for δ = DelVar{v}: v leaves every bag and each cover edge is
// replaced by its successor. Nodes left without cover are spliced out.
Ghd invert_trivial_delvar(const DelVar& d, const Ghd& g, const EdgeCorrespondence& s);

std::string modification_to_json(const Modification& m, int indent = -1);
// Throws ParseError on malformed input.
Modification modification_from_json(std::string_view text);
Modification read_modification_file(const std::string& path);

}  // namespace ghdinc
