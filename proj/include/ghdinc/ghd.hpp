#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ghdinc/hypergraph.hpp"

namespace ghdinc {

// A decomposition node. Bags and covers are kept by name so that a GHD of H
// can be read against a modified hypergraph.
struct GhdNode {
  std::string id;
  NameSet bag;    // B_u
  NameSet cover;  // λ_u
  std::vector<GhdNode> children;
};

class Ghd {
 public:
  Ghd() = default;
  explicit Ghd(GhdNode root) : root_(std::move(root)) {}

  const GhdNode& root() const { return root_; }
  GhdNode& root() { return root_; }

  // max |λ_u|
  std::size_t width() const;
  std::size_t size() const;

 private:
  GhdNode root_;
};

// Preorder view of a GHD with parent/child links by index. The referenced
// Ghd must outlive the view.
class FlatGhd {
 public:
  explicit FlatGhd(const Ghd& g);

  std::size_t size() const { return nodes_.size(); }
  const GhdNode& node(std::size_t i) const { return *nodes_[i]; }
  // -1 for the root
  int parent(std::size_t i) const { return parent_[i]; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  // Tree neighbours (parent and children).
  std::vector<std::size_t> neighbours(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& id) const;
  // Indices of the subtree rooted at i, in preorder.
  std::vector<std::size_t> subtree(std::size_t i) const;
  // Postorder of all nodes.
  std::vector<std::size_t> postorder() const;

 private:
  std::vector<const GhdNode*> nodes_;
  std::vector<int> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Rewrites node ids as n1, n2, ... in preorder.
void renumber(Ghd& g);

std::string ghd_to_json(const Ghd& g, int indent = 2);
// Throws ParseError on malformed JSON or a declared width that disagrees
// with the covers.
Ghd ghd_from_json(std::string_view text);
Ghd read_ghd_file(const std::string& path);

// ---- validation -----------------------------------------------------------

enum class ViolationKind {
  Structural,      // dangling names, duplicate ids, empty cover
  EdgeCoverage,    // condition (1)
  Connectedness,   // condition (2)
  BagInCover,      // condition (3)
  Width,
};

struct Violation {
  ViolationKind kind;
  std::string witness;  // edge, vertex or node id
  std::string message;
};

const char* to_string(ViolationKind kind);

// Empty result means valid: conditions (1)-(3) hold and width <= k.
std::vector<Violation> validate(const Hypergraph& h, const Ghd& g, std::size_t k);

// Every node's [B_u]-components of the edges it is responsible for are in
// one-to-one correspondence with its children, each covered in its own
// subtree. Precondition: g validates for h.
bool is_normal_form(const Hypergraph& h, const Ghd& g);

}  // namespace ghdinc
