#pragma once

#include "ghdinc/ghd.hpp"
#include "ghdinc/hypergraph.hpp"

namespace fixtures {

// The running example and its variants.
ghdinc::Hypergraph hp();        // acyclic, 11 vertices
ghdinc::Hypergraph hp_prime();  // six edges, ghw 2
ghdinc::Hypergraph hp2();       // hp_prime plus w7 = {c,i}
ghdinc::Hypergraph triangle();  // {a,b},{b,c},{c,a}
ghdinc::Hypergraph path();      // {a,b},{b,c}

// Width-2 GHD of hp_prime rooted at {c,e,h,i,k}.
ghdinc::Ghd hp_prime_ghd();
// Width-2 GHD of hp2 with nodes u1..u4; u1 = {a,b,c,e,h}.
ghdinc::Ghd hp2_ghd();

// Builds a node from brace-free strings, e.g. node("n1", "a b", "w1").
ghdinc::GhdNode node(std::string id, const std::string& bag, const std::string& cover,
                     std::vector<ghdinc::GhdNode> children = {});
ghdinc::NameSet names(const std::string& spaced);

}  // namespace fixtures
