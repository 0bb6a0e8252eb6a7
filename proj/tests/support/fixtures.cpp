#include "support/fixtures.hpp"

#include <sstream>

namespace fixtures {

using namespace ghdinc;

NameSet names(const std::string& spaced) {
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return make_name_set(std::move(out));
}

GhdNode node(std::string id, const std::string& bag, const std::string& cover,
             std::vector<GhdNode> children) {
  return {std::move(id), names(bag), names(cover), std::move(children)};
}

Hypergraph hp() {
  return parse_hypergraph(
      "w1(a,b,c),\nw2(f,g),\nw3(e,i,k),\nw4(a,d,f),\nw5(c,e),\nw6(j,k,l).");
}

Hypergraph hp_prime() {
  return parse_hypergraph(
      "w1(a,b,c),\nw2(f,g,h),\nw3(e,i,k),\nw4(a,d,f),\nw5(c,e,h),\nw6(j,k,l).");
}

Hypergraph hp2() {
  return parse_hypergraph(
      "w1(a,b,c),\nw2(f,g,h),\nw3(e,i,k),\nw4(a,d,f),\nw5(c,e,h),\nw6(j,k,l),\nw7(c,i).");
}

Hypergraph triangle() { return parse_hypergraph("e1(a,b),\ne2(b,c),\ne3(c,a)."); }
Hypergraph path() { return parse_hypergraph("e1(a,b),\ne2(b,c)."); }

Ghd hp_prime_ghd() {
  return Ghd(node("n1", "c e h i k", "w3 w5",
                  {node("n2", "a b c f g h", "w1 w2", {node("n3", "a d f", "w4")}),
                   node("n4", "j k l", "w6")}));
}

Ghd hp2_ghd() {
  return Ghd(node("u1", "a b c e h", "w1 w5",
                  {node("u2", "c e i k", "w3 w7", {node("u4", "j k l", "w6")}),
                   node("u3", "a d f g h", "w2 w4")}));
}

}  // namespace fixtures
