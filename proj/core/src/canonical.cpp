#include "cubmon/canonical.hpp"

#include "cubmon/errors.hpp"

namespace cubmon::canonical {

std::vector<BitVertex> braid_chain() {
  std::vector<BitVertex> out;
  for (const char* s : {"0001", "0101", "0100", "0110", "0010", "1010", "1000"}) out.push_back(BitVertex::parse(s));
  return out;
}

BitVertex cycle_closer() { return BitVertex::parse("1001"); }

std::vector<BitVertex> affine_cycle() {
  auto c = braid_chain();
  c.push_back(cycle_closer());
  return c;
}

std::vector<std::pair<std::string, BitVertex>> curve_labels() {
  std::vector<std::pair<std::string, BitVertex>> out;
  const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  const auto cycle = affine_cycle();
  for (std::size_t i = 0; i < cycle.size(); ++i) out.emplace_back(names[i], cycle[i]);
  out.emplace_back("u", BitVertex::parse("0011"));
  out.emplace_back("v", BitVertex::parse("1100"));
  out.emplace_back("w+", BitVertex::parse("0111"));
  out.emplace_back("w-", BitVertex::parse("1110"));
  return out;
}

std::vector<std::string> bundled_pattern_names() { return {"pair", "chain7", "cycle8", "ten", "eleven", "twelve"}; }

std::vector<std::pair<std::string, BitVertex>> labelled_vertices(const std::string& name) {
  const auto all = curve_labels();
  std::size_t count = 0;
  if (name == "pair") count = 2;
  else if (name == "chain7") count = 7;
  else if (name == "cycle8") count = 8;
  else if (name == "ten") count = 10;
  else if (name == "eleven") count = 11;
  else if (name == "twelve") count = 12;
  else throw InvalidInput("unknown bundled pattern: " + name);
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count)};
}

CurvePattern bundled_pattern(const std::string& name) {
  static const ArtinGraph gamma(4);
  return pattern_from_vertices(gamma, labelled_vertices(name));
}

}  // namespace cubmon::canonical
