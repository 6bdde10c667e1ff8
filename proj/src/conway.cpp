#include "qalpha/conway.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace qalpha {

const std::map<unsigned, Bits>& bundled_conway_table() {
  static const std::map<unsigned, Bits> table = {
      {1, 0x3},      {2, 0x7},      {3, 0xb},      {4, 0x13},
      {5, 0x25},     {6, 0x5b},     {7, 0x83},     {8, 0x11d},
      {9, 0x211},    {10, 0x46f},   {11, 0x805},   {12, 0x10eb},
      {13, 0x201b},  {14, 0x40a9},  {15, 0x8035},  {16, 0x1002d},
  };
  return table;
}

std::map<unsigned, Bits> read_conway_table(std::istream& in) {
  std::map<unsigned, Bits> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::Parse,
                  "conway table line " + std::to_string(line_no) + ": expected s:hexmodulus");
    }
    try {
      unsigned long s = std::stoul(line.substr(0, colon));
      std::size_t used = 0;
      std::string hex = line.substr(colon + 1);
      Bits modulus = std::stoull(hex, &used, 16);
      if (hex.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(hex);
      table[static_cast<unsigned>(s)] = modulus;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "conway table line " + std::to_string(line_no) + ": bad number");
    }
  }
  return table;
}

const std::map<unsigned, Bits>& active_conway_table() {
  static const std::map<unsigned, Bits> table = [] {
    auto merged = bundled_conway_table();
    if (const char* path = std::getenv("QALPHA_CONWAY_TABLE"); path && *path) {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::InvalidInput, std::string("cannot open conway table ") + path);
      for (auto [s, m] : read_conway_table(in)) merged[s] = m;
    }
    return merged;
  }();
  return table;
}

std::optional<Bits> conway_modulus(unsigned s) {
  const auto& table = active_conway_table();
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace qalpha
