#include "tamecomb/cayley.hpp"

#include <istream>

namespace tamecomb::cayley {

std::map<std::string, int> load_ball_distances(std::istream& is) {
  std::map<std::string, int> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("ball file: missing tab separator");
    out[line.substr(0, tab)] = std::stoi(line.substr(tab + 1));
  }
  return out;
}

}  // namespace tamecomb::cayley
