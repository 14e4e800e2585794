#include "gridhom/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gridhom {

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

bool leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partition comparison: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partition meet: length mismatch");
  Partition r;
  r.v.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.v[i] = std::min(a[i], b[i]);
  return r;
}

Partition join(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partition join: length mismatch");
  Partition r;
  r.v.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.v[i] = std::max(a[i], b[i]);
  return r;
}

bool is_valid_partition(const Partition& p, int m, int n) {
  if (static_cast<int>(p.size()) != m) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] > n) return false;
    if (i > 0 && p[i] < p[i - 1]) return false;
  }
  return true;
}

Partition parse_partition(const std::string& csv) {
  Partition p;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty component in partition string");
    p.v.push_back(std::stoi(tok));
  }
  return p;
}

}  // namespace gridhom
