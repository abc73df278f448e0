#include "divlie/lattice.hpp"

namespace divlie {

std::string to_string(const LatticeVector& m) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m(i));
  }
  return out + ")";
}

std::string to_string(const CoefficientVector& u) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (i) out += ",";
    out += u(i).str();
  }
  return out + ")";
}

std::vector<LatticeVector> box(int n, std::int64_t radius) { return box(n, -radius, radius); }

std::vector<LatticeVector> box(int n, std::int64_t lo, std::int64_t hi) {
  std::vector<LatticeVector> out;
  if (hi < lo) return out;
  LatticeVector cur = LatticeVector::Constant(n, lo);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur(i) == hi) {
      cur(i) = lo;
      --i;
    }
    if (i < 0) break;
    ++cur(i);
  }
  return out;
}

}  // namespace divlie
