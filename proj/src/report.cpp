#include "mvopq/report.hpp"

#include <sstream>

namespace mvopq {

std::string VerifyReport::to_plain() const {
  std::ostringstream os;
  os << "case " << case_id;
  if (n_max >= 0) os << "  n_max=" << n_max;
  if (deg_max >= 0) os << "  deg_max=" << deg_max;
  os << "\n";
  for (const auto& r : records) {
    os << (r.pass ? "  ok   " : "  FAIL ");
    if (r.advisory) os << "(advisory) ";
    os << r.name;
    if (r.n >= 0) os << " n=" << r.n;
    if (!r.witness.empty()) os << "  " << r.witness;
    os << "\n";
  }
  os << (overall() ? "overall: pass" : "overall: fail") << "\n";
  return os.str();
}

}  // namespace mvopq
