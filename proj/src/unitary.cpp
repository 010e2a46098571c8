#include "rootdatum/unitary.hpp"

#include <algorithm>

namespace rootdatum {

std::vector<CUElement<FpElt>> kernel_of_j(int n, long long p) {
  if (n < 2) throw Error("unsupported", "kernel enumeration needs n >= 2");
  FpField field(p);
  long long m = 2 * (n - 1);
  if ((p - 1) % m != 0)
    throw Error("field_too_small",
                "need p = 1 mod " + std::to_string(m) + " for the roots of unity");
  FpElt one = field(1);
  std::vector<CUElement<FpElt>> out;
  for (long long x = 1; x < p; ++x) {
    FpElt zeta = field(x);
    if (!(field_pow(zeta, m) == one)) continue;
    Mat<FpElt> g(n, n);
    FpElt diag = field_pow(zeta, n - 1);
    for (int i = 0; i < n; ++i) g.at(i, i) = diag;
    CUElement<FpElt> e = make_cu(std::move(g), zeta, 0);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  for (const auto& e : out)
    if (!(j_map(e) == gn_identity(n, one)))
      throw Error("construction_failure", "enumerated element is not in the kernel");
  if ((long long)out.size() != n - 1)
    throw Error("construction_failure", "kernel order is not n - 1");
  return out;
}

}  // namespace rootdatum
