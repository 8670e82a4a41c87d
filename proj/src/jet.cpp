#include "ramq/jet.hpp"

namespace ramq {

Jet jet_from_poly(const Polynomial& p, Complex z0, int order) {
  // Repeated synthetic division by (z - z0); remainder j is p^(j)(z0)/j!.
  std::vector<Complex> work(p.coeffs().begin(), p.coeffs().end());
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(0.0));
  const int n = static_cast<int>(work.size());
  for (int j = 0; j < n && j <= order; ++j) {
    for (int k = n - 2; k >= j; --k) work[static_cast<std::size_t>(k)] += z0 * work[static_cast<std::size_t>(k + 1)];
    out[static_cast<std::size_t>(j)] = work[static_cast<std::size_t>(j)];
  }
  return Jet(z0, std::move(out));
}

}  // namespace ramq
