#ifndef SEGREKIT_NUMERIC_ROOTS_HPP
#define SEGREKIT_NUMERIC_ROOTS_HPP

#include <Eigen/Eigenvalues>
#include <complex>
#include <stdexcept>
#include <vector>

namespace segrekit {

// All complex roots of sum_k coeffs[k] x^k via companion-matrix eigenvalues.
// Trailing zero coefficients are stripped; a constant has no roots.
inline std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> coeffs) {
  while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};
  const int n = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / coeffs[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("poly_roots: eigensolver failed");
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

}  // namespace segrekit

#endif
