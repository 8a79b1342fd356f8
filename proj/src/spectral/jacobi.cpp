#include "spectral/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace hca {

namespace {

double off_diagonal_norm(const std::vector<double>& m, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) acc += m[static_cast<std::size_t>(i) * n + j] *
                         m[static_cast<std::size_t>(i) * n + j];
  return std::sqrt(acc);
}

}  // namespace

EigenSystem eigensolve_hermitian(const ComplexMatrix& h) {
  const int n = h.dim();
  const double scale = frobenius_norm(h);
  if (hermiticity_defect(h) > 1e-12 * std::max(1.0, scale))
    fail(ErrorCode::NotHermitian, "matrix is not Hermitian to 1e-12");

  // Real-symmetric embedding M = [[S, -A], [A, S]].
  const int m = 2 * n;
  std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * m + j];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.5 * (h.at(i, j).real() + h.at(j, i).real());
      double t = 0.5 * (h.at(i, j).imag() - h.at(j, i).imag());
      at(i, j) = s;
      at(n + i, n + j) = s;
      at(i, n + j) = -t;
      at(n + i, j) = t;
    }

  std::vector<double> v(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i) * m + i] = 1.0;
  auto vat = [&](int i, int j) -> double& {
    return v[static_cast<std::size_t>(i) * m + j];
  };

  const double threshold = 1e-14 * scale;
  const int max_sweeps = 100;
  bool converged = off_diagonal_norm(a, m) <= threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < m - 1; ++p)
      for (int q = p + 1; q < m; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < m; ++k) {
          if (k != p && k != q) {
            double akp = at(k, p), akq = at(k, q);
            at(k, p) = c * akp - s * akq;
            at(p, k) = at(k, p);
            at(k, q) = s * akp + c * akq;
            at(q, k) = at(k, q);
          }
          double vkp = vat(k, p), vkq = vat(k, q);
          vat(k, p) = c * vkp - s * vkq;
          vat(k, q) = s * vkp + c * vkq;
        }
      }
    converged = off_diagonal_norm(a, m) <= threshold;
  }
  if (!converged)
    fail(ErrorCode::NoConvergence, "Jacobi sweep cap exceeded");

  // Sort the 2N real eigenpairs ascending.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return at(i, i) < at(j, j); });

  // Reduce doubled real pairs to complex eigenvectors. A real eigenvector
  // (re; im) and its J-partner (-im; re) map to the same complex line, so a
  // degeneracy cluster of 2k real vectors spans exactly k complex
  // directions. Pivoted Gram-Schmidt inside each cluster extracts them.
  const double cluster_gap = 1e-10 * std::max(1.0, scale);
  EigenSystem result;
  int idx = 0;
  while (idx < m) {
    int end = idx + 1;
    while (end < m && at(order[end], order[end]) -
                              at(order[end - 1], order[end - 1]) <=
                          cluster_gap)
      ++end;
    int cluster_size = end - idx;
    if (cluster_size % 2 != 0)
      fail(ErrorCode::Internal, "embedding eigenvalues did not pair up");

    std::vector<ComplexVector> candidates;
    std::vector<double> cand_eps;
    for (int k = idx; k < end; ++k) {
      int col = order[k];
      ComplexVector w(n);
      for (int i = 0; i < n; ++i) w[i] = Complex(vat(i, col), vat(n + i, col));
      candidates.push_back(std::move(w));
      cand_eps.push_back(at(col, col));
    }
    std::vector<ComplexVector> kept;
    while (static_cast<int>(kept.size()) < cluster_size / 2) {
      // Pick the candidate with the largest residual against the kept set.
      double best = -1.0;
      std::size_t best_k = 0;
      ComplexVector best_w;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        ComplexVector w = candidates[k];
        for (const ComplexVector& u : kept) {
          Complex proj = inner(u, w);
          for (int i = 0; i < n; ++i) w[i] -= proj * u[i];
        }
        double nrm = norm2(w);
        if (nrm > best) {
          best = nrm;
          best_k = k;
          best_w = std::move(w);
        }
      }
      if (best < 1e-6)
        fail(ErrorCode::Internal, "eigenvector pairing lost rank");
      for (int i = 0; i < n; ++i) best_w[i] /= best;
      kept.push_back(std::move(best_w));
      result.eps.push_back(cand_eps[best_k]);
    }
    for (auto& w : kept) result.vectors.push_back(std::move(w));
    idx = end;
  }
  if (static_cast<int>(result.eps.size()) != n)
    fail(ErrorCode::Internal, "eigenvector pairing produced wrong count");
  return result;
}

}  // namespace hca
