#include "folia/eigensplit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "folia/error.hpp"

namespace folia {

std::vector<EigenCluster> symmetric_eigensplit(const std::vector<double>& a,
                                               std::size_t n, double tol) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i * n + j];
  double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) throw NonSymmetric("eigensplit: asymmetry " + std::to_string(asym));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw Error("eigensplit: solver failed");
  Eigen::VectorXd ev = es.eigenvalues();  // ascending

  // group by consecutive gaps
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || ev(i) - ev(i - 1) > tol) {
      groups.emplace_back(begin, i);
      begin = i;
    }
  }
  for (std::size_t g = 1; g < groups.size(); ++g) {
    double gap = ev(groups[g].first) - ev(groups[g].first - 1);
    if (gap <= 10 * tol)
      throw ClusterAmbiguity("eigensplit: cluster gap " + std::to_string(gap) +
                             " within 10x tolerance " + std::to_string(tol));
  }

  std::vector<EigenCluster> out;
  for (auto [b, e] : groups) {
    EigenCluster c;
    double sum = 0;
    for (std::size_t i = b; i < e; ++i) sum += ev(i);
    c.value = sum / double(e - b);
    for (std::size_t i = b; i < e; ++i) {
      std::vector<double> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = es.eigenvectors()(r, i);
      c.basis.push_back(std::move(v));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<EigenCluster> symmetric_eigensplit(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw NonSymmetric("eigensplit: not square");
  std::size_t n = a.rows();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = rat_to_double(a.at(i, j));
  return symmetric_eigensplit(d, n, tol);
}

}  // namespace folia
