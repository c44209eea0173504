#include "hsw/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hsw::quad {

namespace {

// Legendre values P_0..P_{n} at x.
Eigen::VectorXd legendre_values(int n, double x) {
  Eigen::VectorXd p(n + 1);
  p(0) = 1.0;
  if (n >= 1) p(1) = x;
  for (int m = 1; m < n; ++m) p(m + 1) = ((2.0 * m + 1.0) * x * p(m) - m * p(m - 1)) / (m + 1.0);
  return p;
}

}  // namespace

GaussRule gauss_legendre(int points) {
  if (points < 2) throw std::invalid_argument("Gauss-Legendre rule needs at least 2 points");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
  for (int i = 1; i < points; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();

  // Interpolate in the Legendre basis: values = V c, and
  // integral_x^1 P_m = (P_{m-1}(x) - P_{m+1}(x)) / (2m+1) for m >= 1, 1 - x for m = 0.
  Eigen::MatrixXd vander(points, points);
  Eigen::MatrixXd integrals(points, points);
  for (int i = 0; i < points; ++i) {
    const double x = rule.nodes(i);
    const Eigen::VectorXd p = legendre_values(points, x);
    vander.row(i) = p.head(points).transpose();
    integrals(i, 0) = 1.0 - x;
    for (int m = 1; m < points; ++m) integrals(i, m) = (p(m - 1) - p(m + 1)) / (2.0 * m + 1.0);
  }
  // tail = integrals * V^{-1}, i.e. V^T tail^T = integrals^T
  rule.tail = vander.transpose().partialPivLu().solve(integrals.transpose()).transpose();
  return rule;
}

std::vector<Panel> graded_panels(int levels, int splits) {
  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(levels * splits));
  for (int j = 0; j < levels; ++j) {
    const double hi = std::ldexp(1.0, -j);
    const double lo = std::ldexp(1.0, -(j + 1));
    const double h = (hi - lo) / splits;
    for (int s = 0; s < splits; ++s) panels.push_back({hi - (s + 1) * h, hi - s * h});
  }
  return panels;
}

Eigen::VectorXd mesh_nodes(const GaussRule& rule, const std::vector<Panel>& panels) {
  const Eigen::Index p = rule.nodes.size();
  Eigen::VectorXd t(static_cast<Eigen::Index>(panels.size()) * p);
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const double mid = 0.5 * (panels[k].lo + panels[k].hi);
    const double half = 0.5 * (panels[k].hi - panels[k].lo);
    t.segment(static_cast<Eigen::Index>(k) * p, p) = (mid + half * rule.nodes.array()).matrix();
  }
  return t;
}

Cumulative integrate_from_top(const GaussRule& rule, const std::vector<Panel>& panels, const Eigen::VectorXd& g) {
  const Eigen::Index p = rule.nodes.size();
  Cumulative out;
  out.at_nodes.resize(g.size());
  double top = 0.0;
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const double half = 0.5 * (panels[k].hi - panels[k].lo);
    const auto gk = g.segment(static_cast<Eigen::Index>(k) * p, p);
    out.at_nodes.segment(static_cast<Eigen::Index>(k) * p, p) =
        (top + half * (rule.tail * gk).array()).matrix();
    top += half * rule.weights.dot(gk);
  }
  out.at_bottom = top;
  return out;
}

}  // namespace hsw::quad
