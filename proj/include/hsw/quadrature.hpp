#pragma once

// Composite Gauss-Legendre machinery for iterated integrals on (0, 1].

#include <Eigen/Dense>

#include <vector>

namespace hsw::quad {

/// p-point Gauss-Legendre rule on [-1, 1] with its cumulative integration matrix
/// tail(i, j) = integral from nodes(i) to 1 of the j-th Lagrange basis polynomial.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  Eigen::MatrixXd tail;
};

/// Golub-Welsch: eigen-decomposition of the Jacobi matrix.
GaussRule gauss_legendre(int points);

/// Panels graded geometrically toward 0: [2^-(j+1), 2^-j] for j < levels,
/// each split into `splits` equal pieces, listed from s = 1 downward.
struct Panel {
  double lo;
  double hi;
};
std::vector<Panel> graded_panels(int levels, int splits);

/// Values of G(s) = integral_s^1 g(t) dt at every node of the graded mesh, given g at the
/// same nodes (panel-major, nodes in rule order). Also returns G at the lowest panel edge.
struct Cumulative {
  Eigen::VectorXd at_nodes;
  double at_bottom = 0.0;
};
Cumulative integrate_from_top(const GaussRule& rule, const std::vector<Panel>& panels, const Eigen::VectorXd& g);

/// Node coordinates of the graded mesh in panel-major order.
Eigen::VectorXd mesh_nodes(const GaussRule& rule, const std::vector<Panel>& panels);

}  // namespace hsw::quad
