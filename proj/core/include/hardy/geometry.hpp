#pragma once
// Catalog of degenerate vector-field families, described by the coefficient
// matrix mu(xi) of the horizontal gradient, anisotropic dilations and the
// homogeneous dimension Q.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardy {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GeomKind {
  EuclideanPartial,  // grad acts on the first m of N coordinates
  Grushin,           // (x,y) in R^n x R^k, second block weighted by |x|^gamma
  Greiner,           // (x,y,t) in R^n x R^n x R, gamma >= 1
  Heisenberg,        // Greiner structure with gamma = 1, polynomial rows
  Step2,             // first layer R^l, second layer R^k via skew matrices
  HType              // Step2 with orthogonal skew matrices (Kaplan condition)
};

struct GeometrySpec {
  GeomKind kind;
  int ambient_dim = 0;    // N
  int horizontal_dim = 0; // l, rows of mu
  int first_layer = 0;    // m, size of the identity block
  double Q = 0;           // homogeneous dimension (m for EuclideanPartial)
  Eigen::VectorXd dilation_exponents; // per coordinate, size N
  int n = 0, k = 0;
  double gamma = 0;
  std::vector<Matrix> layer2;       // one skew l x l matrix per second-layer coordinate
  double layer2_coeff = 1.0;        // 1 for Step2/Heisenberg, 1/2 for HType

  static GeometrySpec euclidean_partial(int m, int N);
  static GeometrySpec grushin(int n, int k, double gamma);
  static GeometrySpec greiner(int n, double gamma);
  static GeometrySpec heisenberg(int n);
  static GeometrySpec step2(std::vector<Matrix> U);
  static GeometrySpec htype(std::vector<Matrix> U);

  Matrix mu(const Point& xi) const;
  Point dilate(double lambda, const Point& xi) const;
  std::pair<Point, Point> first_layer_split(const Point& xi) const;
  std::string name() const;

private:
  void check_point(const Point& xi) const;
};

// mu_matrix / dilate / homogeneous_dimension / first_layer_split as free
// functions mirroring the member forms.
inline Matrix mu_matrix(const GeometrySpec& g, const Point& xi) { return g.mu(xi); }
inline Point dilate(const GeometrySpec& g, double lambda, const Point& xi) {
  return g.dilate(lambda, xi);
}
inline double homogeneous_dimension(const GeometrySpec& g) { return g.Q; }
inline std::pair<Point, Point> first_layer_split(const GeometrySpec& g, const Point& xi) {
  return g.first_layer_split(xi);
}

} // namespace hardy
