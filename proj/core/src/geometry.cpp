#include "hardy/geometry.hpp"

#include <cmath>

namespace hardy {

void GeometrySpec::check_point(const Point& xi) const {
  if (xi.size() != ambient_dim)
    throw input_error("point has length " + std::to_string(xi.size()) +
                      ", geometry is " + std::to_string(ambient_dim) + "-dimensional");
}

GeometrySpec GeometrySpec::euclidean_partial(int m, int N) {
  if (m < 1 || m > N) throw input_error("euclidean_partial requires 1 <= m <= N");
  GeometrySpec g;
  g.kind = GeomKind::EuclideanPartial;
  g.ambient_dim = N;
  g.horizontal_dim = m;
  g.first_layer = m;
  g.Q = m; // effective Hardy dimension of the |z|-weighted inequalities
  g.dilation_exponents = Eigen::VectorXd::Ones(N);
  g.n = m;
  g.k = N - m;
  return g;
}

GeometrySpec GeometrySpec::grushin(int n, int k, double gamma) {
  if (n < 1 || k < 0 || gamma < 0) throw input_error("grushin requires n>=1, k>=0, gamma>=0");
  GeometrySpec g;
  g.kind = GeomKind::Grushin;
  g.ambient_dim = n + k;
  g.horizontal_dim = n + k;
  g.first_layer = n;
  g.n = n;
  g.k = k;
  g.gamma = gamma;
  g.Q = n + (1.0 + gamma) * k;
  g.dilation_exponents = Eigen::VectorXd::Ones(n + k);
  g.dilation_exponents.tail(k).setConstant(1.0 + gamma);
  return g;
}

GeometrySpec GeometrySpec::greiner(int n, double gamma) {
  if (n < 1 || gamma < 1) throw input_error("greiner requires n>=1, gamma>=1");
  GeometrySpec g;
  g.kind = GeomKind::Greiner;
  g.ambient_dim = 2 * n + 1;
  g.horizontal_dim = 2 * n;
  g.first_layer = 2 * n;
  g.n = n;
  g.k = 1;
  g.gamma = gamma;
  g.Q = 2.0 * n + 2.0 * gamma;
  g.dilation_exponents = Eigen::VectorXd::Ones(2 * n + 1);
  g.dilation_exponents(2 * n) = 2.0 * gamma;
  return g;
}

GeometrySpec GeometrySpec::heisenberg(int n) {
  GeometrySpec g = greiner(n, 1.0);
  g.kind = GeomKind::Heisenberg;
  return g;
}

namespace {
void validate_skew(const std::vector<Matrix>& U, int l) {
  for (const auto& u : U) {
    if (u.rows() != l || u.cols() != l)
      throw input_error("second-layer matrices must be l x l");
    if ((u + u.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw input_error("second-layer matrices must be skew-symmetric");
  }
}
} // namespace

GeometrySpec GeometrySpec::step2(std::vector<Matrix> U) {
  if (U.empty()) throw input_error("step2 requires at least one second-layer matrix");
  const int l = static_cast<int>(U[0].rows());
  validate_skew(U, l);
  GeometrySpec g;
  g.kind = GeomKind::Step2;
  const int k = static_cast<int>(U.size());
  g.ambient_dim = l + k;
  g.horizontal_dim = l;
  g.first_layer = l;
  g.n = l;
  g.k = k;
  g.Q = l + 2.0 * k;
  g.dilation_exponents = Eigen::VectorXd::Ones(l + k);
  g.dilation_exponents.tail(k).setConstant(2.0);
  g.layer2 = std::move(U);
  return g;
}

GeometrySpec GeometrySpec::htype(std::vector<Matrix> U) {
  GeometrySpec g = step2(std::move(U));
  const int l = g.horizontal_dim;
  // Kaplan condition J(eta)^2 = -|eta|^2 Id: each U orthogonal, pairs anticommute.
  for (size_t s = 0; s < g.layer2.size(); ++s) {
    Matrix prod = g.layer2[s] * g.layer2[s].transpose();
    if ((prod - Matrix::Identity(l, l)).cwiseAbs().maxCoeff() > 1e-12)
      throw input_error("H-type requires U U^T = I for every second-layer matrix");
    for (size_t r = 0; r < s; ++r) {
      Matrix anti = g.layer2[s] * g.layer2[r] + g.layer2[r] * g.layer2[s];
      if (anti.cwiseAbs().maxCoeff() > 1e-12)
        throw input_error("H-type requires anticommuting second-layer matrices");
    }
  }
  g.kind = GeomKind::HType;
  g.layer2_coeff = 0.5;
  return g;
}

Matrix GeometrySpec::mu(const Point& xi) const {
  check_point(xi);
  const int l = horizontal_dim, N = ambient_dim;
  Matrix m = Matrix::Zero(l, N);
  switch (kind) {
  case GeomKind::EuclideanPartial:
    m.leftCols(l).setIdentity();
    break;
  case GeomKind::Grushin: {
    m.topLeftCorner(n, n).setIdentity();
    const double ax = xi.head(n).norm();
    const double w = std::pow(ax, gamma);
    for (int i = 0; i < k; ++i) m(n + i, n + i) = w;
    break;
  }
  case GeomKind::Greiner:
  case GeomKind::Heisenberg: {
    m.topLeftCorner(2 * n, 2 * n).setIdentity();
    const double r = xi.head(2 * n).norm();
    const double c = (gamma == 1.0) ? 2.0 : 2.0 * gamma * std::pow(r, 2.0 * gamma - 2.0);
    for (int i = 0; i < n; ++i) {
      m(i, 2 * n) = c * xi(n + i);      // X_i carries +c*y_i on t
      m(n + i, 2 * n) = -c * xi(i);     // Y_i carries -c*x_i on t
    }
    break;
  }
  case GeomKind::Step2:
  case GeomKind::HType: {
    m.leftCols(l).setIdentity();
    const Eigen::VectorXd x = xi.head(l);
    for (int s = 0; s < k; ++s) m.col(l + s) = layer2_coeff * (layer2[s] * x);
    break;
  }
  }
  return m;
}

Point GeometrySpec::dilate(double lambda, const Point& xi) const {
  if (!(lambda > 0)) throw input_error("dilation requires lambda > 0");
  check_point(xi);
  Point out(ambient_dim);
  for (int j = 0; j < ambient_dim; ++j)
    out(j) = std::pow(lambda, dilation_exponents(j)) * xi(j);
  return out;
}

std::pair<Point, Point> GeometrySpec::first_layer_split(const Point& xi) const {
  check_point(xi);
  return {xi.head(first_layer), xi.tail(ambient_dim - first_layer)};
}

std::string GeometrySpec::name() const {
  switch (kind) {
  case GeomKind::EuclideanPartial:
    return "euclidean(m=" + std::to_string(first_layer) + ",N=" + std::to_string(ambient_dim) + ")";
  case GeomKind::Grushin:
    return "grushin(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
           ",gamma=" + std::to_string(gamma) + ")";
  case GeomKind::Greiner:
    return "greiner(n=" + std::to_string(n) + ",gamma=" + std::to_string(gamma) + ")";
  case GeomKind::Heisenberg:
    return "heisenberg(n=" + std::to_string(n) + ")";
  case GeomKind::Step2:
    return "step2(l=" + std::to_string(horizontal_dim) + ",k=" + std::to_string(k) + ")";
  case GeomKind::HType:
    return "htype(l=" + std::to_string(horizontal_dim) + ",k=" + std::to_string(k) + ")";
  }
  return "?";
}

} // namespace hardy
