#include "dualrail/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualrail {

namespace {

void check_dim(int dim, const char* who) {
  if (dim < 2)
    throw std::invalid_argument(std::string(who) + ": dimension must be >= 2");
}

} // namespace

Matrix identity(int dim) {
  check_dim(dim, "identity");
  return Matrix::Identity(dim, dim);
}

Matrix annihilation(int dim) {
  check_dim(dim, "annihilation");
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Matrix creation(int dim) { return annihilation(dim).adjoint(); }

Matrix number_op(int dim) {
  check_dim(dim, "number_op");
  Matrix n = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = double(k);
  return n;
}

Matrix parity(int dim) {
  check_dim(dim, "parity");
  Matrix p = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return p;
}

Matrix displacement(cx alpha, int dim) {
  check_dim(dim, "displacement");
  if (alpha == cx(0.0, 0.0)) return Matrix::Identity(dim, dim);
  const Matrix a = annihilation(dim);
  // exp(G) with G = alpha a^dag - alpha* a anti-Hermitian; diagonalize iG.
  const Matrix h = cx(0.0, 1.0) * (alpha * a.adjoint() - std::conj(alpha) * a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phase(dim);
  for (int k = 0; k < dim; ++k)
    phase(k) = std::exp(cx(0.0, -es.eigenvalues()(k)));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix displacement_laguerre(cx alpha, int dim) {
  check_dim(dim, "displacement_laguerre");
  const double x = std::norm(alpha);
  const double gauss = std::exp(-0.5 * x);
  // log-factorials up to dim
  std::vector<double> lfact(dim, 0.0);
  for (int n = 1; n < dim; ++n) lfact[n] = lfact[n - 1] + std::log(double(n));
  Matrix d(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      if (m >= n) {
        // <m|D|n> = sqrt(n!/m!) alpha^(m-n) e^{-x/2} L_n^{(m-n)}(x)
        const int k = m - n;
        const double mag = std::exp(0.5 * (lfact[n] - lfact[m]));
        d(m, n) = mag * std::pow(alpha, k) * gauss * std::assoc_laguerre(n, k, x);
      } else {
        const int k = n - m;
        const double mag = std::exp(0.5 * (lfact[m] - lfact[n]));
        d(m, n) = mag * std::pow(-std::conj(alpha), k) * gauss *
                  std::assoc_laguerre(m, k, x);
      }
    }
  }
  return d;
}

Matrix displaced_parity(cx alpha, int dim) {
  const Matrix d = displacement(alpha, dim);
  return displacement(-alpha, dim) * parity(dim) * d;
}

Eigen::Matrix2cd fock_qubit_parity_block(cx alpha) {
  const double g = std::exp(-2.0 * std::norm(alpha));
  Eigen::Matrix2cd b;
  b << g, g * 2.0 * std::conj(alpha), g * 2.0 * alpha,
      g * (4.0 * std::norm(alpha) - 1.0);
  return b;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

cx expectation(const Matrix& rho, const Matrix& op) {
  if (rho.rows() != op.rows() || rho.cols() != op.cols())
    throw std::invalid_argument("expectation: dimension mismatch");
  return (rho * op).trace();
}

Vector fock_state(int n, int dim) {
  if (n < 0 || n >= dim)
    throw std::invalid_argument("fock_state: level outside truncation");
  Vector v = Vector::Zero(dim);
  v(n) = 1.0;
  return v;
}

Vector coherent_state(cx alpha, int dim) {
  return displacement(alpha, dim) * fock_state(0, dim);
}

Matrix density(const Vector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw std::invalid_argument("density: zero state");
  Vector v = psi / n;
  return v * v.adjoint();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

} // namespace dualrail
