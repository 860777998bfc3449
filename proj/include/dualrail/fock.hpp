// fock.hpp
// Truncated Fock-space linear algebra: ladder operators, displacement,
// parity, displaced (joint) parity, tensor products and expectations.
//
// All operators are dense Eigen matrices on a Fock space truncated at `dim`
// levels per mode. Two-mode objects use mode-A-major indexing:
// index = n_A * dim_B + n_B. Values are immutable after construction and all
// functions here are pure.

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dualrail {

using cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix identity(int dim);

// Ladder operator a with entries a[n-1, n] = sqrt(n). Throws
// std::invalid_argument for dim < 2; so do the other operator builders.
Matrix annihilation(int dim);
Matrix creation(int dim);
Matrix number_op(int dim);

// Photon-number parity (-1)^n, diagonal.
Matrix parity(int dim);

// Displacement exp(alpha a^dag - alpha* a), computed by unitary
// eigendecomposition of the Hermitian generator (unitary to machine
// precision; accurate while |alpha|^2 << dim).
Matrix displacement(cx alpha, int dim);

// Same operator from the analytic Laguerre-polynomial matrix elements.
// Independent route kept as a cross-check for the exponential one.
Matrix displacement_laguerre(cx alpha, int dim);

// Displaced parity D(-alpha) Pi D(alpha). Hermitian, eigenvalues in [-1, 1]
// up to truncation error.
Matrix displaced_parity(cx alpha, int dim);

// The {|0>,|1>} block of the displaced parity, exact in closed form:
// exp(-2|alpha|^2) * [[1, 2 conj(alpha)], [2 alpha, 4|alpha|^2 - 1]].
Eigen::Matrix2cd fock_qubit_parity_block(cx alpha);

// Kronecker product, mode-A-major: (A ox B)[a*dB+b, a'*dB+b'] = A[a,a']B[b,b'].
Matrix tensor(const Matrix& a, const Matrix& b);

// Tr[rho * op]. Throws std::invalid_argument on dimension mismatch.
cx expectation(const Matrix& rho, const Matrix& op);

// States and density matrices used by tests and the tomography pipeline.
Vector fock_state(int n, int dim);
Vector coherent_state(cx alpha, int dim);
Matrix density(const Vector& psi); // |psi><psi| (normalizes psi)

bool is_hermitian(const Matrix& m, double tol = 1e-12);

} // namespace dualrail
