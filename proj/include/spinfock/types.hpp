#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace spinfock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

// Error categories. Sizes and indices are caller bugs; domain and numeric
// errors come from inputs that are well-formed but unusable.
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotWeightVectorError : DomainError {
  using DomainError::DomainError;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RepTag { Spin, Defining };

inline std::string to_string(RepTag tag) {
  return tag == RepTag::Spin ? "spin" : "defining";
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

// Largest entry modulus; residuals throughout are reported in this norm.
inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

inline double unitarity_defect(const Matrix& u) {
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

}  // namespace spinfock
