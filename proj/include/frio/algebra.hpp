#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

// Complex 2x2 linear algebra for qubit-level state discrimination.
// Eigensystems of Hermitian matrices are computed in closed form from
// trace and determinant, so all downstream quantities are deterministic.

namespace frio {

using cplx = std::complex<double>;

struct Vec2 {
  cplx c0{0.0, 0.0};
  cplx c1{0.0, 0.0};
};

inline cplx dot(const Vec2& a, const Vec2& b) {
  return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}

inline double norm2(const Vec2& v) { return std::norm(v.c0) + std::norm(v.c1); }

inline Vec2 normalized(const Vec2& v) {
  const double n = std::sqrt(norm2(v));
  if (n <= 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {v.c0 / n, v.c1 / n};
}

// Orthogonal complement in C^2, unique up to phase.
inline Vec2 perp(const Vec2& v) { return {-std::conj(v.c1), std::conj(v.c0)}; }

struct Mat2 {
  cplx m00{0.0, 0.0}, m01{0.0, 0.0};
  cplx m10{0.0, 0.0}, m11{0.0, 0.0};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

inline Mat2 operator*(const cplx& s, const Mat2& a) {
  return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

inline Mat2 operator*(double s, const Mat2& a) { return cplx(s, 0.0) * a; }

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline Vec2 operator*(const Mat2& a, const Vec2& v) {
  return {a.m00 * v.c0 + a.m01 * v.c1, a.m10 * v.c0 + a.m11 * v.c1};
}

inline Mat2 adjoint(const Mat2& a) {
  return {std::conj(a.m00), std::conj(a.m10), std::conj(a.m01), std::conj(a.m11)};
}

inline cplx trace(const Mat2& a) { return a.m00 + a.m11; }

inline cplx det(const Mat2& a) { return a.m00 * a.m11 - a.m01 * a.m10; }

// tr(a * b) without forming the product.
inline cplx trace_product(const Mat2& a, const Mat2& b) {
  return a.m00 * b.m00 + a.m01 * b.m10 + a.m10 * b.m01 + a.m11 * b.m11;
}

// |v><v|
inline Mat2 outer(const Vec2& v) {
  return {v.c0 * std::conj(v.c0), v.c0 * std::conj(v.c1),
          v.c1 * std::conj(v.c0), v.c1 * std::conj(v.c1)};
}

// <v| a |v>, real part (exact for Hermitian a).
inline double expectation(const Vec2& v, const Mat2& a) {
  return std::real(dot(v, a * v));
}

inline double max_abs_entry(const Mat2& a) {
  return std::max(std::max(std::abs(a.m00), std::abs(a.m01)),
                  std::max(std::abs(a.m10), std::abs(a.m11)));
}

// Deviation from Hermiticity, max entrywise |A - A^dagger| / 2-ish scale.
inline double hermiticity_defect(const Mat2& a) {
  const double d0 = std::abs(std::imag(a.m00));
  const double d1 = std::abs(std::imag(a.m11));
  const double off = std::abs(a.m01 - std::conj(a.m10));
  return std::max(std::max(d0, d1), off);
}

inline bool is_hermitian(const Mat2& a, double tol = 1e-12) {
  return hermiticity_defect(a) <= tol;
}

// Replaces a by its Hermitian part. Used to scrub rounding residue from
// products of the form H A H that are Hermitian in exact arithmetic.
inline Mat2 hermitian_part(const Mat2& a) {
  const Mat2 ad = adjoint(a);
  return 0.5 * (a + ad);
}

struct EigH2 {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  Vec2 v_min;
  Vec2 v_max;
};

// Closed-form eigensystem of a Hermitian 2x2 matrix. The eigenvectors are
// exactly orthonormal by construction (v_min is the complement of v_max).
inline EigH2 eig_hermitian(const Mat2& h) {
  const double a = std::real(h.m00);
  const double d = std::real(h.m11);
  const cplx b = 0.5 * (h.m01 + std::conj(h.m10));
  const double mean = 0.5 * (a + d);
  const double r = std::hypot(0.5 * (a - d), std::abs(b));

  EigH2 eig;
  eig.lambda_max = mean + r;
  eig.lambda_min = mean - r;

  if (r <= 0.0 || std::abs(b) == 0.0) {
    if (a >= d) {
      eig.v_max = {1.0, 0.0};
    } else {
      eig.v_max = {0.0, 1.0};
    }
  } else {
    // (h - lambda I) (b, lambda - a)^T = 0; pick the better-conditioned form.
    const double la = eig.lambda_max;
    const Vec2 cand1{b, cplx(la - a, 0.0)};
    const Vec2 cand2{cplx(la - d, 0.0), std::conj(b)};
    eig.v_max = normalized(norm2(cand1) >= norm2(cand2) ? cand1 : cand2);
  }
  eig.v_min = perp(eig.v_max);
  return eig;
}

inline double min_eigenvalue(const Mat2& h) { return eig_hermitian(h).lambda_min; }

inline double max_eigenvalue(const Mat2& h) { return eig_hermitian(h).lambda_max; }

inline bool is_psd(const Mat2& h, double tol = 1e-10) {
  return is_hermitian(h, 1e-10) && min_eigenvalue(h) >= -tol;
}

// Square root of a PSD Hermitian matrix via its spectral decomposition.
// Eigenvalues below psd_tol in magnitude are clamped to zero; genuinely
// negative eigenvalues are rejected.
inline Mat2 sqrt_psd(const Mat2& h, double psd_tol = 1e-10) {
  const EigH2 eig = eig_hermitian(h);
  if (eig.lambda_min < -psd_tol) {
    throw std::invalid_argument("sqrt_psd: matrix is not positive semidefinite");
  }
  const double lo = std::sqrt(std::max(eig.lambda_min, 0.0));
  const double hi = std::sqrt(std::max(eig.lambda_max, 0.0));
  return hi * outer(eig.v_max) + lo * outer(eig.v_min);
}

// Pseudo-inverse square root: eigenvalues below support_tol are treated as
// kernel directions and contribute zero.
inline Mat2 inv_sqrt_psd(const Mat2& h, double support_tol = 1e-13,
                         double psd_tol = 1e-10) {
  const EigH2 eig = eig_hermitian(h);
  if (eig.lambda_min < -psd_tol) {
    throw std::invalid_argument("inv_sqrt_psd: matrix is not positive semidefinite");
  }
  Mat2 out = Mat2::zero();
  if (eig.lambda_max > support_tol) out = out + (1.0 / std::sqrt(eig.lambda_max)) * outer(eig.v_max);
  if (eig.lambda_min > support_tol) out = out + (1.0 / std::sqrt(eig.lambda_min)) * outer(eig.v_min);
  return out;
}

}  // namespace frio
