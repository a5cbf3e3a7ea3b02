// Copyright 2026 The multicorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference computations for the unit tests. Everything here
// works on explicit full-register matrices and plain index loops and shares
// no code with the library beyond its value types.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat sigma(char label) {
  Mat m(2, 2);
  switch (label) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    default: m = Mat::Identity(2, 2);
  }
  return m;
}

inline Mat axis_op(double x, double y, double z) {
  return x * sigma('x') + y * sigma('y') + z * sigma('z');
}

/// op placed on qubit q of an n-qubit register, identity elsewhere.
inline Mat embed(const Mat& op, std::size_t q, std::size_t n) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t j = 0; j < n; ++j) out = kron(out, j == q ? op : Mat::Identity(2, 2));
  return out;
}

/// <prod_i (A_i - <A_i>)> by explicit full-register operators.
inline double covariance(const Mat& rho, const std::vector<Mat>& ops) {
  const std::size_t n = ops.size();
  Mat product = Mat::Identity(rho.rows(), rho.cols());
  for (std::size_t q = 0; q < n; ++q) {
    const Mat full = embed(ops[q], q, n);
    const Complex mean = (rho * full).trace();
    product = product * (full - mean * Mat::Identity(rho.rows(), rho.cols()));
  }
  return (rho * product).trace().real();
}

inline std::size_t bit(std::size_t index, std::size_t q, std::size_t n) {
  return (index >> (n - 1 - q)) & 1U;
}

/// Partial trace keeping the listed qubits (ascending) by direct summation.
inline Mat partial_trace(const Mat& rho, const std::vector<std::size_t>& keep, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t kd = std::size_t{1} << keep.size();
  Mat out = Mat::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  auto reduce = [&](std::size_t index) {
    std::size_t r = 0;
    for (std::size_t q : keep) r = (r << 1) | bit(index, q, n);
    return r;
  };
  auto traced_equal = [&](std::size_t a, std::size_t b) {
    for (std::size_t q = 0; q < n; ++q) {
      bool kept = false;
      for (std::size_t k : keep) kept = kept || k == q;
      if (!kept && bit(a, q, n) != bit(b, q, n)) return false;
    }
    return true;
  };
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (!traced_equal(r, c)) continue;
      out(static_cast<Eigen::Index>(reduce(r)), static_cast<Eigen::Index>(reduce(c))) +=
          rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

inline double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

inline double entropy(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  std::vector<double> p;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    p.push_back(std::max(0.0, es.eigenvalues()(i)));
  }
  return shannon(p);
}

inline double min_eigenvalue(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  return es.eigenvalues().minCoeff();
}

inline double h2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Quantum mutual information S(A) + S(B) - S(AB) via the brute-force routes.
inline double mutual_information(const Mat& rho, const std::vector<std::size_t>& a,
                                 std::size_t n) {
  std::vector<std::size_t> b;
  for (std::size_t q = 0; q < n; ++q) {
    bool in_a = false;
    for (std::size_t x : a) in_a = in_a || x == q;
    if (!in_a) b.push_back(q);
  }
  return entropy(partial_trace(rho, a, n)) + entropy(partial_trace(rho, b, n)) - entropy(rho);
}

/// Transpose of the factors listed in `subset` by index swapping.
inline Mat partial_transpose(const Mat& rho, const std::vector<std::size_t>& subset,
                             std::size_t n) {
  std::size_t mask = 0;
  for (std::size_t q : subset) mask |= std::size_t{1} << (n - 1 - q);
  Mat out(rho.rows(), rho.cols());
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      const auto ur = static_cast<std::size_t>(r);
      const auto uc = static_cast<std::size_t>(c);
      const std::size_t r2 = (ur & ~mask) | (uc & mask);
      const std::size_t c2 = (uc & ~mask) | (ur & mask);
      out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) = rho(r, c);
    }
  }
  return out;
}

/// |W>-style superposition over strings with `ones` ones.
inline Eigen::VectorXcd shell(std::size_t n, std::size_t ones) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::size_t count = 0;
    for (std::size_t q = 0; q < n; ++q) count += bit(static_cast<std::size_t>(i), q, n);
    if (count == ones) v(i) = 1.0;
  }
  return v.normalized();
}

inline Mat w_mixture(std::size_t n) {
  const Eigen::VectorXcd w = shell(n, 1);
  const Eigen::VectorXcd wbar = shell(n, n - 1);
  return 0.5 * (w * w.adjoint() + wbar * wbar.adjoint());
}

}  // namespace oracle
