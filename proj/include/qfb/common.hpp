// Shared scalar/matrix aliases and the library-wide error type.
#pragma once

#include <complex>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace qfb {

using cd = std::complex<double>;

using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4cd;
using Mat6 = Eigen::Matrix<cd, 6, 6>;
using Mat16 = Eigen::Matrix<cd, 16, 16>;

using Vec3c = Eigen::Vector3cd;
using Vec4c = Eigen::Vector4cd;
using Vec16 = Eigen::Matrix<cd, 16, 1>;
using Vec3d = Eigen::Vector3d;

/// Library-wide exception. `code()` is a stable machine-readable tag
/// (e.g. "not_hermitian", "tau_out_of_range"); what() carries the violated
/// bound and the offending magnitude.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// printf-style helper used to embed magnitudes in error messages.
inline std::string strfmt(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list args2;
  va_copy(args2, args);
  const int n = std::vsnprintf(nullptr, 0, fmt, args);
  va_end(args);
  std::string out(n > 0 ? static_cast<size_t>(n) : 0, '\0');
  if (n > 0) std::vsnprintf(out.data(), out.size() + 1, fmt, args2);
  va_end(args2);
  return out;
}

/// Max absolute entry of a complex matrix (entrywise infinity norm).
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace qfb
