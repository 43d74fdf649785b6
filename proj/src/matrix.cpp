#include "cdv/matrix.hpp"

#include <cmath>

namespace cdv {

FloatMatrix to_float(const RatMatrix& a) {
  FloatMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).get_d();
  return out;
}

double frobenius_norm(const FloatMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace cdv
