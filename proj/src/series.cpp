#include "concavity/series.hpp"

#include <cmath>
#include <sstream>

namespace concavity {

SeriesFunction::SeriesFunction(std::vector<Complex> coefficients, double evaluation_radius)
    : coefficients_(std::move(coefficients)), evaluation_radius_(evaluation_radius) {
  if (coefficients_.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "series truncation order must be at least 2");
  if (coefficients_.front() != Complex(1.0, 0.0))
    throw Error(ErrorKind::InvalidArgument, "series must be normalized with a_1 = 1");
  for (const auto& c : coefficients_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorKind::InvalidArgument, "series coefficients must be finite");
  if (!(evaluation_radius_ > 0.0 && evaluation_radius_ <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "evaluation radius must lie in (0, 1]");
}

SeriesFunction SeriesFunction::identity(int order) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 2)), 0.0);
  c[0] = 1.0;
  return SeriesFunction(std::move(c));
}

Jet2 eval_series(const SeriesFunction& s, Complex z) {
  if (std::abs(z) > s.evaluation_radius()) {
    std::ostringstream msg;
    msg << "|z| = " << std::abs(z) << " exceeds evaluation radius " << s.evaluation_radius();
    throw Error(ErrorKind::OutsideValidityDisk, msg.str());
  }
  // Horner on sum_{k=1}^N a_k z^k, carrying the first two derivatives.
  Complex p = 0.0, dp = 0.0, d2p = 0.0;
  for (int k = s.order(); k >= 1; --k) {
    d2p = d2p * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + s.coefficient(k);
  }
  // p(z) above is sum a_k z^{k-1}; multiply through by z.
  return {p * z, dp * z + p, d2p * z + 2.0 * dp};
}

namespace power_series {

std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Complex(0.0)) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Complex> divide(std::span<const Complex> a, std::span<const Complex> b) {
  if (b.empty() || b[0] == Complex(0.0))
    throw Error(ErrorKind::NearPole, "series divisor has zero constant term");
  std::vector<Complex> q(a.size(), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    Complex acc = a[k];
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

std::vector<Complex> exp(std::span<const Complex> g) {
  if (!g.empty() && g[0] != Complex(0.0))
    throw Error(ErrorKind::InvalidArgument, "exp series requires zero constant term");
  // E' = g' E  =>  k E_k = sum_{j=1}^k j g_j E_{k-j}
  std::vector<Complex> e(g.size(), 0.0);
  if (e.empty()) return e;
  e[0] = 1.0;
  for (std::size_t k = 1; k < g.size(); ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * g[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return e;
}

Complex evaluate(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace power_series

}  // namespace concavity
