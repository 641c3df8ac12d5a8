#include "liegeo/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "liegeo/inner_product.hpp"

namespace liegeo {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Vec random_normal_vector(Rng& rng, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.normal();
  return v;
}

Vec random_unit_vector(Rng& rng, const InnerProduct& metric) {
  const int n = metric.dim();
  for (;;) {
    const Vec v = random_normal_vector(rng, n);
    if (metric.norm(v) > 1e-6) return metric.normalized(v);
  }
}

Mat random_spd_gram(Rng& rng, int n) {
  const InnerProduct euclid = InnerProduct::identity(n);
  std::vector<Vec> q;
  for (;;) {
    std::vector<Vec> raw;
    raw.reserve(n);
    for (int i = 0; i < n; ++i) raw.push_back(random_normal_vector(rng, n));
    try {
      q = gram_schmidt(euclid, raw);
      break;
    } catch (const std::invalid_argument&) {
      // dependent draw; retry
    }
  }
  Vec eig(n);
  for (int i = 0; i < n; ++i) eig[i] = std::exp(rng.uniform(-0.6931471805599453, 0.6931471805599453));
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += q[k][i] * eig[k] * q[k][j];
      g(i, j) = g(j, i) = s;
    }
  return g;
}

Mat random_traceless(Rng& rng, int n) {
  detail::require(n >= 1, "need a positive dimension");
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
  const double shift = a.trace() / n;
  for (int i = 0; i < n; ++i) a(i, i) -= shift;
  // kill the last crumb of trace exactly
  a(n - 1, n - 1) -= a.trace();
  return a;
}

}  // namespace liegeo
