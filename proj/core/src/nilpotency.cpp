#include "nilcert/nilpotency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nilcert/error.hpp"
#include "nilcert/spectral.hpp"

namespace nilcert {
namespace {

// Power of two near the largest entry magnitude, so dividing by it is exact.
double power_of_two_scale(const ComplexMatrix& t) {
  double largest = 0.0;
  for (const Complex& z : t.entries()) {
    largest = std::max({largest, std::abs(z.real()), std::abs(z.imag())});
  }
  if (largest == 0.0) return 0.0;
  int exponent = 0;
  std::frexp(largest, &exponent);
  return std::ldexp(1.0, exponent);
}

}  // namespace

NilpotencyReport nilpotency_index(const ComplexMatrix& t, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  const std::size_t n = t.order();
  NilpotencyReport report;
  report.tol_used = tol;
  report.power_norms.reserve(n);
  report.thresholds.reserve(n);

  const double s = power_of_two_scale(t);
  if (s == 0.0) {
    report.index = 1;
    report.power_norms.assign(n, 0.0);
    report.thresholds.assign(n, 0.0);
    return report;
  }

  // Powers of T/s and |T|/s, jointly rescaled by powers of two whenever they
  // drift toward the underflow range: T^k = 2^exponent * power, exactly.
  const ComplexMatrix step = scale(1.0 / s, t);
  const ComplexMatrix abs_step = entrywise_abs(step);
  ComplexMatrix power = step;
  ComplexMatrix abs_power = abs_step;
  int s_exponent = 0;
  std::frexp(s, &s_exponent);
  --s_exponent;
  long exponent = s_exponent;

  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      power = power * step;
      abs_power = abs_power * abs_step;
      exponent += s_exponent;
    }
    const double pn = frobenius_norm(power);
    const double qn = frobenius_norm(abs_power);
    const int e = static_cast<int>(std::clamp(exponent, -100000L, 100000L));
    report.power_norms.push_back(std::ldexp(pn, e));
    report.thresholds.push_back(std::ldexp(tol * qn, e));
    if (!report.index && (pn == 0.0 || pn <= tol * qn)) report.index = k;

    if (qn > 0.0 && qn < 1e-100) {
      int shift = 0;
      std::frexp(qn, &shift);
      power = scale(std::ldexp(1.0, -shift), power);
      abs_power = scale(std::ldexp(1.0, -shift), abs_power);
      exponent += shift;
    }
  }
  return report;
}

NormalityReport is_normal(const ComplexMatrix& t, double tol) {
  const ComplexMatrix ts = adjoint(t);
  const double defect = frobenius_norm(t * ts - ts * t);
  const double norm = frobenius_norm(t);
  return {defect <= tol * std::max(1.0, norm * norm), defect};
}

GelfandSequence gelfand_sequence(const ComplexMatrix& t, std::size_t k_max) {
  if (k_max == 0) throw std::invalid_argument("gelfand_sequence needs K >= 1");
  GelfandSequence seq;
  seq.requested = k_max;
  seq.values.reserve(k_max);

  const double s = power_of_two_scale(t);
  if (s == 0.0) {
    seq.values.assign(k_max, 0.0);
    return seq;
  }

  // T^k = exp(log_acc) * power with power renormalized to unit norm each step.
  const ComplexMatrix step = scale(1.0 / s, t);
  ComplexMatrix power = step;
  double log_acc = std::log(s);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) {
      try {
        power = power * step;
      } catch (const NonFiniteError&) {
        seq.truncated = true;
        return seq;
      }
      log_acc += std::log(s);
    }
    const double r = frobenius_norm(power);
    if (r == 0.0) {
      seq.values.resize(k_max, 0.0);
      return seq;
    }
    const double g = std::exp((log_acc + std::log(r)) / static_cast<double>(k));
    if (!std::isfinite(g)) {
      seq.truncated = true;
      return seq;
    }
    seq.values.push_back(g);
    power = scale(1.0 / r, power);
    log_acc += std::log(r);
  }
  return seq;
}

double gelfand_term(const ComplexMatrix& t, std::size_t k) {
  if (k == 0) throw std::invalid_argument("gelfand_term needs k >= 1");
  const double s = power_of_two_scale(t);
  if (s == 0.0) return 0.0;

  // Binary powering on unit-norm factors; logs carry the discarded scales.
  ComplexMatrix base = scale(1.0 / s, t);
  double log_base = std::log(s);
  std::optional<ComplexMatrix> result;
  double log_result = 0.0;
  auto normalize = [](ComplexMatrix& m, double& log_scale) {
    const double r = frobenius_norm(m);
    if (r == 0.0) return false;
    m = scale(1.0 / r, m);
    log_scale += std::log(r);
    return true;
  };
  if (!normalize(base, log_base)) return 0.0;
  for (std::size_t e = k;;) {
    if (e & 1U) {
      if (result) {
        result = *result * base;
        log_result += log_base;
        if (!normalize(*result, log_result)) return 0.0;
      } else {
        result = base;
        log_result = log_base;
      }
    }
    e >>= 1U;
    if (e == 0) break;
    base = base * base;
    log_base *= 2.0;
    if (!normalize(base, log_base)) return 0.0;
  }
  return std::exp(log_result / static_cast<double>(k));
}

double norm_power_defect(const ComplexMatrix& t, unsigned k) {
  if (k == 0) throw std::invalid_argument("norm_power_defect needs k >= 1");
  const double lhs = spectral_norm(matrix_power(t, k));
  const double rhs = std::pow(spectral_norm(t), static_cast<double>(k));
  return std::abs(lhs - rhs);
}

}  // namespace nilcert
