#include "nilcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nilcert/error.hpp"

namespace nilcert {
namespace {

double scale_floor(const ComplexMatrix& h) { return std::max(1.0, frobenius_norm(h)); }

double off_diagonal_norm(const std::vector<Complex>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += std::norm(a[i * n + j]);
    }
  }
  return std::sqrt(sum);
}

// x <- c*x - s*w*y ; y <- s*x + c*w*y, with c, s real and w complex.
inline void rotate_pair(Complex& x, Complex& y, double c, double s, Complex w) {
  const double xr = x.real(), xi = x.imag();
  const double wyr = w.real() * y.real() - w.imag() * y.imag();
  const double wyi = w.real() * y.imag() + w.imag() * y.real();
  x = Complex(c * xr - s * wyr, c * xi - s * wyi);
  y = Complex(s * xr + c * wyr, s * xi + c * wyi);
}

struct JacobiRun {
  std::vector<Complex> a;   // diagonalized working matrix
  std::vector<Complex> vt;  // eigenvectors as rows; empty unless requested
  std::size_t sweeps = 0;
};

// Cyclic-by-rows complex Jacobi. The working copy stays exactly Hermitian:
// rows p and q are rotated and then mirrored into columns p and q.
JacobiRun jacobi(const ComplexMatrix& h, bool vectors) {
  const double defect = hermitian_defect(h);
  const double allowed = hermitian_input_tolerance(h);
  if (defect > allowed) throw HermitianViolationError(defect, allowed);

  const std::size_t n = h.order();
  const ComplexMatrix sym = cartesian_decompose(h).real_part;
  JacobiRun run;
  run.a.assign(sym.entries().begin(), sym.entries().end());
  auto& a = run.a;
  if (vectors) {
    run.vt.assign(n * n, Complex(0.0));
    for (std::size_t i = 0; i < n; ++i) run.vt[i * n + i] = 1.0;
  }

  const double threshold = 1e-13 * scale_floor(h);
  while (off_diagonal_norm(a, n) > threshold) {
    if (run.sweeps == detail::kMaxJacobiSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(detail::kMaxJacobiSweeps) + " sweeps (order " +
                             std::to_string(n) + ")");
    }
    ++run.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        // Phase factor that makes the (p, q) entry real and positive.
        const Complex w = std::conj(apq) / g;

        const double theta = (aqq - app) / (2.0 * g);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex wc = std::conj(w);
        Complex* rp = &a[p * n];
        Complex* rq = &a[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          rotate_pair(rp[k], rq[k], c, s, wc);
          a[k * n + p] = std::conj(rp[k]);
          a[k * n + q] = std::conj(rq[k]);
        }
        if (vectors) {
          Complex* vp = &run.vt[p * n];
          Complex* vq = &run.vt[q * n];
          for (std::size_t k = 0; k < n; ++k) rotate_pair(vp[k], vq[k], c, s, w);
        }
        rp[q] = 0.0;
        rq[p] = 0.0;
        rp[p] = app - t * g;
        rq[q] = aqq + t * g;
      }
    }
  }
  return run;
}

std::vector<std::size_t> ascending_order(const std::vector<Complex>& a, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x].real() < a[y * n + y].real();
  });
  return perm;
}

}  // namespace

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::Zero: return "Zero";
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
    case Definiteness::NegativeDefinite: return "NegativeDefinite";
    case Definiteness::NegativeSemidefinite: return "NegativeSemidefinite";
    case Definiteness::Indefinite: return "Indefinite";
  }
  return "Unknown";
}

bool is_positive_semidefinite(Definiteness d) {
  return d == Definiteness::PositiveDefinite || d == Definiteness::PositiveSemidefinite;
}

bool is_negative_semidefinite(Definiteness d) {
  return d == Definiteness::NegativeDefinite || d == Definiteness::NegativeSemidefinite;
}

double default_spectral_tolerance(const ComplexMatrix& h) { return 1e-8 * scale_floor(h); }

double hermitian_input_tolerance(const ComplexMatrix& h) { return 1e-10 * scale_floor(h); }

namespace detail {

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  auto run = jacobi(h, true);
  const std::size_t n = h.order();
  const auto perm = ascending_order(run.a, n);
  HermitianEigensystem result{
      .eigenvalues = std::vector<double>(n),
      .vectors = ComplexMatrix::generate(
          n, [&](std::size_t i, std::size_t j) { return run.vt[perm[j] * n + i]; }),
      .sweeps = run.sweeps,
  };
  for (std::size_t k = 0; k < n; ++k) result.eigenvalues[k] = run.a[perm[k] * n + perm[k]].real();
  return result;
}

}  // namespace detail

SpectrumReport hermitian_eigenvalues(const ComplexMatrix& h, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  const auto run = jacobi(h, false);
  const std::size_t n = h.order();
  std::vector<double> eigenvalues(n);
  for (std::size_t k = 0; k < n; ++k) eigenvalues[k] = run.a[k * n + k].real();
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return SpectrumReport{std::move(eigenvalues), n, tol};
}

SpectrumReport hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigenvalues(h, default_spectral_tolerance(h));
}

Definiteness classify_definiteness(const SpectrumReport& spec, double tol) {
  const double lo = spec.min();
  const double hi = spec.max();
  if (std::abs(lo) <= tol && std::abs(hi) <= tol) return Definiteness::Zero;
  if (lo > tol) return Definiteness::PositiveDefinite;
  if (hi < -tol) return Definiteness::NegativeDefinite;
  if (lo >= -tol) return Definiteness::PositiveSemidefinite;
  if (hi <= tol) return Definiteness::NegativeSemidefinite;
  return Definiteness::Indefinite;
}

Definiteness classify_definiteness(const SpectrumReport& spec) {
  return classify_definiteness(spec, spec.tol);
}

SymmetryReport spectrum_symmetry(const SpectrumReport& spec, double tol) {
  SymmetryReport report;
  report.tol = tol;

  std::vector<double> nonzero;
  bool has_zero = false;
  for (double lambda : spec.eigenvalues) {
    if (std::abs(lambda) <= tol) {
      has_zero = true;
    } else {
      nonzero.push_back(lambda);
    }
  }
  if (has_zero) report.matched_pairs.push_back(0.0);

  // Two pointers from both ends: the most negative candidate against the most
  // positive one. Each occurrence is consumed at most once.
  std::size_t lo = 0;
  std::size_t hi = nonzero.size();
  while (lo + 1 < hi) {
    const double sum = nonzero[lo] + nonzero[hi - 1];
    if (std::abs(sum) <= tol) {
      report.matched_pairs.push_back((nonzero[hi - 1] - nonzero[lo]) / 2.0);
      ++lo;
      --hi;
    } else if (sum < 0.0) {
      ++lo;
    } else {
      --hi;
    }
  }
  std::sort(report.matched_pairs.begin(), report.matched_pairs.end());

  report.intersection_is_empty = report.matched_pairs.empty();
  report.intersection_is_subset_of_zero =
      std::all_of(report.matched_pairs.begin(), report.matched_pairs.end(),
                  [](double lambda) { return lambda == 0.0; });
  return report;
}

SymmetryReport spectrum_symmetry(const SpectrumReport& spec) {
  return spectrum_symmetry(spec, spec.tol);
}

std::vector<EigenvalueCluster> cluster_eigenvalues(const SpectrumReport& spec, double tol) {
  std::vector<EigenvalueCluster> clusters;
  const auto& ev = spec.eigenvalues;
  std::size_t start = 0;
  while (start < ev.size()) {
    std::size_t end = start + 1;
    while (end < ev.size() && ev[end] - ev[start] <= tol) ++end;
    const double sum = std::accumulate(ev.begin() + static_cast<std::ptrdiff_t>(start),
                                       ev.begin() + static_cast<std::ptrdiff_t>(end), 0.0);
    clusters.push_back({sum / static_cast<double>(end - start), end - start});
    start = end;
  }
  return clusters;
}

std::size_t zero_multiplicity(const SpectrumReport& spec, double tol) {
  return static_cast<std::size_t>(std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                                                [&](double x) { return std::abs(x) <= tol; }));
}

double spectral_norm(const ComplexMatrix& t) {
  const ComplexMatrix gram = adjoint(t) * t;
  const auto spec = hermitian_eigenvalues(gram, 0.0);
  return std::sqrt(std::max(0.0, spec.max()));
}

}  // namespace nilcert
