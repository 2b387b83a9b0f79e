#include "nilcert/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nilcert/generators.hpp"

namespace nilcert {
namespace {

struct PartFacts {
  SpectrumReport spectrum;
  Definiteness cls = Definiteness::Zero;
  SymmetryReport symmetry;
  std::size_t zero_multiplicity = 0;
};

PartFacts examine_part(const ComplexMatrix& h, double rel_tol) {
  const double tol = rel_tol * std::max(1.0, frobenius_norm(h));
  PartFacts f;
  f.spectrum = hermitian_eigenvalues(h, tol);
  f.cls = classify_definiteness(f.spectrum, tol);
  f.symmetry = spectrum_symmetry(f.spectrum, tol);
  f.zero_multiplicity = zero_multiplicity(f.spectrum, tol);
  return f;
}

// Everything the oracles look at, computed once per matrix.
struct Facts {
  std::size_t order = 0;
  double norm = 0.0;
  bool zero = false;
  PartFacts re;
  PartFacts im;
  NilpotencyReport nilpotency;

  bool nilpotent() const { return nilpotency.index.has_value(); }
};

Facts gather(const ComplexMatrix& t, const AnalysisOptions& opts) {
  Facts f;
  f.order = t.order();
  f.norm = frobenius_norm(t);
  f.zero = is_zero(t);
  const auto parts = cartesian_decompose(t);
  f.re = examine_part(parts.real_part, opts.spectral_tol);
  f.im = examine_part(parts.imag_part, opts.spectral_tol);
  f.nilpotency = nilpotency_index(t, opts.nilpotency_tol);
  return f;
}

Verdict verdict(VerdictState state, std::string detail, std::vector<double> witnesses = {}) {
  return Verdict{state, std::move(detail), std::move(witnesses)};
}

std::string index_text(const Facts& f) {
  return f.nilpotent() ? "index " + std::to_string(*f.nilpotency.index) : "no index";
}

std::optional<Certificate> certificate_from(const Facts& f) {
  if (f.zero) return std::nullopt;
  auto make = [&](CertificateKind kind, const PartFacts& part) {
    return Certificate{kind, part.spectrum, part.cls, f.norm};
  };
  if (is_positive_semidefinite(f.re.cls)) return make(CertificateKind::RealPartPSD, f.re);
  if (is_negative_semidefinite(f.re.cls)) return make(CertificateKind::RealPartNSD, f.re);
  if (is_positive_semidefinite(f.im.cls)) return make(CertificateKind::ImagPartPSD, f.im);
  if (is_negative_semidefinite(f.im.cls)) return make(CertificateKind::ImagPartNSD, f.im);
  return std::nullopt;
}

Verdict main_theorem_verdict(const Facts& f, const std::optional<Certificate>& cert) {
  if (!cert) return verdict(VerdictState::NotApplicable, "no semidefinite Hermitian part");
  if (f.nilpotent()) {
    return verdict(VerdictState::Fail,
                   "certificate " + std::string(to_string(cert->kind)) + " coexists with " +
                       index_text(f) + "; tolerances are inconsistent");
  }
  return verdict(VerdictState::Pass,
                 std::string(to_string(cert->kind)) + " certifies non-nilpotence",
                 {cert->witness_spectrum.min(), cert->witness_spectrum.max()});
}

Verdict corollary_verdict(const Facts& f) {
  if (!f.nilpotent()) return verdict(VerdictState::NotApplicable, "not nilpotent");
  if (f.zero) return verdict(VerdictState::NotApplicable, "T is zero");
  std::vector<double> w{f.re.spectrum.min(), f.re.spectrum.max(), f.im.spectrum.min(),
                        f.im.spectrum.max()};
  const bool ok =
      f.re.cls == Definiteness::Indefinite && f.im.cls == Definiteness::Indefinite;
  return verdict(ok ? VerdictState::Pass : VerdictState::Fail,
                 "Re T " + std::string(to_string(f.re.cls)) + ", Im T " +
                     std::string(to_string(f.im.cls)),
                 std::move(w));
}

std::vector<double> nonzero_pairs(const SymmetryReport& s) {
  std::vector<double> out;
  for (double x : s.matched_pairs) {
    if (x != 0.0) out.push_back(x);
  }
  return out;
}

Verdict small_dim_verdict(const Facts& f) {
  if (f.order != 2 && f.order != 3) return verdict(VerdictState::NotApplicable, "order not 2 or 3");
  if (!f.nilpotent()) return verdict(VerdictState::NotApplicable, "not nilpotent");
  if (f.zero) return verdict(VerdictState::NotApplicable, "T is zero");
  const bool re_hyp = f.re.symmetry.intersection_is_exactly_zero();
  const bool im_hyp = f.im.symmetry.intersection_is_exactly_zero();
  std::vector<double> w = nonzero_pairs(f.re.symmetry);
  const auto w_im = nonzero_pairs(f.im.symmetry);
  w.insert(w.end(), w_im.begin(), w_im.end());
  std::ostringstream detail;
  detail << "Re pairs " << (f.re.symmetry.has_nonzero_pair() ? "nonzero" : "none")
         << (f.re.symmetry.intersection_is_empty ? " (empty)" : "") << ", Im pairs "
         << (f.im.symmetry.has_nonzero_pair() ? "nonzero" : "none")
         << (f.im.symmetry.intersection_is_empty ? " (empty)" : "");
  if (re_hyp || im_hyp) {
    detail << "; intersection equals {0} for " << (re_hyp ? "Re T" : "Im T");
    return verdict(VerdictState::Fail, detail.str(), std::move(w));
  }
  return verdict(VerdictState::Pass, detail.str(), std::move(w));
}

Verdict dim4_verdict(const Facts& f) {
  if (f.order != 4) return verdict(VerdictState::NotApplicable, "order not 4");
  if (f.zero) return verdict(VerdictState::Pass, "vacuous: T is zero");
  if (!f.nilpotent()) return verdict(VerdictState::NotApplicable, "not nilpotent");
  auto hypothesis = [](const PartFacts& p) {
    return p.symmetry.intersection_is_exactly_zero() && p.zero_multiplicity == 2;
  };
  const bool re_hyp = hypothesis(f.re);
  const bool im_hyp = hypothesis(f.im);
  std::vector<double> w{static_cast<double>(f.re.zero_multiplicity),
                        static_cast<double>(f.im.zero_multiplicity)};
  std::ostringstream detail;
  detail << "Re: intersection "
         << (f.re.symmetry.intersection_is_exactly_zero() ? "{0}"
             : f.re.symmetry.intersection_is_empty        ? "empty"
                                                          : "has nonzero pair")
         << ", zero multiplicity " << f.re.zero_multiplicity << "; Im: intersection "
         << (f.im.symmetry.intersection_is_exactly_zero() ? "{0}"
             : f.im.symmetry.intersection_is_empty        ? "empty"
                                                          : "has nonzero pair")
         << ", zero multiplicity " << f.im.zero_multiplicity;
  return verdict(re_hyp || im_hyp ? VerdictState::Fail : VerdictState::Pass, detail.str(),
                 std::move(w));
}

Verdict two_by_two_verdict(const Facts& f) {
  if (f.order != 2) return verdict(VerdictState::NotApplicable, "order not 2");
  if (!f.re.symmetry.intersection_is_empty) {
    return verdict(VerdictState::NotApplicable, "sigma(Re T) meets sigma(-Re T)");
  }
  return verdict(f.nilpotent() ? VerdictState::Fail : VerdictState::Pass,
                 "Re T has disjoint symmetric spectrum; " + index_text(f));
}

Verdict trace_verdict(const Facts& f, Complex tr, const AnalysisOptions& opts) {
  if (!f.nilpotent()) return verdict(VerdictState::NotApplicable, "not nilpotent");
  const double bound =
      static_cast<double>(f.order) * opts.nilpotency_tol * std::max(1.0, f.norm);
  const double mag = std::abs(tr);
  std::ostringstream detail;
  detail << "|tr T| = " << mag << " (bound " << bound << ")";
  return verdict(mag <= bound ? VerdictState::Pass : VerdictState::Fail, detail.str(),
                 {mag, bound});
}

Verdict normality_verdict(const Facts& f, const NormalityReport& normality) {
  if (!f.nilpotent()) return verdict(VerdictState::NotApplicable, "not nilpotent");
  const bool ok = normality.normal == f.zero;
  return verdict(ok ? VerdictState::Pass : VerdictState::Fail,
                 std::string(normality.normal ? "normal" : "not normal") + ", " +
                     (f.zero ? "zero" : "nonzero"),
                 {normality.defect});
}

}  // namespace

std::string_view to_string(VerdictState s) {
  switch (s) {
    case VerdictState::Pass: return "pass";
    case VerdictState::Fail: return "fail";
    case VerdictState::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::RealPartPSD: return "RealPartPSD";
    case CertificateKind::RealPartNSD: return "RealPartNSD";
    case CertificateKind::ImagPartPSD: return "ImagPartPSD";
    case CertificateKind::ImagPartNSD: return "ImagPartNSD";
  }
  return "Unknown";
}

const Verdict* AnalysisReport::find(std::string_view id) const {
  for (const auto& v : verdicts) {
    if (v.id == id) return &v.verdict;
  }
  return nullptr;
}

AnalysisReport analyze(const ComplexMatrix& t, const AnalysisOptions& opts) {
  const Facts f = gather(t, opts);
  AnalysisReport r;
  r.order = f.order;
  r.frobenius_norm = f.norm;
  r.trace = trace(t);
  r.zero = f.zero;
  r.re_spectrum = f.re.spectrum;
  r.im_spectrum = f.im.spectrum;
  r.re_class = f.re.cls;
  r.im_class = f.im.cls;
  r.re_symmetry = f.re.symmetry;
  r.im_symmetry = f.im.symmetry;
  r.re_zero_multiplicity = f.re.zero_multiplicity;
  r.im_zero_multiplicity = f.im.zero_multiplicity;
  r.nilpotency = f.nilpotency;
  r.normality = is_normal(t, opts.normality_tol);
  r.certificate = certificate_from(f);
  r.inconsistent = r.certificate.has_value() && f.nilpotent();

  auto add = [&](std::string_view id, Verdict v) {
    r.verdicts.push_back({std::string(id), std::move(v)});
  };
  add(theorem_id::kMainTheorem, main_theorem_verdict(f, r.certificate));
  add(theorem_id::kCorollary, corollary_verdict(f));
  add(theorem_id::kSmallDim, small_dim_verdict(f));
  add(theorem_id::kDim4, dim4_verdict(f));
  add(theorem_id::kTwoByTwo, two_by_two_verdict(f));
  add(theorem_id::kTrace, trace_verdict(f, r.trace, opts));
  add(theorem_id::kNormality, normality_verdict(f, r.normality));
  return r;
}

std::optional<Certificate> non_nilpotence_certificate(const ComplexMatrix& t,
                                                      double spectral_tol) {
  if (is_zero(t)) return std::nullopt;
  const auto parts = cartesian_decompose(t);
  Facts f;
  f.order = t.order();
  f.norm = frobenius_norm(t);
  f.re = examine_part(parts.real_part, spectral_tol);
  f.im = examine_part(parts.imag_part, spectral_tol);
  return certificate_from(f);
}

Verdict opposite_signs_check(const ComplexMatrix& t, const AnalysisOptions& opts) {
  return corollary_verdict(gather(t, opts));
}

Verdict small_dim_symmetry_oracle(const ComplexMatrix& t, const AnalysisOptions& opts) {
  if (t.order() != 2 && t.order() != 3) {
    return verdict(VerdictState::NotApplicable, "order not 2 or 3");
  }
  return small_dim_verdict(gather(t, opts));
}

Verdict dim4_multiplicity_oracle(const ComplexMatrix& t, const AnalysisOptions& opts) {
  if (t.order() != 4) return verdict(VerdictState::NotApplicable, "order not 4");
  return dim4_verdict(gather(t, opts));
}

Verdict two_by_two_disjoint_oracle(const ComplexMatrix& a_input,
                                   std::span<const ComplexMatrix> b_samples,
                                   const AnalysisOptions& opts) {
  if (a_input.order() != 2) return verdict(VerdictState::NotApplicable, "A is not 2x2");
  if (hermitian_defect(a_input) > hermitian_input_tolerance(a_input)) {
    return verdict(VerdictState::NotApplicable, "A is not Hermitian");
  }
  const PartFacts a = examine_part(a_input, opts.spectral_tol);
  if (!a.symmetry.intersection_is_empty) {
    return verdict(VerdictState::NotApplicable, "sigma(A) meets sigma(-A)",
                   a.symmetry.matched_pairs);
  }
  std::size_t failures = 0;
  for (const ComplexMatrix& b : b_samples) {
    if (nilpotency_index(reconstruct({a_input, b}), opts.nilpotency_tol).index) ++failures;
  }
  return verdict(failures == 0 ? VerdictState::Pass : VerdictState::Fail,
                 std::to_string(b_samples.size() - failures) + "/" +
                     std::to_string(b_samples.size()) + " samples not nilpotent",
                 {static_cast<double>(failures)});
}

Verdict two_by_two_disjoint_oracle(const ComplexMatrix& a_input, Rng& rng, std::size_t batch,
                                   const AnalysisOptions& opts) {
  std::vector<ComplexMatrix> samples;
  samples.reserve(batch);
  if (a_input.order() == 2) {
    for (std::size_t i = 0; i < batch; ++i) samples.push_back(random_hermitian(rng, 2));
  }
  return two_by_two_disjoint_oracle(a_input, samples, opts);
}

}  // namespace nilcert
