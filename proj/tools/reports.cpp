#include "reports.hpp"

#include <iomanip>

namespace nilcert::cli {
namespace {

using nlohmann::json;

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json part_json(const SpectrumReport& spec, Definiteness cls, const SymmetryReport& sym,
               std::size_t zero_mult) {
  return json{{"definiteness", to_string(cls)},
              {"eigenvalues", spec.eigenvalues},
              {"tol", spec.tol},
              {"symmetry", to_json(sym)},
              {"zero_multiplicity", zero_mult}};
}

void print_list(std::ostream& out, const std::vector<double>& xs) {
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << '}';
}

void print_symmetry(std::ostream& out, const SymmetryReport& s) {
  out << "matched pairs ";
  print_list(out, s.matched_pairs);
  if (s.intersection_is_empty) {
    out << " (intersection empty)";
  } else if (s.intersection_is_subset_of_zero) {
    out << " (intersection = {0})";
  } else {
    out << " (nonzero pair present)";
  }
}

}  // namespace

json to_json(const SpectrumReport& s) {
  return json{{"eigenvalues", s.eigenvalues}, {"order", s.order}, {"tol", s.tol}};
}

json to_json(const SymmetryReport& s) {
  return json{{"matched_pairs", s.matched_pairs},
              {"subset_of_zero", s.intersection_is_subset_of_zero},
              {"empty", s.intersection_is_empty},
              {"tol", s.tol}};
}

json to_json(const NilpotencyReport& r) {
  return json{{"index", r.index ? json(*r.index) : json(nullptr)},
              {"power_norms", r.power_norms},
              {"thresholds", r.thresholds},
              {"tol", r.tol_used}};
}

json to_json(const Certificate& c) {
  return json{{"kind", to_string(c.kind)},
              {"witness_class", to_string(c.witness_class)},
              {"witness_eigenvalues", c.witness_spectrum.eigenvalues},
              {"witness_tol", c.witness_spectrum.tol},
              {"nonzero_norm", c.nonzero_norm}};
}

json to_json(const Verdict& v) {
  return json{{"state", to_string(v.state)}, {"detail", v.detail}, {"witnesses", v.witnesses}};
}

json to_json(const AnalysisReport& r) {
  json verdicts = json::array();
  for (const auto& tv : r.verdicts) {
    json v = to_json(tv.verdict);
    v["id"] = tv.id;
    verdicts.push_back(std::move(v));
  }
  return json{
      {"order", r.order},
      {"frobenius_norm", r.frobenius_norm},
      {"trace", complex_json(r.trace)},
      {"zero", r.zero},
      {"real_part", part_json(r.re_spectrum, r.re_class, r.re_symmetry, r.re_zero_multiplicity)},
      {"imag_part", part_json(r.im_spectrum, r.im_class, r.im_symmetry, r.im_zero_multiplicity)},
      {"nilpotency", to_json(r.nilpotency)},
      {"normality", json{{"normal", r.normality.normal}, {"defect", r.normality.defect}}},
      {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)},
      {"verdicts", std::move(verdicts)},
      {"inconsistent", r.inconsistent},
  };
}

json to_json(const VolterraReport& r) {
  return json{{"n", r.n},
              {"min_eig_re", r.min_eig_re},
              {"max_eig_re", r.max_eig_re},
              {"spectral_radius_exact", r.spectral_radius_exact},
              {"gelfand_tail", r.gelfand_tail},
              {"gelfand_k", r.gelfand_k},
              {"gelfand_truncated", r.gelfand_truncated},
              {"nilpotent", r.nilpotent},
              {"certificate_present", r.certificate_present}};
}

void print_report(std::ostream& out, const AnalysisReport& r) {
  out << std::setprecision(10);
  out << "order            " << r.order << '\n';
  out << "||T||_F          " << r.frobenius_norm << (r.zero ? " (zero)" : "") << '\n';
  out << "trace            " << r.trace.real() << (r.trace.imag() < 0 ? " - " : " + ")
      << std::abs(r.trace.imag()) << "i\n";
  out << "Re T             " << to_string(r.re_class) << ", spectrum ";
  print_list(out, r.re_spectrum.eigenvalues);
  out << "\n                 ";
  print_symmetry(out, r.re_symmetry);
  out << "\nIm T             " << to_string(r.im_class) << ", spectrum ";
  print_list(out, r.im_spectrum.eigenvalues);
  out << "\n                 ";
  print_symmetry(out, r.im_symmetry);
  out << "\nnilpotency index ";
  if (r.nilpotency.index) {
    out << *r.nilpotency.index;
  } else {
    out << "none";
  }
  out << "\nnormal           " << (r.normality.normal ? "yes" : "no") << " (defect "
      << r.normality.defect << ")\n";
  out << "certificate      "
      << (r.certificate ? std::string(to_string(r.certificate->kind)) : std::string("none"))
      << '\n';
  out << "verdicts\n";
  for (const auto& tv : r.verdicts) {
    out << "  " << std::left << std::setw(26) << tv.id << std::setw(15)
        << to_string(tv.verdict.state) << tv.verdict.detail << '\n';
  }
  if (r.inconsistent) out << "INCONSISTENT: certificate and nilpotency index both present\n";
}

void print_report(std::ostream& out, const NilpotencyReport& r) {
  out << std::setprecision(10);
  if (r.index) {
    out << *r.index << '\n';
  } else {
    out << "none\n";
  }
  for (std::size_t k = 0; k < r.power_norms.size(); ++k) {
    out << "  ||T^" << (k + 1) << "||_F = " << r.power_norms[k] << "  (threshold "
        << r.thresholds[k] << ")\n";
  }
}

void print_report(std::ostream& out, const Certificate& c) {
  out << std::setprecision(10);
  out << to_string(c.kind) << '\n';
  out << "  witness class  " << to_string(c.witness_class) << '\n';
  out << "  witness spectrum ";
  print_list(out, c.witness_spectrum.eigenvalues);
  out << "\n  ||T||_F        " << c.nonzero_norm << '\n';
}

void print_report(std::ostream& out, const VolterraReport& r) {
  out << std::setprecision(12);
  out << "n                      " << r.n << '\n';
  out << "min eig Re V           " << r.min_eig_re << '\n';
  out << "max eig Re V           " << r.max_eig_re << '\n';
  out << "spectral radius        " << r.spectral_radius_exact << '\n';
  out << "quasinilpotence indicator g_" << r.gelfand_k << " = " << r.gelfand_tail
      << (r.gelfand_truncated ? " (truncated)" : "") << '\n';
  out << "nilpotent              " << (r.nilpotent ? "yes" : "no") << '\n';
  out << "certificate            " << (r.certificate_present ? "present" : "none") << '\n';
}

}  // namespace nilcert::cli
