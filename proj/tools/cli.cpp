#include "cli.hpp"

#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fuzz.hpp"
#include "matrix_file.hpp"
#include "nilcert/nilcert.hpp"
#include "reports.hpp"

namespace nilcert::cli {
namespace {

using nlohmann::json;

// Parsed flag values for all subcommands.
struct Args {
  bool json_out = false;
  std::string file;
  double tol = 1e-8;
  std::string out_re;
  std::string out_im;
  std::string gallery_name;
  bool gallery_all = false;
  std::string gallery_out;
  std::size_t volterra_n = 0;
  std::string volterra_export;
  std::string property;
  std::size_t trials = 100;
  std::size_t dim = 4;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> replay;
};

void emit(std::ostream& out, json doc) { out << doc.dump(2) << '\n'; }

int cmd_analyze(const Args& a, std::ostream& out) {
  const ComplexMatrix t = read_matrix_file(a.file);
  AnalysisOptions opts;
  opts.spectral_tol = a.tol;
  const AnalysisReport r = analyze(t, opts);
  if (a.json_out) {
    json doc = to_json(r);
    doc["command"] = "analyze";
    emit(out, std::move(doc));
  } else {
    print_report(out, r);
  }
  return kExitOk;
}

int cmd_nilindex(const Args& a, std::ostream& out) {
  const NilpotencyReport r = nilpotency_index(read_matrix_file(a.file));
  if (a.json_out) {
    json doc = to_json(r);
    doc["command"] = "nilindex";
    emit(out, std::move(doc));
  } else {
    print_report(out, r);
  }
  return kExitOk;
}

int cmd_certify(const Args& a, std::ostream& out) {
  const auto cert = non_nilpotence_certificate(read_matrix_file(a.file), a.tol);
  if (a.json_out) {
    emit(out, json{{"command", "certify"},
                   {"certificate", cert ? to_json(*cert) : json(nullptr)}});
  } else if (cert) {
    print_report(out, *cert);
  } else {
    out << "no certificate\n";
  }
  return cert ? kExitOk : kExitNoCertificate;
}

int cmd_decompose(const Args& a, std::ostream& out) {
  const auto parts = cartesian_decompose(read_matrix_file(a.file));
  write_matrix_file(a.out_re, parts.real_part);
  write_matrix_file(a.out_im, parts.imag_part);
  if (a.json_out) {
    emit(out, json{{"command", "decompose"}, {"out_re", a.out_re}, {"out_im", a.out_im}});
  } else {
    out << "wrote " << a.out_re << " and " << a.out_im << '\n';
  }
  return kExitOk;
}

int cmd_gallery_list(const Args& a, std::ostream& out) {
  const auto names = gallery::list();
  if (a.json_out) {
    emit(out, json{{"command", "gallery-list"},
                   {"version", gallery::kGalleryVersion},
                   {"entries", names}});
  } else {
    for (const auto& n : names) out << n << '\n';
  }
  return kExitOk;
}

int cmd_gallery_show(const Args& a, std::ostream& out) {
  const gallery::Entry& e = gallery::get(a.gallery_name);
  if (!a.gallery_out.empty()) write_matrix_file(a.gallery_out, e.matrix);
  if (a.json_out) {
    emit(out, json{{"command", "gallery-show"},
                   {"name", e.name},
                   {"citation", e.citation},
                   {"matrix", format_matrix(e.matrix)}});
  } else {
    out << "# " << e.name << ": " << e.citation << '\n' << format_matrix(e.matrix);
  }
  return kExitOk;
}

int cmd_gallery_verify(const Args& a, std::ostream& out) {
  std::vector<std::string> names;
  if (a.gallery_all || a.gallery_name.empty()) {
    names = gallery::list();
  } else {
    names.push_back(a.gallery_name);
  }
  json results = json::array();
  bool all_pass = true;
  for (const auto& name : names) {
    const Verdict v = gallery::verify(name);
    all_pass = all_pass && v.passed();
    if (a.json_out) {
      json r = to_json(v);
      r["name"] = name;
      results.push_back(std::move(r));
    } else {
      out << name << ": " << to_string(v.state) << " (" << v.detail << ")\n";
    }
  }
  if (a.json_out) {
    emit(out, json{{"command", "gallery-verify"}, {"results", results}, {"passed", all_pass}});
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_volterra(const Args& a, std::ostream& out) {
  if (!a.volterra_export.empty()) {
    write_matrix_file(a.volterra_export, volterra_matrix(a.volterra_n));
  }
  const VolterraReport r = volterra_report(a.volterra_n);
  if (a.json_out) {
    json doc = to_json(r);
    doc["command"] = "volterra";
    emit(out, std::move(doc));
  } else {
    print_report(out, r);
  }
  return kExitOk;
}

int cmd_fuzz(const Args& a, std::ostream& out, std::ostream& err) {
  FuzzOptions opts;
  const auto prop = parse_property(a.property);
  if (!prop) {
    err << "unknown property '" << a.property << "'\n";
    return kExitUsage;
  }
  opts.property = *prop;
  opts.trials = a.trials;
  opts.dim = a.dim;
  opts.seed = a.seed;
  opts.jobs = a.jobs;
  opts.replay_seed = a.replay;
  try {
    validate(opts);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  const FuzzResult r = run_fuzz(opts);
  if (a.json_out) {
    json failures = json::array();
    for (const auto& f : r.failures) {
      failures.push_back(
          json{{"trial", f.trial}, {"trial_seed", f.trial_seed}, {"detail", f.detail}});
    }
    emit(out, json{{"command", "fuzz"},
                   {"property", to_string(opts.property)},
                   {"generator", kGeneratorAlgorithm},
                   {"seed", opts.seed},
                   {"dim", opts.dim},
                   {"trials", r.trials},
                   {"failures", failures},
                   {"passed", r.failures.empty()}});
  } else {
    out << "# property=" << to_string(opts.property) << " dim=" << opts.dim
        << " trials=" << r.trials << " seed=" << opts.seed << '\n';
    out << "# generator: " << kGeneratorAlgorithm << '\n';
    for (const auto& f : r.failures) {
      out << "FAIL trial=" << f.trial << " trial_seed=" << f.trial_seed << " " << f.detail
          << '\n';
    }
    out << (r.trials - r.failures.size()) << "/" << r.trials << " trials passed\n";
  }
  return r.failures.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Nilpotence and normality certificates for complex square matrices", "nilcert"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", a.json_out, "Emit one JSON document instead of text");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
  analyze_cmd->add_option("file", a.file, "Matrix file")->required();
  analyze_cmd->add_option("--tol", a.tol, "Relative spectral tolerance")
      ->check(CLI::NonNegativeNumber);

  auto* nilindex_cmd = app.add_subcommand("nilindex", "Nilpotency index and power-norm trail");
  nilindex_cmd->add_option("file", a.file, "Matrix file")->required();

  auto* certify_cmd =
      app.add_subcommand("certify", "Non-nilpotence certificate (exit 3 if none)");
  certify_cmd->add_option("file", a.file, "Matrix file")->required();
  certify_cmd->add_option("--tol", a.tol, "Relative spectral tolerance")
      ->check(CLI::NonNegativeNumber);

  auto* decompose_cmd = app.add_subcommand("decompose", "Write Re T and Im T");
  decompose_cmd->add_option("file", a.file, "Matrix file")->required();
  decompose_cmd->add_option("--out-re", a.out_re, "Output file for Re T")->required();
  decompose_cmd->add_option("--out-im", a.out_im, "Output file for Im T")->required();

  auto* gallery_cmd = app.add_subcommand("gallery", "Built-in example matrices");
  gallery_cmd->require_subcommand(1);
  auto* g_list = gallery_cmd->add_subcommand("list", "List entry names");
  auto* g_show = gallery_cmd->add_subcommand("show", "Print an entry in matrix file format");
  g_show->add_option("name", a.gallery_name, "Entry name")->required();
  g_show->add_option("--out", a.gallery_out, "Also write the matrix to this file");
  auto* g_verify = gallery_cmd->add_subcommand("verify", "Recompute recorded verdicts");
  g_verify->add_option("name", a.gallery_name, "Entry name (default: all)");
  g_verify->add_flag("--all", a.gallery_all, "Verify every entry");

  auto* volterra_cmd = app.add_subcommand("volterra", "Discretized Volterra operator report");
  volterra_cmd->add_option("--n", a.volterra_n, "Grid size")
      ->required()
      ->check(CLI::PositiveNumber);
  volterra_cmd->add_option("--export", a.volterra_export, "Write the matrix to this file");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded property suite");
  fuzz_cmd->add_option("--property", a.property, "main|corollary|smalldim|dim4|trace")
      ->required();
  fuzz_cmd->add_option("--trials", a.trials, "Number of trials");
  fuzz_cmd->add_option("--dim", a.dim, "Matrix order");
  fuzz_cmd->add_option("--seed", a.seed, "Batch seed");
  fuzz_cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--replay", a.replay, "Run a single trial from a printed trial_seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(a, out);
    if (*nilindex_cmd) return cmd_nilindex(a, out);
    if (*certify_cmd) return cmd_certify(a, out);
    if (*decompose_cmd) return cmd_decompose(a, out);
    if (*g_list) return cmd_gallery_list(a, out);
    if (*g_show) return cmd_gallery_show(a, out);
    if (*g_verify) return cmd_gallery_verify(a, out);
    if (*volterra_cmd) return cmd_volterra(a, out);
    if (*fuzz_cmd) return cmd_fuzz(a, out, err);
  } catch (const LookupError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace nilcert::cli
