#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "gemkit/handles.hpp"
#include "gemkit/io.hpp"
#include "gemkit/report.hpp"

namespace gemkit {

namespace {

constexpr int kPass = 0;
constexpr int kCertificateFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input;
  std::string catalog_name;
  std::optional<int> m;
  std::optional<int> m_prime;
  std::optional<int> beta2;
  std::string mode;
  std::string format = "text";
  std::string out_path;
  int workers = 1;
};

struct UsageError {
  std::string message;
};

GraphDocument load(const Options& o) {
  if (!o.catalog_name.empty()) return catalog(o.catalog_name);
  if (!o.input.empty()) return read_graph_file(o.input);
  throw UsageError{"one of --input or --catalog is required"};
}

std::optional<SemiSimpleMode::Kind> parse_mode(const std::string& mode) {
  if (mode == "closed") return SemiSimpleMode::Kind::Closed;
  if (mode == "boundary") return SemiSimpleMode::Kind::Boundary;
  return std::nullopt;
}

template <class T>
const std::optional<SectionError>& section_error(const Outcome<T>& o) {
  return o.error;
}

int emit(const Options& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.out_path.empty()) {
    out << text;
    return kPass;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << o.out_path << "\n";
    return kUsage;
  }
  file << text;
  return kPass;
}

int run_report(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  const GraphDocument doc = load(o);
  ReportRequest req;
  req.m = o.m;
  req.m_prime = o.m_prime;
  req.mode = parse_mode(o.mode);
  req.workers = o.workers;

  if (command == "validate") req.section_mask = 0;
  if (command == "genus") req.section_mask = sections::kGenus;
  if (command == "homology") req.section_mask = sections::kHomology;
  if (command == "identities") req.section_mask = sections::kIdentities;
  if (command == "semisimple") {
    req.section_mask = sections::kSemiSimple;
    if (!req.m && !(doc.metadata && doc.metadata->m)) throw UsageError{"semisimple needs --m"};
  }

  const AnalysisReport report = build_report(doc, req);

  // Targeted subcommands treat a failed precondition as an input error.
  std::optional<SectionError> failure;
  if (command == "genus") failure = section_error(report.genus);
  if (command == "homology") failure = section_error(report.homology);
  if (command == "identities") failure = section_error(report.identities);
  if (command == "semisimple") failure = section_error(report.semisimple);
  if (failure) {
    err << "error: " << failure->code << ": " << failure->message << "\n";
    return kUsage;
  }

  const std::string text = o.format == "json" ? to_json(report) : to_text(report);
  if (int rc = emit(o, text, out, err); rc != kPass) return rc;
  return report.all_pass() ? kPass : kCertificateFailed;
}

int run_handles(const Options& o, std::ostream& out, std::ostream& err) {
  int beta2 = 0;
  if (o.beta2) {
    beta2 = *o.beta2;
  } else {
    const GraphDocument doc = load(o);
    beta2 = homology_of(doc.graph()).betti.at(2);
  }
  const bool boundary = o.mode == "boundary";
  const DecompositionReport d = boundary ? predict_boundary(beta2) : predict_closed(beta2);
  std::vector<Certificate> certs;
  if (boundary) {
    certs.push_back({"chi_consistency", d.chi_certificate});
  } else {
    bool ok = true;
    for (const auto& v : d.variants) ok = ok && chi_consistency(v.handles, beta2);
    certs.push_back({"chi_consistency", ok});
  }
  const std::string text = o.format == "json" ? to_json(d, certs) : to_text(d, certs);
  if (int rc = emit(o, text, out, err); rc != kPass) return rc;
  const bool all = std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.pass; });
  return all ? kPass : kCertificateFailed;
}

int run_catalog_list(const Options& o, std::ostream& out, std::ostream& err) {
  std::string text;
  if (o.format == "json") {
    text = "[";
    const auto names = catalog_names();
    for (std::size_t i = 0; i < names.size(); ++i) text += (i ? ", \"" : "\"") + names[i] + "\"";
    text += "]\n";
  } else {
    for (const auto& name : catalog_names()) {
      const auto doc = catalog(name);
      text += name + "  " + std::to_string(doc.vertices) + " vertices  " + doc.metadata->expected_manifold.value_or("") + "\n";
    }
  }
  return emit(o, text, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystallization analysis toolkit", "gemkit"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Parse and validate a graph"},
      {"report", "Full analysis report"},
      {"genus", "Genus table over all cyclic color orders"},
      {"homology", "Integral homology of the associated complex"},
      {"semisimple", "Check the semi-simple condition for rank m"},
      {"identities", "Evaluate the component-count and genus identities"},
      {"handles", "Predicted handle decompositions"},
      {"catalog-list", "List the embedded catalog"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "catalog-list") {
      sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
      sub->add_option("--out", o.out_path, "Write output to a file");
      continue;
    }
    auto* input = sub->add_option("--input", o.input, "Graph document (JSON)");
    auto* cat = sub->add_option("--catalog", o.catalog_name, "Catalog entry name");
    input->excludes(cat);
    sub->add_option("--m", o.m, "Rank of pi_1(M)");
    sub->add_option("--m-prime", o.m_prime, "Rank of pi_1 of the singular manifold");
    sub->add_option("--beta2", o.beta2, "Second Betti number");
    sub->add_option("--mode", o.mode, "closed or boundary")->check(CLI::IsMember({"closed", "boundary"}));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out_path, "Write output to a file");
    sub->add_option("--workers", o.workers, "Worker threads for internal fan-out")->check(CLI::Range(1, 256));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "catalog-list") return run_catalog_list(o, out, err);
    if (command == "handles") return run_handles(o, out, err);
    return run_report(command, o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
  } catch (const ValidationError& e) {
    err << "error: invalid graph\n";
    for (const auto& issue : e.issues()) err << "  " << issue.message() << "\n";
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace gemkit
