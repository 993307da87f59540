#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dissect/dsl.hpp"
#include "dissect/verify.hpp"

namespace {

int emit(const dissect::ReportDocument& doc, const std::string& format,
         const std::string& out_path) {
  std::string text =
      format == "json" ? dissect::emit_json(doc) : dissect::emit_text(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return doc.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for dissecting pairs of commuting involutions on real Lie algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");
  app.add_option("--jobs", jobs, "Parallel pair evaluations")->capture_default_str();

  std::string spec_path;
  CLI::App* cmd_run = app.add_subcommand("run", "Execute a declaration file");
  cmd_run->add_option("file", spec_path, "Input file")->required();

  std::size_t p = 0, q = 0;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Enumerate involution pairs on so(p,q)");
  cmd_classify->add_option("--p", p, "Positive part of the signature")->required();
  cmd_classify->add_option("--q", q, "Negative part of the signature")->required();

  std::size_t max_n = 6;
  CLI::App* cmd_verify =
      app.add_subcommand("verify-paper", "Run the full verification battery");
  cmd_verify->add_option("--max-n", max_n, "Largest p+q to cover")->capture_default_str();

  // Allow the global flags to appear after the subcommand as well.
  for (CLI::App* sub : {cmd_run, cmd_classify, cmd_verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    dissect::ReportDocument doc;
    if (*cmd_run) {
      std::ifstream is(spec_path, std::ios::binary);
      if (!is) {
        std::cerr << "cannot read " << spec_path << "\n";
        return 2;
      }
      std::ostringstream buf;
      buf << is.rdbuf();
      dissect::dsl::SpecFile spec = dissect::dsl::parse_spec(buf.str());
      dissect::dsl::RunOptions opts;
      opts.jobs = jobs;
      doc = dissect::dsl::run(spec, opts);
    } else if (*cmd_classify) {
      doc.version = dissect::tool_version();
      std::string input = "classify so(" + std::to_string(p) + "," + std::to_string(q) + ")";
      doc.input_digest = dissect::digest(input);
      doc.records = dissect::verify::enumerate_dissecting(p, q, jobs);
    } else {
      doc.version = dissect::tool_version();
      std::string input = "verify paper " + std::to_string(max_n);
      doc.input_digest = dissect::digest(input);
      doc.reports = dissect::verify::paper_suite(max_n, jobs);
      for (const auto& r : doc.reports)
        if (!r.pass) doc.exit_status = 1;
    }
    return emit(doc, format, out_path);
  } catch (const dissect::dsl::ParseError& e) {
    std::cerr << spec_path << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
