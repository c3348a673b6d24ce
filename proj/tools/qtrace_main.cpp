#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qtrace/formats.hpp"
#include "qtrace/surface.hpp"
#include "qtrace/verify.hpp"

using namespace qtrace;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParse = 2;

// Thrown for input that cannot be read or parsed; carries the full diagnostic.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot read file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError{path + ":" + e.what()};
  }
}

int cmd_trace(const std::string& surface_path, const std::string& link_path, int n_flag, bool classical,
              const std::string& out_path) {
  SurfaceFile sf = parse_file(surface_path, parse_surface);
  int n = n_flag > 0 ? n_flag : sf.n;
  GoodPositionLink link;
  try {
    link = parse_file(link_path, [&](const std::string& t) { return parse_link(t, sf.triangulation); });
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    std::cerr << link_path << ": " << e.what() << "\n";
    return kInvalid;
  }
  Diagnostics d = validate_good_position(link, sf.triangulation, n);
  if (!d.ok) {
    std::cerr << link_path << ": link not in good position: " << d.message << "\n";
    return kInvalid;
  }
  SurfaceTorusSpec spec(sf.triangulation, n);
  TracePolynomial p = quantum_trace(link, spec);
  std::string text = emit_polynomial(polynomial_file(p.glued ? *p.glued : p.tensor, classical));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << out_path << ": cannot write file\n";
      return kInvalid;
    }
  }
  return kOk;
}

int cmd_verify(const std::string& suite, int n) {
  std::vector<CheckResult> results = run_suite(suite, n);
  std::cout << format_report(results);
  for (const CheckResult& r : results)
    if (!r.pass) return kInvalid;
  return kOk;
}

int cmd_explain(const std::string& path) {
  std::cout << explain(parse_file(path, parse_polynomial));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum trace polynomials of stated links in triangulated punctured surfaces"};
  app.require_subcommand(1);

  std::string surface, link, out, poly, suite = "all";
  int n = 0;
  bool classical = false;

  CLI::App* trace = app.add_subcommand("trace", "Compute the quantum trace of a link in good position");
  trace->add_option("surface", surface, "Surface file")->required();
  trace->add_option("link", link, "Link file")->required();
  trace->add_option("--n", n, "Rank n of SL_n (defaults to the surface file)")->check(CLI::Range(2, 16));
  trace->add_flag("--classical", classical, "Emit the classical specialization h = 1");
  trace->add_option("--out", out, "Output path (default: standard output)");

  int verify_n = 3;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "matrices, moves, skein, duality or all")
      ->check(CLI::IsMember({"matrices", "moves", "skein", "duality", "all"}));
  verify->add_option("--n", verify_n, "Rank n");

  CLI::App* expl = app.add_subcommand("explain", "Pretty-print a polynomial file");
  expl->add_option("polynomial", poly, "Polynomial file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*trace) return cmd_trace(surface, link, n, classical, out);
    if (*verify) return cmd_verify(suite, verify_n);
    return cmd_explain(poly);
  } catch (const InputError& e) {
    std::cerr << e.message << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
