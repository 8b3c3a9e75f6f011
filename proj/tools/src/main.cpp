#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "supint_io/commands.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace supint::io;
  CLI::App app{"supint: free superintegrable systems in the plane"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--tol", g.tol, "Numeric tolerance")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Parallel classification jobs")->check(CLI::PositiveNumber)->capture_default_str();

  std::string input = "-";
  std::vector<std::string> inputs;

  auto* wedge = app.add_subcommand("wedge", "Pluecker point of a tensor pair");
  wedge->add_option("input", input, "JSON file with two tensors ('-' for stdin)");

  ClassifyOptions copt;
  std::string svg_form = "euclidean";
  auto* classify = app.add_subcommand("classify", "Full classification report");
  classify->add_option("inputs", inputs, "JSON files with a point, tensor pair or (D, A, B)");
  classify->add_flag("--normal-form", copt.normal_form, "Reduce to the normal-form table");
  classify->add_option("--fibre-check", copt.fibre_order, "Series order of a fibre check");
  classify->add_option("--svg", copt.svg_path, "Write the line arrangement as SVG");
  classify->add_option("--real-form", svg_form, "SVG real slice")->check(CLI::IsMember({"euclidean", "minkowski"}));

  std::string label;
  int samples = 10;
  auto* enumerate = app.add_subcommand("enumerate", "Random points of a parametrized class");
  enumerate->add_option("--class", label, "Class label, e.g. \"(0,11,0)\"")->required();
  enumerate->add_option("--samples", samples, "Number of points")->capture_default_str();

  auto* nf = app.add_subcommand("normal-form", "Isometry to the normal-form table");
  nf->add_option("input", input, "JSON point file");

  FibreOptions fopt;
  auto* fibre = app.add_subcommand("fibre-check", "Series solution of the prolongation system");
  fibre->add_option("input", input, "JSON point file");
  fibre->add_option("--order", fopt.order, "Series order (>= 4)")->capture_default_str();
  fibre->add_option("--base", fopt.base, "Base point 'z0,w0'");
  fibre->add_option("--potential", fopt.potentials, "Candidate potential (prefix grammar); repeatable");

  PoissonOptions popt;
  auto* poisson = app.add_subcommand("poisson-check", "Poisson brackets {F, H} at random phase points");
  poisson->add_option("input", input, "JSON with tensors and potential");
  poisson->add_option("--potential", popt.potential, "Potential overriding the input");
  poisson->add_option("--samples", popt.samples, "Phase samples")->capture_default_str();

  auto* audit = app.add_subcommand("tables-audit", "Re-derive the normal-form and potential tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }
  copt.svg_form = svg_form == "minkowski" ? supint::RealForm::minkowski : supint::RealForm::euclidean;

  try {
    if (*wedge) return cmd_wedge(g, slurp(input), std::cout, std::cerr);
    if (*classify) {
      if (inputs.empty()) inputs.push_back("-");
      std::vector<std::string> texts;
      for (const auto& p : inputs) texts.push_back(slurp(p));
      return cmd_classify(g, texts, copt, std::cout, std::cerr);
    }
    if (*enumerate) return cmd_enumerate(g, label, samples, std::cout, std::cerr);
    if (*nf) return cmd_normal_form(g, slurp(input), std::cout, std::cerr);
    if (*fibre) return cmd_fibre_check(g, slurp(input), fopt, std::cout, std::cerr);
    if (*poisson) return cmd_poisson_check(g, slurp(input), popt, std::cout, std::cerr);
    if (*audit) return cmd_tables_audit(g, std::cout, std::cerr);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
