#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sta/errors.hpp"
#include "sta/io.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sta::DomainError("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string matrix_str(const sta::Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += "\n";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += sta::coeff_to_string(m.at(i, j));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for graph groupoid algebras"};
  app.require_subcommand(1);

  std::string graph_file, seed_cycles;
  int depth = 8;
  unsigned precision = 40;
  std::vector<std::string> args;
  auto add_common = [&](CLI::App* sub, int positionals) {
    sub->add_option("-g,--graph", graph_file, "graph file");
    sub->add_option("--depth", depth, "search / verification depth");
    sub->add_option("--seed-cycles", seed_cycles, "two cycles c1,c2 for aperiodic routing");
    sub->add_option("--precision", precision, "enclosure precision in bits");
    sub->add_option("args", args, "inputs")->expected(positionals);
  };

  add_common(app.add_subcommand("mul", "product of two elements"), 2);
  add_common(app.add_subcommand("star", "involution"), 1);
  add_common(app.add_subcommand("nf", "canonical normal form"), 1);
  add_common(app.add_subcommand("eval", "evaluate at a groupoid element (x,n,y)"), 2);
  add_common(app.add_subcommand("inorm", "I-norm"), 1);
  add_common(app.add_subcommand("component", "homogeneous component of a degree"), 2);
  add_common(app.add_subcommand("lpa-reduce", "Leavitt word to spanning form"), 1);
  add_common(app.add_subcommand("phi", "Leavitt word to groupoid algebra"), 1);
  add_common(app.add_subcommand("check-rep", "validate a representation file"), 1);
  add_common(app.add_subcommand("pi", "apply the induced homomorphism"), 2);
  add_common(app.add_subcommand("cert-graded", "graded uniqueness certificate"), 1);
  add_common(app.add_subcommand("cert-ck", "Cuntz-Krieger uniqueness certificate"), 1);
  add_common(app.add_subcommand("verify", "check a certificate file against an element"), 2);
  add_common(app.add_subcommand("dr-mul", "compose two Deaconu-Renault basics"), 3);
  add_common(app.add_subcommand("dr-translate", "translate a basic to the graph model"), 2);
  add_common(app.add_subcommand("cond-l", "does every cycle have an entrance?"), 0);

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();

  try {
    if (cmd == "dr-mul") {
      sta::Sft sft = sta::Sft::parse(slurp(args[0]));
      auto out = dr_mul(parse_dr_basic(args[1], sft), parse_dr_basic(args[2], sft));
      if (out.empty()) {
        std::cout << "empty\n";
      } else {
        for (size_t i = 0; i < out.size(); ++i)
          std::cout << (i ? " u " : "") << out[i].str() << (i + 1 == out.size() ? "\n" : "");
      }
      return 0;
    }

    sta::Graph g = sta::Graph::parse(slurp(graph_file));

    if (cmd == "mul") {
      std::cout << print_element(mul(parse_element(args[0], g), parse_element(args[1], g)))
                << "\n";
    } else if (cmd == "star") {
      std::cout << print_element(star(parse_element(args[0], g))) << "\n";
    } else if (cmd == "nf") {
      std::cout << print_element(parse_element(args[0], g)) << "\n";
    } else if (cmd == "eval") {
      std::cout << coeff_to_string(
                       eval(parse_element(args[0], g), sta::parse_groupoid_element(args[1], g)))
                << "\n";
    } else if (cmd == "inorm") {
      std::cout << print_norm(i_norm(parse_element(args[0], g), precision)) << "\n";
    } else if (cmd == "component") {
      std::cout << print_element(
                       homogeneous_component(parse_element(args[0], g), std::stoi(args[1])))
                << "\n";
    } else if (cmd == "lpa-reduce") {
      std::cout << print_lpa(reduce_lpa(g, parse_lpa(args[0], g))) << "\n";
    } else if (cmd == "phi") {
      std::cout << print_element(phi(g, parse_lpa(args[0], g))) << "\n";
    } else if (cmd == "check-rep") {
      auto a = sta::parse_rep(slurp(args[0]), g);
      std::cout << check_axioms(a, depth).str() << "\n";
    } else if (cmd == "pi") {
      auto a = sta::parse_rep(slurp(args[0]), g);
      auto f = parse_element(args[1], g);
      auto report = check_axioms(a, depth);
      if (!report.passed) throw sta::DomainError("axioms fail: " + report.str());
      std::cout << matrix_str(extend_pi(a, f, depth)) << "\n";
    } else if (cmd == "cert-graded") {
      std::cout << print_certificate(sta::graded_certificate(parse_element(args[0], g)));
    } else if (cmd == "cert-ck") {
      sta::Point seed;
      if (!seed_cycles.empty()) {
        auto comma = seed_cycles.find(',');
        if (comma == std::string::npos)
          throw sta::DomainError("--seed-cycles wants two comma-separated cycles");
        sta::Path c1 = sta::parse_path(seed_cycles.substr(0, comma), g);
        sta::Path c2 = sta::parse_path(seed_cycles.substr(comma + 1), g);
        seed = sta::Point(sta::Path(&g, c1.range_vertex()), sta::FibTail{c1, c2});
      } else {
        seed = sta::aperiodic_point_at(g, 0);
      }
      auto res = sta::ck_certificate(parse_element(args[0], g), seed, depth);
      if (!res.condition_l_holds)
        std::cerr << "warning: a cycle without an entrance exists; the search may not terminate\n";
      if (res.cert)
        std::cout << print_certificate(*res.cert);
      else
        std::cout << "exhausted " << res.depth_reached << "\n";
    } else if (cmd == "verify") {
      auto cert = sta::parse_certificate(slurp(args[0]), g);
      bool ok = verify_certificate(cert, parse_element(args[1], g));
      std::cout << (ok ? "valid" : "invalid") << "\n";
    } else if (cmd == "dr-translate") {
      sta::Sft sft = sta::Sft::parse(slurp(args[0]));
      std::cout << print_cylset(dr_to_graph(parse_dr_basic(args[1], sft), g)) << "\n";
    } else if (cmd == "cond-l") {
      std::cout << (condition_L(g) ? "true" : "false") << "\n";
    }
  } catch (const sta::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const sta::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
