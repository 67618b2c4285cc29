#include "stagedtrees/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "stagedtrees/analyze.hpp"
#include "stagedtrees/enumerate.hpp"
#include "stagedtrees/errors.hpp"
#include "stagedtrees/ideal.hpp"
#include "stagedtrees/tree_io.hpp"

namespace stagedtrees {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

// A polynomial given inline or through --file.
struct PolynomialInput {
  std::string inline_text;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* pos = cmd->add_option("polynomial", inline_text, "polynomial text, e.g. \"x*y + x*z + w\"");
    auto* opt = cmd->add_option("--file,-f", file, "read the polynomial from a file");
    pos->excludes(opt);
  }

  std::string text() const {
    if (!file.empty()) return read_file(file);
    if (inline_text.empty()) throw IoError("no polynomial given (pass it inline or with --file)");
    return inline_text;
  }
};

nlohmann::json components_json(const std::vector<PrimeComponent>& primes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : primes) {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& x : p.vars) names.push_back(x.name());
    out.push_back(std::move(names));
  }
  return out;
}

std::string numbered(const char* prefix, std::size_t i) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%04zu.dot", prefix, i);
  return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Staged trees from interpolating polynomials"};
  app.name("stagedtrees");
  app.require_subcommand(1);

  // interpolate
  auto* interpolate = app.add_subcommand("interpolate", "interpolating (or network) polynomial of a tree");
  std::string tree_file;
  std::string nested;
  std::string weights_file;
  auto* tree_opt = interpolate->add_option("tree", tree_file, "tree JSON file");
  auto* nested_opt = interpolate->add_option("--nested", nested, "tree as a nested representation");
  tree_opt->excludes(nested_opt);
  interpolate->add_option("--network", weights_file, "leaf weights JSON; prints the network polynomial");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "minimal primes of the ideal generated by the support");
  PolynomialInput decompose_in;
  decompose_in.attach(decompose);
  bool oracle = false;
  decompose->add_flag("--oracle", oracle, "use exhaustive subset search instead of Berge's algorithm");

  // class
  auto* klass = app.add_subcommand("class", "all staged trees with the given interpolating polynomial");
  PolynomialInput class_in;
  class_in.attach(klass);
  bool count_only = false;
  bool include_unstaged = false;
  std::string dot_dir;
  std::string class_format = "json";
  unsigned jobs = 1;
  klass->add_flag("--count-only", count_only, "print only the number of trees");
  klass->add_flag("--include-unstaged", include_unstaged,
                  "also list labeled event trees with this polynomial that are not staged");
  klass->add_option("--dot-dir", dot_dir, "write one DOT file per tree into this directory");
  klass->add_option("--format", class_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  klass->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  // check
  auto* check = app.add_subcommand("check", "necessary conditions for a tree to exist");
  PolynomialInput check_in;
  check_in.attach(check);

  // incidence
  auto* incidence = app.add_subcommand("incidence", "variable-by-monomial incidence matrix as CSV");
  PolynomialInput incidence_in;
  incidence_in.attach(incidence);
  std::vector<std::string> var_order;
  incidence->add_option("--var-order", var_order, "row order, comma separated")->delimiter(',')->allow_extra_args(false);

  // complex
  auto* complex = app.add_subcommand("complex", "simplicial complex components and saturation");
  PolynomialInput complex_in;
  complex_in.attach(complex);
  std::string complex_format = "json";
  complex->add_option("--format", complex_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  std::vector<const char*> argv{"stagedtrees"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_syntax;
  }

  try {
    if (*interpolate) {
      EventTree t;
      if (!nested.empty()) {
        t = from_nested(nested);
      } else if (!tree_file.empty()) {
        t = tree_from_json_text(read_file(tree_file));
      } else {
        throw IoError("no tree given (pass a JSON file or --nested)");
      }
      if (!weights_file.empty()) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(read_file(weights_file));
        } catch (const nlohmann::json::parse_error& e) {
          throw SyntaxError(e.byte, e.what());
        }
        out << network_polynomial(t, weighting_from_json(j)).to_string() << '\n';
      } else {
        out << interpolating_polynomial(t).to_string() << '\n';
      }
    } else if (*decompose) {
      const Polynomial f = parse_polynomial(decompose_in.text());
      const IdealBasis basis = interreduce(f.support());
      const auto primes = oracle ? minimal_primes_bruteforce(basis) : minimal_primes(basis);
      out << components_json(primes).dump() << '\n';
    } else if (*klass) {
      const SupportSet support = SupportSet::from_polynomial(parse_polynomial(class_in.text()));
      const EquivalenceClass cls = staged_trees(support, EnumerateOptions{jobs});
      std::vector<EventTree> unstaged;
      if (include_unstaged) {
        for (auto& t : labeled_event_trees(support)) {
          if (!is_staged(t)) unstaged.push_back(std::move(t));
        }
      }
      if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (std::size_t i = 0; i < cls.size(); ++i) {
          write_file(std::filesystem::path(dot_dir) / numbered("tree", i), tree_to_dot(cls.trees()[i]));
        }
        for (std::size_t i = 0; i < unstaged.size(); ++i) {
          write_file(std::filesystem::path(dot_dir) / numbered("unstaged", i), tree_to_dot(unstaged[i]));
        }
      }
      if (count_only) {
        if (include_unstaged) {
          out << "staged " << cls.size() << "\nunstaged " << unstaged.size() << '\n';
        } else {
          out << cls.size() << '\n';
        }
      } else if (class_format == "text") {
        for (const auto& s : cls.canonical_forms()) out << s << '\n';
        for (const auto& t : unstaged) out << "unstaged: " << canonical_form(t) << '\n';
      } else {
        nlohmann::json trees = nlohmann::json::array();
        for (std::size_t i = 0; i < cls.size(); ++i) {
          trees.push_back({{"nested", cls.canonical_forms()[i]}, {"tree", tree_to_json(cls.trees()[i])}});
        }
        nlohmann::json doc{{"count", cls.size()}, {"trees", std::move(trees)}};
        if (include_unstaged) {
          nlohmann::json extra = nlohmann::json::array();
          for (const auto& t : unstaged) extra.push_back({{"nested", canonical_form(t)}, {"tree", tree_to_json(t)}});
          doc["unstaged"] = std::move(extra);
        }
        out << doc.dump(2) << '\n';
      }
    } else if (*check) {
      out << screen(parse_polynomial_general(check_in.text())).to_json().dump(2) << '\n';
    } else if (*incidence) {
      const Polynomial f = parse_polynomial_general(incidence_in.text());
      std::vector<Indeterminate> order;
      for (const auto& name : var_order) order.emplace_back(name);
      out << incidence_matrix(f, order).to_csv();
    } else if (*complex) {
      const SimplicialComplex sc = simplicial_complex(parse_polynomial(complex_in.text()));
      if (complex_format == "dot") {
        out << complex_to_dot(sc);
      } else {
        nlohmann::json doc = saturation_test(sc).to_json();
        nlohmann::json facets = nlohmann::json::array();
        for (const auto& f : sc.facets) {
          nlohmann::json names = nlohmann::json::array();
          for (const auto& v : f) names.push_back(v.name());
          facets.push_back(std::move(names));
        }
        doc["facets"] = std::move(facets);
        out << doc.dump(2) << '\n';
      }
    }
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return exit_syntax;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_syntax;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_syntax;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_ok;
}

}  // namespace stagedtrees
