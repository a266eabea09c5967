// p4spec: Laplacian integrality and P4-structure analysis from the command line.
//
// Exit codes: 0 success, 1 theorem violation, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "p4spec/constructions.hpp"
#include "p4spec/dsl.hpp"
#include "p4spec/formats.hpp"
#include "p4spec/p4_structure.hpp"
#include "p4spec/report.hpp"
#include "p4spec/spectral.hpp"
#include "p4spec/theorems.hpp"

namespace {

using namespace p4spec;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

// Raised for bad input that is not a parse error of the graph text itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDocument load(const std::string& path, const std::string& format) {
  std::optional<SourceFormat> fmt;
  if (!format.empty()) {
    fmt = parse_source_format(format);
    if (!fmt) {
      throw InputError("unknown input format '" + format + "' (expected edges, g6 or dsl)");
    }
  }
  GraphDocument doc = load_document(read_source(path), fmt);
  for (const auto& w : doc.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  return doc;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string path;
  std::string format;
  bool numeric = false;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const GraphDocument doc = load(a.path, a.format);
  const ClassificationReport report = classify(doc.graph);
  std::vector<double> eigenvalues;
  if (a.numeric) {
    eigenvalues = numeric_spectrum(doc.graph);
  }
  if (a.json) {
    Json out;
    out["input_format"] = std::string(to_string(doc.format));
    out.update(to_json(report));
    if (a.numeric) {
      out["numeric_spectrum"] = numeric_json(eigenvalues);
    }
    print_json(out);
    return kExitOk;
  }
  std::cout << format_text(report);
  if (a.numeric) {
    std::cout << "numeric eigenvalues:";
    for (double v : eigenvalues) {
      std::cout << ' ' << v;
    }
    std::cout << '\n';
  }
  return kExitOk;
}

struct SpectrumArgs {
  std::string path;
  std::string format;
  std::string mode = "exact";
  double tol = 1e-9;
};

int cmd_spectrum(const SpectrumArgs& a) {
  const GraphDocument doc = load(a.path, a.format);
  const Graph& g = doc.graph;
  Json out;
  out["mode"] = a.mode;
  out["n"] = g.order();
  if (a.mode == "exact") {
    out.update(to_json(exact_spectrum(g)));
  } else if (a.mode == "numeric") {
    out["tolerance"] = a.tol;
    out["eigenvalues"] = numeric_json(numeric_spectrum(g, a.tol));
  } else {
    const auto spider = recognize_spider(g);
    bool eligible = spider && spider->kind == SpiderKind::thin;
    if (eligible) {
      for (std::size_t i = 0; i < spider->head.size() && eligible; ++i) {
        for (std::size_t r = i + 1; r < spider->head.size(); ++r) {
          eligible = eligible && !g.adjacent(spider->head[i], spider->head[r]);
        }
      }
    }
    if (!eligible) {
      throw InputError("closed-form mode needs a thin spider with an edgeless (or empty) head");
    }
    const auto cf = thin_spider_closed_form(spider->k(), static_cast<int>(spider->head.size()));
    const bool matches = cf.characteristic_polynomial() == laplacian_char_poly(g);
    out.update(to_json(cf));
    out["matches_exact"] = matches;
    if (!matches) {
      print_json(out);
      std::cerr << "error: closed form disagrees with the exact characteristic polynomial\n";
      return kExitViolation;
    }
  }
  print_json(out);
  return kExitOk;
}

struct GenerateArgs {
  std::string expr;
  std::string format = "edges";
};

int cmd_generate(const GenerateArgs& a) {
  const Graph g = parse_dsl(a.expr);
  if (a.format == "g6") {
    std::cout << to_graph6(g) << '\n';
  } else {
    std::cout << write_edge_list(g);
  }
  return kExitOk;
}

struct VerifyArgs {
  int n_max = 6;
  std::string theorems;
  int shards = 1;
  int shard_id = 0;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool json = false;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& a, bool sample_given) {
  VerifyOptions o;
  o.n_max = a.n_max;
  if (!a.theorems.empty()) {
    o.theorems.clear();
    std::stringstream ss(a.theorems);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.size() != 1) {
        throw InputError("theorem ids are single letters separated by commas, got '" + item + "'");
      }
      o.theorems += item;
    }
  }
  o.shards = a.shards;
  o.shard_id = a.shard_id;
  o.seed = a.seed;
  o.jobs = a.jobs;
  if (sample_given) {
    o.sample = a.sample;
  } else if (a.n_max > kExhaustiveMaxOrder) {
    o.sample = kDefaultSampleCount;
  }
  try {
    validate(o);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const VerifyReport report = verify_theorems(o);
  if (a.json) {
    print_json(to_json(report, !a.no_timing));
  } else {
    std::cout << format_text(report);
    if (!a.no_timing) {
      std::cout << "wall time " << report.wall_time_ms << " ms\n";
    }
  }
  return report.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian integrality and P4-structure analysis of simple graphs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Classify a graph and compute its exact Laplacian spectrum");
  an->add_option("file", analyze.path, "Edge list, graph6 or DSL file ('-' for stdin)")->required();
  an->add_option("--input-format", analyze.format, "Force the input format: edges, g6 or dsl");
  an->add_flag("--numeric", analyze.numeric, "Also report floating-point eigenvalues");
  an->add_flag("--json", analyze.json, "Emit JSON");

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Laplacian spectrum in exact, numeric or closed form");
  sp->add_option("file", spectrum.path, "Edge list, graph6 or DSL file ('-' for stdin)")->required();
  sp->add_option("--input-format", spectrum.format, "Force the input format: edges, g6 or dsl");
  sp->add_option("--mode", spectrum.mode, "exact, numeric or closed-form")
      ->check(CLI::IsMember({"exact", "numeric", "closed-form"}));
  sp->add_option("--tol", spectrum.tol, "Jacobi convergence tolerance for numeric mode")
      ->check(CLI::PositiveNumber);

  GenerateArgs generate;
  auto* ge = app.add_subcommand("generate", "Build a graph from a construction expression");
  ge->add_option("expr", generate.expr, "e.g. \"spider(thin,k=4,head=E3)\"")->required();
  ge->add_option("--format", generate.format, "Output format")->check(CLI::IsMember({"g6", "edges"}));

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify-theorems", "Check the structural theorems over small graphs");
  ve->add_option("--n-max", verify.n_max, "Largest vertex count")->required();
  ve->add_option("--theorems", verify.theorems, "Comma-separated subset of a..h (default all)");
  auto* shards = ve->add_option("--shards", verify.shards, "Split the work into K shards")->check(CLI::PositiveNumber);
  ve->add_option("--shard-id", verify.shard_id, "Shard to run, 0-based")->needs(shards);
  auto* sample = ve->add_option("--sample", verify.sample, "Sample M uniform labeled graphs at n = n-max");
  ve->add_option("--seed", verify.seed, "Seed for sampling");
  ve->add_option("--jobs", verify.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  ve->add_flag("--json", verify.json, "Emit JSON");
  ve->add_flag("--no-timing", verify.no_timing, "Omit wall-clock times so output is reproducible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (an->parsed()) {
      return cmd_analyze(analyze);
    }
    if (sp->parsed()) {
      return cmd_spectrum(spectrum);
    }
    if (ge->parsed()) {
      return cmd_generate(generate);
    }
    return cmd_verify(verify, sample->count() > 0);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInput;
}
