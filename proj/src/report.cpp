#include "p4spec/report.hpp"

#include <sstream>

#include "p4spec/formats.hpp"

namespace p4spec {

namespace {

Json vertex_list(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) {
    out.push_back(v);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const ExactSpectrum& s) {
  Json roots = Json::array();
  for (const auto& r : s.integer_roots) {
    roots.push_back(Json::array({r.value, r.multiplicity}));
  }
  Json residual = Json::array();
  for (const auto& c : s.residual.coefficient_strings()) {
    residual.push_back(c);
  }
  Json out;
  out["integer_roots"] = std::move(roots);
  out["residual"] = std::move(residual);
  out["residual_degree"] = s.residual.degree();
  out["l_integral"] = s.is_integral();
  return out;
}

Json to_json(const SpiderSpec& s) {
  Json out;
  out["kind"] = std::string(to_string(s.kind));
  out["k"] = s.k();
  out["headless"] = s.headless();
  out["legs"] = vertex_list(s.legs);
  out["body"] = vertex_list(s.body);
  out["head"] = vertex_list(s.head);
  return out;
}

Json to_json(const ClassificationReport& r) {
  Json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["is_cograph"] = r.is_cograph;
  out["is_p4_sparse"] = r.is_p4_sparse;
  out["is_p4_extendible"] = r.is_p4_extendible;
  out["is_p4_reducible"] = r.is_p4_reducible;
  out["spider"] = r.spider ? to_json(*r.spider) : Json(nullptr);
  out["is_p4_connected"] = r.is_p4_connected;
  out["l_integral"] = r.l_integral;
  out["exact_spectrum"] = to_json(r.spectrum);
  out["p4_count"] = r.p4_count;
  return out;
}

Json to_json(const ClosedFormSpectrum& s) {
  Json eigenvalues = Json::array();
  for (const auto& e : s.eigenvalues) {
    Json item;
    item["numerator"] = e.numerator;
    item["radicand"] = e.radicand;
    item["sign"] = e.sign;
    item["multiplicity"] = e.multiplicity;
    item["expression"] = format_surd(e);
    item["value"] = e.value();
    eigenvalues.push_back(std::move(item));
  }
  Json out;
  out["k"] = s.k;
  out["j"] = s.j;
  out["eigenvalues"] = std::move(eigenvalues);
  return out;
}

Json to_json(const TheoremResult& r) {
  Json out;
  out["id"] = std::string(1, r.id);
  out["statement"] = r.statement;
  out["population"] = r.population;
  out["checked"] = r.checked;
  out["applicable"] = r.applicable;
  out["violations"] = r.violations;
  out["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  out["passed"] = r.passed();
  return out;
}

Json to_json(const VerifyReport& r, bool timing) {
  const auto& o = r.options;
  Json out;
  out["mode"] = r.sampled() ? "sample" : "exhaustive";
  out["n_max"] = o.n_max;
  if (o.sample) {
    out["sample"] = *o.sample;
    out["seed"] = o.seed;
  }
  out["shards"] = o.shards;
  out["shard_id"] = o.shard_id;
  Json results = Json::array();
  for (const auto& t : r.results) {
    results.push_back(to_json(t));
  }
  out["results"] = std::move(results);
  out["passed"] = r.passed();
  if (timing) {
    Json per = Json::object();
    for (const auto& t : r.results) {
      per[std::string(1, t.id)] = t.wall_time_ms;
    }
    out["metadata"] = {{"wall_time_ms", r.wall_time_ms}, {"theorem_wall_time_ms", std::move(per)}};
  }
  return out;
}

Json numeric_json(const std::vector<double>& eigenvalues) {
  Json out = Json::array();
  for (double v : eigenvalues) {
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string format_surd(const SurdEigenvalue& e) {
  std::ostringstream os;
  if (e.sign == 0 || e.radicand == 0) {
    if (e.numerator % 2 == 0) {
      os << e.numerator / 2;
    } else {
      os << e.numerator << "/2";
    }
  } else {
    os << '(' << e.numerator << (e.sign > 0 ? " + " : " - ") << "sqrt(" << e.radicand << "))/2";
  }
  return os.str();
}

std::string format_text(const ExactSpectrum& s) {
  std::ostringstream os;
  os << "integer eigenvalues:";
  if (s.integer_roots.empty()) {
    os << " none";
  }
  for (const auto& r : s.integer_roots) {
    os << ' ' << r.value;
    if (r.multiplicity > 1) {
      os << '^' << r.multiplicity;
    }
  }
  os << "\nresidual: " << s.residual.to_string() << " (degree " << s.residual.degree() << ")\n";
  os << "L-integral: " << yes_no(s.is_integral()) << '\n';
  return os.str();
}

std::string format_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "vertices: " << r.n << "\nedges: " << r.m << "\ninduced P4s: " << r.p4_count << '\n';
  os << "cograph: " << yes_no(r.is_cograph) << '\n';
  os << "P4-sparse: " << yes_no(r.is_p4_sparse) << '\n';
  os << "P4-extendible: " << yes_no(r.is_p4_extendible) << '\n';
  os << "P4-reducible: " << yes_no(r.is_p4_reducible) << '\n';
  os << "p4-connected: " << yes_no(r.is_p4_connected) << '\n';
  os << "spider: ";
  if (r.spider) {
    os << to_string(r.spider->kind) << ", k = " << r.spider->k();
    if (r.spider->headless()) {
      os << ", headless";
    } else {
      os << ", head of " << r.spider->head.size();
    }
    os << '\n';
  } else {
    os << "no\n";
  }
  os << format_text(r.spectrum);
  return os.str();
}

std::string format_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& t : r.results) {
    os << t.id << ' ' << (t.passed() ? "PASS" : "FAIL") << "  checked " << t.checked << ", applicable "
       << t.applicable << ", violations " << t.violations;
    if (t.counterexample) {
      os << ", first counterexample " << *t.counterexample;
    }
    os << "  [" << t.statement << "]\n";
  }
  return os.str();
}

}  // namespace p4spec
