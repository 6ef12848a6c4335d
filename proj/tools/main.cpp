#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

#include "c1ham/fixtures.hpp"
#include "c1ham/io.hpp"
#include "c1ham/local_model.hpp"
#include "c1ham/orbit_complex.hpp"
#include "c1ham/painting.hpp"

namespace {

using namespace c1ham;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitVerdictFailure = 2;

enum class Format { Text, Graph, JsonLike };

std::string index_set_str(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string cone_str(const Cone& c) {
  std::string out = "apex " + to_string(std::span<const Rat>(c.apex));
  out += "; subspace dim " + std::to_string(c.subspace_basis.size());
  out += "; rays";
  if (c.rays.empty()) {
    out += " none";
  } else {
    for (std::size_t i = 0; i < c.rays.size(); ++i) {
      out += i ? ", " : " ";
      out += to_string(std::span<const Rat>(c.rays[i]));
      if (c.ray_open[i]) out += " (open)";
    }
  }
  return out;
}

int cmd_classify(const std::string& input, Format format, bool verbose) {
  const LocalModel model = io::load_local_model(input);
  const Classification c = classify(model);
  const bool has_cone = model.h() == 0 || (model.h_embedding() && model.weights().front().size() == model.h());

  if (format == Format::JsonLike) {
    io::Json j;
    j["tall"] = c.tall;
    j["short"] = !c.tall;
    j["exceptional"] = c.exceptional;
    io::Json xi = io::Json::array();
    for (const Int& x : c.xi_normalized) xi.push_back(io::integer_to_json(x));
    j["xi_normalized"] = std::move(xi);
    if (has_cone) j["moment_cone"] = io::cone_to_json(moment_cone(model));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "classification: " << (c.tall ? "tall" : "short") << ", "
            << (c.exceptional ? "exceptional" : "not exceptional") << "\n";
  std::cout << "xi: " << to_string(std::span<const Int>(c.xi_normalized)) << "\n";
  if (has_cone)
    std::cout << "moment cone: " << cone_str(moment_cone(model)) << "\n";
  else
    std::cout << "moment cone: unavailable (weights are not in embedded coordinates)\n";
  if (verbose) {
    std::cout << "weights:";
    for (const RatVec& w : model.weights()) std::cout << " " << to_string(std::span<const Rat>(w));
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_decompose(const std::string& input, Format format) {
  const LocalModel model = io::load_local_model(input);
  const std::vector<CaratheodoryCell> cells = moment_cone_cells(model);
  if (format == Format::JsonLike) {
    io::Json arr = io::Json::array();
    for (const CaratheodoryCell& cell : cells) {
      io::Json j;
      io::Json idx = io::Json::array();
      for (std::size_t i : cell.indices) idx.push_back(i);
      j["indices"] = std::move(idx);
      j["cell"] = io::cone_to_json(cell.cell);
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "cells: " << cells.size() << "\n";
  for (const CaratheodoryCell& cell : cells)
    std::cout << "I=" << index_set_str(cell.indices) << ": " << cone_str(cell.cell) << "\n";
  return kExitOk;
}

int cmd_catchment(const std::string& input, Format format) {
  const LocalModel model = io::load_local_model(input);
  const CatchmentPoset poset = catchment_poset(model);
  if (format == Format::Graph) {
    std::cout << "digraph catchment {\n";
    for (std::size_t i = 0; i < poset.patterns.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << index_set_str(poset.patterns[i]) << "\"];\n";
    for (const auto& [a, b] : poset.hasse) std::cout << "  n" << a << " -> n" << b << ";\n";
    std::cout << "}\n";
    return kExitOk;
  }
  if (format == Format::JsonLike) {
    io::Json j;
    io::Json pats = io::Json::array();
    for (const IndexSet& p : poset.patterns) {
      io::Json q = io::Json::array();
      for (std::size_t i : p) q.push_back(i);
      pats.push_back(std::move(q));
    }
    j["patterns"] = std::move(pats);
    io::Json edges = io::Json::array();
    for (const auto& [a, b] : poset.hasse) edges.push_back(io::Json::array({a, b}));
    j["hasse"] = std::move(edges);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "orbit patterns: " << poset.patterns.size() << "\n";
  for (const IndexSet& p : poset.patterns) std::cout << index_set_str(p) << "\n";
  std::cout << "hasse:";
  if (poset.hasse.empty()) std::cout << " none";
  for (std::size_t i = 0; i < poset.hasse.size(); ++i) {
    std::cout << (i ? ", " : " ") << index_set_str(poset.patterns[poset.hasse[i].first]) << " -> "
              << index_set_str(poset.patterns[poset.hasse[i].second]);
  }
  std::cout << "\n";
  return kExitOk;
}

void print_violations(const std::vector<Violation>& violations) {
  std::cout << "validation: " << violations.size() << " violation(s)\n";
  for (const Violation& v : violations) std::cout << "  [" << v.kind << "] " << v.message << "\n";
}

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

int cmd_core(const std::string& input, Format format) {
  const OrbitComplex oc = io::load_orbit_complex(input);
  const std::vector<Violation> violations = validate(oc);
  if (!violations.empty()) {
    print_violations(violations);
    return kExitVerdictFailure;
  }
  const std::vector<std::string> core_ids = core(oc);
  const std::vector<std::string> closure_ids = core_closure(oc);
  const std::vector<std::vector<std::string>> components = tall_core_components(oc);

  if (format == Format::Graph) {
    std::cout << "digraph core_closure {\n";
    for (const std::string& id : closure_ids) std::cout << "  \"" << id << "\";\n";
    for (const auto& [below, above] : closure_hasse(oc, closure_ids))
      std::cout << "  \"" << below << "\" -> \"" << above << "\";\n";
    std::cout << "}\n";
    return kExitOk;
  }
  if (format == Format::JsonLike) {
    io::Json j;
    j["core"] = core_ids;
    j["core_closure"] = closure_ids;
    j["tall_components"] = components;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "validation: ok\n";
  std::cout << "core: " << core_ids.size() << " orbits; closure: " << closure_ids.size()
            << " orbits; tall components: " << components.size() << "\n";
  std::cout << "core orbits: " << join(core_ids) << "\n";
  std::cout << "closure orbits: " << join(closure_ids) << "\n";
  for (std::size_t i = 0; i < components.size(); ++i)
    std::cout << "component A" << (i + 1) << ": " << join(components[i]) << "\n";
  return kExitOk;
}

int cmd_painting(const std::string& input, const std::string& skeleton_path, Format format,
                 bool verbose) {
  const OrbitComplex oc = io::load_orbit_complex(input);
  const std::vector<SkeletonComponent> skeleton = io::load_skeleton(skeleton_path);

  const std::vector<Violation> violations = validate(oc);
  if (!violations.empty()) {
    print_violations(violations);
    return kExitVerdictFailure;
  }
  std::cout << "validation: ok\n";

  bool injective = true;
  for (const InjectivityVerdict& v : component_injectivity(skeleton)) {
    std::cout << "injectivity " << v.component << ": " << (v.injective ? "ok" : "FAIL");
    if (!v.injective) std::cout << " (" << v.detail << ")";
    std::cout << "\n";
    injective = injective && v.injective;
  }

  const std::vector<std::vector<std::string>> components = tall_core_components(oc);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const HomeoVerdict verdict = component_homeo_onto_delta(oc, components[i]);
    std::cout << "component A" << (i + 1) << " {" << join(components[i]) << "}: ";
    switch (verdict.kind) {
      case HomeoVerdict::Homeo:
        std::cout << "homeomorphic onto delta_tall\n";
        break;
      case HomeoVerdict::Fails:
        std::cout << "FAIL (" << verdict.cover.message;
        if (!verdict.cover.witness.empty())
          std::cout << " at " << to_string(std::span<const Rat>(verdict.cover.witness));
        std::cout << ")\n";
        break;
      case HomeoVerdict::Unsupported:
        std::cout << "unsupported (" << verdict.cover.message << ")\n";
        break;
    }
  }

  const LocalHomeoVerdict local = local_homeo_check(oc);
  if (local.unsupported)
    std::cout << "local homeomorphism check: unsupported (" << local.detail << ")\n";
  else if (local.ok)
    std::cout << "local homeomorphism check: ok\n";
  else
    std::cout << "local homeomorphism check: FAIL at "
              << to_string(std::span<const Rat>(local.vertex)) << " (" << local.detail << ")\n";

  const CertificateResult result = triviality_certificate(oc, skeleton);
  if (const Refusal* refusal = std::get_if<Refusal>(&result)) {
    std::cout << "certificate: refused ("
              << (refusal->kind == Refusal::NecessaryConditionFails ? "painting cannot be trivial"
                                                                    : "inconclusive")
              << ")\n";
    std::cout << "  " << refusal->message << "\n";
    return kExitVerdictFailure;
  }
  const TrivialityCertificate& cert = std::get<TrivialityCertificate>(result);
  if (format == Format::JsonLike) {
    io::Json j;
    j["basepoint"] = io::vec_to_json(cert.basepoint);
    j["sections"] = cert.sections;
    io::Json labels = io::Json::array();
    for (const SectionLabel& label : cert.labels) {
      io::Json l;
      l["component"] = label.skeleton_component;
      l["section"] = label.section;
      l["covering_orbit"] = label.covering_orbit;
      labels.push_back(std::move(l));
    }
    j["labels"] = std::move(labels);
    io::Json times = io::Json::array();
    for (const Rat& t : cert.sample_times) times.push_back(io::rational_to_json(t));
    j["sample_times"] = std::move(times);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "certificate: trivial painting, basepoint "
            << to_string(std::span<const Rat>(cert.basepoint)) << "\n";
  for (const SectionLabel& label : cert.labels)
    std::cout << "  " << label.skeleton_component << " -> section " << label.section
              << " (constant at orbit " << label.covering_orbit << ")\n";
  std::cout << "sample times:";
  for (std::size_t i = 0; i < cert.sample_times.size(); ++i)
    std::cout << (i ? ", " : " ") << to_string(cert.sample_times[i]);
  std::cout << "\n";
  if (verbose) {
    for (std::size_t i = 0; i < cert.sections.size(); ++i)
      std::cout << "section A" << (i + 1) << ": " << join(cert.sections[i]) << "\n";
  }
  return kExitOk;
}

int cmd_example(const std::string& name, const std::string& output_dir) {
  const Fixture fixture = fixture_by_name(name);
  const std::filesystem::path dir(output_dir);
  std::filesystem::create_directories(dir);

  std::vector<std::string> written;
  const std::string orbits_path = (dir / (fixture.name + ".orbits.json")).string();
  io::write_file(orbits_path, io::orbit_complex_to_json(fixture.complex));
  written.push_back(orbits_path);

  const std::string skeleton_path = (dir / (fixture.name + ".skeleton.json")).string();
  io::write_file(skeleton_path, io::skeleton_to_json(fixture.skeleton));
  written.push_back(skeleton_path);

  for (const OrbitRecord& r : fixture.complex.orbits()) {
    if (!r.model) continue;
    const std::string path = (dir / (fixture.name + ".model." + r.id + ".json")).string();
    io::write_file(path, io::local_model_to_json(*r.model));
    written.push_back(path);
  }
  for (const std::string& path : written) std::cout << path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorial invariants of complexity-one Hamiltonian torus actions"};
  app.require_subcommand(1);

  std::string input, skeleton_path, fixture, output_dir = ".", format_name = "text";
  bool verbose = false;
  app.add_flag("--verbose", verbose, "print extra detail");

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "graph", "json-like"}));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a local model");
  classify_cmd->add_option("--input", input, "local model file")->required();
  add_format(classify_cmd);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "decompose a moment cone into open cells");
  decompose_cmd->add_option("--input", input, "local model file")->required();
  add_format(decompose_cmd);

  CLI::App* catchment_cmd = app.add_subcommand("catchment", "enumerate catchment orbit patterns");
  catchment_cmd->add_option("--input", input, "local model file")->required();
  add_format(catchment_cmd);

  CLI::App* core_cmd = app.add_subcommand("core", "validate a complex and compute its core");
  core_cmd->add_option("--input", input, "orbit complex file")->required();
  add_format(core_cmd);

  CLI::App* painting_cmd =
      app.add_subcommand("painting", "painting checks and triviality certificate");
  painting_cmd->add_option("--input", input, "orbit complex file")->required();
  painting_cmd->add_option("--skeleton", skeleton_path, "skeleton file")->required();
  add_format(painting_cmd);

  CLI::App* example_cmd = app.add_subcommand("example", "write a bundled fixture's input files");
  example_cmd->add_option("--fixture", fixture, "fixture name")->required();
  example_cmd->add_option("--output", output_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  const Format format = format_name == "graph"
                            ? Format::Graph
                            : (format_name == "json-like" ? Format::JsonLike : Format::Text);
  try {
    if (classify_cmd->parsed()) return cmd_classify(input, format, verbose);
    if (decompose_cmd->parsed()) return cmd_decompose(input, format);
    if (catchment_cmd->parsed()) return cmd_catchment(input, format);
    if (core_cmd->parsed()) return cmd_core(input, format);
    if (painting_cmd->parsed()) return cmd_painting(input, skeleton_path, format, verbose);
    if (example_cmd->parsed()) return cmd_example(fixture, output_dir);
  } catch (const c1ham::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitDataError;
}
