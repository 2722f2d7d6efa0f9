// Copyright 2026 The kvpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kv/diagram.hpp"
#include "kv/invariant.hpp"
#include "kv/orientation.hpp"
#include "kv/skein.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

kv::Diagram load_diagram(const std::string& path) {
  try {
    return kv::parse_diagram(slurp(path));
  } catch (const kv::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_compute(const std::string& path, bool as_json) {
  kv::InvariantReport r = kv::compute_report(load_diagram(path));
  std::cout << (as_json ? kv::report_to_json(r) + "\n" : kv::report_to_text(r));
  return kExitOk;
}

int cmd_oracle(const std::string& path, bool compare, int cap) {
  kv::Diagram d = load_diagram(path);
  kv::LaurentPolynomial oracle;
  try {
    oracle = kv::oracle_bracket(d, cap);
  } catch (const std::length_error&) {
    std::cerr << "error: crossing count " << d.crossing_count() << " exceeds cap " << cap << "\n";
    return kExitCapExceeded;
  }
  std::cout << "oracle: " << oracle.to_string() << "\n";
  if (compare) {
    kv::LaurentPolynomial direct = kv::bracket(d);
    std::cout << "state sum: " << direct.to_string() << "\n"
              << "compare: " << (oracle == direct ? "equal" : "DIFFERENT") << "\n";
    if (oracle != direct) return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_partitions(const std::string& path) {
  kv::Diagram d = load_diagram(path);
  auto classes = kv::partition_classes(d);
  if (classes.empty()) {
    std::cout << "non-separable: no partitions\n{G} = 0\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::cout << "class " << i << ": marks [";
    for (std::size_t m = 0; m < classes[i].marks.size(); ++m) {
      std::cout << (m ? " " : "")
                << (classes[i].marks[m] == kv::Mark::Vertical ? "vertical" : "horizontal");
    }
    std::cout << "] signature " << classes[i].signature.to_string() << "\n";
  }
  std::cout << "{G} = " << kv::braces(d).to_string() << "\n";
  return kExitOk;
}

int cmd_circuits(const std::string& path) {
  kv::Diagram d = load_diagram(path);
  auto circs = kv::circuits(d);
  for (std::size_t i = 0; i < circs.size(); ++i) {
    const kv::Circuit& c = circs[i];
    std::cout << "circuit " << i << ": arcs [";
    for (std::size_t a = 0; a < c.arcs.size(); ++a) std::cout << (a ? " " : "") << c.arcs[a];
    std::cout << "] vertex passages " << c.vertex_passages;
    if (c.arcs.empty()) std::cout << " (bare loop)";
    std::cout << "\n";
  }
  std::cout << "twisting number: " << kv::twisting_number(d) << "\n";
  return kExitOk;
}

int cmd_twist(const std::string& path, int arc, int sign) {
  kv::Diagram d = load_diagram(path);
  try {
    std::cout << kv::serialize_diagram(kv::insert_curl(d, arc, sign));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kExitOk;
}

// -- check -------------------------------------------------------------------

struct CheckState {
  int failures = 0;
  void report(bool ok, const std::string& name, const std::string& what) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << what << "\n";
    if (!ok) ++failures;
  }
};

void check_expected(CheckState& st, const std::string& name, const nlohmann::json& expected,
                    const kv::InvariantReport& r) {
  auto poly_field = [&](const char* key, const kv::LaurentPolynomial& got) {
    if (!expected.contains(key)) return;
    kv::LaurentPolynomial want =
        kv::LaurentPolynomial::from_string(expected[key].get<std::string>());
    st.report(got == want, name,
              std::string(key) + " = " + got.to_string() + " (expected " + want.to_string() + ")");
  };
  auto int_field = [&](const char* key, int got) {
    if (!expected.contains(key)) return;
    int want = expected[key].get<int>();
    st.report(got == want, name,
              std::string(key) + " = " + std::to_string(got) + " (expected " +
                  std::to_string(want) + ")");
  };
  poly_field("bracket", r.bracket);
  poly_field("braces", r.braces);
  poly_field("normalized", r.normalized);
  int_field("twist", r.twist);
  int_field("c", r.c);
  int_field("v", r.v);
  int_field("crossings", r.crossings);
  int_field("diagram_components", r.diagram_components);
  if (expected.contains("separable")) {
    bool want = expected["separable"].get<bool>();
    st.report(r.separable == want, name, std::string("separable = ") +
                                             (r.separable ? "true" : "false"));
  }
}

void check_properties(CheckState& st, const std::string& name, const kv::Diagram& d,
                      const kv::InvariantReport& r, bool planar_realizable) {
  st.report((r.bracket == kv::LaurentPolynomial::zero()) == !r.separable, name,
            "bracket vanishes exactly for non-separable diagrams");

  kv::LaurentPolynomial sum = kv::hyperbolic_state_sum(d);
  st.report(sum == r.braces.scale(kv::Dyadic(1LL << r.diagram_components)), name,
            "state sum = 2^d * braces");

  auto orientations = kv::enumerate_hyperbolic(d);
  bool law = orientations.empty() ||
             orientations.size() == (std::size_t{1} << static_cast<unsigned>(r.c));
  st.report(law, name, "orientation count is 0 or 2^c");

  bool odd_circuit = false;
  for (const kv::Circuit& c : kv::circuits(d)) {
    odd_circuit = odd_circuit || (c.vertex_passages % 2 == 1);
  }
  if (odd_circuit) {
    st.report(orientations.empty(), name, "odd vertex-passage circuit forces non-separability");
  }

  // The oracle's crossing-free base case presumes planar realizability;
  // skip it for diagrams tagged nonplanar.
  if (r.crossings <= 8 && planar_realizable) {
    st.report(kv::oracle_bracket(d) == r.bracket, name, "skein oracle agrees with state sum");
  }
  if (r.crossings <= kv::kDefaultSkeinCap) {
    bool zero = true;
    for (int i = 0; i < static_cast<int>(d.nodes().size()); ++i) {
      if (d.nodes()[i].kind != kv::NodeKind::Crossing) continue;
      zero = zero && kv::skein_residual(d, i) == kv::LaurentPolynomial::zero();
    }
    st.report(zero, name, "skein residual vanishes at every crossing");
  }
}

int cmd_check(const std::string& dir) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(slurp(dir + "/manifest.json"));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(dir + "/manifest.json: " + e.what());
  }
  if (!manifest.is_array() || manifest.empty()) {
    throw InputError(dir + "/manifest.json: expected a non-empty array of entries");
  }
  std::vector<nlohmann::json> entries(manifest.begin(), manifest.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.at("name").template get<std::string>() < b.at("name").template get<std::string>();
  });

  CheckState st;
  for (const auto& entry : entries) {
    std::string name = entry.at("name").get<std::string>();
    kv::Diagram d = load_diagram(dir + "/" + entry.at("file").get<std::string>());
    kv::InvariantReport r = kv::compute_report(d);
    bool planar_realizable = true;
    if (entry.contains("tags")) {
      for (const auto& tag : entry["tags"]) {
        if (tag.get<std::string>() == "nonplanar") planar_realizable = false;
      }
    }
    if (entry.contains("expected")) check_expected(st, name, entry["expected"], r);
    check_properties(st, name, d, r, planar_realizable);
  }
  std::cout << (st.failures == 0 ? "all checks passed\n"
                                 : std::to_string(st.failures) + " check(s) failed\n");
  return st.failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman-Vogel polynomial of 4-valent rigid-vertex graph diagrams (B=A^-1, a=A)"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  auto* compute = app.add_subcommand("compute", "invariant report for a diagram file");
  compute->add_option("file", path)->required();
  compute->add_flag("--json", as_json, "emit JSON");

  bool compare = false;
  int cap = kv::kDefaultSkeinCap;
  auto* oracle = app.add_subcommand("oracle", "brute-force skein expansion");
  oracle->add_option("file", path)->required();
  oracle->add_flag("--compare", compare, "also run the state sum and compare");
  oracle->add_option("--cap", cap, "crossing-count cap for the expansion");

  auto* partitions = app.add_subcommand("partitions", "partition classes and {G}");
  partitions->add_option("file", path)->required();

  auto* circuits_cmd = app.add_subcommand("circuits", "knot-theoretic circuits and t(G)");
  circuits_cmd->add_option("file", path)->required();

  int arc = 0;
  int sign = 1;
  auto* twist = app.add_subcommand("twist", "insert a curl and print the diagram");
  twist->add_option("file", path)->required();
  twist->add_option("--arc", arc, "arc label (0 selects a bare loop)");
  twist->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({1, -1}));

  std::string dir;
  auto* check = app.add_subcommand("check", "run manifest comparisons and property checks");
  check->add_option("dir", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (compute->parsed()) return cmd_compute(path, as_json);
    if (oracle->parsed()) return cmd_oracle(path, compare, cap);
    if (partitions->parsed()) return cmd_partitions(path);
    if (circuits_cmd->parsed()) return cmd_circuits(path);
    if (twist->parsed()) return cmd_twist(path, arc, sign);
    if (check->parsed()) return cmd_check(dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
