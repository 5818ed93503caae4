/* Apache License, Version 2.0 */
// Command-line front end for the rtopo shared library. Talks to the core
// exclusively through the C API in rtopo.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtopo.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

struct RegionHandle {
  rtopo_region* ptr = nullptr;
  ~RegionHandle() { rtopo_region_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { rtopo_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << message << "\n";
  std::exit(kExitUsage);
}

[[noreturn]] void die_domain() {
  std::cerr << rtopo_last_error_name() << ": " << rtopo_last_error_message()
            << "\n";
  std::exit(kExitDomainError);
}

void check(rtopo_status status) {
  if (status == RTOPO_OK) return;
  if (status == RTOPO_BAD_ARGUMENT) die_usage("bad argument");
  die_domain();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die_usage("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void load_region(const std::string& path, RegionHandle& out) {
  std::string text = read_file(path);
  check(rtopo_region_parse(text.c_str(), &out.ptr));
}

std::string ring_text(const json& ring) {
  std::string s;
  for (const auto& v : ring) {
    auto coord = [](const json& c) {
      return c.is_string() ? c.get<std::string>() : c.dump();
    };
    s += "(" + coord(v[0]) + "," + coord(v[1]) + ")";
  }
  return s;
}

void print_relate_method(const char* label, const json& r) {
  std::cout << label << ": " << r["matrix"].get<std::string>();
  if (!r["rcc8"].is_null())
    std::cout << " (" << r["rcc8"].get<std::string>() << ")";
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact topology of polygonal plane regions"};
  app.require_subcommand(1);

  std::string file1, file2, format = "dot", method = "both", out_path, min_area;
  long steps = -2;  // sentinel: flag absent

  auto* validate = app.add_subcommand("validate", "parse and analyze a region file");
  validate->add_option("file", file1)->required();

  auto* components = app.add_subcommand("components", "list components (id, kind, level, area)");
  components->add_option("file", file1)->required();

  auto* graph = app.add_subcommand("graph", "emit the link graph");
  graph->add_option("file", file1)->required();
  graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* atoms = app.add_subcommand("atoms", "list the atom set");
  atoms->add_option("file", file1)->required();

  auto* classify = app.add_subcommand("classify", "print the shape class");
  classify->add_option("file", file1)->required();

  auto* relate = app.add_subcommand("relate", "9-intersection between two regions");
  relate->add_option("file1", file1)->required();
  relate->add_option("file2", file2)->required();
  relate->add_option("--method", method)->check(CLI::IsMember({"global", "local", "both"}));

  auto* generalize = app.add_subcommand("generalize", "drop components / holes");
  generalize->add_option("file", file1)->required();
  generalize->add_option("--min-area", min_area, "drop level-1 components below this area (exact rational)");
  generalize->add_option("--steps", steps, "maximum number of leaf drops (default: run to the fixpoint)");
  generalize->add_option("-o,--output", out_path, "write the resulting region document here");

  auto* isomorphic = app.add_subcommand("isomorphic", "compare two link graphs");
  isomorphic->add_option("file1", file1)->required();
  isomorphic->add_option("file2", file2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (validate->parsed()) {
    RegionHandle r;
    load_region(file1, r);
    OwnedString comps;
    check(rtopo_region_components(r.ptr, &comps.ptr));
    json jc = json::parse(comps.str());
    std::cout << "OK: " << jc.size() << " components (incl. unbounded)\n";
    return kExitOk;
  }

  if (components->parsed()) {
    RegionHandle r;
    load_region(file1, r);
    OwnedString comps;
    check(rtopo_region_components(r.ptr, &comps.ptr));
    json jc = json::parse(comps.str());
    std::printf("%-4s %-10s %-6s %s\n", "id", "kind", "level", "area");
    for (const auto& c : jc) {
      std::string area = c["area"].is_null() ? "-" : c["area"].get<std::string>();
      std::printf("%-4d %-10s %-6d %s\n", c["id"].get<int>(),
                  c["kind"].get<std::string>().c_str(), c["level"].get<int>(),
                  area.c_str());
    }
    return kExitOk;
  }

  if (graph->parsed()) {
    RegionHandle r;
    load_region(file1, r);
    OwnedString out;
    if (format == "dot")
      check(rtopo_region_graph_dot(r.ptr, &out.ptr));
    else
      check(rtopo_region_graph_json(r.ptr, &out.ptr));
    std::cout << out.str();
    if (format == "json") std::cout << "\n";
    return kExitOk;
  }

  if (atoms->parsed()) {
    RegionHandle r;
    load_region(file1, r);
    OwnedString out;
    check(rtopo_region_atoms(r.ptr, &out.ptr));
    json ja = json::parse(out.str());
    std::cout << ja.size() << " atoms\n";
    for (std::size_t i = 0; i < ja.size(); ++i) {
      const auto& a = ja[i];
      std::cout << "atom " << i << ": area=" << a["area"].get<std::string>()
                << " ring=" << ring_text(a["ring"]) << " roles=";
      for (std::size_t k = 0; k < a["roles"].size(); ++k) {
        const auto& role = a["roles"][k];
        if (k) std::cout << ",";
        std::cout << role["role"].get<std::string>();
        if (role.contains("component"))
          std::cout << "(" << role["component"].get<int>() << ")";
      }
      std::cout << "\n";
    }
    return kExitOk;
  }

  if (classify->parsed()) {
    RegionHandle r;
    load_region(file1, r);
    OwnedString out;
    check(rtopo_region_classify(r.ptr, &out.ptr));
    std::cout << out.str() << "\n";
    return kExitOk;
  }

  if (relate->parsed()) {
    RegionHandle a, b;
    load_region(file1, a);
    load_region(file2, b);
    OwnedString out;
    check(rtopo_relate(a.ptr, b.ptr, method.c_str(), &out.ptr));
    json jr = json::parse(out.str());
    if (jr.contains("global")) print_relate_method("global", jr["global"]);
    if (jr.contains("local")) print_relate_method("local", jr["local"]);
    if (jr.contains("verdict"))
      std::cout << jr["verdict"].get<std::string>() << "\n";
    return kExitOk;
  }

  if (generalize->parsed()) {
    RegionHandle r;
    load_region(file1, r);
    long effective_steps;
    if (steps != -2) {
      if (steps < 0) die_usage("--steps must be >= 0");
      effective_steps = steps;
    } else {
      // no --steps: run to the fixpoint, unless only --min-area was given
      effective_steps = min_area.empty() ? -1 : 0;
    }
    OwnedString out;
    check(rtopo_generalize(r.ptr, min_area.empty() ? nullptr : min_area.c_str(),
                           effective_steps, &out.ptr));
    if (out_path.empty()) {
      std::cout << out.str() << "\n";
    } else {
      std::ofstream os(out_path, std::ios::binary);
      if (!os) die_usage("cannot write file: " + out_path);
      os << out.str() << "\n";
    }
    return kExitOk;
  }

  if (isomorphic->parsed()) {
    RegionHandle a, b;
    load_region(file1, a);
    load_region(file2, b);
    int iso = 0;
    check(rtopo_isomorphic(a.ptr, b.ptr, &iso));
    std::cout << (iso ? "ISOMORPHIC" : "NOT_ISOMORPHIC") << "\n";
    return kExitOk;
  }

  return kExitUsage;
}
