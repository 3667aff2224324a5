// qxadv: threshold, grid, advantage and roadmap calculations from the shell,
// plus the HTTP API (`qxadv serve`).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "http_api.hpp"
#include "qx/catalog.hpp"
#include "service.hpp"

#ifndef QX_DEFAULT_WEB_ROOT
#define QX_DEFAULT_WEB_ROOT "web"
#endif

namespace svc = qx::service;

namespace {

struct Options {
  std::map<std::string, std::string> values;
  bool quantum_only = false;
  bool canonical = false;
  std::string format;
  std::string data_dir;
};

CLI::Option* add(CLI::App* app, Options& o, const std::string& flags, const std::string& key,
                 const std::string& help) {
  return app->add_option(flags, o.values[key], help);
}

void add_scenario(CLI::App* app, Options& o) {
  add(app, o, "--scenario", "scenario", "named hardware scenario (base, optimistic, pessimistic, appendix, serial, cost)");
  add(app, o, "-C,--C", "C", "overhead constant, e.g. 1e6 or 10^6 (overrides the scenario's)");
  add(app, o, "--ec-ratio", "ec_ratio", "physical qubits per logical qubit");
}

void add_pair(CLI::App* app, Options& o) {
  add(app, o, "--id", "id", "catalog entry with a quantum algorithm (e.g. grover, shor, qft, hhl)");
  add(app, o, "--classical", "classical", "classical runtime expression");
  add(app, o, "--quantum", "quantum", "quantum runtime expression");
  add(app, o, "--qubits", "qubits", "logical qubit requirement expression (default log(n)/log(2))");
  add(app, o, "--loading", "loading", "data-loading cost expression");
  add(app, o, "--semantics", "semantics", "size semantics: elements, bits or variables_log2");
}

svc::Params params_of(const Options& o) {
  svc::Params p;
  for (const auto& [k, v] : o.values) {
    if (!v.empty()) p[k] = v;
  }
  if (o.quantum_only) p["quantum_only"] = "true";
  if (o.canonical) p["canonical"] = "true";
  return p;
}

int fail(const std::exception& e) {
  svc::ErrorReply err = svc::error_reply(e);
  std::string kind = err.body.value("kind", "Error");
  std::cerr << "qxadv: " << kind << ": " << e.what() << "\n";
  return 1;
}

int run_catalog_format(const svc::Context& ctx, const std::string& file, bool in_place, bool check) {
  std::filesystem::path path = file.empty() ? ctx.data_dir / "catalog.json" : std::filesystem::path(file);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string canonical = qx::serialize_catalog(qx::parse_catalog(buffer.str()));
  if (check) {
    if (canonical == buffer.str()) return 0;
    std::cerr << "qxadv: " << path.string() << " is not in canonical form\n";
    return 1;
  }
  if (in_place) {
    qx::save_catalog(qx::parse_catalog(canonical), path);
  } else {
    std::cout << canonical;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum economic advantage calculator"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--data-dir", o.data_dir, "data directory (default: $QX_DATA_DIR, then the built-in one)");

  auto with_format = [&](CLI::App* cmd, const std::string& fallback) {
    o.format = fallback;
    cmd->add_option("--format", o.format, "text, markdown-table, csv, json or svg-plot-data")
        ->default_str(fallback);
    cmd->preparse_callback([&o, fallback](std::size_t) { o.format = fallback; });
  };

  CLI::App* threshold = app.add_subcommand("threshold", "minimum problem size for a quantum speedup");
  add(threshold, o, "--classical", "classical", "classical runtime expression")->required();
  add(threshold, o, "--quantum", "quantum", "quantum runtime expression")->required();
  add_scenario(threshold, o);
  with_format(threshold, "text");

  CLI::App* grid = app.add_subcommand("grid", "canonical 6x6 threshold grid");
  add_scenario(grid, o);
  with_format(grid, "markdown-table");

  CLI::App* analyze = app.add_subcommand("analyze", "threshold joined with qubit feasibility");
  add_pair(analyze, o);
  add_scenario(analyze, o);
  add(analyze, o, "--provider", "provider", "roadmap provider (default ibm)");
  add(analyze, o, "--years", "years", "years as 2024:2035[:step] or a comma list");
  with_format(analyze, "markdown-table");

  CLI::App* qaps = app.add_subcommand("qaps", "quantum-advantaged problem sizes by year");
  add_pair(qaps, o);
  add_scenario(qaps, o);
  add(qaps, o, "--provider", "provider", "roadmap provider (default ibm)");
  add(qaps, o, "--year", "year", "single year");
  add(qaps, o, "--years", "years", "years as 2024:2035[:step] or a comma list");
  with_format(qaps, "markdown-table");

  CLI::App* roadmap = app.add_subcommand("roadmap", "qubit roadmap fits");
  roadmap->require_subcommand(1);
  for (const char* action : {"fit", "project", "year-for"}) {
    CLI::App* sub = roadmap->add_subcommand(action, std::string("roadmap ") + action);
    add(sub, o, "--provider", "provider", "roadmap provider (default ibm)");
    if (std::string(action) == "project") {
      add(sub, o, "--year", "year", "calendar year")->required();
      add(sub, o, "--ec-ratio", "ec_ratio", "physical qubits per logical qubit (default 1000)");
    }
    if (std::string(action) == "year-for") add(sub, o, "--qubits", "qubits", "physical qubits, e.g. 40000")->required();
    with_format(sub, "markdown-table");
    sub->callback([&o, action] { o.values["action"] = action; });
  }

  CLI::App* catalog = app.add_subcommand("catalog", "problem catalog");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "list entries");
  add(list, o, "--tag", "tag", "only entries with this tag");
  list->add_flag("--quantum-only", o.quantum_only, "only entries with a quantum algorithm");
  with_format(list, "markdown-table");
  list->callback([&o] { o.values["action"] = "list"; });
  CLI::App* classify = catalog->add_subcommand("classify", "traffic-light classes");
  add_scenario(classify, o);
  classify->add_flag("--canonical", o.canonical, "classify classical-only entries against canonical quantum runtimes");
  with_format(classify, "markdown-table");
  classify->callback([&o] { o.values["action"] = "classify"; });
  CLI::App* format = catalog->add_subcommand("format", "rewrite a catalog file in canonical form");
  std::string format_file;
  bool in_place = false;
  bool check = false;
  format->add_option("file", format_file, "catalog file (default: the data directory's)");
  format->add_flag("-i,--in-place", in_place, "rewrite the file");
  format->add_flag("--check", check, "exit 1 if the file is not canonical");

  CLI::App* plot = app.add_subcommand("plot", "plot series");
  plot->require_subcommand(1);
  for (const char* kind : {"crossover", "wedge", "roadmap"}) {
    CLI::App* sub = plot->add_subcommand(kind, std::string(kind) + " series");
    if (std::string(kind) != "roadmap") {
      add_pair(sub, o);
      add_scenario(sub, o);
    }
    if (std::string(kind) != "crossover") {
      add(sub, o, "--provider", "provider", "roadmap provider (default ibm)");
      add(sub, o, "--years", "years", "years as 2024:2040[:step] or a comma list");
    }
    with_format(sub, "csv");
    sub->callback([&o, kind] { o.values["kind"] = kind; });
  }

  CLI::App* serve = app.add_subcommand("serve", "run the HTTP API");
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string web_root = QX_DEFAULT_WEB_ROOT;
  serve->add_option("--host", host, "bind address")->default_str(host);
  serve->add_option("--port", port, "port; 0 picks a free one")->default_str("8080");
  serve->add_option("--web-root", web_root, "static files served at /")->default_str(web_root);

  CLI11_PARSE(app, argc, argv);

  try {
    svc::Context ctx = svc::load_context(svc::resolve_data_dir(o.data_dir.empty() ? std::nullopt
                                                                                    : std::optional(o.data_dir)));
    if (format->parsed()) return run_catalog_format(ctx, format_file, in_place, check);

    if (serve->parsed()) {
      httplib::Server server;
      svc::register_routes(server, ctx, std::filesystem::path(web_root));
      int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
      if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
      std::printf("listening on http://%s:%d\n", host.c_str(), bound);
      std::fflush(stdout);
      return server.listen_after_bind() ? 0 : 1;
    }

    std::string endpoint;
    for (CLI::App* sub : app.get_subcommands()) endpoint = sub->get_name();
    svc::Params p = params_of(o);
    svc::Format f = svc::format_from_string(o.format);
    std::cout << svc::render_document(endpoint, svc::payload(endpoint, ctx, p), f);
    return 0;
  } catch (const std::exception& e) {
    return fail(e);
  }
}
