#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "antiramsey/constructions.hpp"
#include "antiramsey/interchange.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/rainbow.hpp"
#include "antiramsey/report.hpp"
#include "antiramsey/theorem6.hpp"

namespace ar::cli {

namespace {

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(value);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse --sizes entry '" + item + "'");
    }
  }
  if (sizes.empty()) throw ValidationError("--sizes must list at least one integer");
  return sizes;
}

std::string sizes_label(const std::vector<int>& sizes) {
  std::string out;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::string host_label(const std::vector<int>& sizes) {
  return "K_{" + sizes_label(sizes) + "}";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void finish_report(RunReport& report, const Timer& timer, const search::Stats& stats,
                   const std::string& report_path) {
  report.timing_ms = timer.ms();
  report.nodes = stats.nodes;
  report.pruned = stats.bound_pruned + stats.rainbow_pruned;
  if (!report_path.empty()) report.save(report_path);
}

struct ArArgs {
  std::string sizes_text;
  int k = 0;
  std::string method = "auto";
  std::string witness_path;
  std::string report_path;
  int jobs = 1;
  int edge_cap = 13;
  int base_cap = 7;
  bool degenerate_ok = false;
  bool quiet = false;
};

int cmd_ar(const ArArgs& a, std::ostream& out, std::ostream& err) {
  Timer timer;
  search::Stats stats;
  PartiteSpec spec(parse_sizes(a.sizes_text));
  int r = spec.part_count();
  if (a.k < 3) throw ValidationError("--k must be at least 3");

  RunReport report;
  report.command = "ar";
  report.inputs["sizes"] = sizes_label(spec.sizes());
  report.inputs["k"] = std::to_string(a.k);
  report.inputs["method"] = a.method;

  ArResult result;
  if (r < a.k) {
    if (!a.degenerate_ok) {
      throw ValidationError("host " + host_label(spec.sizes()) + " has fewer parts than k = " +
                            std::to_string(a.k) +
                            ": it contains no K_k at all, so every coloring qualifies. "
                            "Pass --degenerate-ok to get e(G).");
    }
    result.value = spec.edge_count();
    result.method = "degenerate";
    result.witness = ColoredGraph::rainbow(Graph::complete_multipartite(spec));
  } else {
    auto formula = [&]() -> std::optional<ArResult> {
      if (r == a.k) return ar_kpartite(spec, a.k);
      if (a.k == 3) return ar_multipartite_k3(spec);
      if (spec.balanced() && a.k >= 4) return ar_balanced(r, spec.size(0), a.k);
      return std::nullopt;
    };
    if (a.method == "formula") {
      auto res = formula();
      if (!res) {
        throw ValidationError("no closed formula covers " + host_label(spec.sizes()) +
                              " with k = " + std::to_string(a.k) +
                              "; use --method theorem6 or oracle");
      }
      result = std::move(*res);
    } else if (a.method == "theorem6") {
      Theorem6Options topts{a.base_cap, a.jobs, true, &stats};
      result = ar_via_theorem6(spec, a.k, topts);
    } else if (a.method == "oracle") {
      OracleOptions oopts{a.edge_cap, a.jobs, &stats};
      result = brute_force_ar(Graph::complete_multipartite(spec), a.k, oopts);
    } else if (a.method == "auto") {
      auto res = formula();
      if (res) {
        result = std::move(*res);
      } else if (r <= a.base_cap) {
        Theorem6Options topts{a.base_cap, a.jobs, true, &stats};
        result = ar_via_theorem6(spec, a.k, topts);
      } else if (spec.edge_count() <= a.edge_cap) {
        OracleOptions oopts{a.edge_cap, a.jobs, &stats};
        result = brute_force_ar(Graph::complete_multipartite(spec), a.k, oopts);
      } else {
        throw CapacityError("instance exceeds both the base cap (r = " + std::to_string(r) +
                            " > " + std::to_string(a.base_cap) + ") and the edge cap (e = " +
                            std::to_string(spec.edge_count()) + " > " +
                            std::to_string(a.edge_cap) + ")");
      }
    } else {
      throw ValidationError("unknown method '" + a.method + "'");
    }
  }

  report.results["value"] = result.value;
  report.text_results["method"] = result.method;

  if (!a.witness_path.empty()) {
    if (!result.witness) throw ValidationError("no witness available for this method");
    save_colored_graph(*result.witness, a.witness_path, result.method);
    report.outputs.push_back(a.witness_path);
  }

  if (a.quiet) {
    out << result.value << "\n";
  } else {
    out << "ar(" << host_label(spec.sizes()) << ", K_" << a.k << ") = " << result.value << "\n";
    out << "method: " << result.method << "\n";
    if (stats.nodes > 0) {
      err << "search nodes=" << stats.nodes << " bound_pruned=" << stats.bound_pruned
          << " rainbow_pruned=" << stats.rainbow_pruned << "\n";
    }
    if (!a.witness_path.empty()) out << "witness: " << a.witness_path << "\n";
  }
  finish_report(report, timer, stats, a.report_path);
  return 0;
}

struct ConstructArgs {
  std::string which;
  std::string sizes_text;
  int r = 0, t = 1, k = 0, n = 0, t1 = 1, t2 = 1;
  bool dedupe = false;
  std::string out_path;
  std::string out_dir = ".";
  std::string report_path;
  bool quiet = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream&) {
  Timer timer;
  RunReport report;
  report.command = "construct";
  report.inputs["name"] = a.which;

  auto check_and_save = [&](const ColoredGraph& cg, long long expect_colors, int k,
                            const std::string& path, const std::string& seed_name) {
    if (cg.color_count() != expect_colors) {
      throw ValidationError("internal: construction produced " +
                            std::to_string(cg.color_count()) + " colors, expected " +
                            std::to_string(expect_colors));
    }
    if (contains_rainbow_clique(cg, k)) {
      throw ValidationError("internal: construction contains a rainbow K_" + std::to_string(k));
    }
    save_colored_graph(cg, path, seed_name);
    report.outputs.push_back(path);
    report.results["colors"] = cg.color_count();
    if (!a.quiet) out << path << ": " << cg.color_count() << " colors\n";
  };

  if (a.which == "normal") {
    PartiteSpec spec(parse_sizes(a.sizes_text));
    int k = spec.part_count();
    ColoredGraph cg = normal_coloring(spec);
    std::string path = a.out_path.empty()
                           ? "normal_" + sizes_label(spec.sizes()) + ".json"
                           : a.out_path;
    check_and_save(cg, ar_kpartite(spec, k).value, k, path, "normal");
  } else if (a.which == "turan") {
    ColoredGraph cg = turan_coloring(a.r, a.t, a.k);
    std::string path = a.out_path.empty()
                           ? "turan_r" + std::to_string(a.r) + "_t" + std::to_string(a.t) +
                                 "_k" + std::to_string(a.k) + ".json"
                           : a.out_path;
    check_and_save(cg, ar_balanced(a.r, a.t, a.k).value, a.k, path, "turan");
  } else if (a.which == "book") {
    std::vector<ColoredGraph> books = book_colorings(a.n, a.dedupe);
    std::filesystem::create_directories(a.out_dir);
    for (size_t i = 0; i < books.size(); ++i) {
      char name[48];
      std::snprintf(name, sizeof(name), "book%d_%03zu.json", a.n, i);
      std::filesystem::path path = std::filesystem::path(a.out_dir) / name;
      check_and_save(books[i], a.n + 1, 3, path.string(), "book");
    }
    report.results["count"] = static_cast<long long>(books.size());
    if (!a.quiet) out << books.size() << " colorings written\n";
  } else if (a.which == "example1") {
    ColoredGraph cg = example1_coloring(a.r, a.k, a.t1, a.t2);
    long long expect = ar_balanced(a.r, a.t1 + a.t2, a.k).value;
    std::string path = a.out_path.empty()
                           ? "example1_r" + std::to_string(a.r) + "_k" + std::to_string(a.k) +
                                 "_t" + std::to_string(a.t1) + "+" + std::to_string(a.t2) +
                                 ".json"
                           : a.out_path;
    check_and_save(cg, expect, a.k, path, "example1");
  } else {
    throw ValidationError("unknown construction '" + a.which + "'");
  }
  finish_report(report, timer, {}, a.report_path);
  return 0;
}

struct EnumerateArgs {
  std::string sizes_text;
  int k = 0;
  std::string out_dir;
  std::string report_path;
  int jobs = 1;
  int edge_cap = 13;
  bool quiet = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  Timer timer;
  search::Stats stats;
  PartiteSpec spec(parse_sizes(a.sizes_text));
  if (a.k < 3) throw ValidationError("--k must be at least 3");

  RunReport report;
  report.command = "enumerate";
  report.inputs["sizes"] = sizes_label(spec.sizes());
  report.inputs["k"] = std::to_string(a.k);

  OracleOptions oopts{a.edge_cap, a.jobs, &stats};
  ExtremalFamily family = enumerate_extremal(Graph::complete_multipartite(spec), a.k, oopts);

  std::string dir = a.out_dir.empty()
                        ? "extremal_" + sizes_label(spec.sizes()) + "_k" + std::to_string(a.k)
                        : a.out_dir;
  std::string manifest = save_extremal_family(family, dir);
  report.outputs.push_back(manifest);
  report.results["ar_value"] = family.ar_value;
  report.results["count"] = static_cast<long long>(family.representatives.size());

  if (a.quiet) {
    out << family.representatives.size() << "\n";
  } else {
    out << "ar(" << host_label(spec.sizes()) << ", K_" << a.k << ") = " << family.ar_value
        << "\n";
    out << family.representatives.size() << " extremal colorings up to isomorphism\n";
    out << "manifest: " << manifest << "\n";
    err << "search nodes=" << stats.nodes << " bound_pruned=" << stats.bound_pruned
        << " rainbow_pruned=" << stats.rainbow_pruned << "\n";
  }
  finish_report(report, timer, stats, a.report_path);
  return 0;
}

struct ClassifyArgs {
  std::string file;
  int k = 0;
  std::string report_path;
  bool quiet = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream&) {
  Timer timer;
  RunReport report;
  report.command = "classify";
  report.inputs["file"] = a.file;
  report.inputs["k"] = std::to_string(a.k);

  ColoredGraph cg = load_colored_graph(a.file);
  Theorem8Tag tag = classify_theorem8(cg, a.k);
  report.text_results["tag"] = to_string(tag);
  out << to_string(tag) << "\n";
  finish_report(report, timer, {}, a.report_path);
  return 0;
}

struct VerifyDiracArgs {
  int n = 0, k = 0;
  std::string report_path;
  bool quiet = false;
};

int cmd_verify_dirac(const VerifyDiracArgs& a, std::ostream& out, std::ostream&) {
  Timer timer;
  RunReport report;
  report.command = "verify dirac";
  report.inputs["n"] = std::to_string(a.n);
  report.inputs["k"] = std::to_string(a.k);

  std::vector<Graph> graphs = dirac_extremal_graphs(a.n, a.k);
  std::vector<std::string> names;
  for (const Graph& g : graphs) names.push_back(dirac_graph_name(g, a.n, a.k));

  std::vector<std::string> expected{"turan"};
  if (a.k == 4 && a.n == 5) {
    expected.push_back("hourglass");
    expected.push_back("house");
  }
  if (a.k == 4 && a.n == 6) expected.push_back("prism");
  std::sort(expected.begin(), expected.end());
  std::vector<std::string> sorted_names = names;
  std::sort(sorted_names.begin(), sorted_names.end());

  report.results["count"] = static_cast<long long>(graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i) {
    out << names[i] << ": " << graphs[i].edge_count() << " edges on "
        << graphs[i].vertex_count() << " vertices\n";
  }
  bool pass = sorted_names == expected;
  report.text_results["status"] = pass ? "pass" : "fail";
  if (pass) {
    out << "pass: " << graphs.size() << " extremal graphs, as expected\n";
  } else {
    out << "fail: expected {";
    for (const auto& e : expected) out << " " << e;
    out << " }, found {";
    for (const auto& n : sorted_names) out << " " << n;
    out << " }\n";
  }
  finish_report(report, timer, {}, a.report_path);
  return pass ? 0 : 4;
}

struct VerifyT10Args {
  int r = 0, t = 2, k = 0;
  int jobs = 1;
  std::string report_path;
  bool quiet = false;
};

int cmd_verify_theorem10(const VerifyT10Args& a, std::ostream& out, std::ostream& err) {
  Timer timer;
  search::Stats stats;
  RunReport report;
  report.command = "verify theorem10";
  report.inputs["r"] = std::to_string(a.r);
  report.inputs["t"] = std::to_string(a.t);
  report.inputs["k"] = std::to_string(a.k);

  OracleOptions oopts{13, a.jobs, &stats};
  Theorem10Report t10 = verify_theorem10(a.r, a.t, a.k, oopts);

  report.results["max_weighted"] = t10.max_weighted;
  report.results["base_count"] = t10.base_count;
  report.text_results["status"] = t10.pass ? "pass" : "fail";

  out << "maximum blow-up color count: " << t10.max_weighted << "\n";
  out << t10.base_count << " maximum bases up to isomorphism:";
  for (const auto& n : t10.family_found) out << " " << n;
  out << "\n";
  if (t10.pass) {
    out << "pass: " << t10.detail << "\n";
  } else {
    out << "fail: " << t10.detail << "\n";
    out << "expected family:";
    for (const auto& n : t10.expected) out << " " << n;
    out << "\n";
  }
  err << "search nodes=" << stats.nodes << "\n";
  finish_report(report, timer, stats, a.report_path);
  return t10.pass ? 0 : 4;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact anti-Ramsey numbers of cliques in complete multipartite graphs"};
  app.require_subcommand(1);

  ArArgs ar_args;
  CLI::App* ar_cmd = app.add_subcommand("ar", "compute ar(K_{n1,...,nr}, K_k)");
  ar_cmd->add_option("--sizes", ar_args.sizes_text, "partite sizes, e.g. 2,1,1")->required();
  ar_cmd->add_option("--k", ar_args.k, "forbidden rainbow clique size")->required();
  ar_cmd->add_option("--method", ar_args.method, "auto|formula|theorem6|oracle");
  ar_cmd->add_option("--witness", ar_args.witness_path, "write a witness coloring here");
  ar_cmd->add_option("--report", ar_args.report_path, "write a machine-readable report here");
  ar_cmd->add_option("--jobs", ar_args.jobs, "parallel workers");
  ar_cmd->add_option("--edge-cap", ar_args.edge_cap, "oracle edge limit");
  ar_cmd->add_option("--base-cap", ar_args.base_cap, "theorem6 base-size limit");
  ar_cmd->add_flag("--degenerate-ok", ar_args.degenerate_ok, "allow r < k, returning e(G)");
  ar_cmd->add_flag("--quiet", ar_args.quiet, "print only the value");

  ConstructArgs c_args;
  CLI::App* c_cmd = app.add_subcommand("construct", "write a named extremal coloring");
  c_cmd->require_subcommand(1);
  CLI::App* c_normal = c_cmd->add_subcommand("normal", "normal coloring of K_{n1,...,nk}");
  c_normal->add_option("--sizes", c_args.sizes_text)->required();
  c_normal->add_option("--out", c_args.out_path);
  CLI::App* c_turan = c_cmd->add_subcommand("turan", "Turan coloring of K_r^t");
  c_turan->add_option("--r", c_args.r)->required();
  c_turan->add_option("--t", c_args.t)->required();
  c_turan->add_option("--k", c_args.k)->required();
  c_turan->add_option("--out", c_args.out_path);
  CLI::App* c_book = c_cmd->add_subcommand("book", "book colorings of B_n");
  c_book->add_option("--n", c_args.n)->required();
  c_book->add_flag("--dedupe", c_args.dedupe, "one file per isomorphism class");
  c_book->add_option("--out-dir", c_args.out_dir);
  CLI::App* c_ex1 = c_cmd->add_subcommand("example1", "two-extension coloring of K_r^{t1+t2}");
  c_ex1->add_option("--r", c_args.r)->required();
  c_ex1->add_option("--k", c_args.k)->required();
  c_ex1->add_option("--t1", c_args.t1)->required();
  c_ex1->add_option("--t2", c_args.t2)->required();
  c_ex1->add_option("--out", c_args.out_path);
  for (CLI::App* sub : {c_normal, c_turan, c_book, c_ex1}) {
    sub->add_option("--report", c_args.report_path);
    sub->add_flag("--quiet", c_args.quiet);
  }

  EnumerateArgs e_args;
  CLI::App* e_cmd = app.add_subcommand("enumerate", "all extremal colorings up to isomorphism");
  e_cmd->add_option("--sizes", e_args.sizes_text)->required();
  e_cmd->add_option("--k", e_args.k)->required();
  e_cmd->add_option("--out-dir", e_args.out_dir);
  e_cmd->add_option("--report", e_args.report_path);
  e_cmd->add_option("--jobs", e_args.jobs);
  e_cmd->add_option("--edge-cap", e_args.edge_cap);
  e_cmd->add_flag("--quiet", e_args.quiet);

  ClassifyArgs cl_args;
  CLI::App* cl_cmd = app.add_subcommand("classify", "match a coloring file against the "
                                                    "extremal constructions");
  cl_cmd->add_option("--file", cl_args.file)->required();
  cl_cmd->add_option("--k", cl_args.k)->required();
  cl_cmd->add_option("--report", cl_args.report_path);
  cl_cmd->add_flag("--quiet", cl_args.quiet);

  CLI::App* v_cmd = app.add_subcommand("verify", "check enumerated families against "
                                                 "their expected shapes");
  v_cmd->require_subcommand(1);
  VerifyDiracArgs vd_args;
  CLI::App* vd_cmd = v_cmd->add_subcommand("dirac", "extremal (K_k - e)-free graphs");
  vd_cmd->add_option("--n", vd_args.n)->required();
  vd_cmd->add_option("--k", vd_args.k)->required();
  vd_cmd->add_option("--report", vd_args.report_path);
  vd_cmd->add_flag("--quiet", vd_args.quiet);
  VerifyT10Args vt_args;
  CLI::App* vt_cmd = v_cmd->add_subcommand("theorem10", "maximum bases for K_r^t");
  vt_cmd->add_option("--r", vt_args.r)->required();
  vt_cmd->add_option("--t", vt_args.t)->required();
  vt_cmd->add_option("--k", vt_args.k)->required();
  vt_cmd->add_option("--jobs", vt_args.jobs);
  vt_cmd->add_option("--report", vt_args.report_path);
  vt_cmd->add_flag("--quiet", vt_args.quiet);

  std::vector<const char*> argv;
  argv.push_back("antiramsey");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*ar_cmd) return cmd_ar(ar_args, out, err);
    if (*c_cmd) {
      if (*c_normal) c_args.which = "normal";
      if (*c_turan) c_args.which = "turan";
      if (*c_book) c_args.which = "book";
      if (*c_ex1) c_args.which = "example1";
      return cmd_construct(c_args, out, err);
    }
    if (*e_cmd) return cmd_enumerate(e_args, out, err);
    if (*cl_cmd) return cmd_classify(cl_args, out, err);
    if (*v_cmd) {
      if (*vd_cmd) return cmd_verify_dirac(vd_args, out, err);
      if (*vt_cmd) return cmd_verify_theorem10(vt_args, out, err);
    }
    err << "error: no command given\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ar::cli
