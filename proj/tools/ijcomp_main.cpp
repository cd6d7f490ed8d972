// ijcomp: decide membership in the families of competition graphs of
// degree-bounded loopless digraphs, and run the related constructions.
//
// Exit codes: 0 success, 1 negative answer (non-member / not found / none
// exists / unknown), 2 parse, size-guard or usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ijcomp/chordality.hpp"
#include "ijcomp/cover.hpp"
#include "ijcomp/designs.hpp"
#include "ijcomp/families.hpp"
#include "ijcomp/graph_ops.hpp"
#include "ijcomp/io.hpp"
#include "ijcomp/recognition.hpp"

namespace {

using nlohmann::json;
using namespace ijcomp;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json digraph_json(const Digraph& d) { return json::parse(digraph_to_json(d)); }
json graph_json(const Graph& g) { return json::parse(graph_to_json(g)); }

json certificate_json(const RecognitionCertificate& cert) {
  json doc;
  doc["verdict"] = cert.member ? "member" : "non-member";
  if (cert.witness) doc["witness"] = digraph_json(*cert.witness);
  if (cert.obstruction) doc["obstruction"] = cert.obstruction_string();
  return doc;
}

DegreeBounds parse_bounds_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected bounds as \"i,j\", got: " + text);
  try {
    int i = std::stoi(text.substr(0, comma));
    int j = std::stoi(text.substr(comma + 1));
    return DegreeBounds(i, j);
  } catch (const std::invalid_argument&) {
    throw ParseError("expected bounds as \"i,j\", got: " + text);
  } catch (const std::out_of_range&) {
    throw ParseError("bounds out of range: " + text);
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct Options {
  std::string input = "-";
  std::string format = "json";
  std::string cover_file, sdr_file;
  std::string bounds_a, bounds_b;
  int i = 0, j = 0, n = 0;
  bool repair = false;
  bool directed = false;
};

int run_compete(const Options& opt) {
  Graph g = competition_graph(parse_digraph(read_input(opt.input)));
  if (opt.format == "dot")
    std::cout << graph_to_dot(g);
  else
    emit(graph_json(g));
  return 0;
}

int run_recognize(const Options& opt) {
  Graph g = parse_graph(read_input(opt.input));
  auto cert = recognize(g, DegreeBounds(opt.i, opt.j));
  emit(certificate_json(cert));
  return cert.member ? 0 : 1;
}

int run_cover(const Options& opt) {
  Graph g = parse_graph(read_input(opt.input));
  DegreeBounds b(opt.i, opt.j);
  auto cover = search_cover(g, b);
  if (!cover) {
    emit(json{{"exists", false}});
    return 1;
  }
  if (!opt.repair) {
    emit(json::parse(cover_to_json(*cover)));
    return 0;
  }
  RepairResult repaired = repair_cover(g, *cover, b);
  json doc = json::parse(cover_to_json(repaired.cover));
  doc["representatives"] = repaired.sdr.representatives;
  emit(doc);
  return 0;
}

int run_chordal(const Options& opt) {
  Graph g = parse_graph(read_input(opt.input));
  auto hc = is_chordal(g);
  json doc{{"chordal", hc.chordal}};
  if (!hc.chordal) doc["hole"] = hc.hole;
  emit(doc);
  return hc.chordal ? 0 : 1;
}

int run_triangle(const Options& opt) {
  bool answer = induces_triangle(parse_digraph(read_input(opt.input)));
  emit(json{{"induces_triangle", answer}});
  return answer ? 0 : 1;
}

int run_good_subdigraph(const Options& opt) {
  auto report = find_good_subdigraph(parse_digraph(read_input(opt.input)));
  json doc{{"found", report.found}};
  if (report.found) {
    doc["vertices"] = report.vertices;
    doc["arcs"] = json::array();
    for (auto [u, v] : report.arcs) doc["arcs"].push_back({u, v});
  }
  emit(doc);
  return report.found ? 0 : 1;
}

int run_bibd_verify(const Options& opt) {
  Bibd d = bibd_from_json(read_input(opt.input));
  auto violation = verify_bibd(d);
  json doc{{"valid", !violation.has_value()}};
  if (violation) doc["violation"] = *violation;
  emit(doc);
  return violation ? 1 : 0;
}

int run_bibd_digraph(const Options& opt) {
  Bibd d = bibd_from_json(read_input(opt.input));
  try {
    emit(digraph_json(bibd_to_digraph(d)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return 0;
}

int run_sts(const Options& opt) {
  auto design = steiner_triple(opt.n);
  if (!design) {
    emit(json{{"exists", false}});
    return 1;
  }
  emit(json::parse(bibd_to_json(*design)));
  return 0;
}

int run_witness(const Options& opt) {
  Graph g = parse_graph(read_input(opt.input));
  DegreeBounds b(opt.i, opt.j);
  if (!opt.cover_file.empty()) {
    CliqueCover cover = cover_from_json(read_input(opt.cover_file));
    if (!validate_cover(g, cover, b)) throw ParseError("supplied cover fails the cover conditions");
    SdrAssignment sdr;
    if (!opt.sdr_file.empty()) {
      sdr = sdr_from_json(read_input(opt.sdr_file));
    } else {
      sdr = repair_cover(g, cover, b).sdr;
    }
    try {
      emit(digraph_json(witness_digraph(g, cover, sdr)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    return 0;
  }
  auto cert = recognize(g, b);
  if (!cert.member) {
    emit(certificate_json(cert));
    return 1;
  }
  emit(digraph_json(*cert.witness));
  return 0;
}

int run_containment(const Options& opt) {
  auto verdict = containment(parse_bounds_pair(opt.bounds_a), parse_bounds_pair(opt.bounds_b));
  emit(json::parse(verdict_to_json(verdict)));
  return verdict.relation == Relation::Unknown ? 1 : 0;
}

int run_export_dot(const Options& opt) {
  std::string text = read_input(opt.input);
  if (looks_like_json(text)) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON document");
    if (doc.contains("arcs"))
      std::cout << digraph_to_dot(digraph_from_json(text));
    else
      std::cout << graph_to_dot(graph_from_json(text));
  } else if (opt.directed) {
    std::cout << digraph_to_dot(parse_digraph(text));
  } else {
    std::cout << graph_to_dot(parse_graph(text));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"competition graphs of degree-bounded loopless digraphs"};
  app.require_subcommand(1);
  Options opt;
  int (*action)(const Options&) = nullptr;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "input file, or - for standard input");
  };
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--i", opt.i, "maximum indegree")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--j", opt.j, "maximum outdegree")->required()->check(CLI::PositiveNumber);
  };

  auto* compete = app.add_subcommand("compete", "competition graph of a digraph");
  add_input(compete);
  compete->add_option("--format", opt.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  compete->callback([&] { action = run_compete; });

  auto* rec = app.add_subcommand("recognize", "decide membership for bounds (i, j)");
  add_input(rec);
  add_bounds(rec);
  rec->callback([&] { action = run_recognize; });

  auto* cover = app.add_subcommand("cover", "search for an edge clique cover within the bounds");
  add_input(cover);
  add_bounds(cover);
  cover->add_flag("--repair", opt.repair, "also repair to an SDR-admitting cover and report it");
  cover->callback([&] { action = run_cover; });

  auto* chordal = app.add_subcommand("chordal", "chordality of a graph, with hole certificate");
  add_input(chordal);
  chordal->callback([&] { action = run_chordal; });

  auto* good = app.add_subcommand("good-subdigraph", "search a digraph for a good subdigraph");
  add_input(good);
  good->callback([&] { action = run_good_subdigraph; });

  auto* tri = app.add_subcommand("triangle", "does the digraph induce a triangle");
  add_input(tri);
  tri->callback([&] { action = run_triangle; });

  auto* bverify = app.add_subcommand("bibd-verify", "verify a block design");
  add_input(bverify);
  bverify->callback([&] { action = run_bibd_verify; });

  auto* bdig = app.add_subcommand("bibd-digraph", "bipartite digraph of a lambda=1 design");
  add_input(bdig);
  bdig->callback([&] { action = run_bibd_digraph; });

  auto* sts = app.add_subcommand("sts", "Steiner triple system on n varieties");
  sts->add_option("--n", opt.n, "number of varieties")->required();
  sts->callback([&] { action = run_sts; });

  auto* wit = app.add_subcommand("witness", "witness digraph for a member graph");
  add_input(wit);
  add_bounds(wit);
  wit->add_option("--cover", opt.cover_file, "use this cover JSON instead of searching");
  wit->add_option("--sdr", opt.sdr_file, "use this SDR JSON (with --cover)");
  wit->callback([&] { action = run_witness; });

  auto* cont = app.add_subcommand("containment", "relation between two bound families");
  cont->add_option("--a", opt.bounds_a, "first bounds, as i,j")->required();
  cont->add_option("--b", opt.bounds_b, "second bounds, as i,j")->required();
  cont->callback([&] { action = run_containment; });

  auto* dot = app.add_subcommand("export-dot", "DOT form of a graph or digraph");
  add_input(dot);
  dot->add_flag("--directed", opt.directed, "treat text input as a digraph");
  dot->callback([&] { action = run_export_dot; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
