#include "dpp/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace dpp {

namespace {

using nlohmann::json;

// Objects are expanded one key per line down to `expand_depth`; everything
// deeper is written compactly.
void emit(std::ostream& out, const json& value, int depth, int expand_depth) {
  if (!value.is_object() || depth >= expand_depth || value.empty()) {
    out << value.dump();
    return;
  }
  const std::string indent(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  out << "{\n";
  std::size_t i = 0;
  for (auto it = value.begin(); it != value.end(); ++it, ++i) {
    out << indent << json(it.key()).dump() << ": ";
    emit(out, it.value(), depth + 1, expand_depth);
    out << (i + 1 < value.size() ? ",\n" : "\n");
  }
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << "}";
}

std::string pretty(const json& value) {
  std::ostringstream out;
  emit(out, value, 0, 2);
  out << "\n";
  return out.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

json linkage_to_json(const Linkage& l) {
  json paths = json::array();
  for (const Path& p : l.paths) paths.push_back(p.vertices);
  return paths;
}

Linkage linkage_from_json(const json& j) {
  Linkage l;
  for (const auto& p : j) l.paths.push_back(Path{p.get<std::vector<VertexId>>()});
  return l;
}

SolveStatus status_from_string(const std::string& text) {
  for (auto s : {SolveStatus::solvable, SolveStatus::unsolvable, SolveStatus::aborted}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown status '" + text + "'");
}

Verdict verdict_from_string(const std::string& text) {
  for (auto v : {Verdict::no, Verdict::yes, Verdict::indeterminate}) {
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown verdict '" + text + "'");
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["format"] = "dpp-instance";
  doc["format_version"] = kInstanceFormatVersion;
  doc["vertex_count"] = inst.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : inst.graph.edges()) edges.push_back({e.first, e.second});
  doc["edges"] = std::move(edges);
  json pairs = json::array();
  for (const auto& p : inst.pairs) pairs.push_back({p.source, p.target});
  doc["pairs"] = std::move(pairs);
  if (!inst.graph.labels().empty()) {
    json labels = json::object();
    for (const auto& [v, text] : inst.graph.labels()) labels[std::to_string(v)] = text;
    doc["labels"] = std::move(labels);
  }
  if (inst.layout) {
    const GridLayout& layout = *inst.layout;
    json cells = json::array();
    json roles = json::array();
    json hosts = json::array();
    for (VertexId v = 0; v < layout.vertex_count(); ++v) {
      if (const auto& c = layout.cell_of[v]) cells.push_back({v, c->row, c->col});
      roles.push_back(to_string(layout.role_of[v]));
    }
    for (const auto& [v, host] : layout.host_edge) {
      hosts.push_back({v, host.edge.first, host.edge.second, host.ordinal});
    }
    doc["layout"] = {{"rows", layout.rows}, {"cols", layout.cols}, {"cells", std::move(cells)},
                     {"roles", std::move(roles)}, {"host_edges", std::move(hosts)}};
  }
  if (inst.meta) {
    doc["meta"] = {{"k", inst.meta->k},
                   {"arc_rule", inst.meta->arc_rule},
                   {"s0", inst.meta->s0_placement}};
  }
  return pretty(doc);
}

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (field<std::string>(doc, "format") != "dpp-instance") throw ParseError("not an instance document");
  if (field<int>(doc, "format_version") != kInstanceFormatVersion) {
    throw ParseError("unsupported instance format version");
  }
  Instance inst;
  try {
    inst.graph = Graph(field<VertexId>(doc, "vertex_count"));
    for (const auto& e : field<std::vector<std::pair<VertexId, VertexId>>>(doc, "edges")) {
      inst.graph.add_edge(e.first, e.second);
    }
    if (doc.contains("labels")) {
      for (const auto& [key, value] : doc.at("labels").items()) {
        inst.graph.set_label(std::stoi(key), value.get<std::string>());
      }
    }
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid labels: ") + e.what());
  }
  for (const auto& p : field<std::vector<std::pair<VertexId, VertexId>>>(doc, "pairs")) {
    inst.pairs.push_back({p.first, p.second});
  }
  if (doc.contains("layout")) {
    const json& lj = doc.at("layout");
    GridLayout layout;
    layout.rows = field<int>(lj, "rows");
    layout.cols = field<int>(lj, "cols");
    const auto n = static_cast<std::size_t>(inst.graph.vertex_count());
    layout.cell_of.assign(n, std::nullopt);
    for (const auto& c : field<std::vector<std::array<int, 3>>>(lj, "cells")) {
      if (c[0] < 0 || static_cast<std::size_t>(c[0]) >= n) throw ParseError("cell for unknown vertex");
      layout.cell_of[c[0]] = Cell{c[1], c[2]};
    }
    for (const auto& r : field<std::vector<std::string>>(lj, "roles")) {
      auto role = role_from_string(r);
      if (!role) throw ParseError("unknown role '" + r + "'");
      layout.role_of.push_back(*role);
    }
    if (layout.role_of.size() != n) throw ParseError("role list does not cover every vertex");
    for (const auto& h : field<std::vector<std::array<int, 4>>>(lj, "host_edges")) {
      layout.host_edge[h[0]] = HostEdge{Edge(h[1], h[2]), h[3]};
    }
    inst.layout = std::move(layout);
  }
  if (doc.contains("meta")) {
    const json& mj = doc.at("meta");
    inst.meta = GeneratorMeta{field<int>(mj, "k"), field<std::string>(mj, "arc_rule"),
                              field<std::string>(mj, "s0")};
  }
  try {
    validate_terminals(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string instance_digest(const Instance& inst) {
  const std::string text = serialize_instance(inst);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::ostringstream hex;
  hex << "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

SolutionDocument make_solution_document(const Instance& inst, const SolveOutcome& outcome,
                                        SolveMode mode) {
  SolutionDocument doc;
  doc.instance_digest = instance_digest(inst);
  doc.status = outcome.status;
  doc.solutions = outcome.solutions;
  if (!outcome.solutions.empty()) {
    doc.spanning = spans_all_vertices(inst.graph, outcome.solutions.front());
    if (inst.layout) doc.crossing = crossing_report(outcome.solutions.front(), *inst.layout);
  }
  if (outcome.status == SolveStatus::unsolvable) {
    doc.unique = Verdict::no;
  } else if (outcome.solutions.size() >= 2) {
    doc.unique = Verdict::no;
  } else if (outcome.status == SolveStatus::solvable && mode.kind != SolveMode::Kind::decide &&
             mode.cap >= 2) {
    doc.unique = Verdict::yes;
  }
  return doc;
}

std::string serialize_solution(const SolutionDocument& doc) {
  json j;
  j["format"] = "dpp-solution";
  j["format_version"] = kSolutionFormatVersion;
  j["instance_digest"] = doc.instance_digest;
  j["status"] = to_string(doc.status);
  json solutions = json::array();
  for (const auto& l : doc.solutions) solutions.push_back(linkage_to_json(l));
  j["solutions"] = std::move(solutions);
  j["flags"] = {{"unique", to_string(doc.unique)}, {"spanning", doc.spanning}};
  if (doc.crossing) {
    j["crossing"] = {{"per_path", doc.crossing->per_path},
                     {"total", doc.crossing->total},
                     {"undefined_paths", doc.crossing->undefined_paths}};
  }
  return pretty(j);
}

SolutionDocument parse_solution(std::string_view text) {
  const json j = parse_json(text);
  if (field<std::string>(j, "format") != "dpp-solution") throw ParseError("not a solution document");
  if (field<int>(j, "format_version") != kSolutionFormatVersion) {
    throw ParseError("unsupported solution format version");
  }
  SolutionDocument doc;
  doc.instance_digest = field<std::string>(j, "instance_digest");
  doc.status = status_from_string(field<std::string>(j, "status"));
  try {
    for (const auto& l : j.at("solutions")) doc.solutions.push_back(linkage_from_json(l));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad solutions: ") + e.what());
  }
  const json flags = field<json>(j, "flags");
  doc.unique = verdict_from_string(field<std::string>(flags, "unique"));
  doc.spanning = field<bool>(flags, "spanning");
  if (j.contains("crossing")) {
    const json& c = j.at("crossing");
    CrossingReport report;
    report.per_path = field<std::vector<int>>(c, "per_path");
    report.total = field<int>(c, "total");
    report.undefined_paths = field<std::set<std::size_t>>(c, "undefined_paths");
    doc.crossing = std::move(report);
  }
  return doc;
}

void check_digest(const SolutionDocument& doc, const Instance& inst) {
  if (doc.instance_digest != instance_digest(inst)) {
    throw ParseError("solution digest " + doc.instance_digest + " does not match the instance");
  }
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  std::size_t expected_edges = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head) || head == "c") continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (head == "p") {
      std::string tag;
      long n = -1;
      long m = -1;
      if (g || !(fields >> tag >> n >> m) || n < 0 || m < 0) fail("bad problem line");
      g.emplace(static_cast<VertexId>(n));
      expected_edges = static_cast<std::size_t>(m);
      continue;
    }
    if (!g) fail("edge before problem line");
    long u = 0;
    long v = 0;
    if (head == "e") {
      if (!(fields >> u >> v)) fail("bad edge line");
    } else {
      auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), u);
      if (ec != std::errc() || ptr != head.data() + head.size() || !(fields >> v)) {
        fail("unrecognised line");
      }
    }
    try {
      g->add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } catch (const GraphError& e) {
      fail(e.what());
    }
  }
  if (!g) throw ParseError("edge list has no problem line");
  if (g->edge_count() != expected_edges) {
    throw ParseError("edge list declares " + std::to_string(expected_edges) + " edges but has " +
                     std::to_string(g->edge_count()));
  }
  return *g;
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.first + 1 << ' ' << e.second + 1 << '\n';
  return out.str();
}

std::vector<TerminalPair> parse_pair_list(std::string_view text) {
  std::vector<TerminalPair> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("pair '" + item + "' is not of the form u-v");
    long u = 0;
    long v = 0;
    try {
      u = std::stol(item.substr(0, dash));
      v = std::stol(item.substr(dash + 1));
    } catch (const std::logic_error&) {
      throw ParseError("pair '" + item + "' is not numeric");
    }
    if (u < 1 || v < 1) throw ParseError("pair '" + item + "': ids are 1-based");
    out.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
  }
  return out;
}

Instance load_instance(const std::filesystem::path& file,
                       const std::vector<TerminalPair>& extra_pairs) {
  const std::string text = read_text_file(file);
  const auto first = text.find_first_not_of(" \t\r\n");
  Instance inst;
  if (first != std::string::npos && text[first] == '{') {
    inst = parse_instance(text);
  } else {
    inst.graph = parse_dimacs(text);
  }
  inst.pairs.insert(inst.pairs.end(), extra_pairs.begin(), extra_pairs.end());
  try {
    validate_terminals(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return inst;
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& file, std::string_view text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

}  // namespace dpp
