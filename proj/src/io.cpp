#include "peeling/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace peeling {

namespace {

long parse_long(const std::string& token, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    const long value = std::stol(token, &used);
    if (used != token.size())
      throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
  }
}

} // namespace

DigraphDescription read_vdg(std::istream& in) {
  DigraphDescription d;
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> n;
  std::vector<bool> defined;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(raw);
    std::string keyword;
    if (!(ss >> keyword) || keyword[0] == '#')
      continue;
    std::vector<std::string> args;
    for (std::string tok; ss >> tok;)
      args.push_back(tok);

    if (keyword == "vdg") {
      if (n)
        throw ParseError(line, "duplicate 'vdg' header");
      if (args.size() != 1)
        throw ParseError(line, "expected 'vdg <n>'");
      const long count = parse_long(args[0], line, "vertex count");
      if (count < 0)
        throw ParseError(line, "negative vertex count");
      n = static_cast<std::size_t>(count);
      d.theta.assign(*n, 0);
      d.labels.assign(*n, "");
      defined.assign(*n, false);
    } else if (!n) {
      throw ParseError(line, "missing 'vdg <n>' header");
    } else if (keyword == "vertex") {
      if (args.size() < 2 || args.size() > 3)
        throw ParseError(line, "expected 'vertex <id> <theta> [label]'");
      const long id = parse_long(args[0], line, "vertex id");
      if (id < 0 || static_cast<std::size_t>(id) >= *n)
        throw ParseError(line, "vertex id " + args[0] + " out of range");
      if (defined[static_cast<std::size_t>(id)])
        throw ParseError(line, "vertex " + args[0] + " defined twice");
      defined[static_cast<std::size_t>(id)] = true;
      d.theta[static_cast<std::size_t>(id)] = parse_long(args[1], line, "theta");
      d.labels[static_cast<std::size_t>(id)] = args.size() == 3 ? args[2] : args[0];
    } else if (keyword == "arc") {
      if (args.size() != 2)
        throw ParseError(line, "expected 'arc <src> <dst>'");
      const long src = parse_long(args[0], line, "arc source");
      const long dst = parse_long(args[1], line, "arc target");
      if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= *n ||
          static_cast<std::size_t>(dst) >= *n)
        throw ParseError(line, "arc endpoint out of range");
      d.arcs.emplace_back(static_cast<VertexId>(src), static_cast<VertexId>(dst));
    } else {
      throw ParseError(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (!n)
    throw ParseError(line, "missing 'vdg <n>' header");
  for (std::size_t v = 0; v < *n; ++v)
    if (!defined[v])
      throw ParseError(line, "vertex " + std::to_string(v) + " never defined");
  return d;
}

DigraphDescription read_vdg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  return read_vdg(in);
}

void write_vdg(std::ostream& out, const ValuedDigraph& g) {
  out << "vdg " << g.size() << '\n';
  for (std::size_t v = 0; v < g.size(); ++v)
    out << "vertex " << v << ' ' << g.theta(static_cast<VertexId>(v)) << ' '
        << g.label(static_cast<VertexId>(v)) << '\n';
  for (std::size_t v = 0; v < g.size(); ++v)
    for (VertexId w : g.out(static_cast<VertexId>(v)))
      out << "arc " << v << ' ' << w << '\n';
}

nlohmann::json to_json(const ValuedDigraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json arcs = nlohmann::json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto id = static_cast<VertexId>(v);
    vertices.push_back({{"id", v}, {"theta", g.theta(id)}, {"label", g.label(id)}});
    for (VertexId w : g.out(id))
      arcs.push_back({v, w});
  }
  return {{"vertices", vertices}, {"arcs", arcs}};
}

DigraphDescription digraph_from_json(const nlohmann::json& j) {
  DigraphDescription d;
  try {
    const auto& vertices = j.at("vertices");
    d.theta.assign(vertices.size(), 0);
    d.labels.assign(vertices.size(), "");
    for (const auto& v : vertices) {
      const auto id = v.at("id").get<std::size_t>();
      if (id >= vertices.size())
        throw InvalidArgument("vertex id " + std::to_string(id) + " out of range");
      d.theta[id] = v.at("theta").get<long>();
      d.labels[id] = v.contains("label") ? v.at("label").get<std::string>() : std::to_string(id);
    }
    for (const auto& a : j.at("arcs"))
      d.arcs.emplace_back(a.at(0).get<VertexId>(), a.at(1).get<VertexId>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed digraph JSON: ") + e.what());
  }
  return d;
}

} // namespace peeling
