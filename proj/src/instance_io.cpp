#include "twctss/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace twctss {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t to_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

const Line& expect_keyword(const std::vector<Line>& lines, std::size_t index,
                           std::string_view keyword, std::size_t last_line) {
  if (index >= lines.size()) {
    throw ParseError(last_line, "missing '" + std::string(keyword) + "' line");
  }
  const Line& line = lines[index];
  if (line.tokens[0] != keyword) {
    throw ParseError(line.number, "expected '" + std::string(keyword) + "', got '" +
                                      std::string(line.tokens[0]) + "'");
  }
  return line;
}

std::int64_t single_value(const Line& line) {
  if (line.tokens.size() != 2) {
    throw ParseError(line.number, "expected '" + std::string(line.tokens[0]) + " <value>'");
  }
  return to_int(line.tokens[1], line.number);
}

// Shared tail of both parsers: range/duplicate checks, then construction.
Instance build(std::int64_t n, std::vector<int> thresholds, std::int64_t lambda,
               const std::vector<std::pair<Edge, std::size_t>>& edges) {
  std::set<Edge> seen;
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (auto [e, line] : edges) {
    for (NodeId x : {e.u, e.v}) {
      if (x < 0 || x >= n) {
        throw ParseError(line, "node id " + std::to_string(x) + " out of range");
      }
    }
    if (e.u == e.v) throw ParseError(line, "self-loop at node " + std::to_string(e.u));
    Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) {
      throw ParseError(line, "duplicate edge " + std::to_string(key.u) + " " +
                                 std::to_string(key.v));
    }
    plain.push_back(key);
  }
  return Instance(static_cast<NodeId>(n), std::move(thresholds), lambda, plain);
}

Instance parse_text(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const std::size_t last = lines.empty() ? 0 : lines.back().number;
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0] != "twctss") {
    throw ParseError(header.number, "expected header 'twctss 1'");
  }
  if (header.tokens[1] != "1") {
    throw ParseError(header.number, "unsupported version " + std::string(header.tokens[1]));
  }
  const std::int64_t n = single_value(expect_keyword(lines, 1, "n", last));
  if (n < 0 || n > std::numeric_limits<NodeId>::max()) {
    throw ParseError(lines[1].number, "node count out of range");
  }
  const std::int64_t lambda = single_value(expect_keyword(lines, 2, "lambda", last));
  const Line& tline = expect_keyword(lines, 3, "thresholds", last);
  if (static_cast<std::int64_t>(tline.tokens.size()) - 1 != n) {
    throw ParseError(tline.number, "declared n=" + std::to_string(n) + " but " +
                                       std::to_string(tline.tokens.size() - 1) +
                                       " thresholds given");
  }
  std::vector<int> thresholds;
  thresholds.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < tline.tokens.size(); ++i) {
    const std::int64_t t = to_int(tline.tokens[i], tline.number);
    if (t < 0 || t > std::numeric_limits<int>::max()) {
      throw ParseError(tline.number, "threshold out of range");
    }
    thresholds.push_back(static_cast<int>(t));
  }
  const Line& eline = expect_keyword(lines, 4, "edges", last);
  const std::int64_t m = single_value(eline);
  if (m < 0) throw ParseError(eline.number, "negative edge count");
  const std::size_t available = lines.size() - 5;
  if (available != static_cast<std::size_t>(m)) {
    throw ParseError(available < static_cast<std::size_t>(m) ? last : lines[5 + m].number,
                     "declared m=" + std::to_string(m) + " but " +
                         std::to_string(available) + " edge lines given");
  }
  std::vector<std::pair<Edge, std::size_t>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 5; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
    const std::int64_t u = to_int(line.tokens[0], line.number);
    const std::int64_t v = to_int(line.tokens[1], line.number);
    for (std::int64_t x : {u, v}) {
      if (x < 0 || x >= n) {
        throw ParseError(line.number, "node id " + std::to_string(x) + " out of range");
      }
    }
    edges.push_back({Edge{static_cast<NodeId>(u), static_cast<NodeId>(v)}, line.number});
  }
  return build(n, std::move(thresholds), lambda, edges);
}

Instance parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError(0, "unsupported version");
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 0 || n > std::numeric_limits<NodeId>::max()) {
      throw ParseError(0, "node count out of range");
    }
    const auto lambda = doc.at("lambda").get<std::int64_t>();
    auto thresholds = doc.at("thresholds").get<std::vector<int>>();
    if (static_cast<std::int64_t>(thresholds.size()) != n) {
      throw ParseError(0, "declared n=" + std::to_string(n) + " but " +
                              std::to_string(thresholds.size()) + " thresholds given");
    }
    std::vector<std::pair<Edge, std::size_t>> edges;
    for (const auto& e : doc.at("edges")) {
      const auto pair = e.get<std::vector<std::int64_t>>();
      if (pair.size() != 2) throw ParseError(0, "edge must be [u, v]");
      for (std::int64_t x : pair) {
        if (x < 0 || x >= n) {
          throw ParseError(0, "node id " + std::to_string(x) + " out of range");
        }
      }
      edges.push_back({Edge{static_cast<NodeId>(pair[0]), static_cast<NodeId>(pair[1])}, 0});
    }
    return build(n, std::move(thresholds), lambda, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid instance JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "twctss 1\n";
  out << "n " << instance.size() << "\n";
  out << "lambda " << instance.lambda() << "\n";
  out << "thresholds";
  for (int t : instance.thresholds()) out << ' ' << t;
  out << "\n";
  const auto edges = instance.edges();
  out << "edges " << edges.size() << "\n";
  for (const Edge& e : edges) out << e.u << ' ' << e.v << "\n";
  return out.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace twctss
