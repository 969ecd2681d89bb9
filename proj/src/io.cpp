#include "cgadg/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "cgadg/errors.hpp"

namespace cgadg {
namespace {

// Whitespace-separated tokens of a line with any '#' comment removed.
std::vector<std::string_view> tokens(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, int line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

// Calls fn(tokens, line_number) for every non-blank, non-comment line.
template <typename Fn>
void for_each_data_line(const std::string& text, Fn fn) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto toks = tokens(line);
    if (!toks.empty()) fn(toks, number);
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  int n = -1;
  long expected_edges = -1;
  int last_line = 0;
  std::vector<Edge> edges;
  for_each_data_line(text, [&](const std::vector<std::string_view>& toks, int line) {
    last_line = line;
    if (n < 0) {
      if (toks.size() != 2) throw ParseError(line, "header must be \"n m\"");
      n = parse_number<int>(toks[0], line, "vertex count");
      expected_edges = parse_number<long>(toks[1], line, "edge count");
      if (n < 1) throw ParseError(line, "vertex count must be positive");
      if (expected_edges < 0) throw ParseError(line, "edge count must be non-negative");
      return;
    }
    if (toks.size() != 3) throw ParseError(line, "edge line must be \"u v d\"");
    if (static_cast<long>(edges.size()) == expected_edges) {
      throw ParseError(line, "more edge lines than the declared " + std::to_string(expected_edges));
    }
    const int u = parse_number<int>(toks[0], line, "vertex index");
    const int v = parse_number<int>(toks[1], line, "vertex index");
    const double d = parse_number<double>(toks[2], line, "distance");
    if (u < 1 || v > n || u >= v) throw ParseError(line, "edge needs 1 <= u < v <= n");
    if (!(d > 0.0)) throw ParseError(line, "distance must be positive");
    edges.push_back({u, v, d});
  });
  if (n < 0) throw ParseError(last_line, "missing \"n m\" header");
  if (static_cast<long>(edges.size()) != expected_edges) {
    throw ParseError(last_line, "declared " + std::to_string(expected_edges) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  try {
    return Instance(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(last_line, e.what());
  }
}

std::string format_instance(const Instance& inst) {
  std::string out = std::to_string(inst.n()) + " " + std::to_string(inst.edge_count()) + "\n";
  char buf[96];
  for (const Edge& e : inst.edges()) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.u, e.v, e.d);
    out += buf;
  }
  return out;
}

Realization parse_realization(const std::string& text) {
  std::vector<std::pair<int, Vec3>> rows;
  std::set<int> seen;
  int last_line = 0;
  for_each_data_line(text, [&](const std::vector<std::string_view>& toks, int line) {
    last_line = line;
    if (toks.size() != 4) throw ParseError(line, "coordinate line must be \"i x y z\"");
    const int i = parse_number<int>(toks[0], line, "vertex index");
    if (i < 1) throw ParseError(line, "vertex index must be positive");
    if (!seen.insert(i).second) throw ParseError(line, "duplicate vertex index " + std::to_string(i));
    rows.push_back({i, Vec3{parse_number<double>(toks[1], line, "coordinate"),
                            parse_number<double>(toks[2], line, "coordinate"),
                            parse_number<double>(toks[3], line, "coordinate")}});
  });
  const int n = static_cast<int>(rows.size());
  if (n > 0 && *seen.rbegin() != n) {
    throw ParseError(last_line, "vertex indices are not contiguous 1.." + std::to_string(n));
  }
  Realization r;
  r.resize(n);
  for (const auto& [i, p] : rows) r.at(i) = p;
  return r;
}

std::string format_realization(const Realization& r, const std::string& header) {
  std::string out;
  if (!header.empty()) {
    std::istringstream in(header);
    std::string line;
    while (std::getline(in, line)) out += "# " + line + "\n";
  }
  char buf[128];
  for (int v = 1; v <= r.size(); ++v) {
    const Vec3& p = r.at(v);
    std::snprintf(buf, sizeof buf, "%d %.12g %.12g %.12g\n", v, p.x, p.y, p.z);
    out += buf;
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("error writing " + path);
}

}  // namespace cgadg
