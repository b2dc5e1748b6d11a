#include "hc/graph6.hpp"

#include <fstream>
#include <sstream>

namespace hc {

namespace {

constexpr char kHeader[] = ">>graph6<<";

int data_byte(const std::string& text, size_t pos) {
  if (pos >= text.size()) throw ParseError("truncated graph6 string", text.size());
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("character out of graph6 range", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  size_t pos = 0;
  if (text.rfind(kHeader, 0) == 0) pos = sizeof(kHeader) - 1;
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  long n;
  if (static_cast<unsigned char>(text[pos]) == 126) {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw ParseError("graph too large", pos);
    long hi = data_byte(text, pos);
    long mid = data_byte(text, pos + 1);
    long lo = data_byte(text, pos + 2);
    n = (hi << 12) | (mid << 6) | lo;
    pos += 3;
  } else {
    n = data_byte(text, pos);
    ++pos;
  }
  if (n > Graph::kMaxVertices)
    throw ParseError("graph exceeds 64 vertices", pos - 1);

  size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
  size_t expected = (pairs + 5) / 6;
  if (text.size() - pos < expected) throw ParseError("truncated graph6 string", text.size());
  if (text.size() - pos > expected) throw ParseError("trailing characters", pos + expected);

  Graph g(static_cast<int>(n));
  size_t t = 0;
  int i = 0, j = 1;
  for (size_t b = 0; b < expected; ++b) {
    int v = data_byte(text, pos + b);
    for (int bit = 5; bit >= 0; --bit, ++t) {
      bool set = (v >> bit) & 1;
      if (t < pairs) {
        if (set) g.add_edge(i, j);
        if (++i == j) { i = 0; ++j; }
      } else if (set) {
        throw ParseError("nonzero padding bits", pos + b);
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  int cur = 0, bit = 5;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= 1 << bit;
      if (--bit < 0) {
        out += static_cast<char>(cur + 63);
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out += static_cast<char>(cur + 63);
  return out;
}

std::vector<Graph> read_graph6_lines(const std::string& text) {
  std::vector<Graph> graphs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph6_lines(buf.str());
}

}  // namespace hc
