#include "qramsey/graph6.hpp"

#include <fstream>
#include <sstream>

#include "qramsey/errors.hpp"

namespace qramsey {

namespace {

constexpr std::uint64_t kMaxOrder = 68719476735ULL;  // 2^36 - 1
constexpr char kBias = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int groups = 3;
  out.push_back('~');
  if (n > 258047) {
    out.push_back('~');
    groups = 6;
  }
  for (int g = groups - 1; g >= 0; --g) out.push_back(static_cast<char>(((n >> (6 * g)) & 0x3F) + kBias));
}

int sextet(char c) {
  if (c < 63 || c > 126) throw MalformedGraph6("byte outside the printable graph6 range");
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kMaxOrder) throw DomainError("graph6 cannot encode more than 2^36-1 vertices");
  std::string out;
  append_size(out, n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  int filled = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    const auto row = g.row(j);
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((row[i / 64] >> (i % 64)) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view bytes) {
  if (bytes.empty()) throw MalformedGraph6("empty graph6 string");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (bytes[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(bytes[0]));
    pos = 1;
  } else {
    int groups = 3;
    pos = 1;
    if (bytes.size() > 1 && bytes[1] == '~') {
      groups = 6;
      pos = 2;
    }
    if (bytes.size() < pos + groups) throw MalformedGraph6("truncated size header");
    for (int g = 0; g < groups; ++g) n = (n << 6) | static_cast<std::uint64_t>(sextet(bytes[pos++]));
    if ((groups == 3 && n < 63) || (groups == 6 && n <= 258047)) {
      throw MalformedGraph6("non-canonical size header");
    }
  }
  const std::uint64_t body = bytes.size() - pos;
  // n(n-1)/2 <= 6*body keeps the allocation proportional to the input.
  if (n > 1 && (n - 1) > (12 * body + 10) / n) throw MalformedGraph6("body too short for declared order");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (body != (bits + 5) / 6) throw MalformedGraph6("body length does not match declared order");

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(bytes[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(bytes.back());
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw MalformedGraph6("nonzero padding bits");
  }
  return g;
}

Graph read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph6 file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (!line.empty()) return decode_graph6(line);
  }
  throw MalformedGraph6("no graph found in " + path);
}

void write_graph6_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write graph6 file: " + path);
  out << encode_graph6(g) << '\n';
}

}  // namespace qramsey
