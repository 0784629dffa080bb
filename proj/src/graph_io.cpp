#include "twtri/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace twtri {

const char* to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::Black:
      return "black";
    case EdgeColor::Red:
      return "red";
    case EdgeColor::None:
      break;
  }
  return "none";
}

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace detail {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace detail

EdgeList parse_graph(std::string_view text) {
  EdgeList g;
  bool have_header = false;
  std::uint64_t declared_m = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tok = detail::split_tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      std::uint64_t n = 0;
      if (tok.size() != 3 || !detail::parse_uint(tok[1], n) || !detail::parse_uint(tok[2], declared_m))
        throw ParseError("expected 'p <n> <m>'", line_no);
      if (n > (std::uint64_t{1} << 30)) throw ParseError("vertex count too large", line_no);
      g.n = static_cast<VertexId>(n);
      g.edges.reserve(declared_m);
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError("edge before header", line_no);
      std::uint64_t u = 0, v = 0;
      if (tok.size() != 3 || !detail::parse_uint(tok[1], u) || !detail::parse_uint(tok[2], v))
        throw ParseError("expected 'e <u> <v>'", line_no);
      if (u < 1 || u > g.n || v < 1 || v > g.n) throw ParseError("endpoint out of range", line_no);
      if (u == v) throw ParseError("self-loop", line_no);
      g.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    } else {
      throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line_no);
    }
  }
  if (!have_header) throw ParseError("missing 'p <n> <m>' header");
  if (g.edges.size() != declared_m)
    throw ParseError("header declares " + std::to_string(declared_m) + " edges, found " +
                     std::to_string(g.edges.size()));
  return g;
}

std::string serialize_graph(const EdgeList& g) {
  std::string out;
  out.reserve(16 + g.edges.size() * 14);
  out += "p " + std::to_string(g.n) + ' ' + std::to_string(g.edges.size()) + '\n';
  for (auto [u, v] : g.edges) {
    out += "e ";
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

EdgeList read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

}  // namespace twtri
