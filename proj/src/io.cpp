#include "ccol/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace ccol {

namespace {

struct Line {
  int number;  // 1-based
  std::vector<std::string_view> tokens;
};

// Splits on whitespace, drops blank lines and 'c' comment lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (l.tokens.empty() || l.tokens[0] == "c") continue;
    out.push_back(std::move(l));
    if (eol == text.size()) break;
  }
  return out;
}

int parse_int(const Line& l, std::string_view tok, int lo, int hi, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error(l.number, std::string("expected integer for ") + what + ", got '" +
                                    std::string(tok) + "'");
  if (value < lo || value > hi)
    throw parse_error(l.number, std::string(what) + " " + std::to_string(value) +
                                    " out of range [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "]");
  return value;
}

void expect_tokens(const Line& l, std::size_t count, const char* what) {
  if (l.tokens.size() != count)
    throw parse_error(l.number, std::string("malformed ") + what + " line: expected " +
                                    std::to_string(count) + " tokens, got " +
                                    std::to_string(l.tokens.size()));
}

}  // namespace

Instance3cc parse_3cc(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, "missing header 'p 3cc <n>'");
  const Line& header = lines[0];
  if (header.tokens[0] != "p" || header.tokens.size() != 3 || header.tokens[1] != "3cc")
    throw parse_error(header.number, "expected header 'p 3cc <n>'");
  const int n = parse_int(header, header.tokens[2], 0, 1 << 16, "vertex count");

  Instance3cc inst{EdgeColouring(n), ColourLists(n, ColourSet::full())};
  std::vector<char> edge_seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> list_seen(n, 0);
  long long edges_read = 0;
  const long long edges_expected = static_cast<long long>(n) * (n - 1) / 2;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] == "e") {
      expect_tokens(l, 4, "edge");
      const int u = parse_int(l, l.tokens[1], 0, n - 1, "vertex index");
      const int v = parse_int(l, l.tokens[2], 0, n - 1, "vertex index");
      if (u == v) throw parse_error(l.number, "self-loop on vertex " + std::to_string(u));
      if (u > v)
        throw parse_error(l.number, "edge endpoints must satisfy u < v");
      if (l.tokens[3].size() != 1)
        throw parse_error(l.number, "unknown colour letter '" + std::string(l.tokens[3]) + "'");
      auto c = colour_from_char(l.tokens[3][0]);
      if (!c)
        throw parse_error(l.number, "unknown colour letter '" + std::string(l.tokens[3]) + "'");
      if (edge_seen[static_cast<std::size_t>(u) * n + v])
        throw parse_error(l.number,
                          "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      edge_seen[static_cast<std::size_t>(u) * n + v] = 1;
      inst.graph.set_colour(u, v, *c);
      ++edges_read;
    } else if (l.tokens[0] == "l") {
      if (l.tokens.size() != 2 && l.tokens.size() != 3)
        throw parse_error(l.number, "malformed list line");
      const int v = parse_int(l, l.tokens[1], 0, n - 1, "vertex index");
      if (list_seen[v])
        throw parse_error(l.number, "duplicate list for vertex " + std::to_string(v));
      list_seen[v] = 1;
      ColourSet s = ColourSet::none();
      if (l.tokens.size() == 3) {
        for (char ch : l.tokens[2]) {
          auto c = colour_from_char(ch);
          if (!c)
            throw parse_error(l.number, std::string("unknown colour letter '") + ch + "'");
          if (s.contains(*c))
            throw parse_error(l.number, std::string("repeated colour letter '") + ch + "'");
          s = s.with(*c);
        }
      }
      inst.lists[v] = s;
    } else {
      throw parse_error(l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    }
  }

  if (edges_read != edges_expected) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!edge_seen[static_cast<std::size_t>(u) * n + v])
          throw parse_error(lines.back().number,
                            "incomplete graph: missing edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  return inst;
}

std::string serialize_3cc(const EdgeColouring& graph, const ColourLists& lists) {
  const int n = graph.vertex_count();
  if (!lists.empty() && static_cast<int>(lists.size()) != n)
    throw contract_error("list table size does not match vertex count");
  std::ostringstream out;
  out << "p 3cc " << n << "\n";
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      out << "e " << u << " " << v << " " << colour_char(graph.colour(u, v)) << "\n";
  for (int v = 0; v < static_cast<int>(lists.size()); ++v) {
    if (lists[v] == ColourSet::full()) continue;
    out << "l " << v;
    if (!lists[v].empty()) {
      out << " ";
      for (Colour c : kColours)
        if (lists[v].contains(c)) out << colour_char(c);
    }
    out << "\n";
  }
  return out.str();
}

StubbornInstance parse_stubborn(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, "missing header 'p stubborn <n> <m>'");
  const Line& header = lines[0];
  if (header.tokens[0] != "p" || header.tokens.size() != 4 || header.tokens[1] != "stubborn")
    throw parse_error(header.number, "expected header 'p stubborn <n> <m>'");
  const int n = parse_int(header, header.tokens[2], 0, 1 << 16, "vertex count");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  const int m = parse_int(header, header.tokens[3], 0,
                          static_cast<int>(std::min<long long>(max_edges, 1 << 30)), "edge count");

  StubbornInstance inst(n);
  std::vector<char> list_seen(n, 0);
  int edges_read = 0;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] == "e") {
      expect_tokens(l, 3, "edge");
      const int u = parse_int(l, l.tokens[1], 0, n - 1, "vertex index");
      const int v = parse_int(l, l.tokens[2], 0, n - 1, "vertex index");
      if (u == v) throw parse_error(l.number, "self-loop on vertex " + std::to_string(u));
      if (u > v) throw parse_error(l.number, "edge endpoints must satisfy u < v");
      if (inst.has_edge(u, v))
        throw parse_error(l.number,
                          "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      if (++edges_read > m)
        throw parse_error(l.number, "more edge lines than declared in header");
      inst.add_edge(u, v);
    } else if (l.tokens[0] == "l") {
      if (l.tokens.size() != 2 && l.tokens.size() != 3)
        throw parse_error(l.number, "malformed list line");
      const int v = parse_int(l, l.tokens[1], 0, n - 1, "vertex index");
      if (list_seen[v])
        throw parse_error(l.number, "duplicate list for vertex " + std::to_string(v));
      list_seen[v] = 1;
      std::uint8_t mask = 0;
      if (l.tokens.size() == 3) {
        for (char ch : l.tokens[2]) {
          if (ch < '1' || ch > '4')
            throw parse_error(l.number, "value outside 1..4");
          const std::uint8_t bit = static_cast<std::uint8_t>(1u << (ch - '1'));
          if (mask & bit)
            throw parse_error(l.number, std::string("repeated value '") + ch + "'");
          mask |= bit;
        }
      }
      inst.set_list(v, mask);
    } else {
      throw parse_error(l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    }
  }
  if (edges_read != m)
    throw parse_error(lines.back().number, "expected " + std::to_string(m) + " edges, got " +
                                               std::to_string(edges_read));
  return inst;
}

std::string serialize_stubborn(const StubbornInstance& inst) {
  const int n = inst.vertex_count();
  std::ostringstream out;
  out << "p stubborn " << n << " " << inst.edges().size() << "\n";
  for (const auto& [u, v] : inst.edges()) out << "e " << u << " " << v << "\n";
  for (int v = 0; v < n; ++v) {
    if (inst.list(v) == kFullStubbornList) continue;
    out << "l " << v;
    if (inst.list(v) != 0) {
      out << " ";
      for (int value = 1; value <= 4; ++value)
        if (inst.list_allows(v, value)) out << value;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// Shared shape of both solution formats.
template <typename Value, typename ParseValue>
std::optional<std::vector<Value>> parse_solution(std::string_view text, ParseValue&& parse_value) {
  auto lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, "missing status line 's SAT' or 's UNSAT'");
  const Line& status = lines[0];
  if (status.tokens[0] != "s" || status.tokens.size() != 2)
    throw parse_error(status.number, "expected status line 's SAT' or 's UNSAT'");
  if (status.tokens[1] == "UNSAT") {
    if (lines.size() > 1)
      throw parse_error(lines[1].number, "unexpected content after 's UNSAT'");
    return std::nullopt;
  }
  if (status.tokens[1] != "SAT")
    throw parse_error(status.number, "unknown status '" + std::string(status.tokens[1]) + "'");

  std::vector<std::pair<int, Value>> entries;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != "v")
      throw parse_error(l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    expect_tokens(l, 3, "value");
    const int idx = parse_int(l, l.tokens[1], 0, (1 << 30), "vertex index");
    entries.emplace_back(idx, parse_value(l, l.tokens[2]));
  }
  std::vector<Value> out(entries.size());
  std::vector<char> seen(entries.size(), 0);
  for (const auto& [idx, value] : entries) {
    if (idx >= static_cast<int>(entries.size()) || seen[idx])
      throw parse_error(lines[0].number,
                        "vertex indices must cover 0..n-1 exactly once (bad index " +
                            std::to_string(idx) + ")");
    seen[idx] = 1;
    out[idx] = value;
  }
  return out;
}

}  // namespace

std::optional<VertexColouring> parse_3cc_solution(std::string_view text) {
  return parse_solution<Colour>(text, [](const Line& l, std::string_view tok) {
    if (tok.size() != 1)
      throw parse_error(l.number, "unknown colour letter '" + std::string(tok) + "'");
    auto c = colour_from_char(tok[0]);
    if (!c) throw parse_error(l.number, "unknown colour letter '" + std::string(tok) + "'");
    return *c;
  });
}

std::string serialize_3cc_solution(const std::optional<VertexColouring>& phi) {
  if (!phi) return "s UNSAT\n";
  std::ostringstream out;
  out << "s SAT\n";
  for (std::size_t v = 0; v < phi->size(); ++v)
    out << "v " << v << " " << colour_char((*phi)[v]) << "\n";
  return out.str();
}

std::optional<StubbornColouring> parse_stubborn_solution(std::string_view text) {
  return parse_solution<std::uint8_t>(text, [](const Line& l, std::string_view tok) {
    if (tok.size() != 1 || tok[0] < '1' || tok[0] > '4')
      throw parse_error(l.number, "value outside 1..4");
    return static_cast<std::uint8_t>(tok[0] - '0');
  });
}

std::string serialize_stubborn_solution(const std::optional<StubbornColouring>& phi) {
  if (!phi) return "s UNSAT\n";
  std::ostringstream out;
  out << "s SAT\n";
  for (std::size_t v = 0; v < phi->size(); ++v)
    out << "v " << v << " " << int((*phi)[v]) << "\n";
  return out.str();
}

}  // namespace ccol
