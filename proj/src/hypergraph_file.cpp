#include "hypersym/hypergraph_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "hypersym/errors.hpp"

namespace hypersym {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg,
                       Errc code = Errc::ParseError) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg, line);
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected 'key: value'");
    auto key = trim(line.substr(0, colon));
    auto words = split_words(line.substr(colon + 1));

    if (key == "vertices") {
      if (ground) fail(line_no, "second vertices line");
      if (words.empty()) fail(line_no, "vertices line is empty");
      std::size_t m = 0;
      const auto& w = words.front();
      auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), m);
      try {
        if (words.size() == 1 && ec == std::errc() && end == w.data() + w.size()) {
          ground.emplace(m);
        } else {
          ground.emplace(words);
        }
      } catch (const Error& e) {
        fail(line_no, e.what(), e.code());
      }
    } else if (key == "edge") {
      if (!ground) fail(line_no, "edge before vertices line");
      if (words.empty()) fail(line_no, "edge lists no vertices");
      Edge e;
      for (const auto& w : words) {
        auto idx = ground->find(w);
        if (!idx) fail(line_no, "unknown vertex label '" + w + "'", Errc::UnknownLabel);
        e.push_back(*idx);
      }
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        fail(line_no, "repeated vertex inside an edge");
      }
      if (!seen.insert(e).second) fail(line_no, "duplicate edge", Errc::DuplicateEdge);
      edges.push_back(std::move(e));
    } else {
      fail(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!ground) throw Error(Errc::ParseError, "missing vertices line");
  return Hypergraph(std::move(*ground), std::move(edges));
}

Hypergraph parse_hypergraph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

std::string format_hypergraph(const Hypergraph& g) {
  std::string out = "vertices:";
  for (const auto& l : g.ground().labels()) out += " " + l;
  out += '\n';
  for (const auto& e : g.edges()) {
    out += "edge:";
    for (auto x : e) out += " " + g.ground().label(x);
    out += '\n';
  }
  return out;
}

}  // namespace hypersym
