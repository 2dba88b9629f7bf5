#include "linarr/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace linarr {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> split_whitespace(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

std::optional<long long> to_integer(std::string_view text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

int parse_int(const Token& token, int line, const char* what) {
  const auto value = to_integer(token.text);
  if (!value || *value < INT32_MIN || *value > INT32_MAX) {
    throw ParseError(line, token.column,
                     std::string("expected an integer ") + what + ", got '" +
                         std::string(token.text) + "'");
  }
  return static_cast<int>(*value);
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

LabeledTree read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<int> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::map<std::pair<Vertex, Vertex>, int> edge_line;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto tokens = split_whitespace(line);
    if (!n) {
      if (tokens.size() != 1) {
        throw ParseError(line_no, tokens.size() > 1 ? tokens[1].column : 1,
                         "first line must hold only the vertex count n");
      }
      n = parse_int(tokens[0], line_no, "vertex count");
      if (*n < 1) throw ParseError(line_no, tokens[0].column, "vertex count must be >= 1");
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : tokens[0].column,
                       "edge lines must hold exactly two vertex ids 'u v'");
    }
    if (static_cast<int>(edges.size()) == *n - 1) {
      std::ostringstream os;
      os << "wrong edge count: a tree on " << *n << " vertices has exactly " << *n - 1
         << " edges, found more";
      throw ParseError(line_no, 1, os.str());
    }
    const Vertex u = parse_int(tokens[0], line_no, "vertex id");
    const Vertex v = parse_int(tokens[1], line_no, "vertex id");
    for (const auto& t : {std::pair{u, tokens[0].column}, std::pair{v, tokens[1].column}}) {
      if (t.first < 1 || t.first > *n) {
        std::ostringstream os;
        os << "vertex out of range: " << t.first << " is outside 1.." << *n;
        throw ParseError(line_no, t.second, os.str());
      }
    }
    edges.emplace_back(u, v);
    edge_line[std::minmax(u, v)] = line_no;
  }

  if (!n) throw ParseError(line_no + 1, 1, "missing vertex count");
  if (static_cast<int>(edges.size()) != *n - 1) {
    std::ostringstream os;
    os << "wrong edge count: a tree on " << *n << " vertices needs exactly " << *n - 1
       << " edges, found " << edges.size();
    throw ParseError(line_no + 1, 1, os.str());
  }
  try {
    return build_tree(*n, edges);
  } catch (const TreeError& e) {
    int at = line_no;
    if (e.edge()) {
      if (auto it = edge_line.find(std::minmax(e.edge()->first, e.edge()->second));
          it != edge_line.end()) {
        at = it->second;
      }
    }
    throw ParseError(at, 1, std::string(to_string(e.kind())) + ": " + e.what());
  }
}

LabeledTree read_edge_list_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const LabeledTree& tree,
                     const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
  out << tree.size() << "\n";
  for (const auto& e : tree.edges()) out << e.u << " " << e.v << "\n";
}

LinearArrangement read_arrangement(std::istream& in, int n) {
  std::string line;
  int line_no = 0;
  std::optional<LinearArrangement> result;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto tokens = split_whitespace(line);
    if (result) throw ParseError(line_no, tokens[0].column, "arrangement must be a single line");
    if (static_cast<int>(tokens.size()) != n) {
      std::ostringstream os;
      os << "arrangement needs " << n << " positions, found " << tokens.size();
      throw ParseError(line_no, static_cast<int>(tokens.size()) > n ? tokens[n].column : 1,
                       os.str());
    }
    std::vector<Position> positions;
    positions.reserve(n);
    for (const auto& t : tokens) positions.push_back(parse_int(t, line_no, "position"));
    try {
      result.emplace(std::move(positions));
    } catch (const ArrangementError& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }
  if (!result) throw ParseError(line_no + 1, 1, "missing arrangement line");
  return *result;
}

LinearArrangement read_arrangement_file(const std::filesystem::path& path, int n) {
  auto in = open_or_throw(path);
  return read_arrangement(in, n);
}

namespace {

struct PendingSentence {
  int first_line = 0;
  std::vector<std::pair<int, int>> tokens;  // (id, head)
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      std::string_view last = line.substr(start);
      if (!last.empty() && last.back() == '\r') last.remove_suffix(1);
      fields.push_back(last);
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

int field_column(const std::vector<std::string_view>& fields, std::size_t index,
                 std::string_view line) {
  return static_cast<int>(fields[index].data() - line.data()) + 1;
}

void finish_sentence(PendingSentence& pending, ConlluCorpus& corpus) {
  if (pending.tokens.empty()) return;
  const int n = static_cast<int>(pending.tokens.size());
  auto skip = [&](const std::string& why) {
    ++corpus.skipped;
    corpus.warnings.push_back("sentence at line " + std::to_string(pending.first_line) +
                              " skipped: " + why);
  };

  std::vector<std::pair<Vertex, Vertex>> edges;
  int roots = 0;
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    const auto [id, head] = pending.tokens[i];
    if (id != i + 1) {
      skip("token ids are not 1..n in order");
      ok = false;
    } else if (head == 0) {
      ++roots;
    } else if (head < 0 || head > n) {
      skip("head " + std::to_string(head) + " outside 0.." + std::to_string(n));
      ok = false;
    } else {
      edges.emplace_back(id, head);
    }
  }
  if (ok && roots != 1) {
    skip(std::to_string(roots) + " root tokens (head 0), expected 1");
    ok = false;
  }
  if (ok) {
    try {
      corpus.sentences.push_back(
          {build_tree(n, edges), LinearArrangement::identity(n), pending.first_line});
    } catch (const TreeError& e) {
      skip(e.what());
    }
  }
  pending = PendingSentence{};
}

}  // namespace

ConlluCorpus read_conllu(std::istream& in) {
  ConlluCorpus corpus;
  PendingSentence pending;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty() || view.find_first_not_of(" \t") == std::string_view::npos) {
      finish_sentence(pending, corpus);
      continue;
    }
    if (view.front() == '#') continue;

    const auto fields = split_tabs(view);
    const std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos) {
      continue;  // multiword range or empty node
    }
    if (fields.size() < 7) {
      throw ParseError(line_no, 1, "token line needs at least 7 tab-separated columns");
    }
    const auto id_value = to_integer(id);
    if (!id_value) {
      throw ParseError(line_no, 1, "non-integer token id '" + std::string(id) + "'");
    }
    const auto head_value = to_integer(fields[6]);
    if (!head_value) {
      throw ParseError(line_no, field_column(fields, 6, view),
                       "non-integer head '" + std::string(fields[6]) + "'");
    }
    if (pending.tokens.empty()) pending.first_line = line_no;
    pending.tokens.emplace_back(static_cast<int>(*id_value), static_cast<int>(*head_value));
  }
  finish_sentence(pending, corpus);
  return corpus;
}

ConlluCorpus read_conllu_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_conllu(in);
}

}  // namespace linarr
