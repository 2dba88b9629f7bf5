#ifndef LINARR_IO_HPP
#define LINARR_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr {

/// Input error with a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Edge-list format: `#` starts a comment line, blank lines are ignored. The
// first remaining line holds n, followed by n - 1 lines `u v`.
LabeledTree read_edge_list(std::istream& in);
LabeledTree read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const LabeledTree& tree,
                     const std::vector<std::string>& comments = {});

// Arrangement format: one line of n positions; entry i is pi(i).
LinearArrangement read_arrangement(std::istream& in, int n);
LinearArrangement read_arrangement_file(const std::filesystem::path& path, int n);

struct ConlluSentence {
  LabeledTree tree;
  LinearArrangement arrangement;
  /// Line on which the sentence's first token appears.
  int first_line = 0;
};

struct ConlluCorpus {
  std::vector<ConlluSentence> sentences;
  std::int64_t skipped = 0;
  std::vector<std::string> warnings;
};

/// Reads token ids (column 1) and heads (column 7). Multiword ranges and
/// empty nodes are ignored; sentences that are not trees are skipped with a
/// warning. Non-integer id or head fields throw ParseError.
ConlluCorpus read_conllu(std::istream& in);
ConlluCorpus read_conllu_file(const std::filesystem::path& path);

}  // namespace linarr

#endif  // LINARR_IO_HPP
