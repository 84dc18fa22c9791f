#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylgk/partition.hpp"
#include "weylgk/signed_perm.hpp"

namespace weylgk {

/// (row, column), both 1-based.
struct Box {
  int row;
  int col;

  bool is_even() const noexcept { return (row + col) % 2 == 0; }
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

enum class Orientation { Horizontal, Vertical };

struct Domino {
  int label;
  std::array<Box, 2> cells;  // sorted: left/top cell first

  Orientation orientation() const noexcept {
    return cells[0].row == cells[1].row ? Orientation::Horizontal : Orientation::Vertical;
  }
  friend bool operator==(const Domino&, const Domino&) = default;
};

/// Builds a domino from two edge-adjacent boxes (any order).
Domino make_domino(int label, Box a, Box b);

/// Standard domino tableau: a tiling of a Young diagram by labeled dominoes,
/// labels strictly increasing along rows and columns.
class DominoTableau {
 public:
  DominoTableau() = default;
  /// Validates tiling, shape, monotonicity and the prefix property.
  /// Throws Error(MalformedTableau) or Error(DuplicateLabel).
  explicit DominoTableau(std::vector<Domino> dominoes);

  const std::map<int, Domino>& dominoes() const noexcept { return by_label_; }
  const std::map<Box, int>& grid() const noexcept { return grid_; }
  bool empty() const noexcept { return by_label_.empty(); }
  bool contains(int label) const { return by_label_.count(label) != 0; }
  const Domino& domino(int label) const;
  std::optional<int> label_at(Box b) const;

  Partition shape() const;
  /// Length of row r / column c, 1-based.
  int row_length(int r) const;
  int column_length(int c) const;

  /// Sub-tableau of dominoes with label <= j.
  DominoTableau prefix(int j) const;

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
    return a.grid_ == b.grid_;
  }

 private:
  std::map<int, Domino> by_label_;
  std::map<Box, int> grid_;
};

/// Domino insertion D <- c*i with c = +1 (horizontal start in row 1) or
/// c = -1 (vertical start in column 1).
DominoTableau domino_insert(const DominoTableau& d, int sign, int label);

/// Insertion and recording tableaux of a sequence of nonzero integers with
/// distinct absolute values; x_k is inserted as sign(x_k)*|x_k|.
struct DominoPair {
  DominoTableau p;
  DominoTableau q;
};
DominoPair domino_rs(const std::vector<int>& x);
DominoTableau p_tableau(const std::vector<int>& x);
DominoTableau q_tableau(const std::vector<int>& x);
inline DominoTableau p_tableau(const SignedPermutation& w) { return p_tableau(w.window()); }
inline DominoTableau q_tableau(const SignedPermutation& w) { return q_tableau(w.window()); }

/// Intermediate insertion tableaux P_1, ..., P_n.
std::vector<DominoTableau> insertion_prefixes(const std::vector<int>& x);

/// Even boxes of a domino tableau with their inherited labels.
class HollowTableau {
 public:
  HollowTableau() = default;
  /// Throws Error(MalformedTableau) on odd boxes or a failure of staircase
  /// closure (every even box up-left of a filled box is filled).
  explicit HollowTableau(std::map<Box, int> cells);

  const std::map<Box, int>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  friend bool operator==(const HollowTableau&, const HollowTableau&) = default;

 private:
  std::map<Box, int> cells_;
};

HollowTableau hollow(const DominoTableau& d);
Partition shape(const DominoTableau& d);

/// Label grid, each domino's two boxes printed with the same label;
/// `cell_width` 0 picks the width of the widest label.
std::string render(const DominoTableau& d, int cell_width = 0);
/// Odd boxes are printed as '.'.
std::string render(const HollowTableau& h, int cell_width = 0);

}  // namespace weylgk
