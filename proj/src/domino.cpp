#include "weylgk/domino.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "weylgk/error.hpp"

namespace weylgk {

namespace {

using Grid = std::map<Box, int>;

int row_length(const Grid& g, int r) {
  int c = 0;
  while (g.count(Box{r, c + 1})) ++c;
  return c;
}

int column_length(const Grid& g, int c) {
  int r = 0;
  while (g.count(Box{r + 1, c})) ++r;
  return r;
}

bool is_young_diagram(const Grid& g) {
  return std::all_of(g.begin(), g.end(), [&](const auto& entry) {
    const Box b = entry.first;
    if (b.row < 1 || b.col < 1) return false;
    if (b.row > 1 && !g.count(Box{b.row - 1, b.col})) return false;
    if (b.col > 1 && !g.count(Box{b.row, b.col - 1})) return false;
    return true;
  });
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedTableau, what);
}

int label_width(const std::map<Box, int>& cells) {
  int w = 1;
  for (const auto& [box, label] : cells) w = std::max(w, static_cast<int>(std::to_string(label).size()));
  return w;
}

std::string pad(const std::string& s, int width) {
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), ' ') + s;
}

}  // namespace

Domino make_domino(int label, Box a, Box b) {
  if (a > b) std::swap(a, b);
  const bool adjacent = (a.row == b.row && b.col == a.col + 1) || (a.col == b.col && b.row == a.row + 1);
  if (!adjacent) malformed("domino cells are not adjacent");
  return Domino{label, {a, b}};
}

DominoTableau::DominoTableau(std::vector<Domino> dominoes) {
  for (const Domino& d : dominoes) {
    if (d.label < 1) malformed("domino labels must be positive");
    // Re-derive to reject a hand-built domino with non-adjacent cells.
    const Domino checked = make_domino(d.label, d.cells[0], d.cells[1]);
    if (!by_label_.emplace(d.label, checked).second)
      throw Error(ErrorCode::DuplicateLabel, "label " + std::to_string(d.label) + " repeated");
    for (const Box& b : checked.cells)
      if (!grid_.emplace(b, d.label).second) malformed("box covered twice");
  }
  if (!is_young_diagram(grid_)) malformed("dominoes do not tile a Young diagram");
  // Labels weakly increase right and down; equality only inside one domino.
  // This also makes every prefix D_{<=j} a Young diagram.
  for (const auto& [b, label] : grid_) {
    if (auto it = grid_.find(Box{b.row, b.col + 1}); it != grid_.end() && it->second < label)
      malformed("labels decrease along a row");
    if (auto it = grid_.find(Box{b.row + 1, b.col}); it != grid_.end() && it->second < label)
      malformed("labels decrease along a column");
  }
}

const Domino& DominoTableau::domino(int label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) throw Error(ErrorCode::OutOfRange, "no domino labeled " + std::to_string(label));
  return it->second;
}

std::optional<int> DominoTableau::label_at(Box b) const {
  auto it = grid_.find(b);
  if (it == grid_.end()) return std::nullopt;
  return it->second;
}

int DominoTableau::row_length(int r) const { return weylgk::row_length(grid_, r); }
int DominoTableau::column_length(int c) const { return weylgk::column_length(grid_, c); }

Partition DominoTableau::shape() const {
  std::vector<Integer> parts;
  for (int r = 1;; ++r) {
    const int len = row_length(r);
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

DominoTableau DominoTableau::prefix(int j) const {
  std::vector<Domino> kept;
  for (const auto& [label, d] : by_label_)
    if (label <= j) kept.push_back(d);
  return DominoTableau(std::move(kept));
}

DominoTableau domino_insert(const DominoTableau& d, int sign, int label) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "domino_insert: sign must be +1 or -1");
  if (label < 1) throw Error(ErrorCode::InvalidArgument, "domino_insert: label must be positive");
  if (d.contains(label))
    throw Error(ErrorCode::DuplicateLabel, "domino_insert: label " + std::to_string(label) + " already present");

  std::vector<Domino> out;
  Grid grid;
  auto add = [&](const Domino& dom) {
    for (const Box& b : dom.cells)
      if (!grid.emplace(b, dom.label).second)
        throw Error(ErrorCode::Internal, "domino_insert: placed a domino on an occupied box");
    out.push_back(dom);
  };

  for (const auto& [l, dom] : d.dominoes())
    if (l < label) add(dom);

  // The new domino starts in the first row or the first column.
  if (sign == 1) {
    const int len = row_length(grid, 1);
    add(make_domino(label, Box{1, len + 1}, Box{1, len + 2}));
  } else {
    const int len = column_length(grid, 1);
    add(make_domino(label, Box{len + 1, 1}, Box{len + 2, 1}));
  }

  for (auto it = d.dominoes().upper_bound(label); it != d.dominoes().end(); ++it) {
    const Domino& dom = it->second;
    const bool first_taken = grid.count(dom.cells[0]) != 0;
    const bool second_taken = grid.count(dom.cells[1]) != 0;
    const int overlap = int{first_taken} + int{second_taken};

    if (overlap == 0) {
      add(dom);
    } else if (overlap == 1) {
      // In a Young diagram only the left/top cell can be the overlapped one.
      if (!first_taken) throw Error(ErrorCode::Internal, "domino_insert: overlap on the trailing cell");
      const Box k = dom.cells[0];
      const Box free_cell = dom.cells[1];
      const Box corner{k.row + 1, k.col + 1};
      if (grid.count(corner))
        throw Error(ErrorCode::Internal, "domino_insert: grown corner box already occupied");
      add(make_domino(dom.label, free_cell, corner));
    } else if (dom.orientation() == Orientation::Horizontal) {
      const int r = dom.cells[0].row + 1;
      const int len = row_length(grid, r);
      add(make_domino(dom.label, Box{r, len + 1}, Box{r, len + 2}));
    } else {
      const int c = dom.cells[0].col + 1;
      const int len = column_length(grid, c);
      add(make_domino(dom.label, Box{len + 1, c}, Box{len + 2, c}));
    }
    if (!is_young_diagram(grid)) throw Error(ErrorCode::Internal, "domino_insert: shape left the Young lattice");
  }
  return DominoTableau(std::move(out));
}

namespace {

void check_signed_sequence(const std::vector<int>& x) {
  std::set<int> seen;
  for (int v : x) {
    if (v == 0) throw Error(ErrorCode::InvalidArgument, "domino insertion: zero entry");
    if (!seen.insert(std::abs(v)).second)
      throw Error(ErrorCode::DuplicateLabel, "domino insertion: repeated absolute value " + std::to_string(std::abs(v)));
  }
}

}  // namespace

std::vector<DominoTableau> insertion_prefixes(const std::vector<int>& x) {
  check_signed_sequence(x);
  std::vector<DominoTableau> out;
  DominoTableau p;
  for (int v : x) {
    p = domino_insert(p, v > 0 ? 1 : -1, std::abs(v));
    out.push_back(p);
  }
  return out;
}

DominoPair domino_rs(const std::vector<int>& x) {
  check_signed_sequence(x);
  DominoTableau p;
  std::vector<Domino> recorded;
  for (std::size_t k = 0; k < x.size(); ++k) {
    DominoTableau next = domino_insert(p, x[k] > 0 ? 1 : -1, std::abs(x[k]));
    std::vector<Box> grown;
    for (const auto& [b, l] : next.grid())
      if (!p.grid().count(b)) grown.push_back(b);
    if (grown.size() != 2) throw Error(ErrorCode::Internal, "domino insertion grew by a non-domino");
    recorded.push_back(make_domino(static_cast<int>(k + 1), grown[0], grown[1]));
    p = std::move(next);
  }
  return DominoPair{std::move(p), DominoTableau(std::move(recorded))};
}

DominoTableau p_tableau(const std::vector<int>& x) { return domino_rs(x).p; }
DominoTableau q_tableau(const std::vector<int>& x) { return domino_rs(x).q; }

HollowTableau::HollowTableau(std::map<Box, int> cells) : cells_(std::move(cells)) {
  for (const auto& [b, label] : cells_) {
    if (!b.is_even() || b.row < 1 || b.col < 1) malformed("hollow tableau holds an odd box");
    for (int a = 1; a <= b.row; ++a)
      for (int c = 1; c <= b.col; ++c)
        if ((a + c) % 2 == 0 && !cells_.count(Box{a, c}))
          malformed("hollow tableau is not staircase-closed");
  }
}

HollowTableau hollow(const DominoTableau& d) {
  std::map<Box, int> cells;
  for (const auto& [b, label] : d.grid())
    if (b.is_even()) cells.emplace(b, label);
  return HollowTableau(std::move(cells));
}

Partition shape(const DominoTableau& d) { return d.shape(); }

std::string render(const DominoTableau& d, int cell_width) {
  const int w = cell_width > 0 ? cell_width : label_width(d.grid());
  std::ostringstream os;
  for (int r = 1;; ++r) {
    const int len = d.row_length(r);
    if (len == 0) break;
    for (int c = 1; c <= len; ++c)
      os << (c > 1 ? " " : "") << pad(std::to_string(*d.label_at(Box{r, c})), w);
    os << '\n';
  }
  return os.str();
}

std::string render(const HollowTableau& h, int cell_width) {
  const int w = cell_width > 0 ? cell_width : label_width(h.cells());
  std::map<int, int> last_col;
  for (const auto& [b, label] : h.cells()) last_col[b.row] = std::max(last_col[b.row], b.col);
  std::ostringstream os;
  for (const auto& [r, cols] : last_col) {
    for (int c = 1; c <= cols; ++c) {
      auto it = h.cells().find(Box{r, c});
      os << (c > 1 ? " " : "") << pad(it == h.cells().end() ? "." : std::to_string(it->second), w);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace weylgk
