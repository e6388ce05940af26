#pragma once

#include <vector>

#include "monoconn/field.hpp"

namespace monoconn {

// The Desarguesian affine plane AG(2, q) over GF(q).
//
// Point (x, y) has id x * q + y, so ids follow the lexicographic order of
// coordinates. Parallel classes are ordered slope 0, 1, ..., q-1 (by field
// element code) and then the vertical class; within the slope-a class, line
// b is {y = a x + b}, and within the vertical class, line c is {x = c}.
class AffinePlane {
 public:
  explicit AffinePlane(int q) : field_(q), q_(q) {
    line_of_.assign(q_ + 1, std::vector<int>(q_ * q_, -1));
    lines_.assign(q_ + 1, std::vector<std::vector<int>>(q_));
    for (int x = 0; x < q_; ++x)
      for (int y = 0; y < q_; ++y) {
        const int point = x * q_ + y;
        for (int a = 0; a < q_; ++a) {
          const int b = field_.sub(y, field_.mul(a, x));
          line_of_[a][point] = b;
          lines_[a][b].push_back(point);
        }
        line_of_[q_][point] = x;
        lines_[q_][x].push_back(point);
      }
  }

  int order() const { return q_; }
  int point_count() const { return q_ * q_; }
  int class_count() const { return q_ + 1; }
  const FiniteField& field() const { return field_; }

  // Index of the line of parallel class `cls` through `point`.
  int line_of(int cls, int point) const { return line_of_[cls][point]; }

  // Points of line `line` in class `cls`, ascending.
  const std::vector<int>& line(int cls, int line) const { return lines_[cls][line]; }
  const std::vector<std::vector<int>>& parallel_class(int cls) const { return lines_[cls]; }

  // The unique class whose lines join two distinct points.
  int joining_class(int p1, int p2) const {
    for (int cls = 0; cls <= q_; ++cls)
      if (line_of_[cls][p1] == line_of_[cls][p2]) return cls;
    throw InvariantError("two points share no line");
  }

 private:
  FiniteField field_;
  int q_;
  std::vector<std::vector<int>> line_of_;
  std::vector<std::vector<std::vector<int>>> lines_;
};

}  // namespace monoconn
