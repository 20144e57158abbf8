#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kf {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

struct ValidationError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v);
};

// Long-knot diagram.  Crossings and arcs are 1-based; index 0 is unused.
// Arc a_i ends (goes under) at crossing i; arc a_N carries the star.
struct Diagram {
  std::string name;
  int N = 0;                                // crossings
  std::vector<int> sign;                    // sign[i], i = 1..N
  std::vector<int> over;                    // over[i] = arc passing over crossing i
  std::vector<std::vector<int>> overorder;  // overorder[j], crossings along a_j
  std::vector<std::vector<int>> rot;        // rot[j], one value per partarc of a_j

  int r() const { return N - 1; }
  int arcs() const { return N == 0 ? 1 : N; }
  bool operator==(const Diagram&) const = default;
};

Diagram parse_kdt(const std::string& text);
Diagram load_kdt(const std::string& path);
std::string render_kdt(const Diagram& d);

// Partarcs numbered consecutively along the knot, starting with arc 1.
struct Partarcs {
  struct Cross {
    int ui, uo, oi, oo;  // under in/out, over in/out
    int sign;
  };
  std::vector<int> first;  // first[j] = id of first partarc of a_j
  std::vector<int> rot;    // per partarc
  std::vector<Cross> cross;  // cross[i-1] for crossing i
  int count() const { return int(rot.size()); }
  int last_of(int j) const { return first[j + 1] - 1; }
};
Partarcs partarcs(const Diagram& d);

struct SeifertCircles {
  std::vector<std::vector<int>> circles;  // partarc ids
  std::vector<int> rot;
  int special = 0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Diagram& d);
void require_valid(const Diagram& d);  // throws ValidationError
SeifertCircles seifert_circles(const Diagram& d);

struct DiagramStats {
  int writhe = 0;
  int rotK = 0;
  int delta2 = 0;  // twice the prefactor exponent at color n
};
// prefactor exponent n*(-writhe + rotK)/2, rotK summed over non-special circles
DiagramStats diagram_stats(const Diagram& d, int n);
// the quadratic-in-n alternative (n^2*(-writhe) + n*rotK)/2, doubled
int delta2_quadratic(const Diagram& d, int n);

Diagram mirror(const Diagram& d);

}  // namespace kf
