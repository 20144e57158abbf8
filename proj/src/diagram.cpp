#include "knotflow/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace kf {

static std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

ValidationError::ValidationError(std::vector<std::string> v)
    : std::runtime_error("invalid diagram: " + join(v)), violations(std::move(v)) {}

static int to_int(const std::string& s, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, "expected integer, got '" + s + "'");
  return v;
}

Diagram parse_kdt(const std::string& text) {
  Diagram d;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  bool have_n = false, have_name = false;
  std::vector<char> seen_sign, seen_over, seen_oo, seen_rot;
  auto index = [&](const std::string& s, int hi, const char* what) {
    int i = to_int(s, ln);
    if (i < 1 || i > hi) throw ParseError(ln, std::string(what) + " index out of range: " + s);
    return i;
  };
  while (std::getline(in, raw)) {
    ++ln;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "knot") {
      if (have_name) throw ParseError(ln, "duplicate knot line");
      if (tok.size() != 2) throw ParseError(ln, "knot takes one name");
      d.name = tok[1];
      have_name = true;
      continue;
    }
    if (key == "crossings") {
      if (have_n) throw ParseError(ln, "duplicate crossings line");
      if (tok.size() != 2) throw ParseError(ln, "crossings takes one value");
      d.N = to_int(tok[1], ln);
      if (d.N < 0) throw ParseError(ln, "negative crossing count");
      have_n = true;
      d.sign.assign(d.N + 1, 0);
      d.over.assign(d.N + 1, 0);
      d.overorder.assign(d.arcs() + 1, {});
      d.rot.assign(d.arcs() + 1, {});
      seen_sign.assign(d.N + 1, 0);
      seen_over.assign(d.N + 1, 0);
      seen_oo.assign(d.arcs() + 1, 0);
      seen_rot.assign(d.arcs() + 1, 0);
      continue;
    }
    if (key != "sign" && key != "over" && key != "overorder" && key != "rot")
      throw ParseError(ln, "unknown key '" + key + "'");
    if (!have_n) throw ParseError(ln, "'" + key + "' before crossings line");
    if (tok.size() < 2) throw ParseError(ln, "missing index");
    if (key == "sign") {
      if (tok.size() != 3) throw ParseError(ln, "sign takes index and +/-");
      int i = index(tok[1], d.N, "crossing");
      if (seen_sign[i]++) throw ParseError(ln, "duplicate sign " + tok[1]);
      if (tok[2] == "+")
        d.sign[i] = 1;
      else if (tok[2] == "-")
        d.sign[i] = -1;
      else
        throw ParseError(ln, "sign must be + or -");
    } else if (key == "over") {
      if (tok.size() != 3) throw ParseError(ln, "over takes crossing and arc");
      int i = index(tok[1], d.N, "crossing");
      if (seen_over[i]++) throw ParseError(ln, "duplicate over " + tok[1]);
      d.over[i] = index(tok[2], d.arcs(), "arc");
    } else if (key == "overorder") {
      int j = index(tok[1], d.arcs(), "arc");
      if (seen_oo[j]++) throw ParseError(ln, "duplicate overorder " + tok[1]);
      if (tok.size() < 3) throw ParseError(ln, "empty overorder");
      for (size_t k = 2; k < tok.size(); ++k) d.overorder[j].push_back(index(tok[k], d.N, "crossing"));
    } else {
      int j = index(tok[1], d.arcs(), "arc");
      if (seen_rot[j]++) throw ParseError(ln, "duplicate rot " + tok[1]);
      if (tok.size() < 3) throw ParseError(ln, "empty rot");
      for (size_t k = 2; k < tok.size(); ++k) d.rot[j].push_back(to_int(tok[k], ln));
    }
  }
  if (!have_n) throw ParseError(ln, "missing crossings line");
  for (int i = 1; i <= d.N; ++i) {
    if (!seen_sign[i]) throw ParseError(ln, "missing sign " + std::to_string(i));
    if (!seen_over[i]) throw ParseError(ln, "missing over " + std::to_string(i));
  }
  for (int j = 1; j <= d.arcs(); ++j)
    if (!seen_rot[j]) throw ParseError(ln, "missing rot " + std::to_string(j));
  return d;
}

Diagram load_kdt(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_kdt(ss.str());
}

std::string render_kdt(const Diagram& d) {
  std::ostringstream os;
  if (!d.name.empty()) os << "knot " << d.name << "\n";
  os << "crossings " << d.N << "\n";
  for (int i = 1; i <= d.N; ++i) os << "sign " << i << " " << (d.sign[i] > 0 ? "+" : "-") << "\n";
  for (int i = 1; i <= d.N; ++i) os << "over " << i << " " << d.over[i] << "\n";
  for (int j = 1; j <= d.arcs(); ++j) {
    if (d.overorder[j].empty()) continue;
    os << "overorder " << j;
    for (int i : d.overorder[j]) os << " " << i;
    os << "\n";
  }
  for (int j = 1; j <= d.arcs(); ++j) {
    os << "rot " << j;
    for (int x : d.rot[j]) os << " " << x;
    os << "\n";
  }
  return os.str();
}

// structural checks only; partarcs() relies on them
static std::vector<std::string> structural(const Diagram& d) {
  std::vector<std::string> v;
  for (int i = 1; i <= d.N; ++i) {
    if (d.sign[i] != 1 && d.sign[i] != -1) v.push_back("crossing " + std::to_string(i) + ": sign must be +-1");
    if (d.over[i] < 1 || d.over[i] > d.N) v.push_back("crossing " + std::to_string(i) + ": over arc out of range");
  }
  for (int j = 1; j <= d.arcs(); ++j) {
    std::vector<int> want, got = d.overorder[j];
    for (int i = 1; i <= d.N; ++i)
      if (d.over[i] == j) want.push_back(i);
    std::sort(got.begin(), got.end());
    if (got != want) v.push_back("arc " + std::to_string(j) + ": overorder is not a permutation of its over crossings");
    if (d.rot[j].size() != d.overorder[j].size() + 1)
      v.push_back("arc " + std::to_string(j) + ": rot needs " + std::to_string(d.overorder[j].size() + 1) + " values");
  }
  return v;
}

Partarcs partarcs(const Diagram& d) {
  Partarcs p;
  p.first.assign(d.arcs() + 2, 0);
  for (int j = 1; j <= d.arcs(); ++j) {
    p.first[j] = p.count();
    for (int x : d.rot[j]) p.rot.push_back(x);
  }
  p.first[d.arcs() + 1] = p.count();
  for (int i = 1; i <= d.N; ++i) {
    int j = d.over[i];
    int k = int(std::find(d.overorder[j].begin(), d.overorder[j].end(), i) - d.overorder[j].begin());
    p.cross.push_back({p.last_of(i), p.first[i % d.N + 1], p.first[j] + k, p.first[j] + k + 1, d.sign[i]});
  }
  return p;
}

static SeifertCircles circles_of(const Diagram& d) {
  Partarcs p = partarcs(d);
  std::vector<int> succ(p.count(), -1);
  if (d.N == 0) succ[0] = 0;
  for (auto& c : p.cross) {
    succ[c.ui] = c.oo;
    succ[c.oi] = c.uo;
  }
  SeifertCircles s;
  std::vector<char> seen(p.count(), 0);
  int star = p.last_of(d.arcs());
  for (int x = 0; x < p.count(); ++x) {
    if (seen[x]) continue;
    std::vector<int> c;
    int rot = 0;
    for (int y = x; !seen[y]; y = succ[y]) {
      seen[y] = 1;
      c.push_back(y);
      rot += p.rot[y];
    }
    if (std::find(c.begin(), c.end(), star) != c.end()) s.special = int(s.circles.size());
    s.circles.push_back(std::move(c));
    s.rot.push_back(rot);
  }
  return s;
}

ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  rep.violations = structural(d);
  if (!rep.ok()) return rep;
  for (int i = 1; i <= d.N; ++i) {
    int v = d.over[i];
    if (v == i || v == i % d.N + 1)
      rep.violations.push_back("crossing " + std::to_string(i) + ": kink (over arc " + std::to_string(v) + ")");
  }
  SeifertCircles s = circles_of(d);
  for (size_t c = 0; c < s.circles.size(); ++c)
    if (s.rot[c] != 1 && s.rot[c] != -1)
      rep.violations.push_back("Seifert circle " + std::to_string(c + 1) + " has rotation " + std::to_string(s.rot[c]));
  return rep;
}

void require_valid(const Diagram& d) {
  ValidationReport rep = validate(d);
  if (!rep.ok()) throw ValidationError(rep.violations);
}

SeifertCircles seifert_circles(const Diagram& d) {
  auto v = structural(d);
  if (!v.empty()) throw ValidationError(v);
  return circles_of(d);
}

DiagramStats diagram_stats(const Diagram& d, int n) {
  DiagramStats st;
  for (int i = 1; i <= d.N; ++i) st.writhe += d.sign[i];
  SeifertCircles s = seifert_circles(d);
  for (size_t c = 0; c < s.circles.size(); ++c)
    if (int(c) != s.special) st.rotK += s.rot[c];
  st.delta2 = n * (-st.writhe + st.rotK);
  return st;
}

int delta2_quadratic(const Diagram& d, int n) {
  DiagramStats st = diagram_stats(d, 1);
  return -n * n * st.writhe + n * st.rotK;
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (int i = 1; i <= m.N; ++i) m.sign[i] = -m.sign[i];
  for (auto& r : m.rot)
    for (int& x : r) x = -x;
  return m;
}

}  // namespace kf
