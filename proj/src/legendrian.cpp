#include "handlecalc/legendrian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace handlecalc::legendrian {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split_tokens(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    out.push_back({std::string(text.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool parse_positive(const std::string& digits, int& value) {
  if (digits.empty() || digits.size() > 6) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  value = std::stoi(digits);
  return value >= 1;
}

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Arc-level data obtained by sweeping the front left to right.
struct Sweep {
  int arcs = 0;
  std::vector<std::pair<int, int>> left_cusps;   // (upper arc, lower arc)
  std::vector<std::pair<int, int>> right_cusps;  // (upper arc, lower arc)
  std::vector<std::pair<int, int>> crossings;    // (arc moving down, arc moving up)
};

Sweep sweep(const FrontDiagram& f) {
  Sweep s;
  std::vector<int> strands;
  for (const auto& e : f.events) {
    const auto i = static_cast<std::size_t>(e.position - 1);
    switch (e.kind) {
      case EventKind::LeftCusp: {
        const int upper = s.arcs++;
        const int lower = s.arcs++;
        strands.insert(strands.begin() + static_cast<long>(i), {upper, lower});
        s.left_cusps.emplace_back(upper, lower);
        break;
      }
      case EventKind::RightCusp:
        s.right_cusps.emplace_back(strands[i], strands[i + 1]);
        strands.erase(strands.begin() + static_cast<long>(i),
                      strands.begin() + static_cast<long>(i) + 2);
        break;
      case EventKind::Crossing:
        s.crossings.emplace_back(strands[i], strands[i + 1]);
        std::swap(strands[i], strands[i + 1]);
        break;
    }
  }
  return s;
}

std::string kind_letter(EventKind k) {
  switch (k) {
    case EventKind::LeftCusp:
      return "L";
    case EventKind::RightCusp:
      return "R";
    case EventKind::Crossing:
      return "X";
  }
  return "?";
}

}  // namespace

std::string FrontDiagram::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& e : events) {
    if (!first) out << ' ';
    out << kind_letter(e.kind) << e.position;
    first = false;
  }
  for (const auto& [cusp, sign] : orientation) {
    if (!first) out << ' ';
    out << 'O' << cusp << (sign > 0 ? '+' : '-');
    first = false;
  }
  return out.str();
}

FrontDiagram parse_front(std::string_view text, int line, int column_offset) {
  FrontDiagram f;
  int strands = 0;
  const auto tokens = split_tokens(text);
  for (const auto& tok : tokens) {
    const int column = column_offset + tok.column;
    const char head = tok.text[0];
    int value = 0;
    if (head == 'O') {
      const char sign = tok.text.back();
      if ((sign != '+' && sign != '-') ||
          !parse_positive(tok.text.substr(1, tok.text.size() - 2), value))
        throw ParseError("bad orientation marker '" + tok.text + "'", line, column);
      if (f.orientation.count(value))
        throw ParseError("duplicate orientation marker for cusp " + std::to_string(value), line,
                         column);
      f.orientation[value] = sign == '+' ? 1 : -1;
      continue;
    }
    if ((head != 'L' && head != 'R' && head != 'X') || !parse_positive(tok.text.substr(1), value))
      throw ParseError("unknown front token '" + tok.text + "'", line, column);
    Event e{head == 'L' ? EventKind::LeftCusp
            : head == 'R' ? EventKind::RightCusp
                          : EventKind::Crossing,
            value};
    const int limit = e.kind == EventKind::LeftCusp ? strands + 1 : strands - 1;
    if (value > limit)
      throw ParseError("invalid position in '" + tok.text + "' with " + std::to_string(strands) +
                           " strands",
                       line, column);
    strands += e.kind == EventKind::LeftCusp ? 2 : e.kind == EventKind::RightCusp ? -2 : 0;
    f.events.push_back(e);
  }
  const int end_column = column_offset + static_cast<int>(text.size()) + 1;
  if (f.events.empty()) throw ParseError("empty front", line, end_column);
  if (strands != 0)
    throw ParseError("unbalanced cusps: " + std::to_string(strands) + " open strands at end",
                     line, end_column);
  const auto left = std::count_if(f.events.begin(), f.events.end(),
                                  [](const Event& e) { return e.kind == EventKind::LeftCusp; });
  for (const auto& [cusp, sign] : f.orientation) {
    if (cusp > left)
      throw ParseError("orientation marker for missing left cusp " + std::to_string(cusp), line,
                       end_column);
  }
  return f;
}

namespace {

// Sweep plus a direction (+1 rightward, -1 leftward) and component for every arc.
struct OrientedSweep {
  Sweep sweep;
  std::vector<int> component;
  std::vector<int> direction;
  std::vector<bool> marked;  // per component
};

OrientedSweep orient(const FrontDiagram& f) {
  OrientedSweep o;
  o.sweep = sweep(f);
  const Sweep& s = o.sweep;
  const auto arcs = static_cast<std::size_t>(s.arcs);
  UnionFind uf;
  for (int i = 0; i < s.arcs; ++i) uf.add();
  for (const auto& [u, l] : s.left_cusps) uf.unite(u, l);
  for (const auto& [u, l] : s.right_cusps) uf.unite(u, l);

  // Components are numbered by their first left cusp.
  std::map<int, int> component_of_root;
  for (const auto& [u, l] : s.left_cusps) {
    const int root = uf.find(u);
    if (!component_of_root.count(root)) {
      const int next = static_cast<int>(component_of_root.size());
      component_of_root[root] = next;
    }
  }
  o.component.assign(arcs, -1);
  for (int a = 0; a < s.arcs; ++a) o.component[static_cast<std::size_t>(a)] = component_of_root[uf.find(a)];
  o.marked.assign(component_of_root.size(), false);

  // Arcs meeting at a cusp run in opposite directions.
  std::vector<std::vector<int>> neighbours(arcs);
  for (const auto* cusps : {&s.left_cusps, &s.right_cusps}) {
    for (const auto& [u, l] : *cusps) {
      neighbours[static_cast<std::size_t>(u)].push_back(l);
      neighbours[static_cast<std::size_t>(l)].push_back(u);
    }
  }
  o.direction.assign(arcs, 0);
  auto propagate = [&](int start, int dir) {
    std::vector<int> stack{start};
    o.direction[static_cast<std::size_t>(start)] = dir;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : neighbours[static_cast<std::size_t>(a)]) {
        if (o.direction[static_cast<std::size_t>(b)] == 0) {
          o.direction[static_cast<std::size_t>(b)] = -o.direction[static_cast<std::size_t>(a)];
          stack.push_back(b);
        }
      }
    }
  };
  for (const auto& [cusp, sign] : f.orientation) {
    const int upper = s.left_cusps[static_cast<std::size_t>(cusp - 1)].first;
    if (o.direction[static_cast<std::size_t>(upper)] == 0) {
      propagate(upper, sign);
      o.marked[static_cast<std::size_t>(o.component[static_cast<std::size_t>(upper)])] = true;
    } else if (o.direction[static_cast<std::size_t>(upper)] != sign) {
      throw Error("conflicting orientation marker at left cusp " + std::to_string(cusp));
    }
  }
  for (const auto& [u, l] : s.left_cusps) {
    if (o.direction[static_cast<std::size_t>(u)] == 0) propagate(u, 1);
  }
  return o;
}

}  // namespace

FrontAnalysis analyze(const FrontDiagram& f) {
  const OrientedSweep o = orient(f);
  const Sweep& s = o.sweep;
  auto dir = [&](int arc) { return o.direction[static_cast<std::size_t>(arc)]; };
  auto comp = [&](int arc) { return o.component[static_cast<std::size_t>(arc)]; };

  FrontAnalysis out;
  out.crossings = static_cast<int>(s.crossings.size());
  out.left_cusps = static_cast<int>(s.left_cusps.size());
  out.right_cusps = static_cast<int>(s.right_cusps.size());
  out.components.resize(o.marked.size());
  for (std::size_t c = 0; c < o.marked.size(); ++c) out.components[c].oriented = o.marked[c];

  for (const auto& [u, l] : s.left_cusps) {
    auto& data = out.components[static_cast<std::size_t>(comp(u))];
    ++data.left_cusps;
    if (dir(u) < 0) {
      ++data.down_cusps;
    } else {
      ++data.up_cusps;
    }
  }
  for (const auto& [u, l] : s.right_cusps) {
    auto& data = out.components[static_cast<std::size_t>(comp(u))];
    ++data.right_cusps;
    if (dir(u) > 0) {
      ++data.down_cusps;
    } else {
      ++data.up_cusps;
    }
  }
  // The strand moving down has the smaller slope and passes in front.
  for (const auto& [over, under] : s.crossings) {
    if (comp(over) != comp(under)) continue;
    auto& data = out.components[static_cast<std::size_t>(comp(over))];
    ++data.crossings;
    data.writhe += dir(over) == dir(under) ? 1 : -1;
  }
  return out;
}

namespace {

const ComponentData& select(const FrontAnalysis& a, std::optional<int> component) {
  if (!component) {
    if (a.components.size() != 1)
      throw Error("front has " + std::to_string(a.components.size()) +
                  " components; select one");
    return a.components.front();
  }
  if (*component < 0 || *component >= static_cast<int>(a.components.size()))
    throw Error("no component " + std::to_string(*component));
  return a.components[static_cast<std::size_t>(*component)];
}

}  // namespace

int thurston_bennequin(const FrontDiagram& f, std::optional<int> component) {
  const auto a = analyze(f);
  return select(a, component).tb();
}

int rotation_number(const FrontDiagram& f, std::optional<int> component) {
  const auto a = analyze(f);
  const auto& c = select(a, component);
  // Without a marker only a vanishing rotation number is well defined.
  if (!c.oriented && c.rotation() != 0) throw Error("component is not oriented");
  return c.rotation();
}

FrontDiagram reverse(const FrontDiagram& f) {
  const OrientedSweep o = orient(f);
  FrontDiagram out = f;
  out.orientation.clear();
  std::vector<bool> done(o.marked.size(), false);
  for (std::size_t k = 0; k < o.sweep.left_cusps.size(); ++k) {
    const int upper = o.sweep.left_cusps[k].first;
    const auto c = static_cast<std::size_t>(o.component[static_cast<std::size_t>(upper)]);
    if (done[c]) continue;
    done[c] = true;
    out.orientation[static_cast<int>(k) + 1] = -o.direction[static_cast<std::size_t>(upper)];
  }
  return out;
}

FrontDiagram torus_knot_front(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error("torus knot parameters must be coprime and at least 2");
  const int b = std::min(p, q);
  const int t = std::max(p, q);
  FrontDiagram f;
  for (int i = 1; i <= b; ++i) f.events.push_back({EventKind::LeftCusp, i});
  for (int r = 0; r < t; ++r) {
    for (int i = b + 1; i <= 2 * b - 1; ++i) f.events.push_back({EventKind::Crossing, i});
  }
  for (int i = b; i >= 1; --i) f.events.push_back({EventKind::RightCusp, i});
  return f;
}

int max_tb_torus_knot(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error("torus knot parameters must be coprime and at least 2");
  return p * q - p - q;
}

int seifert_genus_torus_knot(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error("torus knot parameters must be coprime and at least 2");
  return (p - 1) * (q - 1) / 2;
}

SteinReport stein_check(const HandleDecomposition& d, const LegendrianAnnotation& a) {
  for (const auto& [id, front] : a) {
    if (!d.has_two_handle(id)) throw UnknownHandle(id);
  }
  SteinReport report;
  report.ok = true;
  for (const auto& id : d.two_handles()) {
    auto it = a.find(id);
    if (it == a.end()) throw Error("2-handle '" + id + "' has no front");
    SteinVerdict v;
    v.handle = id;
    v.framing = d.framing(id);
    v.tb = thurston_bennequin(it->second);
    v.ok = v.framing == BigInt(v.tb - 1);
    report.ok = report.ok && v.ok;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace handlecalc::legendrian
