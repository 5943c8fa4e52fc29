#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "handlecalc/handle.hpp"

namespace handlecalc::legendrian {

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct Event {
  EventKind kind;
  int position;  // 1-based from the top
  bool operator==(const Event& other) const {
    return kind == other.kind && position == other.position;
  }
};

/// Front of a Legendrian link read left to right as a word of events.
///
/// `orientation` maps a left-cusp ordinal (1-based, in event order) to +1
/// when the upper arc leaving that cusp runs to the right and -1 otherwise.
struct FrontDiagram {
  std::vector<Event> events;
  std::map<int, int> orientation;

  bool operator==(const FrontDiagram& other) const {
    return events == other.events && orientation == other.orientation;
  }
  /// Canonical token form: events first, then orientation markers by ordinal.
  std::string to_string() const;
};

/// Per-component summary of a front.
struct ComponentData {
  int writhe = 0;
  int crossings = 0;
  int left_cusps = 0;
  int right_cusps = 0;
  int down_cusps = 0;
  int up_cusps = 0;
  bool oriented = false;  // some left cusp carries an explicit marker

  int tb() const { return writhe - right_cusps; }
  int rotation() const { return (down_cusps - up_cusps) / 2; }
};

struct FrontAnalysis {
  int crossings = 0;
  int left_cusps = 0;
  int right_cusps = 0;
  std::vector<ComponentData> components;  // ordered by first left cusp
};

/// Parse a whitespace-separated token word. `line` and `column_offset` only
/// shift the location reported in a ParseError.
FrontDiagram parse_front(std::string_view text, int line = 1, int column_offset = 0);

FrontAnalysis analyze(const FrontDiagram& f);

/// Unmarked components are oriented so that their first left cusp is +.
int thurston_bennequin(const FrontDiagram& f, std::optional<int> component = std::nullopt);
int rotation_number(const FrontDiagram& f, std::optional<int> component = std::nullopt);

/// Same front with every component's orientation reversed.
FrontDiagram reverse(const FrontDiagram& f);

/// Standard maximal-tb front of the (p, q) torus knot.
FrontDiagram torus_knot_front(int p, int q);

int max_tb_torus_knot(int p, int q);
int seifert_genus_torus_knot(int p, int q);

using LegendrianAnnotation = std::map<std::string, FrontDiagram>;

struct SteinVerdict {
  std::string handle;
  BigInt framing;
  int tb = 0;
  bool ok = false;
};

struct SteinReport {
  std::vector<SteinVerdict> verdicts;  // in 2-handle order
  bool ok = false;
};

/// Checks framing == tb - 1 for every 2-handle.
SteinReport stein_check(const HandleDecomposition& d, const LegendrianAnnotation& a);

}  // namespace handlecalc::legendrian
