#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "handlecalc/handle.hpp"
#include "handlecalc/legendrian.hpp"

namespace handlecalc::hbd {

/// A parsed `.hbd` file.
///
/// Grammar, one statement per line, `#` starts a comment:
///   manifold <name>
///   1h <id>
///   2h <id> framing <int>
///   lk <2h-id> <2h-id> <int>
///   rt <2h-id> <1h-id> <int>
///   front <2h-id> : <front tokens>
///   3h <count>
struct DiagramDocument {
  std::string name;
  HandleDecomposition decomposition;
  legendrian::LegendrianAnnotation fronts;
  std::string source_path;
  std::vector<std::string> warnings;

  /// Equal handle data, fronts and name; path and warnings are ignored.
  bool operator==(const DiagramDocument& other) const {
    return name == other.name && decomposition == other.decomposition && fronts == other.fronts;
  }
};

DiagramDocument parse_hbd(std::string_view text, const std::string& source_path = "");
DiagramDocument read_hbd_file(const std::string& path);

/// Canonical text: header, 1-handles, 2-handles, nonzero links and
/// run-throughs in handle order, 3-handle count, fronts.
std::string print_hbd(const DiagramDocument& doc);
std::string print_hbd(const HandleDecomposition& d,
                      const legendrian::LegendrianAnnotation& fronts = {});

}  // namespace handlecalc::hbd
