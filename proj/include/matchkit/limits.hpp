#pragma once

#include <cstdlib>
#include <string>

#include "matchkit/error.hpp"

namespace matchkit {

/// Resource guards for the exhaustive routines.
struct Limits {
  int enumeration = 8;  // whole-space matching enumeration
  int tree = 7;         // generating-tree materialization
  int paths = 12;       // non-crossing path enumeration

  /// Defaults, with every bound replaced by MATCHKIT_MAX_SIZE when set.
  static Limits from_env() {
    Limits l;
    if (const char* env = std::getenv("MATCHKIT_MAX_SIZE")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 0 || v > 64)
        throw ParseError("MATCHKIT_MAX_SIZE must be an integer in [0,64]");
      l.enumeration = l.tree = l.paths = static_cast<int>(v);
    }
    return l;
  }

  void check_enumeration(int m) const {
    if (m > enumeration) throw BoundExceeded("enumeration", m, enumeration);
  }
  void check_tree(int m) const {
    if (m > tree) throw BoundExceeded("tree", m, tree);
  }
  void check_paths(int m) const {
    if (m > paths) throw BoundExceeded("path", m, paths);
  }
};

}  // namespace matchkit
