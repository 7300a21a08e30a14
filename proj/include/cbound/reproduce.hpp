#pragma once

#include <string>
#include <vector>

namespace cbound {

/// One published value recomputed by the toolkit.
struct ManifestRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok() const { return expected == computed; }
};

/// Recomputes every published threshold, c-sequence and closed form.
std::vector<ManifestRow> run_reproduction();

}  // namespace cbound
