#pragma once

#include <string>
#include <vector>

#include "kchord/exact.hpp"

namespace kchord::cli {

struct OeisSequence {
  std::string id;
  std::string description;
  long offset;
};

/// The ten sequences this tool can regenerate; A062993 is emitted per k.
const std::vector<OeisSequence>& known_sequences();

/// Throws std::invalid_argument for an unknown id.
const OeisSequence& find_sequence(const std::string& id);

/// First `count` terms. Triangles are linearized row by row: short-chord rows
/// l = 0..n and component rows q = 0..(last nonzero) for n >= 1; non-crossing
/// rows l = 1..m for m >= 1. The A062993 slice is m = 0, 1, 2, ... for the
/// given k.
std::vector<Integer> oeis_terms(const std::string& id, unsigned slice_k, std::size_t count);

}  // namespace kchord::cli
