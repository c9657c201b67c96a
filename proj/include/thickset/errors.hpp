#pragma once

#include <stdexcept>
#include <string>

namespace thickset {

// A breaking-function construction ran out of fresh points. Carries the
// starving set and the stage; assembly code fills in the column.
struct SelectionExhausted : std::runtime_error {
  int setIndex;
  int stage;
  int column = -1;
  SelectionExhausted(int setIndex_, int stage_, const std::string& what_)
      : std::runtime_error(what_), setIndex(setIndex_), stage(stage_) {}
};

// No splitter exists (or none was found within budget) at the given round.
struct SplitterNotFound : std::runtime_error {
  int round;
  int column = -1;
  SplitterNotFound(int round_, const std::string& what_)
      : std::runtime_error(what_), round(round_) {}
};

// The second extraction of a witness run collapsed below usable size.
struct DegenerateWitness : std::runtime_error {
  int trapSize;
  DegenerateWitness(int trapSize_, const std::string& what_)
      : std::runtime_error(what_), trapSize(trapSize_) {}
};

// An internal certainty failed. Indicates a bug, not bad input.
struct InvariantBreach : std::logic_error {
  using std::logic_error::logic_error;
};

// A value that must be unique was found twice.
struct UniquenessBreach : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace thickset
