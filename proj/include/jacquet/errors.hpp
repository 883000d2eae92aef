#pragma once

#include <stdexcept>
#include <string>

namespace jacquet {

// Literal is not an element of (1/2)Z.
struct MalformedExponent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// d - alpha not integral: the segment does not sit on the reducibility line.
struct LineMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input left the verified fragment (e.g. a 3-segment non-ladder datum).
struct UnsupportedShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Jordan block cannot be lowered.
struct IneligibleBlock : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad symbol text, bad Jordan data, etc.
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace jacquet
