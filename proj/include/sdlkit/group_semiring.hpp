#pragma once

#include "sdlkit/core.hpp"

namespace sdlkit {

/// LeftZero: x + y = x.  RightZero: x + y = y.
enum class AddFlavor { LeftZero, RightZero };

const char* to_string(AddFlavor flavor);

/// A group with left-zero (or right-zero) addition. `mul` is the group table.
struct GroupSemiring {
  FiniteGroup group;
  AddFlavor flavor;
  BinaryOpTable add;
  BinaryOpTable mul;
};

GroupSemiring make_group_semiring(const FiniteGroup& group,
                                  AddFlavor flavor = AddFlavor::LeftZero);

/// The addition table of the given flavor on n elements.
BinaryOpTable zero_band(std::size_t n, AddFlavor flavor);

}  // namespace sdlkit
