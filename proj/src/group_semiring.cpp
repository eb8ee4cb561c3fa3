#include "sdlkit/group_semiring.hpp"

namespace sdlkit {

const char* to_string(AddFlavor flavor) {
  return flavor == AddFlavor::LeftZero ? "left" : "right";
}

BinaryOpTable zero_band(std::size_t n, AddFlavor flavor) {
  if (flavor == AddFlavor::LeftZero)
    return BinaryOpTable::from_function(n, [](Element x, Element) { return x; });
  return BinaryOpTable::from_function(n, [](Element, Element y) { return y; });
}

GroupSemiring make_group_semiring(const FiniteGroup& group, AddFlavor flavor) {
  return {group, flavor, zero_band(group.order(), flavor), group.op()};
}

}  // namespace sdlkit
