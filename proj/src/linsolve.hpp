#pragma once

#include <optional>
#include <vector>

#include "daha.hpp"

namespace macvv {

// Exact coordinates of target in the span of the given module elements, or
// nullopt when target lies outside the span. The returned coordinates are
// re-verified against the original columns before being handed back.
std::optional<std::vector<RatFun>> express_in_span(const std::vector<VElement>& cols,
                                                   const VElement& target);

} // namespace macvv
