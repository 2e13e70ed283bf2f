#pragma once

#include "tuza/config.hpp"

namespace tuza::detail {

bool lift_present(const CompoundGraph& k, std::uint8_t mask, EdgeId e, Vertex p, int xp, int xq);
bool triangle_lifted(const CompoundGraph& k, const std::vector<std::uint8_t>& pattern, EdgeId e, std::uint8_t mask,
                     EdgeId e1, EdgeId e2);
/// No external triangle through e is lifted when e takes mask.
bool etf_with(const CompoundGraph& k, const std::vector<std::uint8_t>& pattern, EdgeId e, std::uint8_t mask);

}  // namespace tuza::detail
