#pragma once

#include <string>

#include "cheb/group_spec.hpp"
#include "cheb/perm_group.hpp"

namespace testing {

inline cheb::PermGroup group(const std::string& spec) { return cheb::parse_group(spec).group; }

}  // namespace testing
