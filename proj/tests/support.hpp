#pragma once

#include "lubkit/sweeps.hpp"

namespace testing_support {

using lubkit::small_lubpos;

}  // namespace testing_support
