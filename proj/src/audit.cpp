#include "ogq/audit.hpp"

#include <cfenv>

namespace ogq::audit {

void begin() { std::feclearexcept(FE_ALL_EXCEPT); }

bool floating_point_touched() { return std::fetestexcept(FE_ALL_EXCEPT) != 0; }

}  // namespace ogq::audit
