#pragma once

// nlohmann/json lives in vendor/ at the repository root; this indirection
// keeps the include path configuration in one place.
#include <json.hpp>
