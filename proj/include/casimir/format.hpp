#pragma once

#include <string>

namespace casimir {

/// Scientific notation with 9 significant digits — the fixed float format of
/// every CSV column, chosen so identical runs emit byte-identical files.
std::string sci9(double v);

}  // namespace casimir
