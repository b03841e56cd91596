#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eegswt {

// Entry point of the eegswt tool. args excludes the program name.
// Returns 0 on success, 1 on usage errors, 2 on data errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eegswt
