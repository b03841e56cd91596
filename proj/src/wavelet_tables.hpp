#pragma once

#include <string_view>
#include <vector>

namespace eegswt::detail {

// Lowpass filters of the tabulated families. rec_lo is empty for orthogonal
// wavelets, where it is the reverse of dec_lo.
struct LowpassTable {
  std::string_view name;
  std::vector<double> dec_lo;
  std::vector<double> rec_lo;
};

const std::vector<LowpassTable>& lowpass_tables();

}  // namespace eegswt::detail
