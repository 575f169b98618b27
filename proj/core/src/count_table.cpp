#include "sofe/bonus/count_table.hpp"

#include <cmath>
#include <stdexcept>

namespace sofe {

double count_bonus_sqrt(const CountTable& table, int64_t state_key, double beta) {
  const int64_t n = table.count(state_key);
  if (n <= 0)
    throw std::logic_error("count_bonus_sqrt: zero count; bonus must be read after count_update");
  return beta / std::sqrt(static_cast<double>(n));
}

double count_bonus_salesman(const CountTable& table, int64_t state_key) {
  return table.count(state_key) == 0 ? 1.0 : 0.0;
}

}  // namespace sofe
