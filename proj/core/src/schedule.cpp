#include "netband/schedule.hpp"

#include <stdexcept>

namespace netband {

BatchSchedule make_schedule(long T) {
  if (T < 1) throw std::invalid_argument("horizon must be >= 1");
  // M = ceil(log2(T/2 + 1)), computed in integers: the smallest M with
  // 2^(M+1) >= T + 2.
  int batches = 1;
  while ((2L << batches) < T + 2) ++batches;

  BatchSchedule schedule;
  schedule.horizon = T;
  schedule.boundaries.reserve(batches);
  for (int m = 1; m < batches; ++m) {
    schedule.boundaries.push_back(std::min(2 * ((1L << m) - 1), T));
  }
  schedule.boundaries.push_back(T);
  return schedule;
}

}  // namespace netband
