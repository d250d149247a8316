#include <doctest.h>

#include <vector>

#include "netband/schedule.hpp"

using namespace netband;

TEST_CASE("schedule boundaries for T = 20000") {
  const BatchSchedule schedule = make_schedule(20000);
  const std::vector<long> expected = {2,    6,    14,   30,    62,   126,  254,
                                      510,  1022, 2046, 4094,  8190, 16382,
                                      20000};
  CHECK(schedule.batch_count() == 14);
  REQUIRE(schedule.boundaries.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(schedule.boundaries[i] == expected[i]);
  }
}

TEST_CASE("schedule small horizons") {
  const BatchSchedule two = make_schedule(2);
  CHECK(two.batch_count() == 1);
  CHECK(two.boundaries == std::vector<long>{2});

  const BatchSchedule seven = make_schedule(7);
  CHECK(seven.batch_count() == 3);
  CHECK(seven.boundaries == std::vector<long>{2, 6, 7});

  const BatchSchedule one = make_schedule(1);
  CHECK(one.batch_count() == 1);
  CHECK(one.boundaries == std::vector<long>{1});

  CHECK_THROWS_AS(make_schedule(0), std::invalid_argument);
}

TEST_CASE("schedule invariants over many horizons") {
  for (long T = 1; T <= 5000; T = T < 50 ? T + 1 : T * 7 / 5) {
    const BatchSchedule schedule = make_schedule(T);
    const int M = schedule.batch_count();
    REQUIRE(M >= 1);
    CHECK(schedule.boundary(M) == T);
    long previous = 0;
    for (int m = 1; m <= M; ++m) {
      CHECK(schedule.boundary(m) > previous);
      CHECK(schedule.batch_size(m) <= (1L << m));
      previous = schedule.boundary(m);
    }
  }
}
