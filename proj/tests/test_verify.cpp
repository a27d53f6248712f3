#include <doctest.h>

#include "tensorframe/instances.hpp"
#include "tensorframe/verify.hpp"

using namespace tensorframe;
using namespace tensorframe::verify;

TEST_CASE("summary keeps the worst residual per check") {
  const std::vector<CheckResult> all{make_check("a", 1e-12, 1e-9), make_check("b", 0.0, 0.0),
                                     make_check("a", 1e-8, 1e-9), make_check("a", 1e-11, 1e-9)};
  const auto s = summarize(all);
  REQUIRE(s.size() == 2);
  CHECK(s[0].name == "a");
  CHECK(s[0].residual == 1e-8);
  CHECK_FALSE(s[0].passed);
  CHECK(s[1].passed);
  CHECK_FALSE(all_passed(s));
}

TEST_CASE("suite names") {
  CHECK(parse_suite("group") == Suite::Group);
  CHECK_FALSE(parse_suite("everything").has_value());
  CHECK(to_string(Suite::Resolution) == "resolution");
}

TEST_CASE("random trials are deterministic and pass") {
  VerifyOptions opts;
  opts.seed = 7;
  opts.trials = 3;
  const auto a = run_random(opts);
  const auto b = run_random(opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].residual == b[i].residual);
    CHECK_MESSAGE(a[i].passed, a[i].name);
  }
  opts.trials = 0;
  CHECK(run_random(opts).empty());
}

TEST_CASE("tolerance override scales every pinned tolerance") {
  VerifyOptions opts;
  opts.suite = Suite::Fusion;
  opts.trials = 2;
  opts.tolerance = 1e-30;
  const auto strict = run_random(opts);
  CHECK_FALSE(all_passed(strict));
  for (const auto& c : strict) CHECK(c.tolerance <= 1e-30);
}

TEST_CASE("document checks on the Z4 example") {
  VerifyOptions opts;
  opts.suite = Suite::Group;
  const auto doc = io::from_group(instances::z4_diagonal_rep(), {{1.0, 1.0}});
  const auto checks = run_on_documents(opts, {doc});
  CHECK(all_passed(checks));
  bool found = false;
  for (const auto& c : checks)
    if (c.name == "group-analysis-intertwining") {
      found = true;
      CHECK(c.residual == 0.0);
    }
  CHECK(found);
}

TEST_CASE("document checks report failures instead of throwing") {
  VerifyOptions opts;
  const auto doc = io::from_frame(modframe::hilbert_frame({{1.0, 0.0}}));
  const auto checks = run_on_documents(opts, {io::from_frame(modframe::hilbert_frame({{1.0, 0.0}, {0.0, 1.0}})), doc});
  CHECK_FALSE(all_passed(checks));
}
