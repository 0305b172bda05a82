#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"

#include "diffquot/cli.hpp"

using dq::cli::run_command;

namespace {

dq::cli::CommandOutcome run(std::vector<std::string> args) { return run_command(args); }

}  // namespace

TEST_CASE("expand") {
  const auto out = run({"expand", "--r", "2"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload ==
        "1 * l^2 * D^2[f] * D^2[g]\n"
        "2 * l^1 * D^2[f] * D^1[g]\n"
        "1 * D^2[f] * g\n"
        "2 * l^1 * D^1[f] * D^2[g]\n"
        "2 * D^1[f] * D^1[g]\n"
        "1 * f * D^2[g]\n");

  const auto as_json = run({"expand", "--r", "3", "--json"});
  CHECK(as_json.exit_code == 0);
  std::size_t lines = 0;
  std::size_t start = 0;
  while (start < as_json.payload.size()) {
    const auto end = as_json.payload.find('\n', start);
    const auto j = nlohmann::json::parse(as_json.payload.substr(start, end - start));
    CHECK(j.contains("coeff"));
    CHECK(j.contains("order_f"));
    ++lines;
    start = end + 1;
  }
  CHECK(lines == 10);
}

TEST_CASE("expand rejects r = 0") {
  const auto out = run({"expand", "--r", "0"});
  CHECK(out.exit_code == 2);
  CHECK(out.payload.find("positive integer r") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"expand", "--r", "2", "--bogus"}).exit_code == 2);
  CHECK(run({"expand"}).exit_code == 2);
  CHECK(run({"apply", "--r", "1", "--f", "x +", "--g", "x"}).exit_code == 2);
  CHECK(run({"verify", "--theorem", "2.0", "--r", "1"}).exit_code == 2);
  CHECK(run({"verify", "--theorem", "1.1", "--r", "1", "--n", "3"}).exit_code == 2);
  CHECK(run({"multi", "--r", "2", "--factors", "x,,x"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("apply") {
  const auto out = run({"apply", "--r", "2", "--f", "x^2", "--g", "x"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload ==
        "expansion: 6*x + 6*l\n"
        "oracle:    6*x + 6*l\n"
        "verdict:   EQUAL\n");
  const auto j = nlohmann::json::parse(run({"apply", "--r", "1", "--f", "x", "--g", "x", "--json"}).payload);
  CHECK(j.at("expansion") == "2*x + l");
  CHECK(j.at("verdict") == "EQUAL");
}

TEST_CASE("multi") {
  const auto out = run({"multi", "--r", "2", "--factors", "x,x,x"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload == "result: 6*x + 6*l\noracle: 6*x + 6*l\nverdict: EQUAL\n");
  const auto j = nlohmann::json::parse(run({"multi", "--r", "1", "--factors", "x, 1/2*l", "--json"}).payload);
  CHECK(j.at("factors").size() == 2);
  CHECK(j.at("verdict") == "EQUAL");
}

TEST_CASE("verify campaigns") {
  const auto out = run({"verify", "--theorem", "1.1", "--r", "3", "--trials", "50", "--seed", "7"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload == "verify theorem=1.1 r=3 n=2 trials=50 seed=7: 50 passed, 0 failed\n");
  CHECK(run({"verify", "--theorem", "1.3", "--r", "2", "--n", "3", "--trials", "5"}).exit_code == 0);
  CHECK(run({"verify", "--theorem", "inversion", "--r", "0", "--trials", "5"}).exit_code == 0);
  CHECK(run({"verify", "--theorem", "egf", "--r", "8", "--trials", "3"}).exit_code == 0);
  CHECK(run({"verify", "--theorem", "1.3", "--r", "0"}).exit_code == 2);
}

TEST_CASE("numeric") {
  const std::vector<std::string> args{"numeric", "--f", "exp", "--g", "sin", "--r", "3",
                                      "--lambda", "0.1", "--x0", "0", "--step", "0.03125",
                                      "--count", "64", "--tol", "1e-9", "--json"};
  const auto out = run_command(args);
  CHECK(out.exit_code == 0);
  const auto j = nlohmann::json::parse(out.payload);
  CHECK(j.at("pass") == true);
  CHECK(j.at("trials") == 64);

  // an impossible tolerance is a verification failure, not a usage error
  auto strict = args;
  strict[16] = "1e-30";
  CHECK(run_command(strict).exit_code == 1);

  const auto pole = run({"numeric", "--f", "recip(0)", "--g", "exp", "--r", "1", "--lambda", "0.1",
                         "--x0", "0", "--step", "0.1", "--count", "4", "--tol", "1e-9"});
  CHECK(pole.exit_code == 2);
  CHECK(run({"numeric", "--f", "exp", "--g", "exp", "--r", "1", "--lambda", "0", "--x0", "0",
             "--step", "0.1", "--count", "4", "--tol", "1e-9"})
            .exit_code == 2);
  CHECK(run({"numeric", "--f", "tanh", "--g", "exp", "--r", "1", "--lambda", "0.1", "--x0", "0",
             "--step", "0.1", "--count", "4", "--tol", "1e-9"})
            .exit_code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--theorem", "1.3", "--r", "2",
                                      "--trials", "10", "--seed", "12345"};
  CHECK(run_command(args).payload == run_command(args).payload);
}
