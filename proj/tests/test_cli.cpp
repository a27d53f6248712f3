#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tensorframe/cli.hpp"
#include "tensorframe/document.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tensorframe");
  std::ostringstream out, err;
  const int code = tensorframe::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TF_DATA_DIR) + "/" + name; }

std::string without_timing(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("elapsed_ms", 0) != 0 && line.find("\"wall_clock_ms\"") == std::string::npos) out += line + "\n";
  return out;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "tensorframe_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check-frame exit codes") {
  const auto ok = run({"check-frame", data("mercedes.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("bounds 1.5 1.5\n") != std::string::npos);
  CHECK(run({"check-frame", data("single_vector.json")}).code == 2);
  const auto bad = run({"check-frame", data("malformed.json")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("malformed JSON") != std::string::npos);
  CHECK(run({"check-frame", data("missing.json")}).code == 1);
  CHECK(run({"check-frame", data("z4_group.json")}).code == 1);
  CHECK(run({"check-frame", "--hilbert", data("block_onb.json")}).code == 1);
  CHECK(run({"check-frame", "--module", data("block_onb.json")}).code == 0);
  CHECK(run({"check-frame", "--module", "--hilbert", data("mercedes.json")}).code == 1);
  CHECK(run({"no-such-command"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output") {
  const auto r = run({"check-frame", "--output", "json", data("mercedes.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"command\": \"check-frame\"") != std::string::npos);
  CHECK(r.out.find("\"wall_clock_ms\"") != std::string::npos);
}

TEST_CASE("tolerance from the environment") {
  ::setenv("TENSORFRAME_TOL", "1e-6", 1);
  const auto r = run({"resolution-check", data("halves_resolution.json")});
  ::unsetenv("TENSORFRAME_TOL");
  CHECK(r.code == 0);
  CHECK(r.out.find("tol=1.41421356237e-06") != std::string::npos);
  ::setenv("TENSORFRAME_TOL", "abc", 1);
  CHECK(run({"resolution-check", data("halves_resolution.json")}).code == 1);
  ::unsetenv("TENSORFRAME_TOL");
  const auto flag = run({"resolution-check", "--tol", "1e-4", data("halves_resolution.json")});
  CHECK(flag.out.find("tol=0.000141421356237") != std::string::npos);
}

TEST_CASE("tensor command") {
  const auto out = scratch("mm.json");
  const auto r = run({"tensor", data("mercedes.json"), data("mercedes.json"), "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("bounds 2.25 2.25") != std::string::npos);
  const auto doc = tensorframe::io::load_document(out.string());
  CHECK(doc.rank == 4);
  CHECK(doc.vectors.size() == 9);
  CHECK(run({"check-frame", out.string()}).code == 0);

  CHECK(run({"tensor", data("mercedes.json"), data("z4_group.json")}).code == 1);
  const auto mixed = run({"tensor", data("mercedes.json"), data("block_onb.json")});
  CHECK(mixed.code == 0);
  CHECK(mixed.out.find("bounds 1.5 1.5") != std::string::npos);
  CHECK(run({"tensor", data("single_vector.json"), data("mercedes.json")}).code == 2);
  CHECK(run({"tensor", data("coordinate_fusion.json"), data("coordinate_fusion.json")}).code == 0);
  CHECK(run({"tensor", data("halves_resolution.json"), data("halves_resolution.json")}).code == 0);
  CHECK(run({"tensor", data("z4_group.json"), data("z4_group.json")}).code == 0);
}

TEST_CASE("gen is reproducible and feeds the check commands") {
  const auto a = run({"gen", "--kind", "frame", "--dim", "2", "--count", "3", "--seed", "1"});
  const auto b = run({"gen", "--kind", "frame", "--dim", "2", "--count", "3", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"gen", "--kind", "frame", "--dim", "2", "--count", "3", "--seed", "2"}).out);

  const auto frame = scratch("gen_frame.json");
  CHECK(run({"gen", "--kind", "frame", "--dim", "2", "--count", "3", "--seed", "1", "--out", frame.string()}).code == 0);
  CHECK(slurp(frame) == a.out);
  CHECK(run({"check-frame", frame.string()}).code == 0);

  const auto block = scratch("gen_block.json");
  CHECK(run({"gen", "--kind", "frame", "--dim", "2", "--count", "2", "--algebra", "2,1", "--out", block.string()}).code == 0);
  CHECK(run({"check-frame", block.string()}).code == 0);

  const auto fusion = scratch("gen_fusion.json");
  CHECK(run({"gen", "--kind", "fusion", "--dim", "3", "--count", "2", "--seed", "4", "--out", fusion.string()}).code == 0);
  CHECK(run({"fusion-check", fusion.string()}).code == 0);

  const auto group = scratch("gen_group.json");
  CHECK(run({"gen", "--kind", "group", "--dim", "2", "--count", "5", "--seed", "4", "--out", group.string()}).code == 0);
  CHECK(run({"group-frame", group.string()}).code == 0);

  CHECK(run({"gen", "--kind", "frame", "--dim", "3", "--count", "2"}).code == 1);
  CHECK(run({"gen", "--kind", "group", "--dim", "3", "--count", "2"}).code == 1);
  CHECK(run({"gen", "--kind", "frame", "--dim", "0", "--count", "2"}).code == 1);
  CHECK(run({"gen", "--kind", "frame", "--dim", "1", "--count", "2", "--algebra", "2,x"}).code == 1);
  CHECK(run({"gen", "--kind", "fusion", "--dim", "2", "--count", "2", "--algebra", "2"}).code == 1);
}

TEST_CASE("verify command") {
  const auto empty = run({"verify", "--trials", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("checks_total 0") != std::string::npos);

  const auto a = run({"verify", "--suite", "tensor", "--seed", "7", "--trials", "3"});
  const auto b = run({"verify", "--suite", "tensor", "--seed", "7", "--trials", "3"});
  CHECK(a.code == 0);
  CHECK(without_timing(a.out) == without_timing(b.out));

  const auto z4 = run({"verify", "--suite", "group", data("z4_group.json")});
  CHECK(z4.code == 0);
  CHECK(z4.out.find("PASS group-analysis-intertwining residual=0 ") != std::string::npos);
  CHECK(z4.out.find("trials 0") != std::string::npos);

  CHECK(run({"verify", data("malformed.json")}).code == 1);
  CHECK(run({"verify", "--suite", "bogus"}).code == 1);
  CHECK(run({"verify", data("single_vector.json")}).code == 2);
  CHECK(run({"verify", "--suite", "fusion", "--trials", "2", "--tol", "1e-30"}).code == 2);
}

TEST_CASE("group and fusion commands") {
  const auto g = run({"group-frame", data("z4_group.json")});
  CHECK(g.code == 0);
  CHECK(g.out.find("candidates.0.bounds 4 4") != std::string::npos);
  CHECK(g.out.find("candidates.0.support_size 2") != std::string::npos);
  const auto f = run({"fusion-check", data("coordinate_fusion.json")});
  CHECK(f.code == 0);
  CHECK(f.out.find("bounds 1 4") != std::string::npos);
  CHECK(run({"fusion-check", data("mercedes.json")}).code == 1);
}
