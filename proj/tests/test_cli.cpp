// End-to-end checks of the command-line surface: output formats, exit
// codes, and determinism. Runs the built binary via popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CIKIT_BIN
#error "CIKIT_BIN must point at the cikit executable"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = std::string(CIKIT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> chunk{};
  std::size_t got;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    output.append(chunk.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("no-such-subcommand").exit_code == 2);
  CHECK(run("analyze").exit_code == 2);                      // missing argument
  CHECK(run("enumerate --n 7").exit_code == 2);              // out of range
  CHECK(run("analyze /does/not/exist.tt").exit_code == 2);   // file not found
  CHECK(run("hash --k1 xy --k2 aa --rounds 0 /dev/null").exit_code == 2);  // bad hex
}

TEST_CASE("enumerate prints the counted line") {
  const auto r = run("enumerate --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "N=1 total=4 chaotic=1\n");
  const auto r2 = run("enumerate --n 2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == "N=2 total=256 chaotic=35\n");
}

TEST_CASE("analyze reports and enforces the certificate") {
  write_file("cli_id2.tt", "N=2\n0\n1\n2\n3\n");
  write_file("cli_neg2.tt", "N=2\n3\n2\n1\n0\n");
  write_file("cli_bad.tt", "N=2\n0\n1\n2\n");

  const auto id = run("analyze cli_id2.tt");
  CHECK(id.exit_code == 0);
  CHECK(id.output == "chaotic=false scc=4 vertices=4 arcs=8\n");

  const auto neg = run("analyze cli_neg2.tt");
  CHECK(neg.exit_code == 0);
  CHECK(neg.output == "chaotic=true scc=1 vertices=4 arcs=8\n");

  CHECK(run("analyze cli_id2.tt --require-chaotic").exit_code == 1);
  CHECK(run("analyze cli_neg2.tt --require-chaotic").exit_code == 0);
  CHECK(run("analyze cli_bad.tt").exit_code == 2);  // malformed table

  std::remove("cli_id2.tt");
  std::remove("cli_neg2.tt");
  std::remove("cli_bad.tt");
}

TEST_CASE("hash with zero rounds is the inner hash, and runs are byte-identical") {
  write_file("cli_msg.bin", "Hi There");
  // RFC 4231 test case 1: key = 0x0b repeated 20 times.
  const std::string key_flags =
      "--k1 0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b0b --k2 aabbccdd";
  const auto inner = run("hash " + key_flags + " --rounds 0 cli_msg.bin");
  CHECK(inner.exit_code == 0);
  CHECK(inner.output ==
        "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7\n");

  const auto treated = run("hash " + key_flags + " cli_msg.bin");
  CHECK(treated.exit_code == 0);
  CHECK(treated.output != inner.output);
  CHECK(run("hash " + key_flags + " cli_msg.bin").output == treated.output);
  std::remove("cli_msg.bin");
}

TEST_CASE("trajectory emits CSV states") {
  const auto r = run("trajectory --f neg:2 --x0 0 --strategy 1+2,1 --steps 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "step,state\n0,0\n1,3\n2,2\n");

  // Unary syntax, one negation per step.
  const auto u = run("trajectory --f neg:1 --x0 0 --strategy 1,1,1 --steps 3");
  CHECK(u.output == "step,state\n0,0\n1,1\n2,0\n3,1\n");

  CHECK(run("trajectory --f neg:2 --x0 0 --strategy 1 --steps 5").exit_code == 2);
  CHECK(run("trajectory --f neg:2 --x0 9 --strategy 1 --steps 1").exit_code == 2);
}

TEST_CASE("distance prints the exact fraction") {
  const auto r = run("distance --n 2 --x 0 --y 0 --s 1,2,2 --t 2,2,2 --precision 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n=2 precision=3 integer=0 numerator=900 denominator=2000\n");
}

TEST_CASE("stream-hash emits one digest per frame") {
  // Two 8-byte frames at 64-bit width.
  write_file("cli_frames.bin", "frame-00frame-01");
  const std::string flags = "--k1 0102 --k2 0304 --frame-bits 64";
  const auto r = run("stream-hash " + flags + " cli_frames.bin");
  CHECK(r.exit_code == 0);
  CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 2);
  CHECK(run("stream-hash " + flags + " cli_frames.bin").output == r.output);  // deterministic

  // Trailing partial frame is a domain error.
  write_file("cli_ragged.bin", "frame-00frame");
  CHECK(run("stream-hash " + flags + " cli_ragged.bin").exit_code == 1);

  // Empty stream.
  write_file("cli_empty.bin", "");
  CHECK(run("stream-hash " + flags + " cli_empty.bin").exit_code == 1);

  // Length-prefixed framing: 4-byte big-endian length, then the frame.
  const std::string frame8 = "frame-00";
  std::string prefixed;
  prefixed += std::string{'\0', '\0', '\0', '\x08'};
  prefixed += frame8;
  write_file("cli_prefixed.bin", prefixed);
  const auto p = run("stream-hash " + flags + " --framing length-prefixed cli_prefixed.bin");
  CHECK(p.exit_code == 0);
  CHECK(p.output == r.output.substr(0, r.output.find('\n') + 1));

  // A wrong declared length is a domain error.
  std::string wrong;
  wrong += std::string{'\0', '\0', '\0', '\x05'};
  wrong += frame8;
  write_file("cli_wrong.bin", wrong);
  CHECK(run("stream-hash " + flags + " --framing length-prefixed cli_wrong.bin").exit_code ==
        1);

  std::remove("cli_frames.bin");
  std::remove("cli_ragged.bin");
  std::remove("cli_empty.bin");
  std::remove("cli_prefixed.bin");
  std::remove("cli_wrong.bin");
}

TEST_CASE("avalanche line is reproducible for a fixed seed") {
  const auto a = run("avalanche --trials 120 --seed 11");
  const auto b = run("avalanche --trials 120 --seed 11");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("trials=120 mean=") == 0);
}

TEST_CASE("verify emits one parseable line per check") {
  const auto r = run("verify --seed 3");
  CHECK(r.exit_code == 0);
  std::size_t lines = 0;
  std::size_t at = 0;
  while ((at = r.output.find('\n', at)) != std::string::npos) {
    ++lines;
    ++at;
  }
  CHECK(lines == 9);
  CHECK(r.output.find("result=fail") == std::string::npos);
  // Every line starts with check= and carries a result.
  std::istringstream in(r.output);
  std::string line;
  while (std::getline(in, line)) {
    CHECK(line.rfind("check=", 0) == 0);
    CHECK(line.find(" result=") != std::string::npos);
  }
}
