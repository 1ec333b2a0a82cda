#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "heckeo/cli/app.hpp"
#include "heckeo/cli/config.hpp"
#include "heckeo/cli/report.hpp"

using namespace heckeo;
using namespace heckeo::cli;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args, const char* env = nullptr) {
  std::ostringstream out, err;
  int rc = run(args, out, err, env);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("empty report") {
  VerificationReport r;
  r.suite = "k0";
  CHECK(r.pass());
  CHECK(emit(r, Format::json) == "{\"schema\":1,\"suite\":\"k0\",\"checks\":[],\"pass\":true}\n");
  CHECK(emit(r, Format::csv) == "name,pass,detail\n");
}

TEST_CASE("one failing check fails the report") {
  VerificationReport r;
  r.suite = "x";
  r.checks.push_back({{"b.ok", true, "1 case"}, 1.5});
  r.checks.push_back({{"a.bad", false, "1/1 failed; first: y"}, 2.0});
  CHECK_FALSE(r.pass());
  r.sort_checks();
  CHECK(r.checks.front().check.name == "a.bad");
  auto j = nlohmann::json::parse(emit(r, Format::json));
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["name"] == "a.bad");
  CHECK_FALSE(j["checks"][0].contains("elapsed_ms"));
  auto jt = nlohmann::json::parse(emit(r, Format::json, {true, 100}));
  CHECK(jt["checks"][1]["elapsed_ms"] == 1.5);
  std::string table = emit(r, Format::table);
  CHECK(table.find("FAIL  a.bad") != std::string::npos);
  CHECK(table.find("FAIL 1/2 checks") != std::string::npos);
}

TEST_CASE("csv quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  VerificationReport r;
  r.suite = "s";
  r.checks.push_back({{"n", true, "3 cases; note: x, y"}, 0});
  CHECK(emit(r, Format::csv) == "name,pass,detail\nn,true,\"3 cases; note: x, y\"\n");
}

TEST_CASE("wrapping respects the width in code points") {
  std::string text = "ε(p⊗m) = p·1_e·m; η(v) = 1_e⊗v; and a deliberately long tail of words";
  for (std::size_t w : {10u, 17u, 30u}) {
    auto lines = wrap_text(text, w);
    std::string joined;
    for (const auto& l : lines) {
      CHECK(display_width(l) <= w);
      joined += (joined.empty() ? "" : " ") + l;
    }
    // long words are split, so compare without spaces
    auto squash = [](std::string x) {
      x.erase(std::remove(x.begin(), x.end(), ' '), x.end());
      return x;
    };
    CHECK(squash(joined) == squash(text));
    if (w >= 12) CHECK(joined == text);
  }
  CHECK(wrap_text("abcdefgh", 3) == std::vector<std::string>{"abc", "def", "gh"});
  CHECK(display_width("Δ_e") == 3);
  CHECK(wrap_text("", 5) == std::vector<std::string>{""});
}

TEST_CASE("table lines stay within the configured width") {
  VerificationReport r;
  r.suite = "s";
  r.checks.push_back({{"x.y", true, std::string(50, 'a') + " " + std::string(30, 'b') + " cc dd ee ff gg"}, 0});
  std::istringstream in(emit(r, Format::table, {false, 60}));
  std::string line;
  while (std::getline(in, line)) CHECK(display_width(line) <= 60);
}

TEST_CASE("config parsing and precedence") {
  Config c = parse_config("# comment\nformat = table\n\nenumeration_cap=100 # trailing\ntable_width = 72\n");
  CHECK(c.format == Format::table);
  CHECK(c.enumeration_cap == 100);
  CHECK(c.table_width == 72);
  Config d = parse_config("");
  CHECK(d.enumeration_cap == 40320);
  CHECK(d.format == Format::json);
  CHECK_THROWS_AS(parse_config("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("enumeration_cap = -3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("format = yaml\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
  CHECK(resolve_config(std::nullopt, nullptr).format == Format::json);
  CHECK_THROWS_AS(resolve_config(std::nullopt, "/nonexistent/heckeo.conf"), ConfigError);
  CHECK_THROWS_AS(resolve_config(std::string("/nonexistent/a.conf"), nullptr), ConfigError);
}

TEST_CASE("commands from the reference examples") {
  auto k = run_cli({"klpoly", "--type", "A1", "--x", "s", "--y", "e"});
  CHECK(k.rc == 0);
  auto kj = nlohmann::json::parse(k.out);
  // C_s = H_s + v
  CHECK(kj["coeff"] == nlohmann::json{{"1", 1}});

  auto w = run_cli({"weyl", "--type", "G2", "--info"});
  CHECK(w.rc == 0);
  auto wj = nlohmann::json::parse(w.out);
  CHECK(wj["order"] == 12);
  CHECK(wj["longest_length"] == 6);

  auto v = run_cli({"verify", "--type", "A2", "--suite", "k0"});
  CHECK(v.rc == 0);
  auto vj = nlohmann::json::parse(v.out);
  CHECK(vj["schema"] == 1);
  CHECK(vj["pass"] == true);
  CHECK(vj["checks"].size() == 12);
}

TEST_CASE("exit codes and distinct error messages") {
  auto none = run_cli({});
  CHECK(none.rc == 2);
  auto help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("block-check") != std::string::npos);

  auto t = run_cli({"weyl", "--type", "Q3"});
  auto m = run_cli({"klpoly", "--type", "A2", "--x", "1..2", "--y", "e"});
  auto c = run_cli({"weyl", "--type", "A8"});
  CHECK(t.rc == 2);
  CHECK(m.rc == 2);
  CHECK(c.rc == 2);
  CHECK(t.err.find("unknown Cartan type") != std::string::npos);
  CHECK(m.err.find("malformed word string") != std::string::npos);
  CHECK(c.err.find("enumeration cap exceeded") != std::string::npos);
  CHECK(t.err != m.err);
  CHECK(m.err != c.err);

  // a tiny cap rejects A3 (order 24)
  auto capped = run_cli({"--cap", "10", "verify", "--type", "A3", "--suite", "hecke"});
  CHECK(capped.rc == 2);
  auto bad_suite = run_cli({"verify", "--type", "A2", "--suite", "nope"});
  CHECK(bad_suite.rc == 2);
  auto needs_type = run_cli({"verify", "--suite", "k0"});
  CHECK(needs_type.rc == 2);
  auto block_only = run_cli({"verify", "--suite", "block"});
  CHECK(block_only.rc == 0);
}

TEST_CASE("block-check suites and the homology table") {
  auto r = run_cli({"block-check", "--suite", "equivalence", "--format", "json"});
  CHECK(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "block-equivalence");
  CHECK(j["checks"].size() == 4);
  auto h = run_cli({"block-check", "--homology"});
  CHECK(h.rc == 0);
  CHECK(h.out.rfind("functor,module,degree,dimension\n", 0) == 0);
  // Θ*L_s has L_s in degree 1 only
  CHECK(h.out.find("Θ*,L_s,0,0\nΘ*,L_s,1,1\n") != std::string::npos);
  std::size_t lines = 0;
  for (char ch : h.out) lines += ch == '\n';
  CHECK(lines == 101);
}

TEST_CASE("verify output is deterministic") {
  auto a = run_cli({"verify", "--type", "B2", "--suite", "all"});
  auto b = run_cli({"verify", "--type", "B2", "--suite", "all"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  auto names = nlohmann::json::parse(a.out)["checks"];
  for (std::size_t i = 1; i < names.size(); ++i) CHECK(names[i - 1]["name"].get<std::string>() < names[i]["name"].get<std::string>());
}
