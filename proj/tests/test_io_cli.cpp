#include <filesystem>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "sbp/catalog.hpp"
#include "sbp/cli.hpp"
#include "sbp/io.hpp"

using namespace sbp;

namespace {

  std::string sample(std::string const& name) {
    return std::string(SBP_SAMPLES) + "/" + name;
  }

  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  io::json last_line(std::string const& text) {
    auto const end   = text.find_last_not_of('\n');
    auto const start = text.rfind('\n', end);
    return io::json::parse(
        text.substr(start == std::string::npos ? 0 : start + 1));
  }

  bool contains(std::string const& text, std::string const& what) {
    return text.find(what) != std::string::npos;
  }

  std::vector<std::string> loadable_samples() {
    std::vector<std::string> out;
    for (auto const& e : std::filesystem::directory_iterator(SBP_SAMPLES)) {
      if (e.path().extension() == ".json"
          && e.path().stem() != "dangling") {
        out.push_back(e.path().string());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("E1 bundle file") {
  auto w = io::parse_inputs({sample("e1_bundle.json")});
  REQUIRE(w.bundles.size() == 1);
  auto const& b = w.bundles.front();
  CHECK(b.name == "e1");
  CHECK(b.X.elements() == std::vector<std::string>{"0", "s"});
  CHECK(b.B.elements() == std::vector<std::string>{"1", "t"});
  CHECK(b.A.elements() == std::vector<std::string>{"0R1", "sR1", "0Rt"});
  auto chain = catalog::chain_bundle();
  chain.name = "e1";
  CHECK(b == chain);
  // Embedded monoids are registered under their names.
  CHECK(w.monoid("X"));
  CHECK(w.monoid("B"));
  CHECK(w.monoid("R"));
}

TEST_CASE("empty input list") {
  CHECK(io::parse_inputs({}).empty());
}

TEST_CASE("loader errors") {
  SECTION("missing monoid") {
    try {
      io::parse_inputs({sample("dangling.json")});
      FAIL("expected DanglingReference");
    } catch (io::DanglingReference const& e) {
      CHECK(e.name() == "C");
    }
  }
  SECTION("syntax error reports line and column") {
    try {
      io::parse_text("{\n  \"schema\": \"sbp-1\",\n  \"name\": \n}\n", "t");
      FAIL("expected ParseError");
    } catch (io::ParseError const& e) {
      CHECK(e.location() == "line 4, column 1");
    }
  }
  SECTION("schema errors report a pointer") {
    try {
      io::parse_text(R"({"schema":"sbp-1","name":"M","elements":["a","b"],)"
                     R"("identity":0,"table":[[0,1],[1,"x"]]})");
      FAIL("expected ParseError");
    } catch (io::ParseError const& e) {
      CHECK(e.location() == "/table/1/1");
    }
    CHECK_THROWS_AS(io::parse_text(R"({"name":"M","table":[[0]]})"),
                    io::ParseError);
    CHECK_THROWS_AS(io::parse_text(R"({"schema":"sbp-2","table":[[0]]})"),
                    io::ParseError);
  }
  SECTION("invalid monoid") {
    try {
      io::parse_text(R"({"schema":"sbp-1","name":"M","elements":["a","b","c"],)"
                     R"("identity":0,"table":[[0,1,2],[1,2,1],[2,0,2]]})");
      FAIL("expected ValidationError");
    } catch (io::ValidationError const& e) {
      CHECK(e.object() == "M");
      CHECK(e.violation().kind == "NonAssociative");
    }
  }
  SECTION("conflicting definitions") {
    auto w = io::parse_inputs({sample("z2.json")});
    CHECK_THROWS_AS(
        io::parse_into(w,
                       R"({"schema":"sbp-1","name":"Z2","elements":["0","1"],)"
                       R"("identity":0,"table":[[0,1],[1,1]]})",
                       "other"),
        io::ParseError);
  }
}

TEST_CASE("built-in monoid names resolve") {
  auto w = io::parse_inputs({sample("p_trivial_z3.json")});
  REQUIRE(w.maps.size() == 1);
  CHECK(w.maps.front().map.domain().size() == 1);
  CHECK(w.maps.front().map.codomain().size() == 3);
}

TEST_CASE("emit and parse round trip") {
  auto const files = loadable_samples();
  REQUIRE(files.size() >= 9);
  for (auto const& f : files) {
    INFO(f);
    auto w    = io::parse_inputs({f});
    auto text = io::emit(w);
    auto back = io::parse_text(text, "roundtrip.json");
    CHECK(back == w);
    CHECK(io::emit(back) == text);
  }
  // All at once, into a single collection.
  auto w = io::parse_inputs(files);
  CHECK(io::parse_text(io::emit(w)) == w);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", sample("e1_bundle.json")}).code == 0);
  CHECK(run({"verify", sample("e1_bundle.json"), sample("e1_sign_bundle.json")})
            .code
        == 1);
  CHECK(run({"verify", sample("dangling.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--format", "xml", "verify"}).code == 2);
  CHECK(run({"enumerate-actions", "--x", "Z3", "--b", "Z3"}).code == 2);
  CHECK(run({"enumerate-actions", "--x", "Nope", "--b", "Z2"}).code == 2);
  CHECK(run({"validate-action", sample("inversion_action.json")}).code == 0);
  CHECK(run({"check-recognizer", "--co", "--map", "p_trivial_z3",
             sample("p_trivial_z3.json")})
            .code
        == 1);
}

TEST_CASE("verify reports") {
  auto r = run({"verify", sample("e1_bundle.json"), sample("e1_sign_bundle.json")});
  auto j = io::json::parse(r.out);
  CHECK(j["schema"] == "sbp-1");
  CHECK(j["ok"] == false);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["schreier"] == false);
  CHECK(j["results"][1]["semibiproduct"] == false);

  auto t = run({"--format", "text", "verify", sample("e1_bundle.json"),
                sample("e1_sign_bundle.json")});
  CHECK(contains(t.out, "e1: semi-biproduct: yes, Schreier: no"));
  CHECK(contains(t.out, "k not homomorphism at (s,s)"));
}

TEST_CASE("enumeration and classification output") {
  auto r = run({"enumerate-actions", "--x", "L2", "--b", "L2"});
  REQUIRE(r.code == 0);
  auto s = last_line(r.out);
  CHECK(s["count"] == 8);
  CHECK(s["trivial_correction"] == 4);

  auto c = run({"classify", "--x", "Z2", "--b", "Z2"});
  CHECK(last_line(c.out)["classes"] == 2);
  auto f = run({"classify", "--free", "--x", "Z3", "--b", "Z2"});
  CHECK(last_line(f.out)["classes"] == 3);

  auto rel = run({"enumerate-relations", "--x", "L2", "--b", "L2"});
  auto rs  = last_line(rel.out);
  CHECK(rs["count"] == 32);
  CHECK(rs["accepted"] == 4);

  // Output does not depend on the worker count.
  CHECK(run({"--jobs", "1", "enumerate-actions", "--x", "M3.4", "--b", "L2"}).out
        == run({"--jobs", "4", "enumerate-actions", "--x", "M3.4", "--b", "L2"})
               .out);
}

TEST_CASE("worked examples") {
  auto e1 = run({"--format", "text", "examples", "paper-e1"});
  CHECK(e1.code == 0);
  CHECK(contains(e1.out, "semi-biproduct: yes, Schreier: no"));
  CHECK(contains(e1.out, "s^t=0 but (s,t)∉R"));

  auto reject = run({"examples", "paper-e1-reject"});
  CHECK(reject.code == 0);

  auto nat = run({"--format", "text", "--bound", "10", "examples", "paper-nat"});
  CHECK(nat.code == 0);
  CHECK(contains(nat.out, "Schreier: yes, q,s homomorphisms: yes"));

  for (auto name : {"s3", "klein", "z4", "corecognizer-z3"}) {
    INFO(name);
    auto r = run({"examples", name});
    CHECK(r.code == 0);
    CHECK_NOTHROW(io::json::parse(r.out));
  }
  CHECK(run({"examples", "nope"}).code == 2);
}
