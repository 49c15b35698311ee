#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "esgame/io.hpp"
#include "esgame/samples.hpp"
#include "support.hpp"

using namespace esgame;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "esgame-io-tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream out(path);
  out << text;
  return path.string();
}

}  // namespace

TEST_CASE("game documents round-trip through their canonical form") {
  Document doc = esp_document(samples::vending_game(), "vend");
  std::string text = serialize(doc);
  Document back = parse_document(text);
  REQUIRE(back.kind == Document::Kind::esp);
  CHECK(back.name == "vend");
  CHECK(same_esp(*back.esp, *doc.esp));
  CHECK(serialize(back) == text);
}

TEST_CASE("strategy documents round-trip with their games") {
  Document doc = prestrategy_document(samples::negation(), "neg");
  CHECK(doc.game_split);
  std::string text = serialize(doc);
  Document back = parse_document(text);
  REQUIRE(back.kind == Document::Kind::prestrategy);
  PreStrategy s = document_prestrategy(back);
  PreStrategy orig = samples::negation();
  CHECK(same_esp(*s.inner, *orig.inner));
  CHECK(same_esp(*s.game, *orig.game));
  CHECK(s.label.to == orig.label.to);
  CHECK(serialize(back) == text);
}

TEST_CASE("serialization is canonical regardless of input order") {
  std::string scrambled = R"({
  "kind": "esp",
  "name": "g",
  "events": [{"id": "z", "pol": "+"}, {"id": "a", "pol": "-"}],
  "prec": [["a", "z"]],
  "conflicts": []
})";
  Document doc = parse_document(scrambled);
  std::string text = serialize(doc);
  CHECK(text.find("\"a\"") < text.find("\"z\""));
  CHECK(serialize(parse_document(text)) == text);
}

TEST_CASE("unknown fields are rejected everywhere") {
  CHECK_THROWS_AS(parse_document(R"({"kind": "esp", "name": "g",
    "events": [], "prec": [], "conflicts": [], "extra": 1})"),
                  InputError);
  CHECK_THROWS_AS(parse_document(R"({"kind": "esp", "name": "g",
    "events": [{"id": "a", "pol": "+", "note": "hm"}],
    "prec": [], "conflicts": []})"),
                  InputError);
}

TEST_CASE("malformed input is reported with its position") {
  try {
    parse_document("{\n  \"kind\": \"esp\",\n  oops\n}");
    FAIL("expected a syntax error");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
  }
}

TEST_CASE("semantic validation failures name the problem") {
  CHECK_THROWS_AS(parse_document(R"({"kind": "esp", "name": "g",
    "events": [{"id": "a", "pol": "x"}], "prec": [], "conflicts": []})"),
                  InputError);
  CHECK_THROWS_AS(parse_document(R"({"kind": "esp", "name": "g",
    "events": [{"id": "a", "pol": "+"}, {"id": "a", "pol": "+"}],
    "prec": [], "conflicts": []})"),
                  InputError);
  CHECK_THROWS_AS(parse_document(R"({"kind": "esp", "name": "g",
    "events": [{"id": "a", "pol": "+"}], "prec": [["a", "b"]],
    "conflicts": []})"),
                  InputError);
}

TEST_CASE("map endpoints can live in separate files") {
  std::string game_text = serialize(esp_document(samples::y_game(), "y"));
  write_temp("side.game", game_text);
  std::string map_text = R"({
  "kind": "map",
  "name": "loop",
  "source": "side.game",
  "target": "side.game",
  "pairs": [["o", "o"]]
})";
  std::string path = write_temp("loop.map", map_text);
  Document doc = load_document(path);
  REQUIRE(doc.kind == Document::Kind::map);
  CHECK(doc.map.total());
  CHECK(same_esp(*doc.source, *samples::y_game()));
  // Endpoints are serialized inline, never as paths.
  CHECK(serialize(doc).find("side.game") == std::string::npos);
}

TEST_CASE("documents written by hand can carry partial maps") {
  Document doc = parse_document(R"({
  "kind": "map",
  "name": "half",
  "source": {"kind": "esp", "name": "",
             "events": [{"id": "a", "pol": "+"}, {"id": "b", "pol": "+"}],
             "prec": [], "conflicts": []},
  "target": {"kind": "esp", "name": "",
             "events": [{"id": "x", "pol": "+"}],
             "prec": [], "conflicts": []},
  "pairs": [["a", "x"]]
})");
  CHECK(!doc.map.total());
  CHECK(doc.map.defined(doc.source->es->index_of("a")));
  CHECK(!doc.map.defined(doc.source->es->index_of("b")));
}

TEST_CASE("dot export sketches the structure") {
  std::string dot = dot_export(*samples::nondet_coin());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("coin") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);

  std::string strat = dot_export(samples::vending_strategy());
  CHECK(strat.find("digraph") != std::string::npos);
  CHECK(strat.find("coffee") != std::string::npos);
}
