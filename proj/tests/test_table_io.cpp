#include "doctest.h"

#include <sstream>

#include "diairesis/table_io.hpp"

using namespace diairesis;

namespace {

PredicateTable from_csv(const std::string& text) {
  std::istringstream in(text);
  return load_items_csv(in);
}

PredicateTable from_json(const std::string& text) {
  std::istringstream in(text);
  return load_items_json(in);
}

}  // namespace

TEST_CASE("csv: header, rows, permissive cell spellings") {
  const auto t = from_csv(
      "id,swims,flies\n"
      "duck, 1 ,TRUE\n"
      "carp,true,0\n"
      "\n"
      "cat,false,False\n");
  CHECK(t.items() == std::vector<std::string>{"duck", "carp", "cat"});
  CHECK(t.predicates() == std::vector<std::string>{"swims", "flies"});
  CHECK(t.satisfies("duck", "flies"));
  CHECK(t.satisfies("carp", "swims"));
  CHECK_FALSE(t.satisfies("cat", "swims"));
  CHECK_FALSE(t.satisfies("cat", "flies"));
}

TEST_CASE("csv: malformed inputs") {
  CHECK_THROWS_AS(from_csv(""), MalformedInputError);
  CHECK_THROWS_AS(from_csv("id\nx\n"), MalformedInputError);  // no predicates
  CHECK_THROWS_AS(from_csv("name,p\nx,1\n"), MalformedInputError);
  CHECK_THROWS_AS(from_csv("id,p\n"), MalformedInputError);  // no rows
  CHECK_THROWS_AS(from_csv("id,p\nx,1\nx,0\n"), MalformedInputError);  // dup id
  CHECK_THROWS_AS(from_csv("id,p,p\nx,1,0\n"), MalformedInputError);   // dup pred
  CHECK_THROWS_AS(from_csv("id,p\nx,1,0\n"), MalformedInputError);     // arity
  CHECK_THROWS_AS(from_csv("id,p\nx,maybe\n"), MalformedInputError);   // cell
  CHECK_THROWS_AS(from_csv("id,p\n,1\n"), MalformedInputError);        // empty id
}

TEST_CASE("json: booleans, numbers and strings as cells") {
  const auto t = from_json(R"([
    {"id": "duck", "swims": true, "flies": 1},
    {"id": "cat", "swims": "0", "flies": "FALSE"}
  ])");
  CHECK(t.item_count() == 2);
  CHECK(t.predicate_count() == 2);
  CHECK(t.satisfies("duck", "swims"));
  CHECK(t.satisfies("duck", "flies"));
  CHECK_FALSE(t.satisfies("cat", "swims"));
  CHECK_FALSE(t.satisfies("cat", "flies"));
}

TEST_CASE("json: malformed inputs") {
  CHECK_THROWS_AS(from_json("not json"), MalformedInputError);
  CHECK_THROWS_AS(from_json("[]"), MalformedInputError);
  CHECK_THROWS_AS(from_json("{}"), MalformedInputError);
  CHECK_THROWS_AS(from_json(R"([{"id": "x"}])"), MalformedInputError);
  CHECK_THROWS_AS(from_json(R"([{"p": 1}])"), MalformedInputError);
  CHECK_THROWS_AS(from_json(R"([{"id": "x", "p": 2}])"), MalformedInputError);
  CHECK_THROWS_AS(from_json(R"([{"id": "x", "p": 1}, {"id": "y", "q": 1}])"),
                  MalformedInputError);
  CHECK_THROWS_AS(from_json(R"([{"id": "x", "p": 1}, {"id": "x", "p": 0}])"),
                  MalformedInputError);
}

TEST_CASE("csv and json forms of one table answer identically") {
  const auto a = from_csv(
      "id,on_land,unfeathered,biped\n"
      "man,1,1,1\n"
      "gull,0,0,1\n");
  const auto b = from_json(R"([
    {"id": "man", "on_land": 1, "unfeathered": 1, "biped": 1},
    {"id": "gull", "on_land": 0, "unfeathered": 0, "biped": 1}
  ])");
  CHECK(a.items() == b.items());
  for (const auto& id : a.items())
    for (const auto& p : a.predicates())
      CHECK(a.satisfies(id, p) == b.satisfies(id, p));
}

TEST_CASE("file loading reports missing files") {
  CHECK_THROWS_AS(load_items_file("/nonexistent/items.csv", ItemsFormat::csv),
                  MalformedInputError);
}
