#include <gtest/gtest.h>

#include "liehodge/commands.hpp"

using namespace liehodge;

namespace {

CommandOptions with_threads(unsigned t, bool verify = false) {
  CommandOptions o;
  o.threads = t;
  o.verify = verify;
  return o;
}

ReportDocument sample() {
  return {"demo",
          {{"group", std::string("E6")}, {"bound", std::int64_t{26}}},
          {{"Rows", "a table", {"ell", "h", "note"}, {{std::int64_t{2}, std::vector<std::int64_t>{6, 15, 6}, std::string("a,b")}}},
           {"Empty", "nothing", {"x"}, {}}}};
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  const auto doc = sample();
  EXPECT_EQ(from_json(to_json(doc)), doc);
  EXPECT_EQ(from_json(nlohmann::ordered_json::parse(render(doc, Format::json))), doc);
}

TEST(Report, JsonSchemaKeys) {
  const auto j = to_json(sample());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "params", "blocks"}));
  keys.clear();
  for (const auto& [k, v] : j["blocks"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"title", "paper_anchor", "columns", "rows"}));
  EXPECT_TRUE(j["blocks"][0]["rows"][0][0].is_number_integer());
}

TEST(Report, FromJsonRejectsMalformedDocuments) {
  auto j = to_json(sample());
  j["blocks"][0]["rows"][0].push_back(1);
  EXPECT_THROW(from_json(j), UsageError);
  auto k = to_json(sample());
  k.erase("params");
  EXPECT_THROW(from_json(k), UsageError);
  auto f = to_json(sample());
  f["blocks"][0]["rows"][0][0] = 1.5;
  EXPECT_THROW(from_json(f), UsageError);
}

TEST(Report, CsvLayout) {
  const auto csv = render(sample(), Format::csv);
  EXPECT_EQ(csv, "# Rows\nell,h,note\n2,6 15 6,\"a,b\"\n\n# Empty\nx\n");
}

TEST(Report, TextLayout) {
  const auto text = render(sample(), Format::text);
  EXPECT_NE(text.find("demo  group=E6  bound=26"), std::string::npos);
  EXPECT_NE(text.find("== Rows ==  [a table]"), std::string::npos);
  EXPECT_NE(text.find("2    6 15 6  a,b"), std::string::npos);
}

TEST(Report, ParseFormat) {
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Commands, TablesByteIdenticalAcrossThreads) {
  for (auto group : {ExceptionalGroup::E6, ExceptionalGroup::E7}) {
    const auto ref = render(cmd_tables(group, with_threads(1)), Format::json);
    for (unsigned t : {4u, 8u}) EXPECT_EQ(render(cmd_tables(group, with_threads(t)), Format::json), ref);
  }
}

TEST(Commands, VerifyDoesNotChangeOutput) {
  const auto e6 = ExceptionalGroup::E6;
  EXPECT_EQ(cmd_tables(e6, with_threads(2, true)), cmd_tables(e6, with_threads(2)));
  EXPECT_EQ(cmd_adjoint_grading(e6, with_threads(1, true)), cmd_adjoint_grading(e6, with_threads(1)));
  for (auto k : {SquareKind::full, SquareKind::sym, SquareKind::alt})
    EXPECT_EQ(cmd_tensor_square(e6, k, with_threads(1, true)), cmd_tensor_square(e6, k, with_threads(1)));
  EXPECT_EQ(cmd_constraints(e6, true, with_threads(1, true)), cmd_constraints(e6, true, with_threads(1)));
  EXPECT_EQ(cmd_surface_ledger({}, with_threads(1, true)), cmd_surface_ledger({}, with_threads(1)));
}

TEST(Commands, E6TablesContent) {
  const auto doc = cmd_tables(ExceptionalGroup::E6, with_threads(1));
  ASSERT_EQ(doc.blocks.size(), 2u);
  const auto& rows = doc.blocks[0].rows;
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(std::get<std::vector<std::int64_t>>(rows[0][1]), (std::vector<std::int64_t>{6, 15, 6}));
  EXPECT_EQ(std::get<std::int64_t>(rows[0][3]), 1);
  EXPECT_EQ(std::get<std::vector<std::int64_t>>(rows[0][4]), (std::vector<std::int64_t>{2, 4, 4, 6, 4, 2}));
}

TEST(Commands, AdjointGradingContent) {
  const auto doc = cmd_adjoint_grading(ExceptionalGroup::E6, with_threads(1));
  const auto& totals = doc.blocks.back().rows.at(0);
  EXPECT_EQ(std::get<std::vector<std::int64_t>>(totals[0]), (std::vector<std::int64_t>{1, 20, 36, 20, 1}));
  EXPECT_EQ(std::get<std::int64_t>(totals[2]), 78);
}

TEST(Commands, SquareKinds) {
  EXPECT_EQ(parse_square_kind("alt"), SquareKind::alt);
  EXPECT_THROW(parse_square_kind("wedge"), UsageError);
  const auto doc = cmd_tensor_square(ExceptionalGroup::E7, SquareKind::alt, with_threads(1));
  EXPECT_EQ(doc.blocks.front().rows.size(), 2u);
}

TEST(Commands, SurfaceLedgerRejectsNoetherViolation) {
  SurfaceInputs in;
  in.c2 = 80;
  EXPECT_THROW(cmd_surface_ledger(in, with_threads(1)), InconsistentInputError);
}
