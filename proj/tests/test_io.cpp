#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace walkup;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_complex(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseError(0, 0, "");
}

}  // namespace

TEST(FacetList, CommentsAndBlankLines) {
  auto x = parse_facet_list("# header\n\n1 2\n  # indented comment\n2 3\n\t3   1\n\n");
  EXPECT_EQ(x, oracle::make({{"1", "2"}, {"2", "3"}, {"1", "3"}}));
}

TEST(FacetList, NoTrailingNewline) {
  EXPECT_EQ(parse_facet_list("a b\nb c\nc a").num_facets(), 3u);
}

TEST(FacetList, ErrorPositions) {
  auto e = parse_failure("1 2 3\n1 2\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 1u);

  e = parse_failure("1 2 3\n4  5 4\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 6u);

  e = parse_failure("1 2\n# c\n2 1\n");
  EXPECT_EQ(e.line(), 3u);

  e = parse_failure("1 2\n3 a#b\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_failure("# only a comment\n\n");
  EXPECT_EQ(e.code(), Errc::ParseError);
}

TEST(FacetList, CanonicalRoundTrip) {
  auto m = build_m4_15();
  const std::string text = format_facet_list(m);
  EXPECT_EQ(parse_facet_list(text), m);
  EXPECT_EQ(format_facet_list(parse_facet_list(text)), text);
  const auto facets = oracle::facet_set(m);
  std::string first;
  for (const auto& v : *facets.begin()) first += (first.empty() ? "" : " ") + v;
  EXPECT_EQ(text.substr(0, text.find('\n')), first);
}

TEST(FacetList, GoldenFixtureParses) {
  auto gold = oracle::load("m4_15_golden.facets");
  EXPECT_EQ(gold.num_facets(), 96u);
  EXPECT_EQ(gold, build_m4_15());
}

TEST(Json, RoundTripAndDetection) {
  auto x = oracle::torus7();
  const std::string doc = format_facets_json(x);
  EXPECT_EQ(parse_facets_json(doc), x);
  EXPECT_EQ(parse_complex("  \n" + doc), x);
}

TEST(Json, Errors) {
  auto e = parse_failure("{\"facets\": [[\"a\", \"b\"],\n [\"b\" \"c\"]]}");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(parse_failure("{\"faces\": []}").code(), Errc::ParseError);
  EXPECT_EQ(parse_failure("{\"facets\": [[\"a\", 1]]}").code(), Errc::ParseError);
  EXPECT_EQ(parse_failure("{\"facets\": [[\"a\", \"b\"], [\"a\"]]}").code(), Errc::ParseError);
}

TEST(Ledger, RoundTrip) {
  HandleLedger ledger;
  ledger.base = build_s4_30();
  for (const auto& psi : m4_15_identifications())
    ledger.handles.push_back({psi.source_facet(), psi.target_facet(), psi});
  const std::string doc = format_ledger(ledger);
  HandleLedger back = parse_ledger(doc);
  EXPECT_EQ(back.base, ledger.base);
  EXPECT_EQ(back.handles, ledger.handles);
  EXPECT_EQ(replay(back), build_m4_15());
}

TEST(Ledger, Malformed) {
  EXPECT_THROW(parse_ledger("{}"), ParseError);
  EXPECT_THROW(parse_ledger("{\"format\": \"walkup-handle-ledger\", \"version\": 2}"), ParseError);
  EXPECT_THROW(parse_ledger("not json"), ParseError);
  EXPECT_THROW(parse_ledger(R"({"format": "walkup-handle-ledger", "version": 1,
      "base": [["1","2"],["2","3"],["1","3"]],
      "handles": [{"sigma1": ["1"], "sigma2": ["9"], "pairs": [["1","2"]]}]})"),
               ParseError);
}

TEST(Rng, ReferenceSequence) {
  // First outputs of xorshift64* from seed 1, computed by hand from the recurrence.
  Xorshift64Star rng(1);
  std::uint64_t x = 1;
  for (int i = 0; i < 5; ++i) {
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    EXPECT_EQ(rng.next(), x * 0x2545F4914F6CDD1DULL);
  }
  Xorshift64Star zero(0), golden(0x9E3779B97F4A7C15ULL);
  EXPECT_EQ(zero.next(), golden.next());
  Xorshift64Star r(42);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.uniform(7), 7u);
}
