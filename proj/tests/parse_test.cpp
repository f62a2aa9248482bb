// Copyright 2026 The Bergman Kernels Authors
// SPDX-License-Identifier: Apache-2.0

#include <limits>

#include <gtest/gtest.h>

#include "bergman/complex_parse.hpp"
#include "bergman/json_format.hpp"
#include "test_util.hpp"

namespace bergman {
namespace {

TEST(ParseComplex, Grammar) {
  EXPECT_EQ(parse_complex("0"), cplx(0.0, 0.0));
  EXPECT_EQ(parse_complex("-1.5"), cplx(-1.5, 0.0));
  EXPECT_EQ(parse_complex("2i"), cplx(0.0, 2.0));
  EXPECT_EQ(parse_complex("-0.25i"), cplx(0.0, -0.25));
  EXPECT_EQ(parse_complex("0.1+0.2i"), cplx(0.1, 0.2));
  EXPECT_EQ(parse_complex("0.1-0.2i"), cplx(0.1, -0.2));
  EXPECT_EQ(parse_complex("1e-3+2.5E2i"), cplx(1e-3, 250.0));
  EXPECT_EQ(parse_complex("+3"), cplx(3.0, 0.0));
}

TEST(ParseComplex, Rejects) {
  for (const char* bad : {"", "i", "+i", "1+", "1+2", "1 + 2i", " 1", "1i2", "inf", "nan", "1+nani",
                          "0x10", "1..2", "1,2", "--1", "1+-2i"}) {
    SCOPED_TRACE(bad);
    EXPECT_THROW_CODE(parse_complex(bad), ErrorCode::kParseError);
  }
}

TEST(ParsePoint, Lists) {
  EXPECT_EQ(parse_point("0.5,0.1+0.2i,-0.3i"), (ComplexPoint{0.5, {0.1, 0.2}, {0.0, -0.3}}));
  EXPECT_EQ(parse_point("0").size(), 1u);
  for (const char* bad : {"", ",", "0,", ",0", "0,,0", "0, 1"}) {
    SCOPED_TRACE(bad);
    EXPECT_THROW_CODE(parse_point(bad), ErrorCode::kParseError);
  }
}

TEST(ParseMultiIndex, Lists) {
  EXPECT_EQ(parse_multi_index("-1,0,2"), (MultiIndex{-1, 0, 2}));
  for (const char* bad : {"", "1.5", "a", "1,,2", "99999999999999999999"}) {
    SCOPED_TRACE(bad);
    EXPECT_THROW_CODE(parse_multi_index(bad), ErrorCode::kParseError);
  }
}

TEST(ParseDomain, Names) {
  EXPECT_EQ(parse_domain("D3"), DomainId::d3());
  EXPECT_EQ(parse_domain("ball4"), DomainId::ball(4));
  for (const char* bad : {"d5", "ball", "ball0", "ballx", ""}) {
    SCOPED_TRACE(bad);
    EXPECT_THROW_CODE(parse_domain(bad), ErrorCode::kParseError);
  }
}

TEST(JsonFormat, CanonicalText) {
  Json j;
  j["b"] = 0.1;
  j["a"] = complex_json(1.0, -2.5);
  j["c"] = std::numeric_limits<double>::quiet_NaN();
  j["d"] = Json::array({complex_json(0, 1), complex_json(2, 3)});
  j["e"] = 7;
  EXPECT_EQ(dump_json(j),
            "{\n"
            "  \"a\": [1, -2.5],\n"
            "  \"b\": 0.10000000000000001,\n"
            "  \"c\": null,\n"
            "  \"d\": [[0, 1], [2, 3]],\n"
            "  \"e\": 7\n"
            "}\n");
  // Round trip keeps every bit.
  const double x = 0.1 + 0.2;
  EXPECT_EQ(Json::parse(dump_json(Json{{"x", x}}))["x"].get<double>(), x);
}

}  // namespace
}  // namespace bergman
