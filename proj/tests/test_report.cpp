#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hpsphere/report.hpp"

using namespace hpsphere;

TEST_CASE("classification document rows and csv column order") {
  const ReportDocument doc = classification_document(1);
  REQUIRE(doc.families.size() == 3);
  CHECK(doc.families[0].kind == "f-lambda");
  CHECK(doc.families[1].kind == "f-one");
  CHECK(doc.families[2].kind == "f-even-pair");
  CHECK_FALSE(doc.families[0].K_numeric_mean.has_value());

  const std::string csv = to_csv(doc);
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "kind,params,K_closed,K_numeric_mean,K_numeric_std,minimality_residual,"
        "conformality_residual,pass");
  std::string row;
  std::getline(is, row);
  CHECK(row == "f-lambda,lambda=3,1.33333333333,,,,,true");
  std::getline(is, row);
  CHECK(row == "f-one,,1.33333333333,,,,,true");
  std::getline(is, row);
  CHECK(row == "f-even-pair,m1=1 m2=1,4,,,,,true");
}

TEST_CASE("json round trip") {
  VerifyOptions options;
  options.samples = 4;
  const VerificationReport vr =
      verify_family(make_family(FamilyKind::kFOne, 2), options);
  ReportDocument doc = verification_document({vr});
  doc.checks.push_back(RepCheck{"unitarity", 3, 2.5e-15, 1e-10, true});

  const std::string text = to_json(doc);
  const ReportDocument back = from_json(text);
  CHECK(back.schema_version == doc.schema_version);
  CHECK(back.command == doc.command);
  REQUIRE(back.families.size() == doc.families.size());
  for (size_t i = 0; i < doc.families.size(); ++i) {
    CHECK(back.families[i].kind == doc.families[i].kind);
    CHECK(back.families[i].params == doc.families[i].params);
    CHECK(back.families[i].pass == doc.families[i].pass);
  }
  REQUIRE(back.checks.size() == 1);
  CHECK(back.checks[0].name == "unitarity");
  CHECK(back.checks[0].n_max == 3);

  // serialize(parse(serialize(doc))) is a fixed point
  CHECK(to_json(back) == text);
}

TEST_CASE("numbers use 12 significant digits") {
  CHECK(format_number(4.0 / 13.0) == "0.307692307692");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(2.5e-15) == "2.5e-15");
}

TEST_CASE("markdown table") {
  const std::string md = to_markdown(classification_document(2));
  CHECK(md.find("| kind |") == 0);
  CHECK(md.find("| f-odd-pair | m1=1 m2=2 | 1 |") != std::string::npos);
}

TEST_CASE("orbit spec parsing") {
  const std::string good = R"({
    "n": 4, "lambda": 3,
    "blocks": [{"m": 2, "c_re": 0.7071067811865476, "c_im": 0.0},
               {"m": 3, "c_re": 0.7071067811865476, "c_im": 0.0}]
  })";
  std::string warn;
  const BasePoint z = load_orbit_spec(good, &warn);
  CHECK(warn.empty());
  CHECK(z.rep().blocks() == std::vector<int>{2, 3});
  CHECK(z.weight() == 3);

  // normalization warning
  const std::string unnormalized = R"({
    "n": 1, "lambda": 3, "blocks": [{"m": 2, "c_re": 2.0, "c_im": 0.0}]
  })";
  const BasePoint z2 = load_orbit_spec(unnormalized, &warn);
  CHECK_FALSE(warn.empty());
  CHECK(z2.vector().norm() == doctest::Approx(1.0).epsilon(1e-14));

  // unknown fields are rejected at both levels
  CHECK_THROWS_AS(load_orbit_spec(R"({"n":1,"lambda":3,"blocks":[],"extra":1})", nullptr),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      load_orbit_spec(R"({"n":1,"lambda":3,"blocks":[{"m":2,"c_re":1,"c_im":0,"phase":0}]})",
                      nullptr),
      std::invalid_argument);
  // block sizes must sum to n+1
  CHECK_THROWS_AS(
      load_orbit_spec(R"({"n":3,"lambda":3,"blocks":[{"m":2,"c_re":1,"c_im":0}]})", nullptr),
      std::invalid_argument);
  // invalid JSON
  CHECK_THROWS_AS(load_orbit_spec("{", nullptr), std::invalid_argument);
}

TEST_CASE("rep-test document render") {
  ReportDocument doc = reptest_document({RepCheck{"unitarity", 7, 3.1e-15, 1e-10, true},
                                         RepCheck{"drho-fd", 7, 4.2e-10, 1e-6, true}});
  const std::string csv = to_csv(doc);
  CHECK(csv.find("check,n_max,max_residual,tolerance,pass") == 0);
  CHECK(csv.find("unitarity,7,3.1e-15,1e-10,true") != std::string::npos);
  const ReportDocument back = from_json(to_json(doc));
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[1].name == "drho-fd");
}
