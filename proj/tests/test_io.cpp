#include <gtest/gtest.h>

#include <sstream>

#include "hftlab/errors.hpp"
#include "hftlab/hft.hpp"
#include "hftlab/io.hpp"
#include "hftlab/profiles.hpp"
#include "hftlab/serialize.hpp"

using namespace hftlab;

TEST(Csv, SampledRoundTripIsBitExact) {
  const auto g = QuadratureGrid::truncated_uniform(5.0, 4, 8);
  const auto f = SampledHalfLineFunction::sample(g, [](double s) { return complex(std::exp(-s), s / 3.0); });
  std::ostringstream os;
  write_csv(os, f);
  EXPECT_EQ(os.str().substr(0, 8), "s,re,im\n");
  std::istringstream is(os.str());
  const auto back = read_sampled_csv(is, g);
  EXPECT_EQ(back.values(), f.values());
}

TEST(Csv, LineSampleCarriesY) {
  const auto f = SampledHalfLineFunction::sample(default_source_grid(), profile_by_name("exp").f, 0.5);
  const auto phi = sample_line(f, 0.25, uniform_nodes(-1, 1, 21));
  std::ostringstream os;
  write_csv(os, phi);
  EXPECT_EQ(os.str().substr(0, 20), "# y=0.25 hbar=0.5\nx,");
  std::istringstream is(os.str());
  const auto back = read_line_csv(is);
  EXPECT_EQ(back.y(), 0.25);
  EXPECT_EQ(back.hbar(), 0.5);
  EXPECT_EQ(back.values(), phi.values());
}

TEST(Csv, Malformed) {
  const auto g = QuadratureGrid::truncated_uniform(1.0, 1, 2);
  std::istringstream wrong_header("x,re,im\n");
  EXPECT_THROW(read_sampled_csv(wrong_header, g), InputError);
  std::istringstream bad_number("s,re,im\n0.2,abc,0\n0.8,1,0\n");
  EXPECT_THROW(read_sampled_csv(bad_number, g), InputError);
  std::istringstream short_rows("s,re,im\n0.2,1,0\n");
  EXPECT_THROW(read_sampled_csv(short_rows, g), InputError);
  std::istringstream no_y("x,re,im\n0,1,0\n1,1,0\n");
  EXPECT_THROW(read_line_csv(no_y), InputError);
}

TEST(Csv, Eigenvalues) {
  std::ostringstream os;
  write_eigenvalues_csv(os, {0.5, 2.0});
  EXPECT_EQ(os.str(), "k,lambda\n1,0.5\n2,2\n");
}

TEST(Csv, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Json, DomainReportKeys) {
  const auto f = SampledHalfLineFunction::sample(default_source_grid(), profile_by_name("sexp").f);
  const auto j = to_json(domain_membership(f));
  EXPECT_TRUE(j.at("in_L2").get<bool>());
  EXPECT_TRUE(j.at("abs_cont").get<bool>());
  EXPECT_EQ(j.at("f0").size(), 2u);
  EXPECT_EQ(j.at("domains"), json::array({"D(S)", "D(Z)", "D(Z_dagger)"}));
}

TEST(Json, ReportEnvelope) {
  const auto j = make_report("deficiency", to_json(deficiency_indices(DeficiencyOperator::Z, 1.0, default_windows())));
  EXPECT_EQ(j.begin().key(), "schema");
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("d_plus"), 0);
  EXPECT_EQ(j.at("d_minus"), 1);
  EXPECT_EQ(dump(j).back(), '\n');
}

TEST(Json, SpectrumReport) {
  const auto j = to_json(spectrum_report(SpectrumOperator::S));
  EXPECT_TRUE(j.at("all_pass").get<bool>());
  EXPECT_FALSE(j.at("numerical_evidence").empty());
}
