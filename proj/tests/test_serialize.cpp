#include <doctest.h>

#include <cmath>

#include "turan/serialize.hpp"

using namespace turan;

TEST_CASE("density report JSON carries num/den rationals") {
  DensityReport rep = two_density(Graph::complete(4));
  std::string j = density_json(rep, is_two_balanced(Graph::complete(4)));
  CHECK(j.find("\"m2\":\"5/2\"") != std::string::npos);
  CHECK(j.find("\"two_balanced\":true") != std::string::npos);
}

TEST_CASE("covering JSON schema") {
  Covering f = build_special_covering(Graph::complete(3), Graph::complete(3));
  std::string j = covering_json(f);
  for (const char* key :
       {"\"universe_size\":6", "\"copies\":[[[", "\"target\":\"Bw\"",
        "\"union\":", "\"density\":\"2/1\""})
    CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("resolution JSON is ordered as computed") {
  Resolution res = t_resolution(Graph::complete(3), Graph::complete(4));
  std::string j = resolution_json(res);
  CHECK(j.find("\"base_exponent\":\"1/1\"") != std::string::npos);
  CHECK(j.find("\"densities\":[\"15/7\"]") != std::string::npos);
  CHECK(j.find("\"threshold_exponents\":[\"7/15\"]") != std::string::npos);
  CHECK(j.find("\"fe_index\":0") != std::string::npos);
}

TEST_CASE("scan CSV header is exactly the documented column list") {
  ScanResult scan;
  scan.n = 5;
  std::string csv = scan_csv(scan);
  CHECK(csv ==
        "exponent,p,trials,mean_ex,std_ex,normalized_pi,mean_NT,threshold_markers\n");
}

TEST_CASE("p values format with 12 significant digits") {
  CHECK(format_p(1.0) == "1");
  CHECK(format_p(0.1) == "0.1");
  CHECK(format_p(1.0 / 3.0) == "0.333333333333");
  CHECK(format_p(std::pow(10.0, -0.5)) == "0.316227766017");
}

TEST_CASE("scan rows serialize thresholds and bound-only markers") {
  ScanResult scan;
  scan.n = 8;
  scan.have_resolution = true;
  scan.base_exponent = Rational(1);
  scan.threshold_exponents = {Rational(7, 15)};
  ScanRow row;
  row.exponent = Rational(1, 2);
  row.p = 0.25;
  row.trials = 4;
  row.bound_only_trials = 2;
  scan.rows.push_back(row);
  std::string csv = scan_csv(scan);
  CHECK(csv.find("bound-only:2;p0=1/1;p1=7/15") != std::string::npos);
  std::string j = scan_json(scan);
  CHECK(j.find("\"bound_only\":2") != std::string::npos);
}
