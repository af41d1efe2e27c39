#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "udc/udc.h"

TEST_CASE("field handles") {
  udc_field* f = nullptr;
  REQUIRE(udc_field_parse("2^8/1,0,0,0,1,1,1,0,1", &f) == UDC_OK);
  CHECK(udc_field_order(f) == 256);
  char* text = nullptr;
  REQUIRE(udc_field_to_string(f, &text) == UDC_OK);
  CHECK(std::string(text) == "2^8/1,0,0,0,1,1,1,0,1");
  udc_string_free(text);
  std::uint64_t ord = 0;
  CHECK(udc_field_element_order(f, 2, &ord) == UDC_OK);
  CHECK(ord == 255);
  std::uint64_t inv = 0;
  CHECK(udc_field_inv(f, 0, &inv) == UDC_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(udc_last_error()) > 0);
  udc_field_free(f);

  CHECK(udc_field_parse("15", &f) == UDC_ERR_INVALID_ARGUMENT);
  CHECK(udc_field_parse("nope", &f) == UDC_ERR_PARSE);
  CHECK(udc_field_parse(nullptr, &f) == UDC_ERR_INVALID_ARGUMENT);

  REQUIRE(udc_field_parse("29", &f) == UDC_OK);
  std::uint64_t w = 0;
  CHECK(udc_field_find_element_of_order(f, 7, &w) == UDC_OK);
  CHECK(w == 7);
  std::uint64_t prod = 0;
  CHECK(udc_field_mul(f, 7, 25, &prod) == UDC_OK);
  CHECK(prod == 7 * 25 % 29);
  udc_field_free(f);
}

TEST_CASE("encode and decode through handles") {
  udc_field* f = nullptr;
  REQUIRE(udc_field_parse("29", &f) == UDC_OK);
  udc_code* code = nullptr;
  REQUIRE(udc_code_create(f, 7, 3, 0, 1, UDC_KIND_FOURIER, &code) == UDC_OK);
  udc_field_free(f);  // the code keeps its own reference

  udc_code_info info{};
  REQUIRE(udc_code_info_get(code, &info) == UDC_OK);
  CHECK(info.n == 7);
  CHECK(info.t == 2);
  CHECK(info.mds == 1);
  CHECK(info.decodable == 1);

  char* desc = nullptr;
  REQUIRE(udc_code_descriptor(code, &desc) == UDC_OK);
  CHECK(std::string(desc) == "field=29;n=7;start=0;step=1;r=3;kind=fourier");
  udc_string_free(desc);

  const std::uint64_t msg[3] = {5, 11, 28};
  std::uint64_t word[7];
  REQUIRE(udc_code_encode(code, msg, 3, word, 7) == UDC_OK);
  word[0] = (word[0] + 1) % 29;
  word[4] = (word[4] + 2) % 29;
  std::uint64_t corrected[7], err[7], out[3];
  udc_decode_status st;
  std::size_t count = 0;
  REQUIRE(udc_code_decode(code, word, 7, corrected, err, out, &st, &count) == UDC_OK);
  CHECK(st == UDC_DECODE_CORRECTED);
  CHECK(count == 2);
  const std::uint64_t expect_err[7] = {1, 0, 0, 0, 2, 0, 0};
  CHECK(std::memcmp(err, expect_err, sizeof err) == 0);
  CHECK(std::memcmp(out, msg, sizeof out) == 0);

  std::size_t d = 0;
  CHECK(udc_code_min_distance(code, &d) == UDC_OK);
  CHECK(d == 5);

  CHECK(udc_code_encode(code, msg, 2, word, 7) == UDC_ERR_INVALID_ARGUMENT);
  CHECK(udc_code_decode(code, word, 6, corrected, nullptr, nullptr, &st, nullptr) == UDC_ERR_INVALID_ARGUMENT);
  udc_code_free(code);

  CHECK(udc_code_parse("field=13;n=12;start=0;step=2;r=4;kind=fourier", &code) == UDC_OK);
  REQUIRE(udc_code_info_get(code, &info) == UDC_OK);
  CHECK(info.decodable == 0);
  std::uint64_t zeros[12] = {};
  CHECK(udc_code_decode(code, zeros, 12, zeros, nullptr, nullptr, &st, nullptr) == UDC_ERR_NOT_DECODABLE);
  udc_code_free(code);
  CHECK(udc_code_parse("field=13;n=12", &code) == UDC_ERR_PARSE);
}

TEST_CASE("files, reports and selftest") {
  const auto dir = std::filesystem::temp_directory_path() / "udc_capi_test";
  std::filesystem::create_directories(dir);
  const std::string in = (dir / "in.bin").string(), mid = (dir / "c.udc").string(), back = (dir / "out.bin").string();
  {
    std::ofstream o(in, std::ios::binary);
    for (int i = 0; i < 5000; ++i) o.put(static_cast<char>(i * 37));
  }
  const char* desc = "field=257;n=16;start=0;step=1;r=10;kind=fourier";
  REQUIRE(udc_encode_file(desc, in.c_str(), mid.c_str()) == UDC_OK);
  std::size_t fixed = 9, failed = 9;
  REQUIRE(udc_decode_file(mid.c_str(), back.c_str(), 0, &fixed, &failed) == UDC_OK);
  CHECK(fixed == 0);
  CHECK(failed == 0);
  std::ifstream a(in, std::ios::binary), b(back, std::ios::binary);
  CHECK(std::string(std::istreambuf_iterator<char>(a), {}) == std::string(std::istreambuf_iterator<char>(b), {}));
  CHECK(udc_decode_file((dir / "missing").string().c_str(), back.c_str(), 0, nullptr, nullptr) == UDC_ERR_IO);
  CHECK(udc_decode_file(in.c_str(), back.c_str(), 0, nullptr, nullptr) == UDC_ERR_FORMAT);
  std::filesystem::remove_all(dir);

  udc_code* code = nullptr;
  REQUIRE(udc_code_parse(desc, &code) == UDC_OK);
  char* rep = nullptr;
  REQUIRE(udc_simulate(code, 0.05, 100, 3, UDC_FORMAT_JSON, &rep) == UDC_OK);
  CHECK(std::string(rep).find("\"chernoff_upper\"") != std::string::npos);
  udc_string_free(rep);
  CHECK(udc_simulate(code, 1.5, 100, 3, UDC_FORMAT_TEXT, &rep) == UDC_ERR_INVALID_ARGUMENT);
  udc_code_free(code);

  char* plan = nullptr;
  REQUIRE(udc_design("3/4", 50, 0, UDC_FORMAT_JSON, &plan) == UDC_OK);
  CHECK(std::string(plan).find("\"n\": 400") != std::string::npos);
  udc_string_free(plan);
  CHECK(udc_design("5/4", 50, 0, UDC_FORMAT_TEXT, &plan) == UDC_ERR_INVALID_ARGUMENT);

  char* st = nullptr;
  CHECK(udc_selftest(&st) == UDC_OK);
  CHECK(std::string(st).find("FAIL") == std::string::npos);
  udc_string_free(st);
  CHECK(std::string(udc_version()) == "1.0.0");
}
