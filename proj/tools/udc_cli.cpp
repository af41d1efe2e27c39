// udc: design, build, and exercise unit-derived codes from the shell.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "udc/udc.h"

namespace {

int report(udc_status s) {
  if (s != UDC_OK) std::cerr << "udc: " << udc_last_error() << "\n";
  return static_cast<int>(s);
}

int print_owned(udc_status s, char* text) {
  if (s == UDC_OK && text) std::cout << text;
  if (text) udc_string_free(text);
  return report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit-derived MDS codes: design, encode, decode, simulate"};
  app.require_subcommand(1);

  std::string rate;
  std::size_t errors = 0;
  bool prime_only = false;
  bool json = false;
  auto* design = app.add_subcommand("design", "Plan a code for a rate and error budget");
  design->add_option("--rate", rate, "Rate as A/B or a decimal")->required();
  design->add_option("--errors", errors, "Errors to correct per block")->required()->check(CLI::PositiveNumber);
  design->add_flag("--prime-field-only", prime_only, "List only prime fields GF(p) with p = 1 mod n");
  design->add_flag("--json", json, "Machine-readable output");

  std::string field;
  std::size_t n = 0, r = 0, start = 0, step = 1;
  std::string kind = "fourier";
  bool verify = false;
  auto* make = app.add_subcommand("make-code", "Build a code and report its descriptor and MDS verdict");
  make->add_option("--field", field, "Field spec: p or p^s/c_s,...,c_0")->required();
  make->add_option("--n", n, "Length")->required();
  make->add_option("--r", r, "Dimension")->required();
  make->add_option("--start", start, "First selected row");
  make->add_option("--step", step, "Row step");
  make->add_option("--kind", kind, "fourier or vandermonde")->check(CLI::IsMember({"fourier", "vandermonde"}));
  make->add_flag("--verify", verify, "Measure the minimum distance by brute force");

  std::string code_desc, in_path, out_path;
  auto* enc = app.add_subcommand("encode", "Encode a file into a container");
  enc->add_option("--code", code_desc, "Code descriptor")->required();
  enc->add_option("--in", in_path, "Input file")->required();
  enc->add_option("--out", out_path, "Output container")->required();

  bool best_effort = false;
  auto* dec = app.add_subcommand("decode", "Decode a container back to the original bytes");
  dec->add_option("--in", in_path, "Input container")->required();
  dec->add_option("--out", out_path, "Output file")->required();
  dec->add_flag("--best-effort", best_effort, "Write output even if some blocks are uncorrectable");

  double p = 0;
  std::uint64_t trials = 0, seed = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo decoding over a symbol-error channel");
  sim->add_option("--code", code_desc, "Code descriptor")->required();
  sim->add_option("--p", p, "Symbol error probability")->required();
  sim->add_option("--trials", trials, "Number of trials")->required();
  sim->add_option("--seed", seed, "Master seed")->required();
  sim->add_flag("--json", json, "JSON report");

  auto* self = app.add_subcommand("selftest", "Run the built-in golden checks");

  CLI11_PARSE(app, argc, argv);

  if (*design) {
    char* out = nullptr;
    const udc_status s =
        udc_design(rate.c_str(), errors, prime_only ? 1 : 0, json ? UDC_FORMAT_JSON : UDC_FORMAT_TEXT, &out);
    return print_owned(s, out);
  }
  if (*make) {
    udc_field* f = nullptr;
    if (udc_status s = udc_field_parse(field.c_str(), &f); s != UDC_OK) return report(s);
    udc_code* code = nullptr;
    udc_status s = udc_code_create(f, n, r, start, step, kind == "fourier" ? UDC_KIND_FOURIER : UDC_KIND_VANDERMONDE,
                                   &code);
    udc_field_free(f);
    if (s != UDC_OK) return report(s);
    char* desc = nullptr;
    udc_code_info info{};
    s = udc_code_descriptor(code, &desc);
    if (s == UDC_OK) s = udc_code_info_get(code, &info);
    if (s == UDC_OK) {
      std::cout << desc << "\n";
      std::cout << "(n, r) = (" << info.n << ", " << info.r << "), t = " << info.t << "\n";
      if (info.mds) {
        std::cout << "MDS: yes, d = " << info.n - info.r + 1 << "\n";
      } else {
        std::cout << "MDS: not guaranteed by the row-selection criterion\n";
      }
      std::cout << "decodable: " << (info.decodable ? "yes" : "no") << "\n";
      if (verify) {
        std::size_t d = 0;
        s = udc_code_min_distance(code, &d);
        if (s == UDC_OK) std::cout << "measured d = " << d << "\n";
      }
    }
    udc_string_free(desc);
    udc_code_free(code);
    return report(s);
  }
  if (*enc) return report(udc_encode_file(code_desc.c_str(), in_path.c_str(), out_path.c_str()));
  if (*dec) {
    std::size_t fixed = 0, failed = 0;
    const udc_status s = udc_decode_file(in_path.c_str(), out_path.c_str(), best_effort ? 1 : 0, &fixed, &failed);
    if (s == UDC_OK) {
      std::cerr << "corrected blocks: " << fixed << "\n";
      if (failed) std::cerr << "uncorrectable blocks passed through: " << failed << "\n";
    }
    return report(s);
  }
  if (*sim) {
    udc_code* code = nullptr;
    if (udc_status s = udc_code_parse(code_desc.c_str(), &code); s != UDC_OK) return report(s);
    char* out = nullptr;
    const udc_status s = udc_simulate(code, p, trials, seed, json ? UDC_FORMAT_JSON : UDC_FORMAT_TEXT, &out);
    udc_code_free(code);
    if (s == UDC_OK && json && out) {
      std::cout << out << "\n";
      udc_string_free(out);
      return 0;
    }
    return print_owned(s, out);
  }
  if (*self) {
    char* out = nullptr;
    const udc_status s = udc_selftest(&out);
    if (out) std::cout << out;
    udc_string_free(out);
    return report(s);
  }
  return 0;
}
