#include "udc/selftest.hpp"

#include <memory>
#include <sstream>

#include "udc/ecp_decoder.hpp"
#include "udc/error.hpp"

namespace udc {

namespace {

std::string join(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// u = c v for some nonzero c.
bool proportional(const Field& f, const Vector& u, const Vector& v) {
  if (u.size() != v.size()) return false;
  Symbol c = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] == 0) != (v[i] == 0)) return false;
    if (v[i] == 0) continue;
    const Symbol ci = f.div(u[i], v[i]);
    if (c == 0) c = ci;
    if (ci != c) return false;
  }
  return c != 0;
}

template <typename Fn>
SelftestCheck guarded(std::string name, Fn&& fn) {
  SelftestCheck c{std::move(name), false, {}};
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

SelftestCheck golden_check() {
  return guarded("golden GF(29) (7,3,5) decode", [](SelftestCheck& c) {
    const FieldPtr f = make_field(29);
    auto scheme = std::make_shared<const UnitScheme>(fourier_scheme(f, 7));
    const LinearCode code = derive_code(scheme, {0, 1, 3});
    const Vector message{5, 11, 28};
    const Vector sent = code.encode(message);
    const Vector w{1, 0, 0, 0, 2, 0, 0};
    Vector received(7);
    for (std::size_t j = 0; j < 7; ++j) received[j] = f->add(sent[j], w[j]);
    const DecodeOutcome out = decode(code, received);
    std::ostringstream why;
    if (scheme->omega() != 7) why << " omega=" << scheme->omega();
    if (out.syndromes.values != Vector{18, 15, 4, 12}) why << " syndromes=" << join(out.syndromes.values);
    if (!out.locator || !proportional(*f, out.locator->kernel, {23, 5, 1})) why << " kernel mismatch";
    if (!out.locator || !proportional(*f, out.locator->locator, {0, 24, 20, 1, 0, 2, 11})) why << " locator mismatch";
    if (!out.locator || out.locator->zero_set != std::vector<std::size_t>{0, 4}) why << " zero set mismatch";
    if (out.status != DecodeStatus::corrected || out.error != w) why << " error=" << join(out.error);
    if (out.message != message) why << " message=" << join(out.message);
    c.detail = why.str();
    c.passed = c.detail.empty();
    if (c.passed) c.detail = "syndromes (18,15,4,12), w = (1,0,0,0,2,0,0)";
  });
}

SelftestCheck fourier_check(std::uint64_t p, std::size_t n, Symbol omega) {
  std::ostringstream name;
  name << "Fourier equation F_" << n << " over GF(" << p << ")";
  return guarded(name.str(), [&](SelftestCheck& c) {
    const FieldPtr f = make_field(p);
    const UnitScheme s = fourier_scheme(f, n);
    std::ostringstream why;
    if (s.omega() != omega) why << " omega=" << s.omega() << " expected " << omega;
    if (linalg::multiply(*f, s.u(), s.v()) != Matrix::identity(n)) why << " UV != I";
    // F_n F_n' = n I with F_n' built on omega^{-1}.
    const Symbol inv = f->inv(s.omega());
    Matrix conj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) conj(i, j) = f->pow_u(inv, (i * j) % n);
    }
    Matrix scaled = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = f->from_integer(static_cast<std::int64_t>(n));
    if (linalg::multiply(*f, s.u(), conj) != scaled) why << " F F' != nI";
    c.detail = why.str();
    c.passed = c.detail.empty();
    if (c.passed) c.detail = "omega = " + std::to_string(omega);
  });
}

SelftestCheck printed_f4_check() {
  return guarded("F_4 over GF(5) matches the printed matrix", [](SelftestCheck& c) {
    const UnitScheme s = fourier_scheme(make_field(5), 4);
    Matrix expect(4, 4);
    const Symbol rows[4][4] = {{1, 1, 1, 1}, {1, 2, 4, 3}, {1, 4, 1, 4}, {1, 3, 4, 2}};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) expect(i, j) = rows[i][j];
    }
    c.passed = s.u() == expect;
    c.detail = c.passed ? "omega = 2" : "matrix differs";
  });
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> out;
  out.push_back(golden_check());
  out.push_back(printed_f4_check());
  out.push_back(fourier_check(5, 4, 2));
  out.push_back(fourier_check(29, 7, 7));
  out.push_back(fourier_check(23, 11, 2));
  out.push_back(fourier_check(59, 29, 3));
  out.push_back(fourier_check(257, 256, 3));
  return out;
}

}  // namespace udc
