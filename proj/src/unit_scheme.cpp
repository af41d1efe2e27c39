#include "udc/unit_scheme.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "udc/error.hpp"

namespace udc {

std::string_view to_string(SchemeKind kind) {
  return kind == SchemeKind::fourier ? "fourier" : "vandermonde";
}

Vector UnitScheme::power_row(std::int64_t m) const {
  Vector out(points_.size());
  for (std::size_t j = 0; j < points_.size(); ++j) out[j] = field_->pow(points_[j], m);
  return out;
}

namespace {

void require_unit(const Field& f, const Matrix& u, const Matrix& v) {
  if (linalg::multiply(f, u, v) != Matrix::identity(u.rows())) {
    fail(ErrorCode::internal, "unit scheme verification failed: U V != I");
  }
}

}  // namespace

UnitScheme fourier_scheme(const FieldPtr& field, std::size_t n) {
  if (!field) fail(ErrorCode::invalid_argument, "null field");
  if (n == 0) fail(ErrorCode::invalid_argument, "Fourier scheme size must be positive");
  const Field& f = *field;
  UnitScheme s;
  s.field_ = field;
  s.kind_ = SchemeKind::fourier;
  s.omega_ = f.find_element_of_order(n);

  Vector pw(n);
  pw[0] = 1;
  for (std::size_t k = 1; k < n; ++k) pw[k] = f.mul(pw[k - 1], s.omega_);
  s.points_ = pw;

  const Symbol n_inv = f.inv(f.from_integer(static_cast<std::int64_t>(n % f.characteristic())));
  s.u_ = Matrix(n, n);
  s.v_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t e = (i * j) % n;
      s.u_(i, j) = pw[e];
      s.v_(i, j) = f.mul(n_inv, pw[(n - e) % n]);
    }
  }
  require_unit(f, s.u_, s.v_);
  return s;
}

UnitScheme vandermonde_scheme(const FieldPtr& field, Vector points) {
  if (!field) fail(ErrorCode::invalid_argument, "null field");
  const Field& f = *field;
  const std::size_t n = points.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "Vandermonde scheme needs at least one point");
  for (Symbol x : points) {
    if (!f.contains(x)) fail(ErrorCode::invalid_argument, "point outside field");
    if (x == 0) fail(ErrorCode::invalid_argument, "Vandermonde points must be nonzero");
  }
  Vector sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::invalid_argument, "Vandermonde points must be distinct: repeated point");
  }

  UnitScheme s;
  s.field_ = field;
  s.kind_ = SchemeKind::vandermonde;
  s.points_ = std::move(points);
  s.u_ = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Symbol x = 1;
    for (std::size_t i = 0; i < n; ++i) {
      s.u_(i, j) = x;
      x = f.mul(x, s.points_[j]);
    }
  }
  auto inv = linalg::inverse(f, s.u_);
  if (!inv) fail(ErrorCode::internal, "Vandermonde matrix on distinct points is singular");
  s.v_ = std::move(*inv);
  require_unit(f, s.u_, s.v_);
  return s;
}

std::vector<std::size_t> selected_rows(const UnitScheme& scheme, const RowSelection& sel) {
  const std::size_t n = scheme.size();
  if (sel.count < 1 || sel.count >= n) {
    fail(ErrorCode::invalid_argument, "row selection: need 1 <= r < n (r=" + std::to_string(sel.count) +
                                          ", n=" + std::to_string(n) + ")");
  }
  if (sel.step < 1) fail(ErrorCode::invalid_argument, "row selection: step must be positive");
  if (sel.start >= n) fail(ErrorCode::invalid_argument, "row selection: start out of range");

  std::vector<std::size_t> rows(sel.count);
  if (scheme.kind() == SchemeKind::fourier) {
    for (std::size_t i = 0; i < sel.count; ++i) rows[i] = (sel.start + i * (sel.step % n)) % n;
  } else {
    if (sel.start + (sel.count - 1) * sel.step >= n) {
      fail(ErrorCode::invalid_argument, "row selection runs past the last row of a Vandermonde scheme");
    }
    for (std::size_t i = 0; i < sel.count; ++i) rows[i] = sel.start + i * sel.step;
  }
  std::vector<std::size_t> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::invalid_argument, "row selection: indices not distinct");
  }
  return rows;
}

bool mds_predicate(const UnitScheme& scheme, const RowSelection& sel) {
  const Field& f = scheme.field();
  if (scheme.kind() == SchemeKind::fourier) return std::gcd(scheme.size(), sel.step) == 1;
  // (x_i / x_j)^k != 1 for i != j, i.e. the k-th powers are distinct.
  Vector powers(scheme.size());
  for (std::size_t j = 0; j < powers.size(); ++j) {
    powers[j] = f.pow_u(scheme.points()[j], sel.step);
  }
  std::sort(powers.begin(), powers.end());
  return std::adjacent_find(powers.begin(), powers.end()) == powers.end();
}

Symbol CheckStructure::entry(const Field& f, std::int64_t l, std::size_t j) const {
  return f.mul(multipliers[j], f.pow(points[j], l));
}

Vector CheckStructure::row(const Field& f, std::int64_t l) const {
  Vector out(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) out[j] = entry(f, l, j);
  return out;
}

Matrix CheckStructure::rows(const Field& f) const {
  Matrix h(count, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    Symbol x = multipliers[j];
    for (std::size_t l = 0; l < count; ++l) {
      h(l, j) = x;
      x = f.mul(x, points[j]);
    }
  }
  return h;
}

CheckStructure CheckStructure::from_progression(const Field& f, std::span<const Symbol> scheme_points,
                                                std::int64_t first, std::size_t step, std::size_t count) {
  CheckStructure cs;
  cs.count = count;
  cs.multipliers.resize(scheme_points.size());
  cs.points.resize(scheme_points.size());
  for (std::size_t j = 0; j < scheme_points.size(); ++j) {
    if (scheme_points[j] == 0) fail(ErrorCode::invalid_argument, "check structure points must be nonzero");
    cs.multipliers[j] = f.pow(scheme_points[j], first);
    cs.points[j] = f.pow_u(scheme_points[j], step);
  }
  return cs;
}

std::optional<std::size_t> LinearCode::claimed_distance() const noexcept {
  if (!mds_) return std::nullopt;
  return n() - r() + 1;
}

Vector LinearCode::encode(std::span<const Symbol> message) const {
  if (message.size() != r()) fail(ErrorCode::invalid_argument, "encode: message length must equal r");
  for (Symbol m : message) {
    if (!field().contains(m)) fail(ErrorCode::invalid_argument, "encode: symbol outside field");
  }
  return linalg::vec_mat(field(), message, a_);
}

bool LinearCode::is_codeword(std::span<const Symbol> word) const {
  if (word.size() != n()) fail(ErrorCode::invalid_argument, "codeword length must equal n");
  const Vector s = linalg::vec_mat(field(), word, d_);
  return std::all_of(s.begin(), s.end(), [](Symbol x) { return x == 0; });
}

namespace {

// Dual basis u_j z_j^l for a code whose rows are x_j^{s + ik}. Valid whenever
// the z_j = x_j^k are distinct.
std::optional<CheckStructure> build_structure(const UnitScheme& scheme, const RowSelection& sel,
                                              bool mds) {
  const std::size_t n = scheme.size();
  const std::size_t checks = n - sel.count;
  if (!mds || checks == 0) return std::nullopt;
  const Field& f = scheme.field();
  CheckStructure cs;
  cs.count = checks;
  cs.multipliers.resize(n);
  cs.points.resize(n);
  if (scheme.kind() == SchemeKind::fourier) {
    // Check rows E_{-s + (l+1)k}: multiplier omega^{(k - s) j}, point omega^{k j}.
    const std::size_t k = sel.step % n;
    const std::size_t shift = (k + n - sel.start % n) % n;
    for (std::size_t j = 0; j < n; ++j) {
      cs.points[j] = scheme.points()[(k * j) % n];
      cs.multipliers[j] = scheme.points()[(shift * j) % n];
    }
  } else {
    // Generalized Reed-Solomon dual: u_j = 1 / (x_j^s prod_{i != j} (z_j - z_i)).
    for (std::size_t j = 0; j < n; ++j) cs.points[j] = f.pow_u(scheme.points()[j], sel.step);
    for (std::size_t j = 0; j < n; ++j) {
      Symbol denom = f.pow_u(scheme.points()[j], sel.start);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) denom = f.mul(denom, f.sub(cs.points[j], cs.points[i]));
      }
      cs.multipliers[j] = f.inv(denom);
    }
  }
  return cs;
}

}  // namespace

LinearCode derive_code(std::shared_ptr<const UnitScheme> scheme, const RowSelection& sel) {
  if (!scheme) fail(ErrorCode::invalid_argument, "null scheme");
  const Field& f = scheme->field();
  const std::size_t n = scheme->size();

  LinearCode code;
  code.rows_ = selected_rows(*scheme, sel);
  code.selection_ = sel;
  code.scheme_ = scheme;

  std::vector<bool> chosen(n, false);
  for (std::size_t i : code.rows_) chosen[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < n; ++j) {
    if (!chosen[j]) rest.push_back(j);
  }

  code.a_ = scheme->u().select_rows(code.rows_);
  code.c_ = scheme->v().select_cols(code.rows_);
  code.d_ = scheme->v().select_cols(rest);

  if (linalg::multiply(f, code.a_, code.c_) != Matrix::identity(sel.count)) {
    fail(ErrorCode::internal, "block identity A C = I failed");
  }
  const Matrix ad = linalg::multiply(f, code.a_, code.d_);
  if (ad != Matrix(sel.count, rest.size(), 0)) fail(ErrorCode::internal, "block identity A D = 0 failed");

  code.mds_ = mds_predicate(*scheme, sel);
  code.structure_ = build_structure(*scheme, sel, code.mds_);
  if (code.structure_) {
    code.h_ = code.structure_->rows(f);
    const Matrix ah = linalg::multiply(f, code.a_, code.h_.transpose());
    if (ah != Matrix(sel.count, code.h_.rows(), 0)) {
      fail(ErrorCode::internal, "structured check rows are not orthogonal to the code");
    }
    if (linalg::rank(f, code.h_) != code.h_.rows()) {
      fail(ErrorCode::internal, "structured check rows are not independent");
    }
  }
  return code;
}

LinearCode derive_code(const UnitScheme& scheme, const RowSelection& sel) {
  return derive_code(std::make_shared<const UnitScheme>(scheme), sel);
}

Vector star_multiply(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) fail(ErrorCode::invalid_argument, "star product: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
  return out;
}

Symbol vandermonde_minor_det(const UnitScheme& scheme, std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) {
  const Field& f = scheme.field();
  const std::size_t n = scheme.size();
  if (rows.size() != cols.size() || rows.empty()) {
    fail(ErrorCode::invalid_argument, "minor: need equally many rows and columns");
  }
  for (std::size_t i : rows) {
    if (i >= n) fail(ErrorCode::invalid_argument, "minor: row out of range");
  }
  for (std::size_t j : cols) {
    if (j >= n) fail(ErrorCode::invalid_argument, "minor: column out of range");
  }

  std::size_t k = 1;
  if (rows.size() >= 2) {
    const bool wrap = scheme.kind() == SchemeKind::fourier;
    if (wrap) {
      k = (rows[1] + n - rows[0]) % n;
    } else if (rows[1] > rows[0]) {
      k = rows[1] - rows[0];
    } else {
      fail(ErrorCode::invalid_argument, "minor: rows not in arithmetic progression");
    }
    for (std::size_t l = 0; l < rows.size(); ++l) {
      const std::size_t expect = wrap ? (rows[0] + l * k) % n : rows[0] + l * k;
      if (rows[l] != expect) fail(ErrorCode::invalid_argument, "minor: rows not in arithmetic progression");
    }
  }

  const Symbol direct = linalg::determinant(f, scheme.u().select_rows(rows).select_cols(cols));

  Symbol factored = 1;
  Vector y(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Symbol x = scheme.points()[cols[c]];
    factored = f.mul(factored, f.pow_u(x, rows[0]));
    y[c] = f.pow_u(x, k);
  }
  for (std::size_t a = 0; a < y.size(); ++a) {
    for (std::size_t b = a + 1; b < y.size(); ++b) factored = f.mul(factored, f.sub(y[b], y[a]));
  }
  if (direct != factored) fail(ErrorCode::internal, "minor determinant: elimination and factorization disagree");
  return direct;
}

std::string to_string(const CodeDescriptor& d) {
  return "field=" + to_string(d.field) + ";n=" + std::to_string(d.n) + ";start=" + std::to_string(d.start) +
         ";step=" + std::to_string(d.step) + ";r=" + std::to_string(d.r) + ";kind=" +
         std::string(to_string(d.kind));
}

CodeDescriptor parse_code_descriptor(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  while (!text.empty()) {
    const auto semi = text.find(';');
    std::string_view item = text.substr(0, semi);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorCode::parse, "code descriptor: expected key=value");
    std::string key(item.substr(0, eq));
    if (kv.count(key) != 0) fail(ErrorCode::parse, "code descriptor: duplicate key " + key);
    kv.emplace(std::move(key), std::string(item.substr(eq + 1)));
    if (semi == std::string_view::npos) break;
    text = text.substr(semi + 1);
  }
  auto take = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) fail(ErrorCode::parse, std::string("code descriptor: missing ") + key);
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto number = [&](const char* key) -> std::size_t {
    const std::string v = take(key);
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      fail(ErrorCode::parse, std::string("code descriptor: bad ") + key);
    }
    return out;
  };

  CodeDescriptor d;
  d.field = parse_field_spec(take("field"));
  d.n = number("n");
  d.start = number("start");
  d.step = number("step");
  d.r = number("r");
  const std::string kind = take("kind");
  if (kind == "fourier") {
    d.kind = SchemeKind::fourier;
  } else if (kind == "vandermonde") {
    d.kind = SchemeKind::vandermonde;
  } else {
    fail(ErrorCode::parse, "code descriptor: kind must be fourier or vandermonde");
  }
  if (!kv.empty()) fail(ErrorCode::parse, "code descriptor: unknown key " + kv.begin()->first);
  return d;
}

CodeDescriptor describe(const LinearCode& code) {
  CodeDescriptor d;
  d.field = code.field().spec();
  d.n = code.n();
  d.start = code.selection().start;
  d.step = code.selection().step;
  d.r = code.r();
  d.kind = code.scheme().kind();
  return d;
}

Vector default_vandermonde_points(const Field& f, std::size_t n) {
  if (n + 1 > f.order()) fail(ErrorCode::invalid_argument, "field too small for n distinct nonzero points");
  Vector pts(n);
  std::iota(pts.begin(), pts.end(), Symbol{1});
  return pts;
}

LinearCode make_code(const CodeDescriptor& d) {
  FieldPtr field = Field::create(d.field);
  std::shared_ptr<const UnitScheme> scheme;
  if (d.kind == SchemeKind::fourier) {
    scheme = std::make_shared<const UnitScheme>(fourier_scheme(field, d.n));
  } else {
    scheme = std::make_shared<const UnitScheme>(vandermonde_scheme(field, default_vandermonde_points(*field, d.n)));
  }
  return derive_code(scheme, RowSelection{d.start, d.step, d.r});
}

}  // namespace udc
