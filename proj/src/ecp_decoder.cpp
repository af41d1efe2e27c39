#include "udc/ecp_decoder.hpp"

#include <algorithm>

#include "udc/error.hpp"

namespace udc {

bool Syndromes::all_zero() const noexcept {
  return std::all_of(values.begin(), values.end(), [](Symbol x) { return x == 0; });
}

std::size_t hamming_weight(std::span<const Symbol> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Symbol x) { return x != 0; }));
}

LocatorBasis default_basis(const LinearCode& code) {
  if (code.scheme().kind() == SchemeKind::vandermonde) return LocatorBasis::vandermonde;
  const auto& sel = code.selection();
  if (sel.start == 0 && sel.step == 1) return LocatorBasis::first_rows;
  return LocatorBasis::arithmetic;
}

Syndromes compute_syndromes(const Field& f, const CheckStructure& cs, std::span<const Symbol> received) {
  if (received.size() != cs.length()) fail(ErrorCode::invalid_argument, "received word has wrong length");
  Syndromes s;
  s.values.assign(cs.count, 0);
  s.t = cs.count / 2;
  for (std::size_t j = 0; j < received.size(); ++j) {
    if (received[j] == 0) continue;
    Symbol x = f.mul(received[j], cs.multipliers[j]);
    const Symbol z = cs.points[j];
    for (std::size_t l = 0; l < cs.count; ++l) {
      s.values[l] = f.add(s.values[l], x);
      x = f.mul(x, z);
    }
  }
  return s;
}

Vector hankel_kernel(const Field& f, const Syndromes& s) {
  const std::size_t t = s.t;
  if (t < 1) fail(ErrorCode::invalid_argument, "Hankel kernel needs t >= 1");
  if (s.values.size() < 2 * t) fail(ErrorCode::invalid_argument, "Hankel kernel needs 2t syndromes");
  Matrix h(t, t + 1);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j <= t; ++j) h(i, j) = s.values[i + j];
  }
  const auto pivots = linalg::rref(f, h);
  std::size_t free_col = 0;
  for (std::size_t p : pivots) {
    if (p != free_col) break;
    ++free_col;
  }
  // free_col <= t always: t rows cannot pivot t + 1 columns.
  Vector x(t + 1, 0);
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(h(i, free_col));
  x[free_col] = 1;
  return x;
}

ErrorLocator locate_errors(const Field& f, const CheckStructure& cs, std::span<const Symbol> kernel,
                           LocatorBasis basis) {
  if (std::all_of(kernel.begin(), kernel.end(), [](Symbol x) { return x == 0; })) {
    fail(ErrorCode::invalid_argument, "locator kernel vector must be nonzero");
  }
  ErrorLocator loc;
  loc.kernel.assign(kernel.begin(), kernel.end());
  loc.locator.resize(cs.length());
  const std::int64_t offset = basis == LocatorBasis::arithmetic ? -1 : 0;
  for (std::size_t j = 0; j < cs.length(); ++j) {
    const Symbol z = cs.points[j];
    Symbol acc = 0;
    for (std::size_t m = kernel.size(); m-- > 0;) acc = f.add(f.mul(acc, z), kernel[m]);
    loc.locator[j] = f.mul(acc, cs.entry(f, offset, j));
    if (loc.locator[j] == 0) loc.zero_set.push_back(j);
  }
  return loc;
}

namespace {

// Solves sum_i z_i^l y_i = b_l for l = 0..N-1 with distinct z_i, in O(N^2).
std::optional<Vector> solve_transposed_vandermonde(const Field& f, std::span<const Symbol> z,
                                                   std::span<const Symbol> b) {
  const std::size_t n = z.size();
  // Master polynomial prod (x - z_i), low degree first, monic of degree n.
  Vector master(n + 1, 0);
  master[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k-- > 0;) {
      const Symbol shifted = k > 0 ? master[k - 1] : 0;
      master[k] = f.sub(shifted, f.mul(z[i], master[k]));
    }
  }
  Vector y(n);
  Vector q(n);
  for (std::size_t i = 0; i < n; ++i) {
    // q = master / (x - z_i), by synthetic division.
    q[n - 1] = 1;
    for (std::size_t k = n - 1; k > 0; --k) q[k - 1] = f.add(master[k], f.mul(z[i], q[k]));
    Symbol num = 0;
    Symbol den = 0;
    for (std::size_t k = n; k-- > 0;) {
      num = f.add(num, f.mul(q[k], b[k]));
      den = f.add(f.mul(den, z[i]), q[k]);
    }
    if (den == 0) return std::nullopt;
    y[i] = f.div(num, den);
  }
  return y;
}

}  // namespace

std::optional<Vector> solve_error_values(const Field& f, const CheckStructure& cs, const Syndromes& s,
                                         std::span<const std::size_t> zero_set, SolvePath path) {
  const std::size_t e = zero_set.size();
  if (s.values.size() != cs.count) fail(ErrorCode::invalid_argument, "syndrome count mismatch");
  for (std::size_t j : zero_set) {
    if (j >= cs.length()) fail(ErrorCode::invalid_argument, "error position out of range");
  }
  if (e == 0 || e > cs.count) return std::nullopt;

  Vector values;
  if (path == SolvePath::vandermonde) {
    Vector z(e);
    for (std::size_t i = 0; i < e; ++i) z[i] = cs.points[zero_set[i]];
    auto y = solve_transposed_vandermonde(f, z, std::span(s.values).first(e));
    if (!y) return std::nullopt;
    values.resize(e);
    for (std::size_t i = 0; i < e; ++i) values[i] = f.div((*y)[i], cs.multipliers[zero_set[i]]);
  } else {
    Matrix sys(cs.count, e);
    for (std::size_t i = 0; i < e; ++i) {
      Symbol x = cs.multipliers[zero_set[i]];
      for (std::size_t l = 0; l < cs.count; ++l) {
        sys(l, i) = x;
        x = f.mul(x, cs.points[zero_set[i]]);
      }
    }
    auto sol = linalg::solve(f, sys, s.values);
    if (!sol) return std::nullopt;
    values = std::move(*sol);
  }

  // Consistency over every check row.
  Vector w(cs.length(), 0);
  for (std::size_t i = 0; i < e; ++i) w[zero_set[i]] = values[i];
  if (compute_syndromes(f, cs, w).values != s.values) return std::nullopt;
  return w;
}

std::optional<Vector> find_error(const Field& f, const CheckStructure& cs, std::span<const Symbol> received,
                                 LocatorBasis basis, SolvePath path) {
  const Syndromes s = compute_syndromes(f, cs, received);
  if (s.all_zero()) return Vector(cs.length(), 0);
  if (s.t == 0) return std::nullopt;
  const Vector x = hankel_kernel(f, s);
  const ErrorLocator loc = locate_errors(f, cs, x, basis);
  auto w = solve_error_values(f, cs, s, loc.zero_set, path);
  if (!w || hamming_weight(*w) > s.t) return std::nullopt;
  return w;
}

namespace {

const CheckStructure& require_structure(const LinearCode& code) {
  if (!code.check_structure()) {
    fail(ErrorCode::not_decodable,
         "code has no error-correcting-pair structure (MDS predicate fails or r = n)");
  }
  return *code.check_structure();
}

void require_word(const LinearCode& code, std::span<const Symbol> word) {
  if (word.size() != code.n()) fail(ErrorCode::invalid_argument, "received word has wrong length");
  for (Symbol x : word) {
    if (!code.field().contains(x)) fail(ErrorCode::invalid_argument, "received symbol outside field");
  }
}

DecodeOutcome finish(const LinearCode& code, std::span<const Symbol> received, Vector w, DecodeOutcome out) {
  const Field& f = code.field();
  out.error_count = hamming_weight(w);
  out.status = out.error_count == 0 ? DecodeStatus::no_error : DecodeStatus::corrected;
  out.corrected.resize(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) out.corrected[j] = f.sub(received[j], w[j]);
  out.error = std::move(w);
  out.message = linalg::vec_mat(f, out.corrected, code.recovery());
  return out;
}

DecodeOutcome failed(std::span<const Symbol> received, DecodeOutcome out) {
  out.status = DecodeStatus::failure;
  out.corrected.assign(received.begin(), received.end());
  out.error.assign(received.size(), 0);
  out.message.clear();
  out.error_count = 0;
  return out;
}

}  // namespace

Syndromes compute_syndromes(const LinearCode& code, std::span<const Symbol> received) {
  require_word(code, received);
  return compute_syndromes(code.field(), require_structure(code), received);
}

ErrorLocator locate_errors(const LinearCode& code, std::span<const Symbol> kernel,
                           std::optional<LocatorBasis> basis) {
  return locate_errors(code.field(), require_structure(code), kernel, basis.value_or(default_basis(code)));
}

std::optional<Vector> solve_error_values(const LinearCode& code, const Syndromes& s,
                                         std::span<const std::size_t> zero_set, SolvePath path) {
  return solve_error_values(code.field(), require_structure(code), s, zero_set, path);
}

DecodeOutcome decode(const LinearCode& code, std::span<const Symbol> received, const DecodeOptions& opts) {
  require_word(code, received);
  const CheckStructure& cs = require_structure(code);
  const Field& f = code.field();

  DecodeOutcome out;
  out.syndromes = compute_syndromes(f, cs, received);
  if (out.syndromes.all_zero()) return finish(code, received, Vector(code.n(), 0), std::move(out));
  if (out.syndromes.t == 0) return failed(received, std::move(out));

  const Vector x = hankel_kernel(f, out.syndromes);
  out.locator = locate_errors(f, cs, x, opts.basis.value_or(default_basis(code)));
  auto w = solve_error_values(f, cs, out.syndromes, out.locator->zero_set, opts.solve);
  if (!w || hamming_weight(*w) > out.syndromes.t) return failed(received, std::move(out));
  return finish(code, received, std::move(*w), std::move(out));
}

DecodeOutcome decode_single_error(const LinearCode& code, std::span<const Symbol> received) {
  require_word(code, received);
  const CheckStructure& cs = require_structure(code);
  const Field& f = code.field();
  if (code.t() < 1) fail(ErrorCode::not_decodable, "single-error decoding needs t >= 1");

  DecodeOutcome out;
  out.syndromes = compute_syndromes(f, cs, received);
  if (out.syndromes.all_zero()) return finish(code, received, Vector(code.n(), 0), std::move(out));

  const Vector& alpha = out.syndromes.values;
  std::optional<std::size_t> hit;
  Symbol hit_value = 0;
  std::size_t matches = 0;
  for (std::size_t j = 0; j < code.n(); ++j) {
    const Symbol value = f.div(alpha[0], cs.multipliers[j]);
    if (value == 0) continue;
    Symbol expect = alpha[0];
    bool ok = true;
    for (std::size_t l = 1; l < alpha.size() && ok; ++l) {
      expect = f.mul(expect, cs.points[j]);
      ok = expect == alpha[l];
    }
    if (ok) {
      ++matches;
      hit = j;
      hit_value = value;
    }
  }
  if (matches != 1) return decode(code, received);
  Vector w(code.n(), 0);
  w[*hit] = hit_value;
  return finish(code, received, std::move(w), std::move(out));
}

Vector recover_message(const LinearCode& code, std::span<const Symbol> corrected) {
  require_word(code, corrected);
  if (!code.is_codeword(corrected)) fail(ErrorCode::invalid_argument, "recover_message: input is not a codeword");
  return linalg::vec_mat(code.field(), corrected, code.recovery());
}

CorrectingPair correcting_pair(const LinearCode& code) {
  const CheckStructure& cs = require_structure(code);
  const Field& f = code.field();
  const std::size_t t = code.t();
  const std::size_t b_rows = (code.n() - code.r()) % 2 == 0 ? t : t + 1;
  CorrectingPair pair{Matrix(t + 1, code.n()), Matrix(b_rows, code.n())};
  for (std::size_t j = 0; j < code.n(); ++j) {
    for (std::size_t l = 0; l <= t; ++l) pair.a(l, j) = cs.entry(f, static_cast<std::int64_t>(l), j);
    Symbol x = 1;
    for (std::size_t m = 0; m < b_rows; ++m) {
      pair.b(m, j) = x;
      x = f.mul(x, cs.points[j]);
    }
  }
  return pair;
}

}  // namespace udc
