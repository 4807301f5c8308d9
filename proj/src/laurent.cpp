#include "anndiff/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kahan_sum.hpp"

namespace anndiff {

namespace detail {

double pow_int(double base, int e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Complex pow_int(Complex base, int e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

LaurentSeries::LaurentSeries(int n_min, std::vector<Complex> coeffs)
    : n_min_(n_min), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentSeries::trim() {
  auto nonzero = [](const Complex& c) { return c != Complex(0.0, 0.0); };
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), nonzero);
  if (first == coeffs_.end()) {
    coeffs_.clear();
    n_min_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), nonzero);
  n_min_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(last.base(), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentSeries LaurentSeries::monomial(int n, Complex c) {
  return LaurentSeries(n, {c});
}

LaurentSeries LaurentSeries::from_map(const std::map<int, Complex>& coeffs) {
  if (coeffs.empty()) return {};
  const int lo = coeffs.begin()->first;
  const int hi = coeffs.rbegin()->first;
  std::vector<Complex> dense(static_cast<size_t>(hi - lo + 1), Complex(0.0));
  for (const auto& [n, c] : coeffs) dense[static_cast<size_t>(n - lo)] = c;
  return LaurentSeries(lo, std::move(dense));
}

int LaurentSeries::n_min() const {
  if (is_zero()) throw std::logic_error("zero series has no support");
  return n_min_;
}

int LaurentSeries::n_max() const {
  if (is_zero()) throw std::logic_error("zero series has no support");
  return n_min_ + static_cast<int>(coeffs_.size()) - 1;
}

Complex LaurentSeries::coeff(int n) const {
  const long idx = static_cast<long>(n) - n_min_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<size_t>(idx)];
}

double LaurentSeries::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex LaurentSeries::eval(Complex p) const {
  if (is_zero()) return 0.0;
  if (p == Complex(0.0, 0.0)) {
    if (n_min_ < 0) throw std::domain_error("evaluation at 0 with negative support");
    return coeff(0);
  }
  Complex pw = detail::pow_int(p, n_min_);
  Complex acc = 0.0;
  for (const auto& c : coeffs_) {
    acc += c * pw;
    pw *= p;
  }
  return acc;
}

std::map<int, Complex> LaurentSeries::as_map() const {
  std::map<int, Complex> m;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != Complex(0.0)) m[n_min_ + static_cast<int>(i)] = coeffs_[i];
  return m;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const int lo = std::min(n_min_, other.n_min_);
  const int hi = std::max(n_max(), other.n_max());
  std::vector<Complex> dense(static_cast<size_t>(hi - lo + 1), Complex(0.0));
  for (int n = lo; n <= hi; ++n)
    dense[static_cast<size_t>(n - lo)] = coeff(n) + other.coeff(n);
  return LaurentSeries(lo, std::move(dense));
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex PowerSeries::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<size_t>(i)];
}

Complex PowerSeries::eval(Complex x) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CircleSamples sample_circle(const std::function<Complex(Complex)>& f, double radius,
                            int count) {
  if (!(radius > 0.0)) throw precondition_error("sample radius must be positive");
  if (count < 1) throw precondition_error("sample count must be positive");
  CircleSamples cs;
  cs.radius = radius;
  cs.values.reserve(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / count;
    cs.values.push_back(f(std::polar(radius, angle)));
  }
  return cs;
}

CircleSamples sample_circle(const LaurentSeries& s, double radius, int count) {
  return sample_circle([&s](Complex p) { return s.eval(p); }, radius, count);
}

LaurentSeries coefficients_from_samples(const CircleSamples& cs, int n_min, int n_max) {
  if (n_min > n_max) throw precondition_error("empty exponent range");
  if (!(cs.radius > 0.0)) throw precondition_error("sample radius must be positive");
  const int N = cs.count();
  const int span = n_max - n_min + 1;
  const int max_abs = std::max(std::abs(n_min), std::abs(n_max));
  if (N < span) throw precondition_error("sample count below exponent span");
  if (N <= 2 * max_abs)
    throw precondition_error("sample count admits aliasing for the requested exponents");

  std::vector<Complex> root(static_cast<size_t>(N));
  for (int m = 0; m < N; ++m)
    root[static_cast<size_t>(m)] = std::polar(1.0, -2.0 * std::numbers::pi * m / N);

  std::vector<Complex> dense(static_cast<size_t>(span));
  for (int n = n_min; n <= n_max; ++n) {
    detail::NeumaierComplex acc;
    for (int j = 0; j < N; ++j) {
      const long long m = (static_cast<long long>(j) * n) % N;
      acc.add(cs.values[static_cast<size_t>(j)] *
              root[static_cast<size_t>((m % N + N) % N)]);
    }
    dense[static_cast<size_t>(n - n_min)] =
        acc.value() / static_cast<double>(N) * detail::pow_int(cs.radius, -n);
  }
  return LaurentSeries(n_min, std::move(dense));
}

Decomposition decompose(const LaurentSeries& s) {
  Decomposition d;
  d.f0 = s.coeff(0);
  if (s.is_zero()) return d;
  std::map<int, Complex> plus, minus;
  for (const auto& [n, c] : s.as_map()) {
    if (n >= 1)
      plus[n] = c;
    else if (n <= -1)
      minus[n] = c;
  }
  d.plus = LaurentSeries::from_map(plus);
  d.minus = LaurentSeries::from_map(minus);
  return d;
}

Complex residue_f0(const LaurentSeries& s) { return s.coeff(0); }

}  // namespace anndiff
