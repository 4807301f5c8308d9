#include "anndiff/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kahan_sum.hpp"

namespace anndiff {

TwoVarSeries::TwoVarSeries(int m_deg, int n_deg, int pole_order)
    : m_deg_(m_deg), n_deg_(n_deg), pole_order_(pole_order) {
  if (m_deg < 0 || n_deg < 0) throw precondition_error("bidegree must be nonnegative");
  if (pole_order < 0) throw precondition_error("pole order must be nonnegative");
  a_.assign(static_cast<size_t>(m_deg_ + 1) * static_cast<size_t>(n_deg_ + 1),
            Complex(0.0));
}

Complex TwoVarSeries::coeff(int m, int n) const {
  if (m < 0 || m > m_deg_ || n < 0 || n > n_deg_) return 0.0;
  return a_[static_cast<size_t>(m) * (n_deg_ + 1) + static_cast<size_t>(n)];
}

void TwoVarSeries::set_coeff(int m, int n, Complex c) {
  if (m < 0 || m > m_deg_ || n < 0 || n > n_deg_)
    throw precondition_error("coefficient index outside the bidegree box");
  a_[static_cast<size_t>(m) * (n_deg_ + 1) + static_cast<size_t>(n)] = c;
}

TwoVarSeries TwoVarSeries::with_pole_order(int pole_order) const {
  TwoVarSeries s = *this;
  if (pole_order < 0) throw precondition_error("pole order must be nonnegative");
  s.pole_order_ = pole_order;
  return s;
}

double TwoVarSeries::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : a_) m = std::max(m, std::abs(c));
  return m;
}

Complex TwoVarSeries::eval_regular(Complex z, Complex w) const {
  Complex acc = 0.0;
  for (int m = m_deg_; m >= 0; --m) {
    Complex row = 0.0;
    for (int n = n_deg_; n >= 0; --n) row = row * w + coeff(m, n);
    acc = acc * z + row;
  }
  return acc;
}

Complex TwoVarSeries::eval(Complex z, Complex w) const {
  Complex v = eval_regular(z, w);
  if (pole_order_ > 0) {
    if (z == Complex(0.0))
      throw std::domain_error("evaluation at z = 0 with a pole at the inner boundary");
    v *= detail::pow_int(z, -pole_order_);
  }
  return v;
}

Complex TwoVarSeries::eval_fiber(Complex zeta, Complex t) const {
  if (zeta == Complex(0.0)) throw std::domain_error("fiber evaluation needs zeta != 0");
  return eval(zeta, t / zeta);
}

Complex TwoVarSeries::eval_regular_fiber(Complex zeta, Complex t) const {
  if (zeta == Complex(0.0)) throw std::domain_error("fiber evaluation needs zeta != 0");
  return eval_regular(zeta, t / zeta);
}

bool FamilySamples::uniform_t() const {
  const int Nt = t_count();
  for (int l = 0; l < Nt; ++l) {
    const Complex expect = std::polar(rho_t, 2.0 * std::numbers::pi * l / Nt);
    if (std::abs(t_values[static_cast<size_t>(l)] - expect) > 1e-12 * rho_t)
      return false;
  }
  return true;
}

void FamilySamples::validate() const {
  if (k < 1) throw precondition_error("k must be >= 1");
  if (!(r_zeta > 0.0) || !(rho_t > 0.0))
    throw precondition_error("sample radii must be positive");
  if (!(r_zeta < c)) throw precondition_error("zeta circle must lie inside |z| < c");
  if (t_values.empty() || values.empty())
    throw precondition_error("empty sample set");
  if (values.size() != t_values.size())
    throw precondition_error("one value row per t is required");
  const size_t Nz = values.front().size();
  if (Nz == 0) throw precondition_error("empty sample circle");
  for (const auto& row : values)
    if (row.size() != Nz) throw precondition_error("ragged sample rows");
  for (const auto& t : t_values) {
    if (t == Complex(0.0)) throw precondition_error("t = 0 is not a sample fiber");
    if (!(std::abs(t) / c_prime < r_zeta))
      throw precondition_error("zeta circle leaves a fiber annulus (|t|/c' >= r_zeta)");
  }
}

FamilySamples sample_family(const FiberFunction& f, int k, double r_zeta, double rho_t,
                            int t_count, int zeta_count, double c, double c_prime) {
  if (t_count < 1 || zeta_count < 1)
    throw precondition_error("sample counts must be positive");
  FamilySamples fs;
  fs.k = k;
  fs.r_zeta = r_zeta;
  fs.rho_t = rho_t;
  fs.c = c;
  fs.c_prime = c_prime;
  fs.t_values.reserve(static_cast<size_t>(t_count));
  for (int l = 0; l < t_count; ++l)
    fs.t_values.push_back(std::polar(rho_t, 2.0 * std::numbers::pi * l / t_count));
  fs.values.assign(static_cast<size_t>(t_count), {});
  for (int l = 0; l < t_count; ++l) {
    auto& row = fs.values[static_cast<size_t>(l)];
    row.reserve(static_cast<size_t>(zeta_count));
    const Complex t = fs.t_values[static_cast<size_t>(l)];
    for (int j = 0; j < zeta_count; ++j) {
      const Complex zeta = std::polar(r_zeta, 2.0 * std::numbers::pi * j / zeta_count);
      row.push_back(f(zeta, t / zeta));
    }
  }
  fs.validate();
  return fs;
}

FamilySamples sample_family(const TwoVarSeries& truth, int k, double r_zeta,
                            double rho_t, int t_count, int zeta_count, double c,
                            double c_prime) {
  return sample_family(
      [&truth](Complex z, Complex w) { return truth.eval(z, w); }, k, r_zeta, rho_t,
      t_count, zeta_count, c, c_prime);
}

namespace {

// Least-squares solve min |A x - y| by modified Gram-Schmidt QR.
// A is rows x cols with rows >= cols.
std::vector<Complex> solve_least_squares(std::vector<std::vector<Complex>> A,
                                         std::vector<Complex> y) {
  const size_t rows = A.size();
  const size_t cols = rows == 0 ? 0 : A.front().size();
  if (rows < cols) throw precondition_error("underdetermined t sample set");
  std::vector<std::vector<Complex>> R(cols, std::vector<Complex>(cols, Complex(0.0)));
  for (size_t i = 0; i < cols; ++i) {
    double norm0 = 0.0;
    for (size_t l = 0; l < rows; ++l) norm0 += std::norm(A[l][i]);
    norm0 = std::sqrt(norm0);
    for (size_t j = 0; j < i; ++j) {
      Complex dot = 0.0;
      for (size_t l = 0; l < rows; ++l) dot += std::conj(A[l][j]) * A[l][i];
      R[j][i] = dot;
      for (size_t l = 0; l < rows; ++l) A[l][i] -= dot * A[l][j];
    }
    double norm = 0.0;
    for (size_t l = 0; l < rows; ++l) norm += std::norm(A[l][i]);
    norm = std::sqrt(norm);
    if (norm <= 1e-12 * (norm0 + 1.0))
      throw precondition_error("degenerate t sample set (rank deficient)");
    R[i][i] = norm;
    for (size_t l = 0; l < rows; ++l) A[l][i] /= norm;
  }
  std::vector<Complex> x(cols, Complex(0.0));
  for (size_t i = cols; i-- > 0;) {
    Complex acc = 0.0;
    for (size_t l = 0; l < rows; ++l) acc += std::conj(A[l][i]) * y[l];
    for (size_t j = i + 1; j < cols; ++j) acc -= R[i][j] * x[j];
    x[i] = acc / R[i][i];
  }
  return x;
}

}  // namespace

TwoVarSeries extend(const FamilySamples& fs, int m_deg, int n_deg) {
  fs.validate();
  if (m_deg < 0 || n_deg < 0) throw precondition_error("bidegree must be nonnegative");
  const int Nz = fs.zeta_count();
  const int Nt = fs.t_count();
  if (Nt < n_deg + 1)
    throw precondition_error("t sample count below n_deg + 1 admits aliasing");
  if (Nz < 2 * (m_deg + n_deg) + 1)
    throw precondition_error("zeta sample count below 2(m_deg + n_deg) + 1 admits aliasing");

  std::vector<Complex> root_z(static_cast<size_t>(Nz));
  for (int m = 0; m < Nz; ++m)
    root_z[static_cast<size_t>(m)] = std::polar(1.0, -2.0 * std::numbers::pi * m / Nz);

  const bool uniform = fs.uniform_t();
  std::vector<Complex> root_t;
  if (uniform) {
    root_t.resize(static_cast<size_t>(Nt));
    for (int m = 0; m < Nt; ++m)
      root_t[static_cast<size_t>(m)] = std::polar(1.0, -2.0 * std::numbers::pi * m / Nt);
  }

  TwoVarSeries out(m_deg, n_deg);
  std::vector<Complex> inner(static_cast<size_t>(Nt));
  for (int p = -n_deg; p <= m_deg; ++p) {
    // inner[l] = (1/Nz)·Σ_j values[l][j]·ω_z^{-jp} = r^p·Σ_n a_{p+n,n}·t_l^n
    for (int l = 0; l < Nt; ++l) {
      detail::NeumaierComplex acc;
      for (int j = 0; j < Nz; ++j) {
        const long long m = ((static_cast<long long>(j) * p) % Nz + Nz) % Nz;
        acc.add(fs.values[static_cast<size_t>(l)][static_cast<size_t>(j)] *
                root_z[static_cast<size_t>(m)]);
      }
      inner[static_cast<size_t>(l)] = acc.value() / static_cast<double>(Nz);
    }
    const int n_lo = std::max(0, -p);
    const int n_hi = std::min(n_deg, m_deg - p);
    if (n_lo > n_hi) continue;
    const double rp = detail::pow_int(fs.r_zeta, p);
    if (uniform) {
      for (int n = n_lo; n <= n_hi; ++n) {
        detail::NeumaierComplex acc;
        for (int l = 0; l < Nt; ++l) {
          const long long m = ((static_cast<long long>(l) * n) % Nt + Nt) % Nt;
          acc.add(inner[static_cast<size_t>(l)] * root_t[static_cast<size_t>(m)]);
        }
        const double scale = rp * detail::pow_int(fs.rho_t, n);
        if (!(scale > 1e-280))
          throw precondition_error("recovery scale underflow for the requested bidegree");
        out.set_coeff(p + n, n, acc.value() / static_cast<double>(Nt) / scale);
      }
    } else {
      // Dense Vandermonde least squares in the t samples, column-scaled.
      double t_max = 0.0;
      for (const auto& t : fs.t_values) t_max = std::max(t_max, std::abs(t));
      const int cols = n_hi - n_lo + 1;
      std::vector<std::vector<Complex>> A(static_cast<size_t>(Nt),
                                          std::vector<Complex>(static_cast<size_t>(cols)));
      for (int l = 0; l < Nt; ++l)
        for (int i = 0; i < cols; ++i)
          A[static_cast<size_t>(l)][static_cast<size_t>(i)] =
              detail::pow_int(fs.t_values[static_cast<size_t>(l)], n_lo + i) /
              detail::pow_int(t_max, n_lo + i);
      const auto x = solve_least_squares(std::move(A),
                                         {inner.begin(), inner.end()});
      for (int i = 0; i < cols; ++i) {
        const int n = n_lo + i;
        const double scale = rp * detail::pow_int(t_max, n);
        if (!(scale > 1e-280))
          throw precondition_error("recovery scale underflow for the requested bidegree");
        out.set_coeff(p + n, n, x[static_cast<size_t>(i)] / scale);
      }
    }
  }
  return out;
}

TwoVarSeries extend_with_pole(const FamilySamples& fs, int pole_order, int m_deg,
                              int n_deg) {
  if (pole_order < 0) throw precondition_error("pole order must be nonnegative");
  if (pole_order == 0) return extend(fs, m_deg, n_deg);
  FamilySamples cleared = fs;
  const int Nz = fs.zeta_count();
  for (auto& row : cleared.values)
    for (int j = 0; j < Nz; ++j) {
      const Complex zeta =
          std::polar(fs.r_zeta, 2.0 * std::numbers::pi * j / Nz);
      row[static_cast<size_t>(j)] *= detail::pow_int(zeta, pole_order);
    }
  return extend(cleared, m_deg, n_deg).with_pole_order(pole_order);
}

double reconstruction_error(const FamilySamples& fs, const TwoVarSeries& s) {
  fs.validate();
  const int Nz = fs.zeta_count();
  double worst = 0.0;
  for (int l = 0; l < fs.t_count(); ++l) {
    const Complex t = fs.t_values[static_cast<size_t>(l)];
    for (int j = 0; j < Nz; ++j) {
      const Complex zeta = std::polar(fs.r_zeta, 2.0 * std::numbers::pi * j / Nz);
      worst = std::max(worst,
                       std::abs(s.eval_fiber(zeta, t) -
                                fs.values[static_cast<size_t>(l)][static_cast<size_t>(j)]));
    }
  }
  return worst;
}

PowerSeries nodal_restriction(const TwoVarSeries& s, Branch branch, int k) {
  if (k < 1) throw precondition_error("k must be >= 1");
  if (branch == Branch::z) {
    if (s.pole_order() > 0)
      throw precondition_error("pole at the inner boundary obstructs the z restriction");
    std::vector<Complex> c(static_cast<size_t>(s.m_deg() + 1));
    for (int m = 0; m <= s.m_deg(); ++m) c[static_cast<size_t>(m)] = s.coeff(m, 0);
    return PowerSeries(std::move(c));
  }
  // alpha restricts to -dw/w on the w branch, contributing (-1)^k.
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  std::vector<Complex> c(static_cast<size_t>(s.n_deg() + 1));
  for (int n = 0; n <= s.n_deg(); ++n) c[static_cast<size_t>(n)] = sign * s.coeff(0, n);
  return PowerSeries(std::move(c));
}

NodalKDifferential nodal_differential(const TwoVarSeries& s, int k) {
  return {k, nodal_restriction(s, Branch::z, k), nodal_restriction(s, Branch::w, k)};
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double xm = 0.0, ym = 0.0;
  for (size_t i = 0; i < n; ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= static_cast<double>(n);
  ym /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < n; ++i) {
    num += (x[i] - xm) * (y[i] - ym);
    den += (x[i] - xm) * (x[i] - xm);
  }
  return num / den;
}

}  // namespace

NormalFamiliesReport verify_normal_families(const TwoVarSeries& truth,
                                            const std::vector<Complex>& t_sequence,
                                            const std::vector<AnnulusSpec>& compacta,
                                            int circles, int points) {
  if (truth.pole_order() != 0)
    throw precondition_error("normal families check needs a regular section");
  if (t_sequence.empty() || compacta.empty())
    throw precondition_error("need at least one t and one compactum");

  // Raw branch restrictions (no orientation sign: functions are compared).
  std::vector<Complex> fz(static_cast<size_t>(truth.m_deg() + 1));
  for (int m = 0; m <= truth.m_deg(); ++m) fz[static_cast<size_t>(m)] = truth.coeff(m, 0);
  std::vector<Complex> fw(static_cast<size_t>(truth.n_deg() + 1));
  for (int n = 0; n <= truth.n_deg(); ++n) fw[static_cast<size_t>(n)] = truth.coeff(0, n);
  const PowerSeries fz_s(std::move(fz)), fw_s(std::move(fw));

  NormalFamiliesReport rep;
  rep.exact = true;
  constexpr double kRoundoff = 1e-14;
  for (const auto& comp : compacta) {
    comp.validate();
    if (!(comp.r_inner > 0.0))
      throw precondition_error("compacta must avoid the origin");
    std::vector<NormalFamiliesReport::Entry> rows;
    for (const Complex& t : t_sequence) {
      if (!(std::abs(t) < comp.r_inner))
        throw precondition_error("compactum leaves the fiber annulus for some t");
      NormalFamiliesReport::Entry e;
      e.t = t;
      for (double r : detail::geometric_radii(comp.r_inner, comp.r_outer, circles)) {
        for (int j = 0; j < points; ++j) {
          const Complex u = std::polar(r, 2.0 * std::numbers::pi * j / points);
          e.sup_z = std::max(e.sup_z, std::abs(truth.eval_fiber(u, t) - fz_s.eval(u)));
          e.sup_w = std::max(e.sup_w, std::abs(truth.eval(t / u, u) - fw_s.eval(u)));
        }
      }
      rep.exact = rep.exact && e.sup_z <= kRoundoff && e.sup_w <= kRoundoff;
      rows.push_back(e);
    }
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
      if (rows[i + 1].sup_z > 2.0 * rows[i].sup_z + 1e-15) rep.decreasing = false;
      if (rows[i + 1].sup_w > 2.0 * rows[i].sup_w + 1e-15) rep.decreasing = false;
    }
    std::vector<double> lx_z, ly_z, lx_w, ly_w;
    for (const auto& e : rows) {
      if (e.sup_z > kRoundoff) {
        lx_z.push_back(std::log(std::abs(e.t)));
        ly_z.push_back(std::log(e.sup_z));
      }
      if (e.sup_w > kRoundoff) {
        lx_w.push_back(std::log(std::abs(e.t)));
        ly_w.push_back(std::log(e.sup_w));
      }
    }
    rep.order_z.push_back(fit_slope(lx_z, ly_z));
    rep.order_w.push_back(fit_slope(lx_w, ly_w));
    rep.compacta.push_back(std::move(rows));
  }
  return rep;
}

}  // namespace anndiff
