#include "symbell/symstate.hpp"

#include <cmath>
#include <sstream>

namespace symbell {

namespace {
constexpr double kPi = 3.141592653589793238462643;

cvec normalized(cvec v) {
  double n2 = norm2(v);
  if (n2 < 1e-24)
    throw std::invalid_argument("state coefficients are not normalizable");
  double inv = 1.0 / std::sqrt(n2);
  for (auto &c : v)
    c *= inv;
  return v;
}

// "re", "re+imi", "re-imi", or "imi" with im optionally signed.
cplx parse_complex(const std::string &tok) {
  std::string s = tok;
  if (s.empty())
    throw std::invalid_argument("empty complex literal");
  if (s.back() == 'i') {
    s.pop_back();
    // split at the last +/- that is not an exponent sign or leading sign
    for (int i = int(s.size()) - 1; i > 0; --i) {
      char c = s[size_t(i)];
      if ((c == '+' || c == '-') && s[size_t(i) - 1] != 'e' &&
          s[size_t(i) - 1] != 'E') {
        double re = std::stod(s.substr(0, size_t(i)));
        std::string imtok = s.substr(size_t(i));
        double im = (imtok == "+" || imtok == "-") ? std::stod(imtok + "1")
                                                   : std::stod(imtok);
        return {re, im};
      }
    }
    return {0.0, s.empty() ? 1.0 : std::stod(s)};
  }
  return {std::stod(s), 0.0};
}
} // namespace

SymmetricState::SymmetricState(int n, cvec coeffs) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("party count must be >= 1");
  if (int(coeffs.size()) != n + 1)
    throw std::invalid_argument("need n+1 Dicke coefficients");
  double n2 = norm2(coeffs);
  if (std::abs(n2 - 1.0) > 1e-12) {
    if (n2 < 1e-24)
      throw std::invalid_argument("state coefficients are not normalizable");
    double inv = 1.0 / std::sqrt(n2);
    for (auto &c : coeffs)
      c *= inv;
  }
  coeffs_ = std::move(coeffs);
}

cvec SymmetricState::amplitudes() const {
  const size_t dim = size_t(1) << n_;
  cvec amp(dim);
  std::vector<double> inv_sqrt_binom(size_t(n_) + 1);
  for (int k = 0; k <= n_; ++k)
    inv_sqrt_binom[size_t(k)] = 1.0 / std::sqrt(binom(n_, k));
  for (size_t bits = 0; bits < dim; ++bits) {
    int k = popcount_n(bits);
    amp[bits] = coeffs_[size_t(k)] * inv_sqrt_binom[size_t(k)];
  }
  return amp;
}

SymmetricState dicke_state(int n, int k) {
  if (k < 0 || k > n)
    throw std::invalid_argument("Dicke excitation count out of range");
  cvec c(size_t(n) + 1, 0.0);
  c[size_t(k)] = 1.0;
  return {n, std::move(c)};
}

SymmetricState w_state(int n) { return dicke_state(n, 1); }

SymmetricState ghz_state(int n) {
  cvec c(size_t(n) + 1, 0.0);
  c.front() = 1.0 / std::sqrt(2.0);
  c.back() = 1.0 / std::sqrt(2.0);
  return {n, std::move(c)};
}

SymmetricState tetrahedron_state() {
  cvec c(5, 0.0);
  c[0] = std::sqrt(1.0 / 3.0);
  c[3] = std::sqrt(2.0 / 3.0);
  return {4, std::move(c)};
}

SymmetricState zzz_plus_state() {
  cvec c(5, 0.0);
  c[0] = 2.0 / std::sqrt(5.0);
  c[1] = 1.0 / std::sqrt(5.0);
  return {4, std::move(c)};
}

SymmetricState zzz_theta_state(double theta) {
  if (theta < 0.0 || theta > kPi)
    throw std::invalid_argument("theta must lie in [0, pi]");
  // P_sym(|000>(c|0>+s|1>)) = c|S(4,0)> + (s/2)|S(4,1)>
  cvec c(5, 0.0);
  c[0] = std::cos(theta / 2);
  c[1] = 0.5 * std::sin(theta / 2);
  return {4, normalized(std::move(c))};
}

SymmetricState raw_state(cvec coeffs) {
  if (coeffs.size() < 2)
    throw std::invalid_argument("need at least two coefficients");
  return {int(coeffs.size()) - 1, normalized(std::move(coeffs))};
}

SymmetricState parse_state(const std::string &spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto need_int = [&](const std::string &s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size())
      throw std::invalid_argument("bad integer in state spec: " + s);
    return v;
  };

  if (head == "tetra" || head == "tetrahedron")
    return tetrahedron_state();
  if (head == "zzz_plus")
    return zzz_plus_state();
  if (head == "zzz_theta" || head == "zzz")
    return zzz_theta_state(std::stod(args));
  if (head == "w")
    return w_state(need_int(args));
  if (head == "ghz")
    return ghz_state(need_int(args));
  if (head == "dicke") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("dicke spec needs n,k");
    return dicke_state(need_int(args.substr(0, comma)),
                       need_int(args.substr(comma + 1)));
  }
  if (head == "raw") {
    cvec c;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ','))
      c.push_back(parse_complex(tok));
    return raw_state(std::move(c));
  }
  throw std::invalid_argument("unknown state spec: " + spec);
}

std::pair<double, SymmetricState> collapse(const SymmetricState &state,
                                           const BlochPoint &p) {
  const int n = state.n();
  if (n < 2)
    throw std::invalid_argument("collapse needs at least two parties");
  // |S(n,k)> = sqrt((n-k)/n) |0>|S(n-1,k)> + sqrt(k/n) |1>|S(n-1,k-1)>
  const auto k0 = p.ket();
  const cplx c0 = std::conj(k0[0]), c1 = std::conj(k0[1]);
  cvec b(size_t(n), 0.0);
  for (int j = 0; j < n; ++j) {
    b[size_t(j)] = state.coeff(j) * c0 * std::sqrt(double(n - j) / n) +
                   state.coeff(j + 1) * c1 * std::sqrt(double(j + 1) / n);
  }
  double amp = std::sqrt(norm2(b));
  if (amp < 1e-12)
    throw zero_collapse_error{};
  for (auto &x : b)
    x /= amp;
  fix_global_phase(b);
  return {amp, SymmetricState(n - 1, std::move(b))};
}

cplx product_overlap(const SymmetricState &state, const BlochPoint &p) {
  const int n = state.n();
  const double c = std::cos(p.theta / 2), s = std::sin(p.theta / 2);
  const cplx es = std::polar(s, -p.phi);
  cplx acc = 0;
  // <p|^n |S(n,k)> = sqrt(C(n,k)) c^{n-k} (e^{-i phi} s)^k
  cplx pow_es = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += state.coeff(k) * std::sqrt(binom(n, k)) * std::pow(c, n - k) *
           pow_es;
    pow_es *= es;
  }
  return acc;
}

double fidelity(const SymmetricState &a, const SymmetricState &b) {
  return fidelity(a.coeffs(), b.coeffs());
}

} // namespace symbell
