#include "expquad/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "expquad/errors.hpp"

namespace expquad {

namespace {

constexpr double kErrorFloor = 1e-13;

long long parse_ll(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("parse_rational: bad integer '" + std::string(s) + "'");
  return v;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

std::string format_order(const std::optional<double>& o) {
  if (!o) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *o);
  return buf;
}

}  // namespace

std::string Rational::text() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(std::string_view s) {
  Rational r;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_ll(s);
    r.den = 1;
  } else {
    r.num = parse_ll(s.substr(0, slash));
    r.den = parse_ll(s.substr(slash + 1));
  }
  if (r.den <= 0) throw std::invalid_argument("parse_rational: denominator must be positive");
  const long long g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::optional<double> estimate_order(double err_coarse, double err_fine) {
  if (err_coarse <= 0.0 || err_fine <= 0.0) return std::nullopt;
  return std::log2(err_coarse / err_fine);
}

std::vector<ConvergenceRecord> run_convergence(const SpaceDiscretization& disc,
                                               const PhiEvaluator& ev,
                                               const Problem& prob,
                                               const IntegratorConfig& tmpl,
                                               const std::vector<Rational>& ks) {
  if (ks.empty()) throw std::invalid_argument("run_convergence: no stepsizes given");
  if (!prob.has_exact())
    throw std::invalid_argument("run_convergence: convergence study needs an exact solution");
  for (std::size_t i = 1; i < ks.size(); ++i)
    if (ks[i].value() >= ks[i - 1].value())
      throw std::invalid_argument("run_convergence: stepsizes must decrease");

  const double span = tmpl.T - tmpl.t0;
  std::vector<ConvergenceRecord> records;
  records.reserve(ks.size());

  for (std::size_t idx = 0; idx < ks.size(); ++idx) {
    const double k = ks[idx].value();
    if (k <= 0.0) throw std::invalid_argument("run_convergence: stepsize must be positive");
    const double steps = span / k;
    const long long N = std::llround(steps);
    if (std::abs(steps - static_cast<double>(N)) > 1e-12 * std::max(1.0, steps))
      throw std::invalid_argument("run_convergence: stepsize must divide the interval");

    const auto t_start = std::chrono::steady_clock::now();

    auto step = [&](const State& st) {
      return tmpl.approach == Approach::classical
                 ? classical_step(disc, ev, prob, tmpl.rule, st, k)
                 : corrected_step(disc, ev, prob, tmpl.rule, tmpl.p, st, k);
    };

    State state{tmpl.t0, restrict(disc, [&](double x) { return prob.u0(x); })};
    double local = 0.0;
    for (long long n = 0; n < N; ++n) {
      const double tn = tmpl.t0 + static_cast<double>(n) * k;
      state.t = tn;
      const State from_exact = step(
          {tn, restrict(disc, [&](double x) { return prob.exact(x, tn); })});
      const Eigen::VectorXd truth =
          restrict(disc, [&](double x) { return prob.exact(x, tn + k); });
      local = std::max(local, discrete_norm(disc, truth - from_exact.U));
      state = step(state);
    }
    const Eigen::VectorXd truth_T =
        restrict(disc, [&](double x) { return prob.exact(x, tmpl.T); });
    const double global = discrete_norm(disc, truth_T - state.U);

    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - t_start;

    ConvergenceRecord rec;
    rec.k = ks[idx];
    rec.local_err = local;
    rec.global_err = global;
    rec.wall_time_s = elapsed.count();
    if (idx > 0) {
      // Orders only on exact dyadic neighbors: k_prev = 2 k_curr.
      const Rational& kp = ks[idx - 1];
      const Rational& kc = ks[idx];
      const bool dyadic = kp.num * kc.den == 2 * kc.num * kp.den;
      if (dyadic) {
        const ConvergenceRecord& prev = records.back();
        if (prev.local_err >= kErrorFloor && local >= kErrorFloor)
          rec.local_order = estimate_order(prev.local_err, local);
        if (prev.global_err >= kErrorFloor && global >= kErrorFloor)
          rec.global_order = estimate_order(prev.global_err, global);
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out) {
  if (records.empty()) throw std::invalid_argument("emit_csv: no records");
  out << "k,local_err,local_order,global_err,global_order,wall_time_s\n";
  for (const auto& r : records) {
    out << r.k.text() << ',' << format_sci(r.local_err) << ','
        << format_order(r.local_order) << ',' << format_sci(r.global_err) << ','
        << format_order(r.global_order) << ',' << format_sci(r.wall_time_s)
        << '\n';
  }
}

void emit_csv(const std::vector<ConvergenceRecord>& records,
              const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("emit_csv: cannot write '" + path.string() + "'");
  emit_csv(records, out);
  out.flush();
  if (!out) throw IoError("emit_csv: write to '" + path.string() + "' failed");
}

}  // namespace expquad
