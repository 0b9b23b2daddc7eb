#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expquad/integrators.hpp"

namespace expquad {

// Exact stepsize, kept rational so CSV output can echo it verbatim.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string text() const;
};

// Accepts "n", "n/d"; reduces to lowest terms.
Rational parse_rational(std::string_view s);

struct ConvergenceRecord {
  Rational k;
  double local_err = 0.0;
  std::optional<double> local_order;
  double global_err = 0.0;
  std::optional<double> global_order;
  double wall_time_s = 0.0;
};

// log2(err_coarse/err_fine); empty when either error is not positive.
std::optional<double> estimate_order(double err_coarse, double err_fine);

// One record per stepsize, decreasing. Local error is the maximum over all
// steps of the one-step defect from exact restricted data; global error is
// measured at T. Orders use dyadic ratios and are left empty off the
// dyadic grid or below the 1e-13 roundoff floor.
std::vector<ConvergenceRecord> run_convergence(const SpaceDiscretization& disc,
                                               const PhiEvaluator& ev,
                                               const Problem& prob,
                                               const IntegratorConfig& tmpl,
                                               const std::vector<Rational>& ks);

// Header k,local_err,local_order,global_err,global_order,wall_time_s;
// errors in scientific notation with 5 significant digits, missing orders
// as empty fields.
void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out);
void emit_csv(const std::vector<ConvergenceRecord>& records,
              const std::filesystem::path& path);

}  // namespace expquad
