#pragma once

#include <vector>

#include "spl/rational.hpp"

namespace spl {

enum class Variant { path, cycle };

// Largest integer r >= 1 with n - delta + floor(delta/r) > delta (path) or
// the ceiling analogue (cycle). Found by upward scan; the left side is
// non-increasing in r, so the first failure is final.
// Domain: n/2 < delta <= n-1, else DomainError.
long long r_value(Variant variant, long long n, long long delta);
long long r_value(Variant variant, long long n, const Rat& delta);

// Exact threshold value: path uses ceil(3x/2 + 1/2), cycle floor(3x/2), with
// x = ceil(delta / r), both capped at n.
long long threshold(Variant variant, long long n, long long delta);
long long threshold(Variant variant, long long n, const Rat& delta);

struct ThresholdPoint {
  long long n = 0;
  long long delta = 0;
  long long rp = 0;
  long long rc = 0;
  long long sqp = 0;
  long long sqc = 0;

  static ThresholdPoint make(long long n, long long delta);
};

struct SweepRow {
  long long delta = 0;
  long long value = 0;
  bool jump = false;  // value(delta) - value(delta-1) > 2
};

std::vector<SweepRow> sweep(Variant variant, long long n, long long delta_lo,
                            long long delta_hi);

// Exact rational evaluation of the analytic inequalities supporting the
// stability argument, together with their stated hypotheses. An inequality
// whose hypotheses cannot be met (or whose quantities leave the domain) is
// reported vacuously true with the hypothesis flag off.
struct InequalityReport {
  long long n = 0;
  long long delta = 0;
  Rat eta;
  Rat mu;

  long long r = 0;            // rp(n, delta)
  long long r_eta = -1;       // rp(n, delta + eta*n), -1 if out of domain
  long long sqp_eta = -1;     // sqp(n, delta + eta*n), -1 if out of domain

  bool eq_r_holds = false;
  bool eq_sqpa_holds = true;
  bool hyp_sqpa = false;
  bool eq_sqpb_first_holds = true;
  bool hyp_sqpb_first = false;
  bool eq_sqpb_second_holds = true;
  bool hyp_sqpb_second = false;

  bool eq_sqpb_holds() const {
    return eq_sqpb_first_holds && eq_sqpb_second_holds;
  }
  // True when some inequality fails while its hypotheses are met; this would
  // contradict the analytic claims and is surfaced prominently.
  bool falsified() const {
    return !eq_r_holds || (hyp_sqpa && !eq_sqpa_holds) ||
           (hyp_sqpb_first && !eq_sqpb_first_holds) ||
           (hyp_sqpb_second && !eq_sqpb_second_holds);
  }
};

InequalityReport check_inequalities(long long n, long long delta,
                                    const Rat& eta, const Rat& mu);

}  // namespace spl
