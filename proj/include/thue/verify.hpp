#pragma once

#include "thue/approximant.hpp"
#include "thue/dyadic.hpp"
#include "thue/report.hpp"

#include <vector>

namespace thue {

// Exact integral of f over [0, X]: trapezoid over whole cells (exact, f is affine
// on each) plus exact affine integration over a trailing partial cell.
Dyadic integral_fn(const Approximant& f, const Dyadic& upper_limit);
Dyadic integral_fn(int n, const Dyadic& upper_limit);

// Residual of  integral_0^X f + f(0) = f(X/2).
struct ResidualRecord {
  int n = 0;
  Dyadic X;
  Dyadic integral;  // integral_0^X f_n
  Dyadic lhs;       // integral + f_n(0)
  Dyadic rhs;       // f_n(X/2)
  Dyadic residual;  // lhs - rhs

  friend bool operator==(const ResidualRecord&, const ResidualRecord&) = default;
};

ResidualRecord residual(const Approximant& f, const Dyadic& X);
ResidualRecord residual(int n, const Dyadic& X);

struct ScanRow {
  ResidualRecord record;
  // Same equation written as integral_0^{2X} f - f(X), i.e. the record evaluated at 2X.
  Dyadic doubled_form;
};

// Rows ordered by n, then by the order of Xs.
std::vector<ScanRow> residual_scan(int n_min, int n_max, const std::vector<Dyadic>& Xs);

// Grid-exact checks of the seven approximant properties on [0, 2 m_max + 2].
// `f` must be level n and `g` level n+1, both covering that interval.
VerificationReport lemma5_suite(const Approximant& f, const Approximant& g, int m_max);
VerificationReport lemma5_suite(int n, int m_max, const BuildOptions& options = {});

// f_n(2m+1) = u_m, f_n(2m) = 0, |f_n(x)| = |f_n(x+2)| at the nodes, f_n = 0 on x <= 0.
VerificationReport theorem_value_suite(const Approximant& f, int m_max);
VerificationReport theorem_value_suite(int m_max, int n, const BuildOptions& options = {});

}  // namespace thue
