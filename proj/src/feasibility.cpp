#include "omsep/feasibility.hpp"

#include "omsep/errors.hpp"

namespace omsep {

std::optional<std::vector<mpq_class>> strict_sign_feasibility(const std::vector<SignConstraint>& rows, int dim) {
  const int m = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.coeffs.size()) != dim) throw Error("constraint has the wrong dimension");
  // Columns: u (dim), v (dim) with x = u - v, one surplus per strict row,
  // one artificial per row, then the right-hand side.
  std::vector<int> surplus_col(m, -1);
  int cols = 2 * dim;
  for (int i = 0; i < m; ++i)
    if (rows[i].sign != Sign::Zero) surplus_col[i] = cols++;
  const int art0 = cols;
  cols += m;
  const int rhs = cols;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(cols + 1, 0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const int s = static_cast<int>(rows[i].sign);
    const int f = s == 0 ? 1 : s;
    for (int j = 0; j < dim; ++j) {
      t[i][j] = rows[i].coeffs[j] * f;
      t[i][dim + j] = -t[i][j];
    }
    if (surplus_col[i] >= 0) t[i][surplus_col[i]] = -1;
    t[i][art0 + i] = 1;
    t[i][rhs] = s == 0 ? 0 : 1;
    basis[i] = art0 + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<mpq_class> red(cols + 1, 0);
  for (int j = 0; j <= cols; ++j) {
    if (j >= art0 && j < rhs) continue;
    for (int i = 0; i < m; ++i) red[j] -= t[i][j];
  }
  for (;;) {
    int enter = -1;
    for (int j = 0; j < rhs; ++j)
      if (red[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    mpq_class best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Error("phase-one objective unbounded");
    const mpq_class piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const mpq_class f = t[i][enter];
      for (int j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (red[enter] != 0) {
      const mpq_class f = red[enter];
      for (int j = 0; j <= cols; ++j)
        if (t[leave][j] != 0) red[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (red[rhs] != 0) return std::nullopt;  // minimum of the artificials is -red[rhs]
  std::vector<mpq_class> y(rhs, 0);
  for (int i = 0; i < m; ++i) y[basis[i]] = t[i][rhs];
  std::vector<mpq_class> x(dim);
  for (int j = 0; j < dim; ++j) x[j] = y[j] - y[dim + j];
  for (const auto& r : rows) {
    mpq_class dot = 0;
    for (int j = 0; j < dim; ++j) dot += r.coeffs[j] * x[j];
    const Sign s = dot > 0 ? Sign::Plus : dot < 0 ? Sign::Minus : Sign::Zero;
    if (s != r.sign) throw Error("feasibility witness failed verification");
  }
  return x;
}

}  // namespace omsep
