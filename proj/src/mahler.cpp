#include "knotlog/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "knotlog/error.hpp"
#include "knotlog/series.hpp"

namespace knotlog {

namespace {

MultiLaurent cofactor_det(const std::vector<const MultiLaurent*>& m, std::size_t n) {
  if (n == 1) return *m[0];
  MultiLaurent result(m[0]->nvars());
  std::vector<const MultiLaurent*> minor((n - 1) * (n - 1));
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col]->is_zero()) continue;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != col) minor[(i - 1) * (n - 1) + k++] = m[i * n + j];
      }
    }
    MultiLaurent term = mul(*m[col], cofactor_det(minor, n - 1));
    result = col % 2 == 0 ? add(result, term) : sub(result, term);
  }
  return result;
}

}  // namespace

MultiLaurent laurent_det(const LaurentMatrix& a, std::size_t nvars_if_empty) {
  if (a.rows != a.cols) {
    throw DomainError("determinant of a non-square " + std::to_string(a.rows) + "x" +
                      std::to_string(a.cols) + " matrix");
  }
  if (a.rows == 0) return MultiLaurent::constant(nvars_if_empty, 1);
  if (a.rows > 8) throw ResourceError("cofactor determinant limited to 8x8 matrices");
  std::vector<const MultiLaurent*> m;
  for (const auto& e : a.entries) {
    if (e.nvars() != a.entries[0].nvars()) throw DomainError("matrix entries over different variable counts");
    m.push_back(&e);
  }
  return cofactor_det(m, a.rows);
}

MahlerResult mahler_measure(const MultiLaurent& p, const QuadratureConfig& cfg) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial is undefined");
  if (cfg.points_per_dim < 2 || cfg.points_per_dim % 2 != 0) {
    throw DomainError("quadrature points per dimension must be even and at least 2");
  }
  if (!(cfg.singularity_floor > 0)) throw DomainError("singularity floor must be positive");

  const std::size_t nvars = p.nvars();
  Exponents low(nvars, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < nvars; ++i) low[i] = first ? e[i] : std::min(low[i], e[i]);
    first = false;
  }
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < nvars; ++i) {
    bool varies = std::any_of(p.terms().begin(), p.terms().end(),
                              [&](const auto& t) { return t.first[i] != low[i]; });
    if (varies) active.push_back(i);
  }

  MahlerResult result;
  result.active_variables = active.size();
  const double log_floor = std::log(cfg.singularity_floor);
  auto log_abs = [&](std::complex<double> v) {
    double a = std::abs(v);
    if (a < cfg.singularity_floor) {
      ++result.clamped;
      return log_floor;
    }
    return std::log(a);
  };

  if (active.empty()) {
    result.evaluations = 1;
    result.value = log_abs(p.terms().begin()->second.get_d());
    return result;
  }
  if (active.size() > cfg.max_dims) {
    throw ResourceError("Mahler quadrature over " + std::to_string(active.size()) +
                        " variables exceeds the limit of " + std::to_string(cfg.max_dims));
  }
  const long m = cfg.points_per_dim;
  const std::size_t s = active.size();
  double total_points = std::pow(static_cast<double>(m), static_cast<double>(s));
  if (total_points > static_cast<double>(cfg.max_points)) {
    throw ResourceError("quadrature grid of " + format_double(total_points) + " points exceeds the limit");
  }

  // factor[t][d][j] = z_d(j)^(e_t,d - low_d) with z(j) = exp(2 pi i (j + 1/2)/M).
  // The angle pi * e(2j+1)/M is reduced modulo 2 pi in integers first.
  std::vector<std::complex<double>> coeff;
  std::vector<std::vector<std::vector<std::complex<double>>>> factor;
  for (const auto& [e, c] : p.terms()) {
    coeff.push_back(c.get_d());
    std::vector<std::vector<std::complex<double>>> per_dim(s, std::vector<std::complex<double>>(m));
    for (std::size_t d = 0; d < s; ++d) {
      long shift = e[active[d]] - low[active[d]];
      for (long j = 0; j < m; ++j) {
        long numerator = static_cast<long>((static_cast<__int128>(shift) * (2 * j + 1)) % (2 * m));
        double angle = std::numbers::pi * static_cast<double>(numerator) / static_cast<double>(m);
        per_dim[d][j] = {std::cos(angle), std::sin(angle)};
      }
    }
    factor.push_back(std::move(per_dim));
  }

  const std::size_t nterms = coeff.size();
  std::vector<long> outer(s - 1, 0);
  std::vector<std::complex<double>> prefix(nterms);
  CompensatedSum total;
  for (;;) {
    for (std::size_t t = 0; t < nterms; ++t) {
      std::complex<double> v = coeff[t];
      for (std::size_t d = 0; d + 1 < s; ++d) v *= factor[t][d][outer[d]];
      prefix[t] = v;
    }
    CompensatedSum line;
    const std::size_t last = s - 1;
    for (long j = 0; j < m; ++j) {
      std::complex<double> v = 0;
      for (std::size_t t = 0; t < nterms; ++t) v += prefix[t] * factor[t][last][j];
      line.add(log_abs(v));
    }
    total.add(line.value());
    result.evaluations += static_cast<std::uint64_t>(m);

    std::size_t d = 0;
    while (d < outer.size() && ++outer[d] == m) outer[d++] = 0;
    if (d == outer.size()) break;
  }
  result.value = total.value() / total_points;
  return result;
}

PipelineResult mahler_of_presentation(const Presentation& p, const Symbol& deleted,
                                      const HomomorphismSpec& h, const QuadratureConfig& cfg) {
  PipelineResult r;
  r.jacobian = fox_jacobian(p);
  r.deleted = deleted;
  r.reduced = delete_column(r.jacobian, deleted);
  if (!r.reduced.is_square()) {
    throw DomainError("presentation has " + std::to_string(p.relators.size()) + " relators and " +
                      std::to_string(p.generators.size()) +
                      " generators; deleting a column must leave a square matrix");
  }
  std::optional<bool> respects = respects_relators(p, h);
  if (!respects) {
    r.caveats.push_back("some relator generators have no image; compatibility with the relators was not checked");
  } else if (!*respects) {
    r.caveats.push_back("homomorphism does not send every relator to 1; the evaluation is not defined on the group");
  }
  r.evaluated = evaluate_hom(r.reduced, h);
  r.variables = h.variables.empty() ? std::vector<std::string>{"x"} : h.variables;
  r.determinant = laurent_det(r.evaluated, h.nvars());
  r.measure = mahler_measure(r.determinant, cfg);
  r.value = 2.0 * r.measure.value;
  return r;
}

}  // namespace knotlog
