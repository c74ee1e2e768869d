#include "arbor/simplex.hpp"

#include <limits>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

void LinearProgram::add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != variable_count) {
    throw InputError("constraint has " + std::to_string(coefficients.size()) + " coefficients, expected " +
                     std::to_string(variable_count));
  }
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

// Condensed tableau: row i reads  x_basic[i] + sum_j rows[i][j] * x_nonbasic[j] = rhs[i],
// the objective row reads  z + sum_j cost[j] * x_nonbasic[j] = value.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;
  Rational value;
  std::vector<std::size_t> basic;     // variable label per row
  std::vector<std::size_t> nonbasic;  // variable label per column
  std::vector<bool> banned;           // per variable label: never enters

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = rows[r][c];
    auto& pr = rows[r];
    for (std::size_t j = 0; j < pr.size(); ++j) {
      if (j != c && sgn(pr[j]) != 0) pr[j] /= piv;
    }
    pr[c] = 1 / piv;
    rhs[r] /= piv;

    Rational term;
    auto eliminate = [&](std::vector<Rational>& row, Rational& b) {
      const Rational factor = row[c];
      if (sgn(factor) == 0) return;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j == c || sgn(pr[j]) == 0) continue;
        mpq_mul(term.get_mpq_t(), factor.get_mpq_t(), pr[j].get_mpq_t());
        row[j] -= term;
      }
      row[c] = -factor * pr[c];
      b -= factor * rhs[r];
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i], rhs[i]);
    }
    eliminate(cost, value);
    std::swap(basic[r], nonbasic[c]);
  }

  // Bland's rule until optimal; false if unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = none;
      for (std::size_t j = 0; j < cost.size(); ++j) {
        if (sgn(cost[j]) < 0 && !banned[nonbasic[j]] && (enter == none || nonbasic[j] < nonbasic[enter])) enter = j;
      }
      if (enter == none) return true;
      std::size_t leave = none;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave == none || ratio < best || (ratio == best && basic[i] < basic[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == none) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

struct SimplexEngine::State {
  std::size_t n = 0;
  std::vector<std::size_t> plus, minus;  // structural column per variable
  std::size_t labels = 0;
  Tableau t;
  bool feasible = false;
};

SimplexEngine::~SimplexEngine() = default;
SimplexEngine::SimplexEngine(SimplexEngine&&) noexcept = default;
SimplexEngine& SimplexEngine::operator=(SimplexEngine&&) noexcept = default;

bool SimplexEngine::feasible() const noexcept { return state_->feasible; }

SimplexEngine::SimplexEngine(const LinearProgram& lp) : state_(std::make_unique<State>()) {
  State& s = *state_;
  const std::size_t n = s.n = lp.variable_count;
  if (!lp.free_variables.empty() && lp.free_variables.size() != n) {
    throw InputError("free-variable flags do not match the variable count");
  }

  // Structural columns: a free variable splits into plus and minus parts.
  s.plus.assign(n, 0);
  s.minus.assign(n, none);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    s.plus[j] = structural++;
    if (!lp.free_variables.empty() && lp.free_variables[j]) s.minus[j] = structural++;
  }

  // Normalize rows to nonnegative right-hand sides.
  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
  };
  std::vector<Row> normalized;
  normalized.reserve(lp.constraints.size());
  bool artificial = false;
  for (const LinearConstraint& c : lp.constraints) {
    if (c.coefficients.size() != n) throw InputError("constraint length does not match the variable count");
    Row row{std::vector<Rational>(structural), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      row.a[s.plus[j]] = c.coefficients[j];
      if (s.minus[j] != none) row.a[s.minus[j]] = -c.coefficients[j];
    }
    if (sgn(row.b) < 0) {
      for (auto& v : row.a) v = -v;
      row.b = -row.b;
      if (row.rel == Relation::less_equal) row.rel = Relation::greater_equal;
      else if (row.rel == Relation::greater_equal) row.rel = Relation::less_equal;
    }
    artificial = artificial || row.rel != Relation::less_equal;
    normalized.push_back(std::move(row));
  }

  // Labels: structural, then slack or surplus (one per row), then artificials.
  const std::size_t m = normalized.size();
  const std::size_t first_artificial = structural + m;
  s.labels = first_artificial + m;
  Tableau& t = s.t;
  t.banned.assign(s.labels, false);
  for (std::size_t j = 0; j < structural; ++j) t.nonbasic.push_back(j);
  std::vector<std::size_t> surplus_column(m, none);
  for (std::size_t i = 0; i < m; ++i) {
    if (normalized[i].rel == Relation::greater_equal) {
      surplus_column[i] = t.nonbasic.size();
      t.nonbasic.push_back(structural + i);
    }
  }
  const std::size_t columns = t.nonbasic.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(columns);
    for (std::size_t j = 0; j < structural; ++j) row[j] = normalized[i].a[j];
    if (surplus_column[i] != none) row[surplus_column[i]] = -1;
    t.rows.push_back(std::move(row));
    t.rhs.push_back(normalized[i].b);
    t.basic.push_back(normalized[i].rel == Relation::less_equal ? structural + i : first_artificial + i);
  }

  s.feasible = true;
  if (!artificial) return;

  // Phase one: maximize minus the sum of artificials, which never re-enter.
  t.cost.assign(columns, Rational(0));
  t.value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basic[i] < first_artificial) continue;
    for (std::size_t j = 0; j < columns; ++j) t.cost[j] -= t.rows[i][j];
    t.value -= t.rhs[i];
  }
  for (std::size_t v = first_artificial; v < s.labels; ++v) t.banned[v] = true;
  t.optimize();
  if (sgn(t.value) < 0) {
    s.feasible = false;
    return;
  }
  // Drive zero-level artificials out of the basis, or drop their redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basic[i] < first_artificial) {
      ++i;
      continue;
    }
    std::size_t c = none;
    for (std::size_t j = 0; j < columns; ++j) {
      if (!t.banned[t.nonbasic[j]] && sgn(t.rows[i][j]) != 0) {
        c = j;
        break;
      }
    }
    if (c != none) {
      t.pivot(i, c);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      t.basic.erase(t.basic.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
}

LpSolution SimplexEngine::maximize(const std::vector<Rational>& objective) {
  State& s = *state_;
  if (objective.size() != s.n) throw InputError("objective length does not match the variable count");
  if (!s.feasible) return {LpStatus::infeasible, {}, {}};
  Tableau& t = s.t;

  // Objective row in terms of the current nonbasic columns.
  std::vector<Rational> c_of(s.labels);
  for (std::size_t j = 0; j < s.n; ++j) {
    c_of[s.plus[j]] = objective[j];
    if (s.minus[j] != none) c_of[s.minus[j]] = -objective[j];
  }
  const std::size_t columns = t.nonbasic.size();
  t.cost.assign(columns, Rational(0));
  t.value = 0;
  for (std::size_t j = 0; j < columns; ++j) t.cost[j] = -c_of[t.nonbasic[j]];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational& cb = c_of[t.basic[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < columns; ++j) t.cost[j] += cb * t.rows[i][j];
    t.value += cb * t.rhs[i];
  }
  if (!t.optimize()) return {LpStatus::unbounded, {}, {}};

  std::vector<Rational> label_value(s.labels);
  for (std::size_t i = 0; i < t.rows.size(); ++i) label_value[t.basic[i]] = t.rhs[i];
  LpSolution out;
  out.status = LpStatus::optimal;
  out.value = t.value;
  out.point.resize(s.n);
  for (std::size_t j = 0; j < s.n; ++j) {
    out.point[j] = label_value[s.plus[j]];
    if (s.minus[j] != none) out.point[j] -= label_value[s.minus[j]];
  }
  return out;
}

LpSolution simplex_solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.variable_count) throw InputError("objective length does not match the variable count");
  SimplexEngine engine(lp);
  return engine.maximize(lp.objective);
}

}  // namespace arbor
