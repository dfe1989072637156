#pragma once

#include <cstddef>
#include <vector>

#include "semiord/errors.hpp"
#include "semiord/rational.hpp"

namespace semiord {

/// Exact two-phase primal simplex over the rationals, Bland's rule
/// throughout, so termination is guaranteed. Problem sizes here are tiny
/// (support sets of desk-scale polynomials), so no effort is spent on
/// sparsity or basis factorization.
///
/// Solves  min c.x  subject to  A x = b,  x >= 0.
class SimplexSolver {
 public:
  enum class Status { Optimal, Infeasible, Unbounded };

  struct Result {
    Status status;
    Rational objective;
    std::vector<Rational> x;
  };

  static Result solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                      std::vector<Rational> c) {
    SimplexSolver s(std::move(A), std::move(b), std::move(c));
    return s.run();
  }

 private:
  SimplexSolver(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                std::vector<Rational> c)
      : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
    rows_ = A_.size();
    cols_ = rows_ ? A_[0].size() : c_.size();
  }

  Result run() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (A_[r].size() != cols_) throw error("simplex: ragged constraint matrix");
      if (b_[r].sign() < 0) {
        for (auto& v : A_[r]) v = -v;
        b_[r] = -b_[r];
      }
    }

    // Tableau: original columns, then one artificial per row, then rhs.
    const std::size_t total = cols_ + rows_;
    tab_.assign(rows_, std::vector<Rational>(total + 1, Rational(0)));
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < cols_; ++j) tab_[r][j] = A_[r][j];
      tab_[r][cols_ + r] = Rational(1);
      tab_[r][total] = b_[r];
      basis_[r] = cols_ + r;
    }

    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> cost(total + 1, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j <= total; ++j) cost[j] -= tab_[r][j];
    for (std::size_t r = 0; r < rows_; ++r) cost[cols_ + r] = Rational(0);
    if (!iterate(cost, total)) throw error("simplex: phase 1 unbounded");
    if ((-cost[total]).sign() > 0) return {Status::Infeasible, Rational(0), {}};

    // Pivot any artificial still basic (at zero) out, or drop its row.
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) continue;
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!tab_[r][j].is_zero()) { enter = j; break; }
      if (enter == cols_) {
        tab_.erase(tab_.begin() + static_cast<long>(r));
        basis_.erase(basis_.begin() + static_cast<long>(r));
        --rows_; --r;
        continue;
      }
      pivot(r, enter);
    }

    // Phase 2 on the original objective, artificial columns frozen.
    cost.assign(total + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) cost[j] = c_[j];
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational f = cost[basis_[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= total; ++j) cost[j] -= f * tab_[r][j];
    }
    if (!iterate(cost, cols_)) return {Status::Unbounded, Rational(0), {}};

    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] < cols_) x[basis_[r]] = tab_[r].back();
    return {Status::Optimal, -cost.back(), std::move(x)};
  }

  /// Runs Bland pivots on columns [0, limit); returns false when unbounded.
  bool iterate(std::vector<Rational>& cost, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (cost[j].sign() < 0) { enter = j; break; }
      if (enter == limit) return true;

      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (tab_[r][enter].sign() <= 0) continue;
        const Rational ratio = tab_[r].back() / tab_[r][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;

      pivot(leave, enter);
      const Rational f = cost[enter];
      if (!f.is_zero())
        for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= f * tab_[leave][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = tab_[row][col];
    for (auto& v : tab_[row]) v /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Rational f = tab_[r][col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < tab_[r].size(); ++j) tab_[r][j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  std::vector<std::vector<Rational>> A_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> basis_;
  std::size_t rows_ = 0, cols_ = 0;
};

}  // namespace semiord
