#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lcn/rational.hpp"

namespace lcn {

// Exact two-phase primal simplex over rationals, dense tableau, Bland's rule
// for anti-cycling. Plenty for the LPs here: tens of rows, at most a few
// thousand columns (the column-generation wrappers keep masters small).

enum class Sense { le, ge, eq };

struct LpColumn {
    Rat cost;
    std::vector<std::pair<int, Rat>> entries;  // (row, coefficient), rows unique
};

struct LpProblem {
    std::vector<Sense> sense;
    std::vector<Rat> rhs;
    std::vector<LpColumn> cols;

    int add_row(Sense s, Rat b) {
        sense.push_back(s);
        rhs.push_back(std::move(b));
        return static_cast<int>(sense.size()) - 1;
    }
    int add_col(Rat cost, std::vector<std::pair<int, Rat>> entries) {
        cols.push_back(LpColumn{std::move(cost), std::move(entries)});
        return static_cast<int>(cols.size()) - 1;
    }
    int nrows() const { return static_cast<int>(sense.size()); }
    int ncols() const { return static_cast<int>(cols.size()); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::optimal;
    Rat objective;
    std::vector<Rat> x;  // structural variables
    std::vector<Rat> y;  // one dual per row (>=0 for ge rows, <=0 for le rows)
    long iterations = 0;
};

namespace detail {

class SimplexTableau {
   public:
    explicit SimplexTableau(const LpProblem& p) : p_(p), m_(p.nrows()) {
        flip_.assign(m_, 1);
        std::vector<Sense> sense = p.sense;
        std::vector<Rat> b = p.rhs;
        for (int i = 0; i < m_; ++i) {
            if (b[i] < 0) {
                flip_[i] = -1;
                b[i] = -b[i];
                sense[i] = sense[i] == Sense::le ? Sense::ge
                           : sense[i] == Sense::ge ? Sense::le
                                                   : Sense::eq;
            }
        }
        nstruct_ = p.ncols();
        // layout: structural | slack/surplus | artificial | rhs
        int nslack = 0, nart = 0;
        for (int i = 0; i < m_; ++i) {
            if (sense[i] == Sense::le || sense[i] == Sense::ge) ++nslack;
            if (sense[i] == Sense::ge || sense[i] == Sense::eq) ++nart;
        }
        ntot_ = nstruct_ + nslack + nart;
        t_.assign(m_, std::vector<Rat>(ntot_ + 1, Rat(0)));
        is_artificial_.assign(ntot_, false);
        basis_.assign(m_, -1);
        init_col_.assign(m_, -1);

        for (int j = 0; j < nstruct_; ++j)
            for (const auto& [row, coef] : p.cols[j].entries)
                t_[row][j] = flip_[row] > 0 ? coef : -coef;
        int next = nstruct_;
        for (int i = 0; i < m_; ++i) {
            if (sense[i] == Sense::le) {
                t_[i][next] = 1;
                basis_[i] = next;
                init_col_[i] = next;
                ++next;
            } else if (sense[i] == Sense::ge) {
                t_[i][next] = -1;
                ++next;
            }
        }
        for (int i = 0; i < m_; ++i) {
            if (sense[i] == Sense::ge || sense[i] == Sense::eq) {
                t_[i][next] = 1;
                is_artificial_[next] = true;
                basis_[i] = next;
                init_col_[i] = next;
                ++next;
            }
        }
        for (int i = 0; i < m_; ++i) t_[i][ntot_] = b[i];
    }

    LpSolution solve() {
        LpSolution sol;
        // phase 1: minimize the artificial sum
        std::vector<Rat> cost1(ntot_, Rat(0));
        for (int j = 0; j < ntot_; ++j)
            if (is_artificial_[j]) cost1[j] = 1;
        if (!run(cost1, /*allow_artificial=*/true)) {
            sol.status = LpStatus::unbounded;  // cannot happen: phase 1 is bounded below
            return sol;
        }
        Rat z1(0);
        for (int i = 0; i < m_; ++i)
            if (is_artificial_[basis_[i]]) z1 += t_[i][ntot_];
        if (z1 != 0) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        // Drive leftover zero-valued artificials out of the basis. Rows where
        // every non-artificial entry is zero are redundant: no later pivot can
        // touch them, so their artificial stays harmlessly at zero.
        for (int i = 0; i < m_; ++i) {
            if (!is_artificial_[basis_[i]]) continue;
            int enter = -1;
            for (int j = 0; j < ntot_ && enter < 0; ++j)
                if (!is_artificial_[j] && t_[i][j] != 0) enter = j;
            if (enter >= 0) pivot(i, enter);
        }
        // phase 2
        std::vector<Rat> cost2(ntot_, Rat(0));
        for (int j = 0; j < nstruct_; ++j) cost2[j] = p_.cols[j].cost;
        if (!run(cost2, /*allow_artificial=*/false)) {
            sol.status = LpStatus::unbounded;
            return sol;
        }
        sol.status = LpStatus::optimal;
        sol.x.assign(nstruct_, Rat(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < nstruct_) sol.x[basis_[i]] = t_[i][ntot_];
        sol.objective = 0;
        for (int j = 0; j < nstruct_; ++j)
            if (sol.x[j] != 0) sol.objective += p_.cols[j].cost * sol.x[j];
        // duals from the reduced costs of each row's initial identity column
        std::vector<Rat> red = reduced_costs(cost2);
        sol.y.assign(m_, Rat(0));
        for (int i = 0; i < m_; ++i) {
            Rat yi = -red[init_col_[i]];
            sol.y[i] = flip_[i] > 0 ? yi : -yi;
        }
        sol.iterations = iterations_;
        return sol;
    }

   private:
    std::vector<Rat> reduced_costs(const std::vector<Rat>& cost) const {
        std::vector<Rat> red = cost;
        for (int i = 0; i < m_; ++i) {
            const Rat& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j < ntot_; ++j)
                if (t_[i][j] != 0) red[j] -= cb * t_[i][j];
        }
        return red;
    }

    // Bland's rule primal simplex on the current basis; returns false iff
    // unbounded.
    bool run(const std::vector<Rat>& cost, bool allow_artificial) {
        std::vector<Rat> red = reduced_costs(cost);
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ntot_; ++j) {
                if (!allow_artificial && is_artificial_[j]) continue;
                if (red[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rat ratio = t_[i][ntot_] / t_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
            ++iterations_;
            // update the reduced-cost row like any other tableau row
            Rat factor = red[enter];
            if (factor != 0)
                for (int j = 0; j < ntot_; ++j)
                    if (t_[leave][j] != 0) red[j] -= factor * t_[leave][j];
        }
    }

    void pivot(int row, int col) {
        Rat inv = t_[row][col];
        for (int j = 0; j <= ntot_; ++j)
            if (t_[row][j] != 0) t_[row][j] /= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            Rat factor = t_[i][col];
            if (factor == 0) continue;
            for (int j = 0; j <= ntot_; ++j)
                if (t_[row][j] != 0) t_[i][j] -= factor * t_[row][j];
        }
        basis_[row] = col;
    }

    const LpProblem& p_;
    int m_, nstruct_ = 0, ntot_ = 0;
    std::vector<std::vector<Rat>> t_;
    std::vector<int> basis_, init_col_, flip_;
    std::vector<bool> is_artificial_;
    long iterations_ = 0;
};

}  // namespace detail

inline LpSolution solve_lp(const LpProblem& p) {
    if (p.nrows() == 0) {
        // the trivial program: everything at zero unless a negative cost makes
        // it unbounded
        LpSolution sol;
        for (const auto& c : p.cols)
            if (c.cost < 0) {
                sol.status = LpStatus::unbounded;
                return sol;
            }
        sol.status = LpStatus::optimal;
        sol.objective = 0;
        sol.x.assign(p.ncols(), Rat(0));
        return sol;
    }
    detail::SimplexTableau tab(p);
    return tab.solve();
}

}  // namespace lcn
