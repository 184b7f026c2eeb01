#include "chowlab/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "chowlab/errors.hpp"

namespace chowlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kReducedTol = 1e-9;
constexpr double kPivotTol = 1e-9;

enum class VarState : unsigned char { basic, at_lower, at_upper };

// The tableau is tiny in the row dimension (n+1 rows for 2^n columns), so the
// basis inverse is simply refactorized from scratch every pivot: O(m^3) is
// cheaper than one pricing pass and there is no accumulated drift.
class Solver {
public:
    explicit Solver(const LpProblem& p) : p_(p), m_(p.nrows), ns_(p.nvars) {
        if (p_.cost.size() != ns_ || p_.lo.size() != ns_ || p_.hi.size() != ns_ ||
            p_.cols.size() != ns_ * m_ || p_.b.size() != m_)
            throw ParamError("malformed LP problem");
        total_ = ns_ + m_;
        lo_.assign(p_.lo.begin(), p_.lo.end());
        hi_.assign(p_.hi.begin(), p_.hi.end());
        lo_.resize(total_, 0.0);
        hi_.resize(total_, kInf);
        state_.assign(total_, VarState::at_lower);
        basis_.resize(m_);
        art_sign_.assign(m_, 1.0);

        // nonbasic structurals start at the bound closer to zero
        for (std::size_t j = 0; j < ns_; ++j) {
            if (std::isfinite(lo_[j]) &&
                (!std::isfinite(hi_[j]) || std::fabs(lo_[j]) <= std::fabs(hi_[j])))
                state_[j] = VarState::at_lower;
            else
                state_[j] = VarState::at_upper;
        }

        std::vector<double> r = p_.b;
        for (std::size_t j = 0; j < ns_; ++j) {
            const double xj = nonbasic_value(j);
            if (xj == 0.0) continue;
            const double* col = p_.col(j);
            for (std::size_t i = 0; i < m_; ++i) r[i] -= col[i] * xj;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            art_sign_[i] = r[i] >= 0.0 ? 1.0 : -1.0;
            basis_[i] = ns_ + i;
            state_[ns_ + i] = VarState::basic;
        }

        binv_.assign(m_ * m_, 0.0);
        xb_.assign(m_, 0.0);
        pi_.assign(m_, 0.0);
        work_.assign(m_, 0.0);
    }

    LpSolution run() {
        const double feas_limit = p_.feas_tol * (1.0 + max_abs(p_.b));
        const std::size_t max_pivots = 10000 + 100 * total_;
        std::size_t pivots = 0;
        bool phase1 = true;

        for (;;) {
            refactorize();
            compute_xb();
            const double obj = objective(phase1);

            if (phase1 && obj <= feas_limit) {
                phase1 = false;
                // artificials are pinned at zero from here on
                for (std::size_t i = 0; i < m_; ++i) hi_[ns_ + i] = 0.0;
                continue;
            }
            if (!phase1 && p_.stop_below && obj < *p_.stop_below)
                return finish(LpStatus::cutoff, obj);

            compute_pi(phase1);
            const std::size_t enter = price(phase1);
            if (enter == total_) {
                if (phase1) return finish(LpStatus::infeasible, obj);
                return finish(LpStatus::optimal, obj);
            }

            if (++pivots > max_pivots) throw Error("simplex pivot limit exceeded");

            // direction of change of the basic values per unit move of the
            // entering variable along its improving direction
            fill_column(enter, work_);
            std::vector<double> w(m_);
            solve_b(work_, w);
            const double dir = state_[enter] == VarState::at_lower ? 1.0 : -1.0;

            double best_delta = hi_[enter] - lo_[enter];  // bound-flip span, may be inf
            std::size_t leave_pos = m_;                    // m_ means bound flip
            bool leave_to_upper = false;
            for (std::size_t k = 0; k < m_; ++k) {
                const double s = dir * w[k];
                const std::size_t vb = basis_[k];
                double delta;
                bool to_upper;
                if (s > kPivotTol) {
                    delta = (xb_[k] - lo_[vb]) / s;
                    to_upper = false;
                } else if (s < -kPivotTol && std::isfinite(hi_[vb])) {
                    delta = (hi_[vb] - xb_[k]) / (-s);
                    to_upper = true;
                } else {
                    continue;
                }
                if (delta < 0.0) delta = 0.0;
                if (delta < best_delta - kPivotTol ||
                    (delta < best_delta + kPivotTol &&
                     (leave_pos == m_ || vb < basis_[leave_pos]))) {
                    best_delta = delta;
                    leave_pos = k;
                    leave_to_upper = to_upper;
                }
            }

            if (leave_pos == m_) {
                if (!std::isfinite(best_delta)) {
                    if (phase1) throw Error("phase-1 ray (numerical failure)");
                    return finish(LpStatus::unbounded, obj);
                }
                // entering variable runs to its opposite bound
                state_[enter] = state_[enter] == VarState::at_lower ? VarState::at_upper
                                                                    : VarState::at_lower;
            } else {
                const std::size_t leaving = basis_[leave_pos];
                state_[leaving] = leave_to_upper ? VarState::at_upper : VarState::at_lower;
                basis_[leave_pos] = enter;
                state_[enter] = VarState::basic;
            }
        }
    }

private:
    double nonbasic_value(std::size_t j) const {
        return state_[j] == VarState::at_upper ? hi_[j] : lo_[j];
    }

    static double max_abs(const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::fabs(x));
        return m;
    }

    double var_cost(std::size_t j, bool phase1) const {
        if (phase1) return j >= ns_ ? 1.0 : 0.0;
        return j >= ns_ ? 0.0 : p_.cost[j];
    }

    void fill_column(std::size_t j, std::vector<double>& out) const {
        if (j < ns_) {
            const double* col = p_.col(j);
            std::copy(col, col + m_, out.begin());
        } else {
            std::fill(out.begin(), out.end(), 0.0);
            out[j - ns_] = art_sign_[j - ns_];
        }
    }

    void refactorize() {
        // Gauss-Jordan with partial pivoting on the basis matrix
        std::vector<double> mat(m_ * m_);
        std::vector<double> colbuf(m_);
        for (std::size_t k = 0; k < m_; ++k) {
            fill_column(basis_[k], colbuf);
            for (std::size_t i = 0; i < m_; ++i) mat[i * m_ + k] = colbuf[i];
        }
        std::fill(binv_.begin(), binv_.end(), 0.0);
        for (std::size_t i = 0; i < m_; ++i) binv_[i * m_ + i] = 1.0;

        for (std::size_t c = 0; c < m_; ++c) {
            std::size_t piv = c;
            for (std::size_t i = c + 1; i < m_; ++i)
                if (std::fabs(mat[i * m_ + c]) > std::fabs(mat[piv * m_ + c])) piv = i;
            if (std::fabs(mat[piv * m_ + c]) < 1e-12) throw Error("singular LP basis");
            if (piv != c) {
                for (std::size_t j = 0; j < m_; ++j) {
                    std::swap(mat[piv * m_ + j], mat[c * m_ + j]);
                    std::swap(binv_[piv * m_ + j], binv_[c * m_ + j]);
                }
            }
            const double inv = 1.0 / mat[c * m_ + c];
            for (std::size_t j = 0; j < m_; ++j) {
                mat[c * m_ + j] *= inv;
                binv_[c * m_ + j] *= inv;
            }
            for (std::size_t i = 0; i < m_; ++i) {
                if (i == c) continue;
                const double factor = mat[i * m_ + c];
                if (factor == 0.0) continue;
                for (std::size_t j = 0; j < m_; ++j) {
                    mat[i * m_ + j] -= factor * mat[c * m_ + j];
                    binv_[i * m_ + j] -= factor * binv_[c * m_ + j];
                }
            }
        }
    }

    void compute_xb() {
        std::vector<double> r = p_.b;
        for (std::size_t j = 0; j < total_; ++j) {
            if (state_[j] == VarState::basic) continue;
            const double xj = nonbasic_value(j);
            if (xj == 0.0) continue;
            fill_column(j, work_);
            for (std::size_t i = 0; i < m_; ++i) r[i] -= work_[i] * xj;
        }
        solve_b(r, xb_);
    }

    void solve_b(const std::vector<double>& rhs, std::vector<double>& out) const {
        for (std::size_t i = 0; i < m_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m_; ++j) s += binv_[i * m_ + j] * rhs[j];
            out[i] = s;
        }
    }

    double objective(bool phase1) const {
        double obj = 0.0;
        for (std::size_t j = 0; j < total_; ++j) {
            if (state_[j] == VarState::basic) continue;
            obj += var_cost(j, phase1) * nonbasic_value(j);
        }
        for (std::size_t k = 0; k < m_; ++k) obj += var_cost(basis_[k], phase1) * xb_[k];
        return obj;
    }

    void compute_pi(bool phase1) {
        for (std::size_t r = 0; r < m_; ++r) {
            double s = 0.0;
            for (std::size_t k = 0; k < m_; ++k)
                s += var_cost(basis_[k], phase1) * binv_[k * m_ + r];
            pi_[r] = s;
        }
    }

    // Bland's rule: smallest eligible variable index
    std::size_t price(bool phase1) const {
        for (std::size_t j = 0; j < total_; ++j) {
            if (state_[j] == VarState::basic) continue;
            if (lo_[j] == hi_[j]) continue;  // fixed, includes retired artificials
            double d = var_cost(j, phase1);
            if (j < ns_) {
                const double* col = p_.col(j);
                for (std::size_t i = 0; i < m_; ++i) d -= pi_[i] * col[i];
            } else {
                d -= pi_[j - ns_] * art_sign_[j - ns_];
            }
            if (state_[j] == VarState::at_lower ? d < -kReducedTol : d > kReducedTol) return j;
        }
        return total_;
    }

    LpSolution finish(LpStatus status, double obj) {
        LpSolution sol;
        sol.status = status;
        sol.objective = obj;
        sol.pi = pi_;
        sol.x.resize(ns_);
        for (std::size_t j = 0; j < ns_; ++j)
            if (state_[j] != VarState::basic) sol.x[j] = nonbasic_value(j);
        for (std::size_t k = 0; k < m_; ++k)
            if (basis_[k] < ns_) sol.x[basis_[k]] = xb_[k];
        return sol;
    }

    const LpProblem& p_;
    std::size_t m_, ns_, total_ = 0;
    std::vector<double> lo_, hi_;
    std::vector<VarState> state_;
    std::vector<std::size_t> basis_;
    std::vector<double> art_sign_;
    std::vector<double> binv_, xb_, pi_, work_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) { return Solver(p).run(); }

}  // namespace chowlab
