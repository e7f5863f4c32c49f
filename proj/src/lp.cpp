#include "tfr/lp.hpp"

#include <algorithm>
#include <cassert>

namespace tfr {

void LinearProgram::add_eq(QVec row, Rat rhs) {
    assert(row.size() == nvars);
    eq.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_ge(QVec row, Rat rhs) {
    assert(row.size() == nvars);
    ge.push_back(std::move(row));
    ge_rhs.push_back(std::move(rhs));
}

namespace {

// One inequality sum(coef[j] x_j) >= rhs.
struct Ineq {
    QVec coef;
    Rat rhs;
};

}  // namespace

std::optional<QVec> feasible_point(const LinearProgram& lp) {
    const size_t n = lp.nvars;

    // Stage 1: eliminate the equalities by Gaussian substitution.
    // subst[v] = (row, rhs): x_v = rhs - sum_{j != v} row[j] x_j.
    QMat aug(lp.eq.size());
    for (size_t i = 0; i < lp.eq.size(); ++i) {
        aug[i] = lp.eq[i];
        aug[i].push_back(lp.eq_rhs[i]);
    }
    std::vector<std::optional<std::pair<QVec, Rat>>> subst(n);
    {
        std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
        size_t row = 0;
        for (size_t col = 0; col < n && row < aug.size(); ++col) {
            size_t pr = row;
            while (pr < aug.size() && aug[pr][col] == 0) ++pr;
            if (pr == aug.size()) continue;
            std::swap(aug[row], aug[pr]);
            const Rat piv = aug[row][col];
            for (auto& x : aug[row]) x /= piv;
            for (size_t i = 0; i < aug.size(); ++i) {
                if (i == row || aug[i][col] == 0) continue;
                const Rat f = aug[i][col];
                for (size_t j = 0; j <= n; ++j) aug[i][j] -= f * aug[row][j];
            }
            pivots.emplace_back(row, col);
            ++row;
        }
        // read substitutions off the fully reduced rows, so they only
        // mention free variables
        for (auto [r, col] : pivots) {
            QVec coefs(aug[r].begin(), aug[r].begin() + n);
            coefs[col] = 0;
            subst[col] = std::make_pair(std::move(coefs), aug[r][n]);
        }
        for (size_t i = row; i < aug.size(); ++i) {
            bool zero = std::all_of(aug[i].begin(), aug[i].begin() + n,
                                    [](const Rat& x) { return x == 0; });
            if (zero && aug[i][n] != 0) return std::nullopt;
        }
    }

    // Rewrite the inequalities in terms of the free variables only.
    std::vector<Ineq> sys;
    for (size_t i = 0; i < lp.ge.size(); ++i) {
        Ineq q{lp.ge[i], lp.ge_rhs[i]};
        for (size_t v = 0; v < n; ++v) {
            if (!subst[v] || q.coef[v] == 0) continue;
            const Rat f = q.coef[v];
            q.coef[v] = 0;
            const auto& [row, rhs] = *subst[v];
            q.rhs -= f * rhs;
            for (size_t j = 0; j < n; ++j) q.coef[j] -= f * row[j];
        }
        sys.push_back(std::move(q));
    }

    std::vector<size_t> free_vars;
    for (size_t v = 0; v < n; ++v)
        if (!subst[v]) free_vars.push_back(v);

    // Stage 2: Fourier–Motzkin, eliminating free variables back to front.
    // stages[k] holds the system before eliminating free_vars[k].
    std::vector<std::vector<Ineq>> stages;
    for (size_t k = free_vars.size(); k-- > 0;) {
        const size_t v = free_vars[k];
        stages.push_back(sys);
        std::vector<Ineq> next;
        std::vector<const Ineq*> pos, neg;
        for (const auto& q : sys) {
            const int s = sign(q.coef[v]);
            if (s > 0)
                pos.push_back(&q);
            else if (s < 0)
                neg.push_back(&q);
            else
                next.push_back(q);
        }
        for (const Ineq* p : pos)
            for (const Ineq* m : neg) {
                // p: x_v >= (p.rhs - rest)/p.coef ; m gives an upper bound
                Ineq q;
                q.coef.assign(n, Rat(0));
                const Rat a = p->coef[v], b = -m->coef[v];
                for (size_t j = 0; j < n; ++j)
                    q.coef[j] = p->coef[j] * b + m->coef[j] * a;
                q.coef[v] = 0;
                q.rhs = p->rhs * b + m->rhs * a;
                next.push_back(std::move(q));
            }
        sys = std::move(next);
    }
    std::reverse(stages.begin(), stages.end());  // stages[k] matches free_vars[k]

    for (const auto& q : sys) {
        assert(std::all_of(q.coef.begin(), q.coef.end(), [](const Rat& x) { return x == 0; }));
        if (q.rhs > 0) return std::nullopt;
    }

    // Stage 3: back-substitute in reverse elimination order; stages[k]
    // mentions only free_vars[0..k], all assigned by the time it is used.
    QVec x(n, Rat(0));
    for (size_t k = 0; k < free_vars.size(); ++k) {
        const size_t v = free_vars[k];
        std::optional<Rat> lo, hi;
        for (const auto& q : stages[k]) {
            Rat rest = q.rhs;
            for (size_t j = 0; j < n; ++j)
                if (j != v) rest -= q.coef[j] * x[j];
            const int s = sign(q.coef[v]);
            if (s == 0) continue;
            const Rat bound = rest / q.coef[v];
            if (s > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi)
            x[v] = (*lo + *hi) / 2;
        else if (lo)
            x[v] = *lo;
        else if (hi)
            x[v] = *hi;
        else
            x[v] = 0;
    }
    for (size_t v = 0; v < n; ++v) {
        if (!subst[v]) continue;
        const auto& [row, rhs] = *subst[v];
        Rat val = rhs;
        for (size_t j = 0; j < n; ++j) val -= row[j] * x[j];
        x[v] = val;
    }
    return x;
}

std::optional<QVec> strictly_positive_functional(const IMat& gens, size_t dim) {
    LinearProgram lp;
    lp.nvars = dim;
    for (const auto& g : gens) {
        if (is_zero(g)) continue;
        lp.add_ge(to_rational(g), Rat(1));
    }
    return feasible_point(lp);
}

}  // namespace tfr
