#include "cubevol/lp.hpp"

#include "cubevol/errors.hpp"

namespace cubevol::lp {

namespace {

class Tableau
{
    public:
        Tableau(const RationalMatrix& A, const std::vector<Rational>& b)
            : m_(A.size()), n_(A.empty() ? 0 : A.front().size()), rows_(m_), basis_(m_), row_sign_(m_, 1)
        {
            for (std::size_t i = 0; i < m_; ++i)
            {
                require(A[i].size() == n_, "constraint matrix rows must have equal length");
                row_sign_[i] = b[i] < 0 ? -1 : 1;
                rows_[i].assign(n_ + m_ + 1, Rational(0));
                for (std::size_t j = 0; j < n_; ++j)
                    rows_[i][j] = row_sign_[i] < 0 ? Rational(-A[i][j]) : A[i][j];
                rows_[i][n_ + i] = 1;
                rows_[i][n_ + m_] = row_sign_[i] < 0 ? Rational(-b[i]) : b[i];
                basis_[i] = n_ + i;
            }
        }

        /** Sets reduced costs for cost vector `cost` (length n + m). */
        void price(const std::vector<Rational>& cost)
        {
            reduced_.assign(n_ + m_ + 1, Rational(0));
            for (std::size_t j = 0; j < n_ + m_; ++j)
                reduced_[j] = cost[j];
            for (std::size_t i = 0; i < m_; ++i)
            {
                const Rational& cb = cost[basis_[i]];
                if (cb == 0)
                    continue;
                for (std::size_t j = 0; j <= n_ + m_; ++j)
                    if (rows_[i][j] != 0)
                        reduced_[j] -= cb * rows_[i][j];
            }
        }

        /**
         * Runs Bland's rule over columns [0, allowed). Returns the entering
         * column of an unbounded direction, or npos at optimality.
         */
        std::size_t run(std::size_t allowed, long& pivots)
        {
            for (;;)
            {
                std::size_t entering = npos;
                for (std::size_t j = 0; j < allowed; ++j)
                    if (reduced_[j] < 0)
                    {
                        entering = j;
                        break;
                    }
                if (entering == npos)
                    return npos;

                std::size_t leaving = npos;
                Rational best_ratio;
                for (std::size_t i = 0; i < m_; ++i)
                {
                    const Rational& a = rows_[i][entering];
                    if (a <= 0)
                        continue;
                    Rational ratio = rows_[i][n_ + m_] / a;
                    if (leaving == npos || ratio < best_ratio ||
                        (ratio == best_ratio && basis_[i] < basis_[leaving]))
                    {
                        leaving = i;
                        best_ratio = std::move(ratio);
                    }
                }
                if (leaving == npos)
                    return entering;
                pivot(leaving, entering);
                ++pivots;
            }
        }

        void pivot(std::size_t r, std::size_t col)
        {
            const Rational inv = 1 / rows_[r][col];
            for (auto& v : rows_[r])
                if (v != 0)
                    v *= inv;
            for (std::size_t i = 0; i < m_; ++i)
            {
                if (i == r || rows_[i][col] == 0)
                    continue;
                const Rational f = rows_[i][col];
                for (std::size_t j = 0; j <= n_ + m_; ++j)
                    if (rows_[r][j] != 0)
                        rows_[i][j] -= f * rows_[r][j];
            }
            if (reduced_[col] != 0)
            {
                const Rational f = reduced_[col];
                for (std::size_t j = 0; j <= n_ + m_; ++j)
                    if (rows_[r][j] != 0)
                        reduced_[j] -= f * rows_[r][j];
            }
            basis_[r] = col;
        }

        /** Pivots basic artificials out wherever an original column allows it. */
        void expel_artificials(long& pivots)
        {
            for (std::size_t i = 0; i < m_; ++i)
            {
                if (basis_[i] < n_)
                    continue;
                for (std::size_t j = 0; j < n_; ++j)
                    if (rows_[i][j] != 0)
                    {
                        pivot(i, j);
                        ++pivots;
                        break;
                    }
            }
        }

        std::vector<Rational> primal() const
        {
            std::vector<Rational> x(n_, Rational(0));
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] < n_)
                    x[basis_[i]] = rows_[i][n_ + m_];
            return x;
        }

        /** y with y_i = cost_B^T B^{-1} e_i, read off the artificial columns, in original row signs. */
        std::vector<Rational> duals(const std::vector<Rational>& cost) const
        {
            std::vector<Rational> y(m_);
            for (std::size_t i = 0; i < m_; ++i)
            {
                Rational yi = cost[n_ + i] - reduced_[n_ + i];
                y[i] = row_sign_[i] < 0 ? Rational(-yi) : yi;
            }
            return y;
        }

        std::vector<Rational> ray(std::size_t entering) const
        {
            std::vector<Rational> d(n_, Rational(0));
            d[entering] = 1;
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] < n_)
                    d[basis_[i]] = -rows_[i][entering];
            return d;
        }

        Rational objective_value() const { return -reduced_[n_ + m_]; }

        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    private:
        std::size_t m_;
        std::size_t n_;
        RationalMatrix rows_;
        std::vector<std::size_t> basis_;
        std::vector<int> row_sign_;
        std::vector<Rational> reduced_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

}   // namespace

LpResult minimize(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c)
{
    require(A.size() == b.size(), "right-hand side length must equal the number of rows");
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (const auto& row : A)
        require(row.size() == n, "cost length must equal the number of columns");

    LpResult result;
    Tableau tableau(A, b);

    std::vector<Rational> phase1(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        phase1[n + i] = 1;
    tableau.price(phase1);
    tableau.run(n, result.pivots);
    if (tableau.objective_value() > 0)
    {
        result.status = LpStatus::infeasible;
        result.farkas = tableau.duals(phase1);
        return result;
    }

    tableau.expel_artificials(result.pivots);
    std::vector<Rational> phase2(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        phase2[j] = c[j];
    tableau.price(phase2);
    const std::size_t unbounded = tableau.run(n, result.pivots);
    result.x = tableau.primal();
    if (unbounded != Tableau::npos)
    {
        result.status = LpStatus::unbounded;
        result.ray = tableau.ray(unbounded);
        return result;
    }
    result.status = LpStatus::optimal;
    result.objective = dot(c, result.x);
    result.dual = tableau.duals(phase2);
    return result;
}

bool check_certificate(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c,
                       const LpResult& result, std::string* why)
{
    auto fail = [&](const std::string& reason) {
        if (why)
            *why = reason;
        return false;
    };
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    auto column_dot = [&](const std::vector<Rational>& y, std::size_t j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (A[i][j] != 0 && y[i] != 0)
                s += A[i][j] * y[i];
        return s;
    };

    switch (result.status)
    {
        case LpStatus::optimal:
        {
            if (result.x.size() != n || result.dual.size() != m)
                return fail("certificate has wrong dimensions");
            for (std::size_t j = 0; j < n; ++j)
                if (result.x[j] < 0)
                    return fail("primal variable " + std::to_string(j) + " is negative");
            for (std::size_t i = 0; i < m; ++i)
                if (dot(A[i], result.x) != b[i])
                    return fail("primal constraint " + std::to_string(i) + " violated");
            for (std::size_t j = 0; j < n; ++j)
                if (c[j] - column_dot(result.dual, j) < 0)
                    return fail("dual constraint " + std::to_string(j) + " violated");
            if (dot(c, result.x) != result.objective || dot(b, result.dual) != result.objective)
                return fail("duality gap is not zero");
            return true;
        }
        case LpStatus::infeasible:
        {
            if (result.farkas.size() != m)
                return fail("Farkas vector has wrong length");
            for (std::size_t j = 0; j < n; ++j)
                if (column_dot(result.farkas, j) > 0)
                    return fail("Farkas condition A^T y <= 0 violated");
            if (dot(b, result.farkas) <= 0)
                return fail("Farkas condition b.y > 0 violated");
            return true;
        }
        case LpStatus::unbounded:
        {
            if (result.ray.size() != n)
                return fail("ray has wrong length");
            for (std::size_t j = 0; j < n; ++j)
                if (result.ray[j] < 0)
                    return fail("ray leaves the nonnegative orthant");
            for (std::size_t i = 0; i < m; ++i)
                if (dot(A[i], result.ray) != 0)
                    return fail("ray is not in the kernel of A");
            if (dot(c, result.ray) >= 0)
                return fail("ray does not decrease the objective");
            return true;
        }
    }
    return fail("unknown status");
}

std::string to_string(LpStatus status)
{
    switch (status)
    {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

}   // namespace cubevol::lp
