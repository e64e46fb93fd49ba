#include "betafam/search.hpp"

#include "betafam/betafamily.hpp"
#include "betafam/parallel.hpp"

namespace betafam {

SearchProblem make_search_problem(std::uint64_t p, std::uint64_t i, std::uint64_t j)
{
    if (p < 5 || i < 1 || j < 1)
        throw std::domain_error("search problem needs p >= 5 and i, j >= 1");
    SearchProblem prob;
    prob.p = p;
    prob.i = i;
    prob.j = j;
    std::uint64_t bound = (p - 1) * j; // need 12m < bound
    prob.M = bound > 12 ? (bound - 1) / 12 : 0;
    prob.M = std::min(prob.M, 2 * i); // cannot exceed the coordinate range
    return prob;
}

namespace {

// y-image of L2(Delta^(2i-m) E4^(3m)) mod 5, coefficients through y^(rows-1).
std::vector<std::uint64_t> column_p5(std::uint64_t i, std::uint64_t m, std::size_t rows)
{
    Level1Form mono = monomial_form(static_cast<std::int64_t>(2 * i - m),
                                    static_cast<std::int64_t>(3 * m), Int(1));
    DehomogPoly py = to_y_variable(dehomogenize(l2_p(mono, 5)));
    std::vector<std::uint64_t> col(rows, 0);
    for (std::size_t k = 0; k < rows; ++k)
        col[k] = py.poly.coeff(k);
    return col;
}

// Echelon solve of A c = b over Z/p with free variables set to 0.
// Returns false if inconsistent.
bool solve_mod_p(std::vector<std::vector<std::uint64_t>>& rows_aug, std::size_t ncols,
                 std::uint64_t p, std::vector<std::uint64_t>& solution)
{
    const std::size_t nrows = rows_aug.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = rank;
        while (piv < nrows && rows_aug[piv][col] == 0)
            ++piv;
        if (piv == nrows)
            continue;
        std::swap(rows_aug[rank], rows_aug[piv]);
        std::uint64_t inv = inv_mod_p(rows_aug[rank][col], p);
        for (auto& x : rows_aug[rank])
            x = x * inv % p;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || rows_aug[r][col] == 0)
                continue;
            std::uint64_t f = rows_aug[r][col];
            for (std::size_t c = col; c <= ncols; ++c)
                rows_aug[r][c] = (rows_aug[r][c] + p - f * rows_aug[rank][c] % p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < nrows; ++r)
        if (rows_aug[r][ncols] != 0)
            return false;
    solution.assign(ncols, 0);
    for (std::size_t r = 0; r < rank; ++r)
        solution[pivot_col[r]] = rows_aug[r][ncols];
    return true;
}

} // namespace

SolveResult search_solve(std::uint64_t p, std::uint64_t i, std::uint64_t j, bool allow_nonfamily,
                         EisensteinCache& cache)
{
    SolveResult res;
    res.problem = make_search_problem(p, i, j);
    if (!allow_nonfamily && !is_order_p(p, i, j)) {
        res.status = SolveResult::Status::unsupported;
        res.detail = "(i, j) is not an order-p index; pass the non-family override to force it";
        return res;
    }
    const std::uint64_t M = res.problem.M;
    const std::int64_t weight = static_cast<std::int64_t>(i * (p * p - 1));

    if (p != 5 && M > 0) {
        res.status = SolveResult::Status::unsupported;
        res.detail = "coefficient search beyond the pure Delta power is only built at p = 5";
        return res;
    }

    Level1Form form = monomial_form(weight / 12, 0, Int(1));
    res.coeffs.assign(M, 0);
    if (p == 5) {
        // Equations: coefficients of y^0..y^(j-1) of P(y) for L2(f) vanish.
        const std::size_t rows = static_cast<std::size_t>(j);
        std::vector<std::uint64_t> rhs = column_p5(i, 0, rows);
        std::vector<std::vector<std::uint64_t>> cols(M);
        parallel_for(M, [&](std::size_t k) { cols[k] = column_p5(i, k + 1, rows); });

        std::vector<std::vector<std::uint64_t>> aug(rows,
                                                    std::vector<std::uint64_t>(M + 1, 0));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < M; ++c)
                aug[r][c] = cols[c][r];
            aug[r][M] = (5 - rhs[r] % 5) % 5;
        }
        std::vector<std::uint64_t> sol;
        if (!solve_mod_p(aug, M, 5, sol)) {
            res.status = SolveResult::Status::no_solution;
            res.detail = "the divisibility system has no solution over Z/5";
            return res;
        }
        res.coeffs = sol;
        for (std::uint64_t m = 1; m <= M; ++m)
            if (sol[m - 1] != 0)
                form = form + monomial_form(static_cast<std::int64_t>(2 * i - m),
                                            static_cast<std::int64_t>(3 * m), Int(sol[m - 1]));
    }

    res.form = form;
    res.report = check_all(form, p, i, j, cache);
    res.status = res.report.all_passed() ? SolveResult::Status::solved
                                         : SolveResult::Status::postcondition_failure;
    if (!res.report.all_passed())
        res.detail = "solution of the linear system fails condition " + res.report.failed_stage;
    return res;
}

SolveResult search_solve(std::uint64_t p, std::uint64_t i, std::uint64_t j, bool allow_nonfamily)
{
    return search_solve(p, i, j, allow_nonfamily, default_eisenstein_cache());
}

std::vector<std::optional<std::uint64_t>> divisibility_table(std::uint64_t i, std::uint64_t m_lo,
                                                             std::uint64_t m_hi)
{
    if (m_hi < m_lo || m_hi > 2 * i)
        throw std::domain_error("divisibility_table: need m_lo <= m_hi <= 2i");
    std::vector<std::optional<std::uint64_t>> out(m_hi - m_lo + 1);
    parallel_for(out.size(), [&](std::size_t k) {
        std::uint64_t m = m_lo + k;
        Level1Form mono = monomial_form(static_cast<std::int64_t>(2 * i - m),
                                        static_cast<std::int64_t>(3 * m), Int(1));
        out[k] = e4_div_order_p5(mono);
    });
    return out;
}

} // namespace betafam
