#include "torlim/resolution.hpp"

#include <stdexcept>

#include "torlim/errors.hpp"
#include "torlim/parallel.hpp"
#include "torlim/rng.hpp"
#include "torlim/smith.hpp"

namespace torlim {

std::size_t FreeResolution::total_rank() const {
    std::size_t total = 0;
    for (std::size_t n = 0; n <= complex.length(); ++n) total += complex.object(n).generators();
    return total;
}

FreeResolution canonical_resolution(const FpModule& m) {
    const std::size_t g = m.generators();
    IntMatrix lattice = column_hermite_basis(m.relations().transpose());
    FpModule p0 = free_module(g);
    ModuleMap aug(p0, m, IntMatrix::identity(g));
    if (lattice.cols() == 0) return FreeResolution{ChainComplex({p0}, {}), std::move(aug)};
    FpModule p1 = free_module(lattice.cols());
    ModuleMap d1(p1, p0, std::move(lattice));
    return FreeResolution{ChainComplex({p0, p1}, {d1}), std::move(aug)};
}

std::pair<IntMatrix, IntMatrix> random_unimodular(SeededRng& rng, std::size_t n, std::size_t steps) {
    IntMatrix t = IntMatrix::identity(n);
    IntMatrix t_inv = IntMatrix::identity(n);
    if (n == 0) return {t, t_inv};
    for (std::size_t s = 0; s < steps; ++s) {
        switch (rng.below(n >= 2 ? 3 : 1)) {
            case 0: {  // negate a row
                std::size_t i = rng.below(n);
                t.negate_row(i);
                t_inv.negate_col(i);
                break;
            }
            case 1: {  // row_i += c * row_j, c in [-3, 3] \ {0}
                std::size_t i = rng.below(n);
                std::size_t j = rng.below(n - 1);
                if (j >= i) ++j;
                long c = rng.range(1, 3) * (rng.chance(1, 2) ? 1 : -1);
                t.row_axpy(i, j, Int(c));
                t_inv.col_axpy(j, i, Int(-c));
                break;
            }
            default: {  // swap two rows
                std::size_t i = rng.below(n);
                std::size_t j = rng.below(n - 1);
                if (j >= i) ++j;
                t.swap_rows(i, j);
                t_inv.swap_cols(i, j);
                break;
            }
        }
    }
    return {t, t_inv};
}

FreeResolution twist_resolution(const FreeResolution& p, std::uint64_t seed) {
    SeededRng rng(seed);
    const std::size_t len = p.complex.length();
    std::vector<IntMatrix> t(len + 1), t_inv(len + 1);
    for (std::size_t n = 0; n <= len; ++n) {
        auto [m, m_inv] = random_unimodular(rng, p.complex.object(n).generators(),
                                            2 * p.complex.object(n).generators() + 2);
        t[n] = std::move(m);
        t_inv[n] = std::move(m_inv);
    }
    std::vector<FpModule> objects;
    for (std::size_t n = 0; n <= len; ++n) objects.push_back(p.complex.object(n));
    std::vector<ModuleMap> diffs;
    for (std::size_t n = 1; n <= len; ++n)
        diffs.emplace_back(objects[n], objects[n - 1],
                           t_inv[n - 1] * p.complex.differential(n).matrix() * t[n]);
    ModuleMap aug(objects[0], p.resolved(), p.augmentation.matrix() * t[0]);
    return FreeResolution{ChainComplex(std::move(objects), std::move(diffs)), std::move(aug)};
}

FreeResolution pad_resolution_to(const FreeResolution& p, std::size_t target_length) {
    FreeResolution out = p;
    while (out.length() < target_length) {
        std::vector<FpModule> objects;
        std::vector<ModuleMap> diffs;
        for (std::size_t n = 0; n <= out.length(); ++n) objects.push_back(out.complex.object(n));
        for (std::size_t n = 1; n <= out.length(); ++n) diffs.push_back(out.complex.differential(n));
        if (target_length - out.length() >= 2) {
            FpModule unit = free_module(1);
            objects.push_back(unit);
            diffs.push_back(zero_map(unit, objects[objects.size() - 2]));
            objects.push_back(unit);
            diffs.emplace_back(unit, unit, IntMatrix::identity(1));
        } else {
            objects.push_back(free_module(0));
            diffs.push_back(zero_map(objects.back(), objects[objects.size() - 2]));
        }
        out = FreeResolution{ChainComplex(std::move(objects), std::move(diffs)), out.augmentation};
    }
    return out;
}

namespace {

bool same_presentation(const FreeResolution& a, const FreeResolution& b) {
    if (a.complex != b.complex) return false;
    return a.augmentation.matrix() == b.augmentation.matrix();
}

}  // namespace

ResolutionFamily resolution_family(const FpModule& m, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("resolution_family: k must be >= 1");
    ResolutionFamily fam;
    fam.module = m;
    fam.members.push_back(canonical_resolution(m));
    fam.rank_measure = fam.members[0].rank_measure();
    for (std::size_t idx = 1; idx < k; ++idx) {
        // Draw variants until distinct from current members. Tiny twist orbits
        // (free modules of rank <= 1, the zero module) can exhaust after a
        // bounded number of attempts; the family then repeats a member, which
        // the limit construction is insensitive to.
        FreeResolution candidate = fam.members[0];
        for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
            candidate = twist_resolution(fam.members[0], mix_seed(seed, idx * 131 + attempt));
            bool fresh = true;
            for (const FreeResolution& existing : fam.members)
                if (same_presentation(candidate, existing)) {
                    fresh = false;
                    break;
                }
            if (fresh) break;
        }
        internal_check(candidate.rank_measure() == fam.rank_measure,
                       "resolution_family: twist changed the rank measure");
        fam.members.push_back(std::move(candidate));
    }
    std::vector<char> ok(fam.members.size(), 0);
    parallel::parallel_for(fam.members.size(),
                           [&](std::size_t i) { ok[i] = is_resolution(fam.members[i], m) ? 1 : 0; });
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        internal_check(ok[i] == 1, "resolution_family: member failed is_resolution");
    return fam;
}

bool is_resolution(const FreeResolution& p, const FpModule& m) {
    if (p.augmentation.target() != m) return false;
    for (std::size_t n = 0; n <= p.length(); ++n)
        if (!p.complex.object(n).is_free()) return false;
    if (!is_surjective(p.augmentation)) return false;
    if (p.length() >= 1 && !is_zero_map(compose(p.augmentation, p.complex.differential(1)))) return false;

    // Exactness at degree 0: ker ε ⊆ im d_1 (the converse is ε∘d_1 = 0 above).
    {
        IntMatrix block = hstack(p.augmentation.matrix(), m.relations().transpose());
        IntMatrix ker = kernel_basis(block);
        IntMatrix cycles = ker.submatrix(0, 0, p.complex.object(0).generators(), ker.cols());
        LinearSolver image(p.complex.boundary(1).matrix());
        for (std::size_t j = 0; j < cycles.cols(); ++j)
            if (!image.solve(cycles.column(j))) return false;
    }
    // Exactness in positive degrees, including ker d_top = 0 via the empty
    // boundary above the top.
    for (std::size_t n = 1; n <= p.length(); ++n) {
        IntMatrix ker = kernel_basis(p.complex.differential(n).matrix());
        LinearSolver image(p.complex.boundary(n + 1).matrix());
        for (std::size_t j = 0; j < ker.cols(); ++j)
            if (!image.solve(ker.column(j))) return false;
    }
    return true;
}

namespace {

ChainMap lift_map_impl(const ModuleMap& f, const FreeResolution& p, const FreeResolution& q,
                       bool perturb, std::uint64_t seed) {
    if (p.resolved() != f.source() || q.resolved() != f.target())
        throw std::invalid_argument("lift_map: resolutions do not match the map's endpoints");
    SeededRng rng(seed);
    const std::size_t top = std::max(p.length(), q.length());
    std::vector<ModuleMap> comps;
    IntMatrix prev;  // matrix of f_{n-1}
    for (std::size_t n = 0; n <= top; ++n) {
        const FpModule& pn = p.complex.object_or_zero(n);
        const FpModule& qn = q.complex.object_or_zero(n);
        IntMatrix rhs, block;
        std::size_t x_rows = qn.generators();
        if (n == 0) {
            // ε_Q ∘ f_0 = f ∘ ε_P, solved modulo the relations of the target.
            block = hstack(q.augmentation.matrix(), f.target().relations().transpose());
            rhs = f.matrix() * p.augmentation.matrix();
        } else {
            // d^Q_n ∘ f_n = f_{n-1} ∘ d^P_n, an honest equation in a free module.
            block = q.complex.boundary(n).matrix();
            rhs = prev * p.complex.boundary(n).matrix();
        }
        LinearSolver solver(block);
        auto sol = solver.solve_matrix(rhs);
        internal_check(sol.has_value(), "lift_map: no degreewise solution (input is not a resolution)");
        IntMatrix fn = sol->submatrix(0, 0, x_rows, pn.generators());
        if (perturb && x_rows > 0) {
            // Admissible shifts: kernel of the same block the column was solved
            // against, so every perturbed column is another valid solution.
            IntMatrix kb = kernel_basis(block);
            IntMatrix shifts = column_hermite_basis(kb.submatrix(0, 0, x_rows, kb.cols()));
            for (std::size_t j = 0; j < fn.cols(); ++j)
                for (std::size_t c = 0; c < shifts.cols(); ++c) {
                    Int coeff(rng.range(-2, 2));
                    if (coeff == 0) continue;
                    for (std::size_t i = 0; i < x_rows; ++i) fn.at(i, j) += coeff * shifts.at(i, c);
                }
        }
        prev = fn;
        comps.emplace_back(pn, qn, std::move(fn));
    }
    return ChainMap(p.complex, q.complex, std::move(comps));
}

}  // namespace

ChainMap lift_map(const ModuleMap& f, const FreeResolution& p, const FreeResolution& q) {
    return lift_map_impl(f, p, q, false, 0);
}

ChainMap lift_map_perturbed(const ModuleMap& f, const FreeResolution& p, const FreeResolution& q,
                            std::uint64_t seed) {
    return lift_map_impl(f, p, q, true, seed);
}

}  // namespace torlim
