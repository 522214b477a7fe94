#include "torlim/limit.hpp"

#include <algorithm>
#include <stdexcept>

#include "torlim/errors.hpp"
#include "torlim/parallel.hpp"
#include "torlim/smith.hpp"

namespace torlim {

IsoDiagram::IsoDiagram(std::vector<FpModule> nodes, std::vector<ModuleMap> arrows)
    : nodes_(std::move(nodes)), arrows_(std::move(arrows)) {
    const std::size_t m = nodes_.size();
    if (m == 0) throw InvalidDiagram("diagram needs at least one node");
    if (arrows_.size() != m * m) throw InvalidDiagram("expected one arrow per ordered node pair");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const ModuleMap& a = arrow(i, j);
            if (a.source() != nodes_[i] || a.target() != nodes_[j])
                throw InvalidDiagram("arrow endpoints do not match nodes");
        }
    std::vector<char> iso(m * m, 0);
    parallel::parallel_for(m * m, [&](std::size_t idx) {
        iso[idx] = is_isomorphism(arrows_[idx]) ? 1 : 0;
    });
    for (std::size_t idx = 0; idx < m * m; ++idx)
        if (!iso[idx]) throw InvalidDiagram("arrow is not an isomorphism");
    for (std::size_t i = 0; i < m; ++i)
        if (!maps_equal(arrow(i, i), identity_map(nodes_[i])))
            throw InvalidDiagram("identity law fails at node " + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k)
                if (!maps_equal(compose(arrow(j, k), arrow(i, j)), arrow(i, k)))
                    throw InvalidDiagram("cocycle law fails at (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
            if (!maps_equal(compose(arrow(j, i), arrow(i, j)), identity_map(nodes_[i])))
                throw InvalidDiagram("inverse law fails at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        }
}

LimitObject limit(const IsoDiagram& d) {
    const std::size_t m = d.size();
    std::vector<std::size_t> offsets(m);
    std::size_t total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        offsets[i] = total;
        total += d.node(i).generators();
    }

    // Direct sum of the nodes: relations block-diagonal in product coordinates.
    std::size_t rel_rows = 0;
    for (std::size_t i = 0; i < m; ++i) rel_rows += d.node(i).relations().rows();
    IntMatrix prod_rel(rel_rows, total);
    for (std::size_t i = 0, row = 0; i < m; ++i) {
        const IntMatrix& r = d.node(i).relations();
        for (std::size_t a = 0; a < r.rows(); ++a, ++row)
            for (std::size_t b = 0; b < r.cols(); ++b) prod_rel.at(row, offsets[i] + b) = r.at(a, b);
    }
    FpModule product(total, std::move(prod_rel));

    // Stacked difference map: one block row per ordered pair (i, j), i != j,
    // carrying arrow(i,j) at block i and -id at block j; augmented with the
    // relation columns of each pair's target so the kernel is computed in the
    // presentations, not just on representatives.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) pairs.emplace_back(i, j);
    std::size_t diff_rows = 0, slack_cols = 0;
    for (auto [i, j] : pairs) {
        diff_rows += d.node(j).generators();
        slack_cols += d.node(j).relations().rows();
    }
    IntMatrix block(diff_rows, total + slack_cols);
    {
        std::size_t row = 0, slack = total;
        for (auto [i, j] : pairs) {
            const IntMatrix& a = d.arrow(i, j).matrix();
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < a.cols(); ++c) block.at(row + r, offsets[i] + c) = a.at(r, c);
            for (std::size_t r = 0; r < d.node(j).generators(); ++r)
                block.at(row + r, offsets[j] + r) = -1;
            const IntMatrix rt = d.node(j).relations().transpose();
            for (std::size_t r = 0; r < rt.rows(); ++r)
                for (std::size_t c = 0; c < rt.cols(); ++c) block.at(row + r, slack + c) = rt.at(r, c);
            row += d.node(j).generators();
            slack += rt.cols();
        }
    }

    IntMatrix ker = kernel_basis(block);
    IntMatrix tuple_lattice = column_hermite_basis(ker.submatrix(0, 0, total, ker.cols()));

    // Present the limit on that basis: relations are the product relations
    // expressed in tuple coordinates.
    LinearSolver in_basis(tuple_lattice);
    IntMatrix prod_rel_t = product.relations().transpose();
    IntMatrix relations(prod_rel_t.cols(), tuple_lattice.cols());
    for (std::size_t j = 0; j < prod_rel_t.cols(); ++j) {
        auto y = in_basis.solve(prod_rel_t.column(j));
        internal_check(y.has_value(), "limit: product relation escapes the tuple lattice");
        for (std::size_t i = 0; i < tuple_lattice.cols(); ++i) relations.at(j, i) = (*y)[i];
    }
    FpModule group(tuple_lattice.cols(), std::move(relations));

    ModuleMap inclusion(group, product, tuple_lattice);
    std::vector<ModuleMap> projections;
    for (std::size_t i = 0; i < m; ++i) {
        IntMatrix pi = tuple_lattice.submatrix(offsets[i], 0, d.node(i).generators(), tuple_lattice.cols());
        projections.emplace_back(group, d.node(i), std::move(pi));
    }

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            internal_check(maps_equal(compose(d.arrow(i, j), projections[i]), projections[j]),
                           "limit: projection compatibility fails");
    for (std::size_t i = 0; i < m; ++i)
        internal_check(is_isomorphism(projections[i]),
                       "limit: projection of an all-iso diagram must be an isomorphism");

    return LimitObject{d, std::move(group), std::move(product), std::move(inclusion),
                       std::move(projections), std::move(offsets)};
}

std::vector<std::vector<Int>> brute_force_limit(const IsoDiagram& d) {
    const std::size_t m = d.size();
    for (std::size_t i = 0; i < m; ++i)
        if (!d.node(i).is_finite())
            throw InfiniteNode("brute_force_limit: node " + std::to_string(i) + " has free rank > 0");

    std::vector<std::vector<std::vector<Int>>> elems(m);
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i) {
        elems[i] = d.node(i).elements();
        count *= elems[i].size();
    }

    std::vector<char> keep(count, 0);
    parallel::parallel_for(count, [&](std::size_t idx) {
        std::vector<std::size_t> pick(m);
        std::size_t rest = idx;
        for (std::size_t i = m; i-- > 0;) {
            pick[i] = rest % elems[i].size();
            rest /= elems[i].size();
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                std::vector<Int> v = d.arrow(i, j).apply(elems[i][pick[i]]);
                const std::vector<Int>& xj = elems[j][pick[j]];
                for (std::size_t t = 0; t < v.size(); ++t) v[t] -= xj[t];
                if (!d.node(j).in_relation_lattice(v)) return;
            }
        keep[idx] = 1;
    });

    std::vector<std::vector<Int>> out;
    for (std::size_t idx = 0; idx < count; ++idx) {
        if (!keep[idx]) continue;
        std::vector<std::size_t> pick(m);
        std::size_t rest = idx;
        for (std::size_t i = m; i-- > 0;) {
            pick[i] = rest % elems[i].size();
            rest /= elems[i].size();
        }
        std::vector<Int> tuple;
        for (std::size_t i = 0; i < m; ++i)
            for (const Int& e : elems[i][pick[i]]) tuple.push_back(e);
        out.push_back(std::move(tuple));
    }
    return out;
}

std::vector<std::vector<Int>> limit_element_tuples(const LimitObject& lim) {
    internal_check(lim.group.is_finite(), "limit_element_tuples: limit group is infinite");
    std::vector<std::vector<Int>> out;
    for (const std::vector<Int>& cls : lim.group.elements()) {
        std::vector<Int> coords = lim.inclusion.apply(cls);
        std::vector<Int> tuple;
        for (std::size_t i = 0; i < lim.diagram.size(); ++i) {
            const FpModule& node = lim.diagram.node(i);
            std::vector<Int> xi(coords.begin() + lim.offsets[i],
                                coords.begin() + lim.offsets[i] + node.generators());
            for (const Int& e : node.reduce(xi)) tuple.push_back(e);
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

std::vector<std::vector<Int>> sorted_tuples(std::vector<std::vector<Int>> tuples) {
    std::sort(tuples.begin(), tuples.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    });
    return tuples;
}

ModuleMap map_into_limit(const LimitObject& target, const std::vector<ModuleMap>& components) {
    const IsoDiagram& d = target.diagram;
    if (components.size() != d.size())
        throw std::invalid_argument("map_into_limit: one component per node required");
    const FpModule& src = components[0].source();
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].source() != src)
            throw std::invalid_argument("map_into_limit: components must share their source");
        if (components[i].target() != d.node(i))
            throw std::invalid_argument("map_into_limit: component target must be its node");
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (!maps_equal(compose(d.arrow(i, j), components[i]), components[j]))
                throw IncompatibleComponents("components break compatibility at (" + std::to_string(i) +
                                             "," + std::to_string(j) + ")");

    LinearSolver in_basis(target.inclusion.matrix());
    IntMatrix mediating(target.group.generators(), src.generators());
    for (std::size_t c = 0; c < src.generators(); ++c) {
        std::vector<Int> stacked(target.product.generators());
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::vector<Int> col = components[i].matrix().column(c);
            for (std::size_t t = 0; t < col.size(); ++t) stacked[target.offsets[i] + t] = col[t];
        }
        auto y = in_basis.solve(stacked);
        internal_check(y.has_value(), "map_into_limit: compatible tuple escapes the tuple lattice");
        for (std::size_t r = 0; r < mediating.rows(); ++r) mediating.at(r, c) = (*y)[r];
    }
    ModuleMap u(src, target.group, std::move(mediating));
    for (std::size_t i = 0; i < d.size(); ++i)
        internal_check(maps_equal(compose(target.projections[i], u), components[i]),
                       "map_into_limit: projection composite disagrees with component");
    return u;
}

}  // namespace torlim
