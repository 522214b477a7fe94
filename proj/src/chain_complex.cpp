#include "torlim/chain_complex.hpp"

#include <stdexcept>
#include <utility>

#include "torlim/errors.hpp"
#include "torlim/parallel.hpp"
#include "torlim/smith.hpp"

namespace torlim {

ChainComplex::ChainComplex(std::vector<FpModule> objects, std::vector<ModuleMap> differentials)
    : objects_(std::move(objects)), differentials_(std::move(differentials)) {
    if (objects_.empty()) throw std::invalid_argument("ChainComplex: needs at least degree 0");
    if (differentials_.size() + 1 != objects_.size())
        throw std::invalid_argument("ChainComplex: expected one differential per positive degree");
    for (std::size_t n = 1; n <= length(); ++n) {
        const ModuleMap& d = differential(n);
        if (d.source() != objects_[n] || d.target() != objects_[n - 1])
            throw std::invalid_argument("ChainComplex: differential endpoints do not match objects");
    }
    for (std::size_t n = 1; n + 1 <= length(); ++n) {
        if (!is_zero_map(compose(differential(n), differential(n + 1))))
            throw NotAComplex("d_" + std::to_string(n) + " ∘ d_" + std::to_string(n + 1) + " != 0");
    }
}

const FpModule& ChainComplex::object_or_zero(std::size_t n) const {
    return n < objects_.size() ? objects_[n] : zero_;
}

ModuleMap ChainComplex::boundary(std::size_t n) const {
    if (n >= 1 && n <= length()) return differential(n);
    if (n == 0) return zero_map(objects_[0], zero_);
    // n == length()+1 maps the zero module into the top object; beyond that
    // everything is zero.
    return zero_map(zero_, object_or_zero(n - 1));
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (objects_.size() != o.objects_.size()) return false;
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] != o.objects_[i]) return false;
    for (std::size_t i = 0; i < differentials_.size(); ++i)
        if (differentials_[i].matrix() != o.differentials_[i].matrix()) return false;
    return true;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<ModuleMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    const std::size_t top = std::max(source_.length(), target_.length());
    if (components_.size() > top + 1)
        throw std::invalid_argument("ChainMap: more components than degrees");
    for (std::size_t n = components_.size(); n <= top; ++n)
        components_.push_back(zero_map(source_.object_or_zero(n), target_.object_or_zero(n)));
    for (std::size_t n = 0; n <= top; ++n) {
        const ModuleMap& f = components_[n];
        if (f.source() != source_.object_or_zero(n) || f.target() != target_.object_or_zero(n))
            throw std::invalid_argument("ChainMap: component endpoints do not match complexes");
    }
    for (std::size_t n = 1; n <= top; ++n) {
        ModuleMap left = compose(target_.boundary(n), components_[n]);
        ModuleMap right = compose(components_[n - 1], source_.boundary(n));
        if (!maps_equal(left, right))
            throw std::invalid_argument("ChainMap: square at degree " + std::to_string(n) +
                                        " does not commute");
    }
}

ChainMap identity_chain_map(const ChainComplex& c) {
    std::vector<ModuleMap> comps;
    for (std::size_t n = 0; n <= c.length(); ++n) comps.push_back(identity_map(c.object(n)));
    return ChainMap(c, c, std::move(comps));
}

ChainMap zero_chain_map(const ChainComplex& source, const ChainComplex& target) {
    return ChainMap(source, target, {});
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (f.target() != g.source()) throw std::invalid_argument("compose: chain map endpoints mismatch");
    const std::size_t top = std::max(f.top_degree(), g.top_degree());
    std::vector<ModuleMap> comps;
    for (std::size_t n = 0; n <= top; ++n) {
        ModuleMap fn = n <= f.top_degree() ? f.component(n)
                                           : zero_map(f.source().object_or_zero(n), f.target().object_or_zero(n));
        ModuleMap gn = n <= g.top_degree() ? g.component(n)
                                           : zero_map(g.source().object_or_zero(n), g.target().object_or_zero(n));
        comps.push_back(compose(gn, fn));
    }
    return ChainMap(f.source(), g.target(), std::move(comps));
}

bool chain_maps_equal(const ChainMap& f, const ChainMap& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw std::invalid_argument("chain_maps_equal: endpoints mismatch");
    const std::size_t top = std::max(f.top_degree(), g.top_degree());
    for (std::size_t n = 0; n <= top; ++n) {
        if (n > f.top_degree() || n > g.top_degree()) break;  // beyond both: zero maps
        if (!maps_equal(f.component(n), g.component(n))) return false;
    }
    return true;
}

std::vector<Int> HomologyObject::class_of(const std::vector<Int>& cycle) const {
    auto cls = solve(cycles_basis, cycle);
    internal_check(cls.has_value(), "class_of: vector is not a cycle");
    return *cls;
}

HomologyObject homology(const ChainComplex& c, std::size_t n) {
    const FpModule& cn = c.object_or_zero(n);
    ModuleMap down = c.boundary(n);
    ModuleMap up = c.boundary(n + 1);

    // Cycle lattice: preimage of the relation lattice of C_{n-1} under d_n.
    IntMatrix block = hstack(down.matrix(), down.target().relations().transpose());
    IntMatrix ker = kernel_basis(block);
    IntMatrix generators = ker.submatrix(0, 0, cn.generators(), ker.cols());
    IntMatrix cycles = column_hermite_basis(generators);

    // Boundaries plus the ambient relations of C_n, expressed in that basis.
    IntMatrix numerator = hstack(up.matrix(), cn.relations().transpose());
    LinearSolver in_basis(cycles);
    IntMatrix relations(numerator.cols(), cycles.cols());
    for (std::size_t j = 0; j < numerator.cols(); ++j) {
        auto y = in_basis.solve(numerator.column(j));
        internal_check(y.has_value(), "homology: boundary does not lie in the cycle lattice");
        for (std::size_t i = 0; i < cycles.cols(); ++i) relations.at(j, i) = (*y)[i];
    }
    return HomologyObject{FpModule(cycles.cols(), std::move(relations)), std::move(cycles), cn};
}

ChainComplex apply_functor(const Functor& f, const ChainComplex& c) {
    std::vector<FpModule> objects;
    for (std::size_t n = 0; n <= c.length(); ++n) objects.push_back(f.on_object(c.object(n)));
    std::vector<ModuleMap> diffs;
    for (std::size_t n = 1; n <= c.length(); ++n) diffs.push_back(f.on_map(c.differential(n)));
    return ChainComplex(std::move(objects), std::move(diffs));
}

ChainMap apply_functor(const Functor& f, const ChainMap& phi) {
    ChainComplex fs = apply_functor(f, phi.source());
    ChainComplex ft = apply_functor(f, phi.target());
    std::vector<ModuleMap> comps;
    for (std::size_t n = 0; n <= phi.top_degree(); ++n) comps.push_back(f.on_map(phi.component(n)));
    return ChainMap(std::move(fs), std::move(ft), std::move(comps));
}

ModuleMap induced_map_on_homology(const ChainMap& phi, std::size_t n) {
    HomologyObject hs = homology(phi.source(), n);
    HomologyObject ht = homology(phi.target(), n);
    return induced_map_on_homology(phi, n, hs, ht);
}

ModuleMap induced_map_on_homology(const ChainMap& phi, std::size_t n, const HomologyObject& hs,
                                  const HomologyObject& ht) {
    const ModuleMap& fn = n <= phi.top_degree()
                              ? phi.component(n)
                              : zero_map(phi.source().object_or_zero(n), phi.target().object_or_zero(n));
    IntMatrix image = fn.matrix() * hs.cycles_basis;
    LinearSolver in_basis(ht.cycles_basis);
    IntMatrix m(ht.group.generators(), hs.group.generators());
    for (std::size_t j = 0; j < image.cols(); ++j) {
        auto y = in_basis.solve(image.column(j));
        internal_check(y.has_value(), "induced map: image of a cycle is not a cycle");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = (*y)[i];
    }
    return ModuleMap(hs.group, ht.group, std::move(m));
}

namespace {

// Writes kron into dest at block position (row0, col0).
void place(IntMatrix& dest, std::size_t row0, std::size_t col0, const IntMatrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) dest.at(row0 + i, col0 + j) = block.at(i, j);
}

// Column-major vectorization, so vec(A X B) = (B^T ⊗ A) vec(X).
std::vector<Int> vectorize(const IntMatrix& m) {
    std::vector<Int> v(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v[j * m.rows() + i] = m.at(i, j);
    return v;
}

}  // namespace

bool are_homotopic(const ChainMap& f, const ChainMap& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw std::invalid_argument("are_homotopic: endpoints mismatch");
    const ChainComplex& cs = f.source();
    const ChainComplex& ct = f.target();
    const std::size_t top = std::max(cs.length(), ct.length());

    // Unknowns per degree n: s_n : C_n -> C'_{n+1} and the relation-lattice
    // coefficients w_n absorbing equality-mod-relations in C'_n.
    std::vector<std::size_t> gs(top + 1), gt(top + 1), gt_up(top + 1), rt(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        gs[n] = cs.object_or_zero(n).generators();
        gt[n] = ct.object_or_zero(n).generators();
        gt_up[n] = ct.object_or_zero(n + 1).generators();
        rt[n] = ct.object_or_zero(n).relations().rows();
    }
    std::vector<std::size_t> s_off(top + 1), w_off(top + 1);
    std::size_t cols = 0;
    for (std::size_t n = 0; n <= top; ++n) {
        s_off[n] = cols;
        cols += gt_up[n] * gs[n];
    }
    for (std::size_t n = 0; n <= top; ++n) {
        w_off[n] = cols;
        cols += rt[n] * gs[n];
    }
    std::vector<std::size_t> row_off(top + 1);
    std::size_t rows = 0;
    for (std::size_t n = 0; n <= top; ++n) {
        row_off[n] = rows;
        rows += gt[n] * gs[n];
    }

    IntMatrix system(rows, cols);
    std::vector<Int> rhs(rows);
    for (std::size_t n = 0; n <= top; ++n) {
        ModuleMap fn = n <= f.top_degree() ? f.component(n)
                                           : zero_map(cs.object_or_zero(n), ct.object_or_zero(n));
        ModuleMap gn = n <= g.top_degree() ? g.component(n)
                                           : zero_map(cs.object_or_zero(n), ct.object_or_zero(n));
        std::vector<Int> target = vectorize(fn.matrix() - gn.matrix());
        for (std::size_t i = 0; i < target.size(); ++i) rhs[row_off[n] + i] = target[i];

        // d'_{n+1} s_n term: vec = (I_{gs[n]} ⊗ d'_{n+1}) vec(s_n)
        place(system, row_off[n], s_off[n],
              kronecker(IntMatrix::identity(gs[n]), ct.boundary(n + 1).matrix()));
        // s_{n-1} d_n term: vec = (d_n^T ⊗ I_{gt[n]}) vec(s_{n-1})
        if (n >= 1)
            place(system, row_off[n], s_off[n - 1],
                  kronecker(cs.boundary(n).matrix().transpose(), IntMatrix::identity(gt[n])));
        // relation slack: vec = (I ⊗ R'^T) vec(w_n)
        place(system, row_off[n], w_off[n],
              kronecker(IntMatrix::identity(gs[n]), ct.object_or_zero(n).relations().transpose()));
    }
    return solve(system, rhs).has_value();
}

}  // namespace torlim
