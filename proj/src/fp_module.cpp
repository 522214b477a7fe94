#include "torlim/fp_module.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "torlim/errors.hpp"
#include "torlim/rng.hpp"
#include "torlim/smith.hpp"

namespace torlim {

std::string CanonicalForm::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Int& d : torsion) {
        if (!first) out << " + ";
        out << "Z/" << d.get_str();
        first = false;
    }
    if (free_rank > 0) {
        if (!first) out << " + ";
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
    }
    return out.str();
}

FpModule::FpModule() : FpModule(0, IntMatrix(0, 0)) {}

FpModule::FpModule(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
    if (relations_.cols() != generators_)
        throw std::invalid_argument("FpModule: relations matrix must have one column per generator");

    SmithDecomposition s = smith_normal_form(relations_.transpose());
    coord_change_ = std::move(s.u);
    coord_change_inv_ = std::move(s.u_inv);
    orders_.assign(generators_, Int(0));
    const std::size_t k = s.diagonal.size();
    for (std::size_t i = 0; i < k && i < generators_; ++i) orders_[i] = s.diagonal[i];

    for (const Int& d : orders_) {
        if (d == 0)
            ++canonical_.free_rank;
        else if (d > 1)
            canonical_.torsion.push_back(d);
    }
}

bool FpModule::in_relation_lattice(const std::vector<Int>& x) const {
    if (x.size() != generators_) throw std::invalid_argument("in_relation_lattice: length mismatch");
    std::vector<Int> y = mat_vec(coord_change_, x);
    for (std::size_t i = 0; i < generators_; ++i) {
        if (orders_[i] == 0) {
            if (y[i] != 0) return false;
        } else if (y[i] % orders_[i] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Int> FpModule::reduce(const std::vector<Int>& x) const {
    if (x.size() != generators_) throw std::invalid_argument("reduce: length mismatch");
    std::vector<Int> y = mat_vec(coord_change_, x);
    for (std::size_t i = 0; i < generators_; ++i) {
        if (orders_[i] != 0) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), orders_[i].get_mpz_t());
            y[i] = r;
        }
    }
    return mat_vec(coord_change_inv_, y);
}

bool FpModule::is_finite() const {
    for (const Int& d : orders_)
        if (d == 0) return false;
    return true;
}

Int FpModule::order() const {
    internal_check(is_finite(), "order() of an infinite module");
    Int n = 1;
    for (const Int& d : orders_) n *= d;
    return n;
}

std::vector<std::vector<Int>> FpModule::elements() const {
    internal_check(is_finite(), "elements() of an infinite module");
    std::vector<std::vector<Int>> out;
    std::vector<Int> y(generators_, Int(0));
    for (;;) {
        out.push_back(mat_vec(coord_change_inv_, y));
        // odometer, last coordinate fastest
        std::size_t i = generators_;
        while (i > 0) {
            --i;
            y[i] += 1;
            if (y[i] < orders_[i]) break;
            y[i] = 0;
            if (i == 0) return out;
        }
        if (generators_ == 0) return out;
    }
}

std::uint64_t FpModule::digest() const {
    std::ostringstream out;
    out << generators_ << ";" << relations_.rows() << ";" << relations_.to_string();
    return fnv1a(out.str());
}

FpModule make_module(std::size_t generators, IntMatrix relations) {
    return FpModule(generators, std::move(relations));
}

FpModule free_module(std::size_t rank) { return FpModule(rank, IntMatrix(0, rank)); }

FpModule zero_module() { return FpModule(0, IntMatrix(0, 0)); }

ModuleMap::ModuleMap(FpModule source, FpModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
        throw std::invalid_argument("ModuleMap: matrix shape must be (target gens) x (source gens)");
    const IntMatrix& rel = source_.relations();
    for (std::size_t r = 0; r < rel.rows(); ++r) {
        std::vector<Int> image = mat_vec(matrix_, rel.row(r));
        if (!target_.in_relation_lattice(image))
            throw NotWellDefined("relation " + std::to_string(r) +
                                 " is not sent into the target relation lattice");
    }
}

ModuleMap::ModuleMap(unchecked_tag, FpModule source, FpModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

ModuleMap ModuleMap::unchecked(FpModule source, FpModule target, IntMatrix matrix) {
    return ModuleMap(unchecked_tag{}, std::move(source), std::move(target), std::move(matrix));
}

ModuleMap identity_map(const FpModule& m) {
    return ModuleMap(m, m, IntMatrix::identity(m.generators()));
}

ModuleMap zero_map(const FpModule& source, const FpModule& target) {
    return ModuleMap(source, target, IntMatrix(target.generators(), source.generators()));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (f.target() != g.source()) throw std::invalid_argument("compose: target(f) must equal source(g)");
    return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix());
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw std::invalid_argument("maps_equal: maps must share source and target presentations");
    IntMatrix diff = f.matrix() - g.matrix();
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!f.target().in_relation_lattice(diff.column(j))) return false;
    return true;
}

bool is_zero_map(const ModuleMap& f) {
    for (std::size_t j = 0; j < f.matrix().cols(); ++j)
        if (!f.target().in_relation_lattice(f.matrix().column(j))) return false;
    return true;
}

bool is_surjective(const ModuleMap& f) {
    // Cokernel: target generators modulo target relations plus the image.
    IntMatrix rel = vstack(f.target().relations(), f.matrix().transpose());
    return FpModule(f.target().generators(), rel).canonical_form().is_trivial();
}

bool is_injective(const ModuleMap& f) {
    // Preimage lattice of the target relation lattice; injective iff it is
    // contained in the source relation lattice.
    IntMatrix block = hstack(f.matrix(), f.target().relations().transpose());
    IntMatrix ker = kernel_basis(block);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        std::vector<Int> x(f.source().generators());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = ker.at(i, j);
        if (!f.source().in_relation_lattice(x)) return false;
    }
    return true;
}

bool is_isomorphism(const ModuleMap& f) { return is_surjective(f) && is_injective(f); }

ModuleMap inverse(const ModuleMap& f) {
    internal_check(is_isomorphism(f), "inverse() of a non-isomorphism");
    const std::size_t gs = f.source().generators(), gt = f.target().generators();
    LinearSolver solver(hstack(f.matrix(), f.target().relations().transpose()));
    IntMatrix inv(gs, gt);
    for (std::size_t j = 0; j < gt; ++j) {
        std::vector<Int> e(gt, Int(0));
        e[j] = 1;
        auto x = solver.solve(e);
        internal_check(x.has_value(), "inverse(): generator has no preimage");
        for (std::size_t i = 0; i < gs; ++i) inv.at(i, j) = (*x)[i];
    }
    ModuleMap g(f.target(), f.source(), std::move(inv));
    internal_check(maps_equal(compose(g, f), identity_map(f.source())), "inverse(): g∘f != id");
    internal_check(maps_equal(compose(f, g), identity_map(f.target())), "inverse(): f∘g != id");
    return g;
}

FpModule tensor(const FpModule& m, const FpModule& a) {
    const std::size_t g = m.generators(), h = a.generators();
    const IntMatrix& rm = m.relations();
    const IntMatrix& ra = a.relations();
    IntMatrix rel(rm.rows() * h + g * ra.rows(), g * h);
    std::size_t row = 0;
    for (std::size_t r = 0; r < rm.rows(); ++r)
        for (std::size_t j = 0; j < h; ++j, ++row)
            for (std::size_t i = 0; i < g; ++i) rel.at(row, i * h + j) = rm.at(r, i);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t r = 0; r < ra.rows(); ++r, ++row)
            for (std::size_t j = 0; j < h; ++j) rel.at(row, i * h + j) = ra.at(r, j);
    return FpModule(g * h, std::move(rel));
}

ModuleMap tensor_map(const ModuleMap& f, const FpModule& a) {
    return ModuleMap(tensor(f.source(), a), tensor(f.target(), a),
                     kronecker(f.matrix(), IntMatrix::identity(a.generators())));
}

IntMatrix canonical_matrix(const ModuleMap& f) {
    const FpModule& src = f.source();
    const FpModule& tgt = f.target();
    IntMatrix full = tgt.coordinate_change() * f.matrix() * src.coordinate_change_inv();
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t i = 0; i < tgt.generators(); ++i)
        if (tgt.coordinate_orders()[i] != 1) keep_rows.push_back(i);
    for (std::size_t j = 0; j < src.generators(); ++j)
        if (src.coordinate_orders()[j] != 1) keep_cols.push_back(j);
    IntMatrix out(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
        for (std::size_t j = 0; j < keep_cols.size(); ++j) {
            Int v = full.at(keep_rows[i], keep_cols[j]);
            const Int& ord = tgt.coordinate_orders()[keep_rows[i]];
            if (ord != 0) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), ord.get_mpz_t());
            out.at(i, j) = v;
        }
    return out;
}

}  // namespace torlim
