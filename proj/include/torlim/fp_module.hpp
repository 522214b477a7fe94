#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torlim/int_matrix.hpp"

namespace torlim {

// Complete isomorphism invariant of a finitely generated abelian group:
// invariant factors > 1 (each dividing the next) plus the free rank.
struct CanonicalForm {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;

    bool operator==(const CanonicalForm& o) const { return torsion == o.torsion && free_rank == o.free_rank; }
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    std::string to_string() const;
};

// Finitely presented abelian group: Z^g modulo the row span of `relations`
// (one relation per row, g columns). The presentation is kept verbatim;
// equality of FpModule values is presentation identity, and isomorphism is a
// separate certified relation (see is_isomorphism).
//
// The constructor precomputes, from the Smith form of the transposed relations
// matrix, a coordinate change y = U x under which the relation lattice becomes
// diagonal. Membership tests, canonical representatives and element
// enumeration all run against that diagonal picture.
class FpModule {
public:
    FpModule();  // the zero module: 0 generators
    FpModule(std::size_t generators, IntMatrix relations);

    std::size_t generators() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }
    const CanonicalForm& canonical_form() const { return canonical_; }

    bool operator==(const FpModule& o) const {
        return generators_ == o.generators_ && relations_ == o.relations_;
    }
    bool operator!=(const FpModule& o) const { return !(*this == o); }

    bool is_free() const { return relations_.rows() == 0; }

    // x (length g) lies in the relation lattice, i.e. represents zero.
    bool in_relation_lattice(const std::vector<Int>& x) const;
    // Canonical representative of the class of x; two vectors represent the
    // same element iff their reductions are equal.
    std::vector<Int> reduce(const std::vector<Int>& x) const;

    bool is_finite() const;
    Int order() const;  // requires is_finite()
    // All elements as canonical representatives, in a fixed deterministic
    // order; requires is_finite().
    std::vector<std::vector<Int>> elements() const;

    // Diagonalizing coordinate data (exposed for canonical_matrix and the
    // corpus samplers): y = coordinate_change() * x, per-coordinate orders
    // with 0 meaning a free coordinate.
    const IntMatrix& coordinate_change() const { return coord_change_; }
    const IntMatrix& coordinate_change_inv() const { return coord_change_inv_; }
    const std::vector<Int>& coordinate_orders() const { return orders_; }

    std::uint64_t digest() const;

private:
    std::size_t generators_;
    IntMatrix relations_;
    IntMatrix coord_change_, coord_change_inv_;
    std::vector<Int> orders_;
    CanonicalForm canonical_;
};

FpModule make_module(std::size_t generators, IntMatrix relations);
FpModule free_module(std::size_t rank);
FpModule zero_module();

// Map between finitely presented groups, given on generators by a matrix of
// shape (target generators) x (source generators). Construction checks
// well-definedness: every source relation must land in the target's relation
// lattice, otherwise NotWellDefined is thrown.
class ModuleMap {
public:
    ModuleMap(FpModule source, FpModule target, IntMatrix matrix);

    // Skips the well-definedness check. Exists for fault injection in the
    // verification driver; not part of the normal construction path.
    static ModuleMap unchecked(FpModule source, FpModule target, IntMatrix matrix);

    const FpModule& source() const { return source_; }
    const FpModule& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    std::vector<Int> apply(const std::vector<Int>& x) const { return mat_vec(matrix_, x); }

private:
    struct unchecked_tag {};
    ModuleMap(unchecked_tag, FpModule source, FpModule target, IntMatrix matrix);

    FpModule source_, target_;
    IntMatrix matrix_;
};

ModuleMap identity_map(const FpModule& m);
ModuleMap zero_map(const FpModule& source, const FpModule& target);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

// Equality as maps: (f - g) sends every generator into the target's relation
// lattice. Requires identical source and target presentations.
bool maps_equal(const ModuleMap& f, const ModuleMap& g);
bool is_zero_map(const ModuleMap& f);

bool is_surjective(const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

// Inverse of a certified isomorphism (found by solving on generators).
ModuleMap inverse(const ModuleMap& f);

// Tensor product presentation: generators are pairs (i, j) ordered
// lexicographically with the left factor's index major; relations are the
// left relations paired with right generators, then symmetrically.
FpModule tensor(const FpModule& m, const FpModule& a);
ModuleMap tensor_map(const ModuleMap& f, const FpModule& a);

// The matrix of f written in the canonical-form coordinates of its source and
// target (order-1 coordinates dropped, entries reduced modulo the target
// coordinate orders). Mostly for reports and tests.
IntMatrix canonical_matrix(const ModuleMap& f);

}  // namespace torlim
