#pragma once

#include <vector>

#include "torlim/fp_module.hpp"

namespace torlim {

// Finite diagram in which every ordered pair of nodes carries exactly one
// arrow and all arrows are isomorphisms satisfying the identity, cocycle and
// inverse laws. Construction verifies all of this (InvalidDiagram otherwise):
//   arrow(i,i) = id,  arrow(j,k) ∘ arrow(i,j) = arrow(i,k),
//   arrow(j,i) ∘ arrow(i,j) = id.
class IsoDiagram {
public:
    IsoDiagram(std::vector<FpModule> nodes, std::vector<ModuleMap> arrows);

    std::size_t size() const { return nodes_.size(); }
    const FpModule& node(std::size_t i) const { return nodes_.at(i); }
    const ModuleMap& arrow(std::size_t i, std::size_t j) const { return arrows_.at(i * nodes_.size() + j); }

private:
    std::vector<FpModule> nodes_;
    std::vector<ModuleMap> arrows_;  // row-major by (source, target)
};

// The limit as a concrete subgroup of the direct sum of the nodes: the
// compatible tuples <x_i> with arrow(i,j)(x_i) = x_j. `inclusion` embeds the
// limit presentation into product coordinates; projections restrict to each
// node and are isomorphisms for an all-iso diagram. The construction is one
// fixed deterministic procedure: the same diagram always produces the
// bit-identical presentation, never merely an isomorphic copy.
struct LimitObject {
    IsoDiagram diagram;
    FpModule group;
    FpModule product;
    ModuleMap inclusion;                  // group -> product
    std::vector<ModuleMap> projections;   // group -> node_i
    std::vector<std::size_t> offsets;     // block offset of node_i inside the product
};

LimitObject limit(const IsoDiagram& d);

// Independent oracle: enumerates every tuple of the (finite) product and
// filters by compatibility. Entries are canonical representatives, flattened
// into product coordinates, in enumeration order. InfiniteNode if any node
// has free rank > 0.
std::vector<std::vector<Int>> brute_force_limit(const IsoDiagram& d);

// The element set of the computed limit, pushed through the inclusion and
// canonicalized blockwise; sorted. For comparing against the oracle.
std::vector<std::vector<Int>> limit_element_tuples(const LimitObject& lim);
std::vector<std::vector<Int>> sorted_tuples(std::vector<std::vector<Int>> tuples);

// Universal property: the unique map into the limit with the given composites
// with the projections. The components must satisfy the compatibility
// equations arrow(i,j) ∘ comp_i = comp_j (IncompatibleComponents otherwise).
ModuleMap map_into_limit(const LimitObject& target, const std::vector<ModuleMap>& components);

}  // namespace torlim
