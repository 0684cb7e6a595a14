#pragma once

#include <difflat/lattice.hpp>
#include <difflat/poset.hpp>

#include <functional>
#include <string>

namespace difflat {

/// Graphviz Hasse diagram: edges run lower -> upper, bottom-to-top layout,
/// elements of equal height share a rank.
auto lattice_to_dot(const FinLattice & lattice) -> std::string;

/// Same layout for an abstract poset; node_label names element i.
auto poset_to_dot(const FinPoset & poset, const std::function<std::string(std::size_t)> & node_label,
    const std::string & graph_name = "poset") -> std::string;

} // namespace difflat
