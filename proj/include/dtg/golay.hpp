#pragma once
#include <cstdint>
#include <vector>

#include "dtg/graph.hpp"
#include "dtg/perm.hpp"

namespace dtg {

// generators a_1..a_12 in S18 and a_1..a_22 in S20, as printed (converted to 0-based points)
std::vector<Perm> golay_c12_permutations();
std::vector<Perm> golay_c22_permutations();

// exponent vector of a product of the block cycles (blocks of size p on consecutive points);
// throws if g is not such a product
std::vector<int> block_coordinates(const Perm& g, int p);

// Cay(Z_p^r, S) with u ~ u + s; elements are coordinate vectors, vertex index = sum c_i p^i.
// S must be inverse-closed, avoid 0 and span Z_p^r
Graph cayley_abelian(int p, int r, const std::vector<std::vector<int>>& S);

Graph golay_c12();  // Z_3^6, S = {a_i^(+-1) : i <= 12}
Graph golay_c22();  // Z_2^10, S = {a_1..a_22}

// the cyclic [23,12,7] binary Golay code, generator 1+x^2+x^4+x^5+x^6+x^10+x^11; bit i = coefficient of x^i
std::vector<uint32_t> binary_golay23();
// coset graph on F_2^23 / C23 = Cay(Z_2^11, syndromes of unit vectors); 2048 vertices, valency 23
Graph golay_c23_coset_graph();
// weight-8 words of the extended code avoiding the parity coordinate, adjacent when disjoint (506 vertices)
Graph m23_octad_graph();

}  // namespace dtg
