#pragma once

#include <string>
#include <vector>

#include "brauer/abacus.hpp"
#include "brauer/weights.hpp"
#include "brauer/weyl.hpp"

namespace brauer {

// Balanced pair: the skew boxes of lambda and mu against their
// intersection pair off with content sums 1 - delta, and for even delta
// the rows reaching the -delta/2 diagonal (each such row carries the
// adjacent pair of boxes with contents (2-delta)/2 and -delta/2) agree in
// parity between the two weights, unless a row ends exactly on the
// (2-delta)/2 diagonal.  Equivalent to membership in the same W-orbit,
// hence to lying in the same block in characteristic 0.
bool is_balanced(const Partition& lambda, const Partition& mu, const Context& ctx);

// Same block for L(lambda^T), L(mu^T) over characteristic 0, for labels in
// Lambda_n.  The conjugation of labels is the caller's business.
bool same_block_char0(const Partition& lambda, const Partition& mu, const Context& ctx);

enum class DecompositionKind { exact_blocks, orbit_upper_bound };

struct BlockDecomposition {
    Context context;
    std::vector<std::vector<Partition>> classes;
    DecompositionKind kind;
};

// Lambda_n split into blocks (characteristic 0, exact).
BlockDecomposition block_decomposition_char0(const Context& ctx);

// Lambda_n split into affine orbits (characteristic p; unions of blocks).
BlockDecomposition orbit_decomposition_affine(const Context& ctx);

// Context header plus one class per line, partitions ';'-separated.
std::string format_decomposition(const BlockDecomposition& d);

// The scalar obstruction t(delta - 1) + sum c(lambda) - sum c(mu) with
// |lambda| - |mu| = 2t >= 0: zero (mod p) is necessary for a Hom space
// between the corresponding cell modules.
bool content_obstruction(const Partition& lambda, const Partition& mu, const Context& ctx);

// All eta = mu + two boxes admitted as Specht factors of the restricted
// cell module: eta^T/mu^T a horizontal two-strip, i.e. the two new boxes
// sit in distinct rows of eta.
std::vector<Partition> pieri_two_box_additions(const Partition& mu);

// Certified pair in one W_p-orbit but in two different blocks: lambda a
// p-core of degree n, mu the same-row two-box removal, both p-cores, and
// no other orbit member of degree <= n.
struct SplitCertificate {
    Partition lambda;
    Partition mu;
    Context context;
    int removed_row = 0;
    bool lambda_core = false;
    bool mu_core = false;
    OrbitWitness witness;
};

bool check_split_certificate(const SplitCertificate& cert);

// Scan p-cores of degree <= max_n for certified pairs (delta and p from
// the context; the rank is per candidate).
std::vector<SplitCertificate> search_split_certificates(const Context& ctx, int max_n);

namespace detail {

// Balance check on arbitrary nonnegative row vectors (the chain
// intermediates are not partitions).  The rank matters: rows up to rank
// carry contents even when empty.
bool balanced_pair_rows(const std::vector<int>& a, const std::vector<int>& b, int delta,
                        int rank);

}  // namespace detail

}  // namespace brauer
