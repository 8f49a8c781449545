#pragma once

#include <string>
#include <vector>

#include "brauer/weights.hpp"

namespace brauer {

// Bead configuration on p runners.  Bead i (1-based, top position first)
// sits at position lambda_i + b - i; positions are numbered row-major left
// to right starting from the top row.  Beads with i <= n are black, the
// remaining b - n are grey padding.
class Abacus {
public:
    Abacus(int p, int b, int n, std::vector<int> positions);

    int p() const { return p_; }
    int b() const { return b_; }
    int n() const { return n_; }
    // descending; positions()[k] is the bead of row k + 1
    const std::vector<int>& positions() const { return positions_; }
    bool occupied(int pos) const;
    bool black(int pos) const;  // occupied by a bead with index <= n

    auto operator<=>(const Abacus&) const = default;

private:
    int p_;
    int b_;
    int n_;
    std::vector<int> positions_;
};

Abacus encode(const Partition& lambda, int b, const Context& ctx);
Partition decode(const Abacus& a);

// Beads per runner (position mod p), black and grey together.
std::vector<int> runner_counts(const Abacus& a);

// Smallest b >= max(n, rows) with 2b = 2 - delta mod p.
int canonical_bead_count(const Partition& lambda, const Partition& mu, const Context& ctx);

// Same W_p-orbit test straight off the abacus: matching runner-0 counts,
// matching paired-runner totals, and an even number of runner changes when
// no black bead sits on runner 0.
bool orbit_equiv_abacus(const Partition& lambda, const Partition& mu, const Context& ctx);

// p-core by sliding every bead as far up its runner as it goes.
// Accepts any p >= 2; primality only matters for the orbit machinery.
Partition p_core(const Partition& lambda, int p);
bool is_p_core(const Partition& lambda, int p);

// ASCII grid, one row of p runner columns per line; filled bead, grey
// bead, empty slot.
std::string render(const Abacus& a);

// Machine form p:b:n:pos1,pos2,...
std::string compact(const Abacus& a);
Abacus parse_compact(const std::string& text);

}  // namespace brauer
