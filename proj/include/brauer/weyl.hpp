#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/weights.hpp"

namespace brauer {

// One reflection generator s_{beta, r p} with beta = eps_i - eps_j (diff)
// or eps_i + eps_j (sum), 1 <= i < j, acting through the dot action.
// shift is the affine level r; only shift = 0 is available in
// characteristic zero.
struct ReflectionGen {
    enum class Kind { diff, sum };
    Kind kind = Kind::sum;
    int i = 1;
    int j = 2;
    int shift = 0;
    auto operator<=>(const ReflectionGen&) const = default;
};

// Normalizing factories.  Swapping i and j fixes a sum root, while for a
// diff root it negates it, which flips the sign of the affine level.
ReflectionGen diff_gen(int i, int j, int shift = 0);
ReflectionGen sum_gen(int i, int j, int shift = 0);

// A word in the generators, rightmost applied first.
struct ReflectionWord {
    std::vector<ReflectionGen> gens;
    bool empty() const { return gens.empty(); }
    auto operator<=>(const ReflectionWord&) const = default;
};

// Certificate for orbit membership: sigma(i) = +1 matches contents,
// sigma(i) = -1 matches mirrored contents, and d(sigma) is even.
struct OrbitWitness {
    std::vector<int> pi;     // pi[i-1] = pi(i), values 1-based
    std::vector<int> sigma;  // +1 or -1
    int d_sigma() const;
};

Weight apply_generator(const ReflectionGen& g, const Weight& lambda, const Context& ctx);
Weight apply_word(const ReflectionWord& w, const Weight& lambda, const Context& ctx);

// mu in W.lambda (finite Weyl group of type D, characteristic 0)?
std::optional<OrbitWitness> orbit_member_finite(const Weight& lambda, const Weight& mu,
                                                const Context& ctx);

// mu in W_p.lambda (affine Weyl group, characteristic p > 2)?
std::optional<OrbitWitness> orbit_member_affine(const Weight& lambda, const Weight& mu,
                                                const Context& ctx);

// Re-checks a witness against the defining (congruence) conditions.
bool witness_valid(const OrbitWitness& w, const Weight& lambda, const Weight& mu,
                   const Context& ctx);

// Everything reachable from a start weight by generator moves whose
// coordinates stay within [-box_bound, box_bound].  BFS oracle; in
// characteristic p the affine levels are enumerated exactly as far as the
// bound allows.
class OrbitClosure {
public:
    bool contains(const Weight& w) const;
    std::size_t size() const;

    OrbitClosure();
    ~OrbitClosure();
    OrbitClosure(OrbitClosure&&) noexcept;
    OrbitClosure& operator=(OrbitClosure&&) noexcept;

private:
    friend OrbitClosure orbit_closure(const Weight&, const Context&, int);
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

OrbitClosure orbit_closure(const Weight& lambda, const Context& ctx, int box_bound);

struct NotBalancedError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when the constructive chain cannot be extended; balanced pairs
// always admit one, so reaching this means a defect.
struct ChainDefect : std::logic_error {
    using std::logic_error::logic_error;
};

struct LinkingChain {
    ReflectionWord word;                 // full word, rightmost applied first
    std::vector<ReflectionWord> steps;   // steps[0] applied first
    std::vector<Weight> intermediates;   // weight after each step; back() = target
};

// Constructive word with apply(word, lambda) = mu for balanced lambda, mu
// (characteristic 0).  General pairs are routed through the intersection;
// each intermediate stays dominance-compatible and balanced with the
// endpoints.
LinkingChain linking_chain(const Partition& lambda, const Partition& mu, const Context& ctx);

// Text form: whitespace-separated tokens s[i,j], s[i,+j], s[i,j;r],
// s[i,+j;r]; rightmost applied first.
std::string format_word(const ReflectionWord& w);
ReflectionWord parse_word(const std::string& text);

namespace detail {

// Brute-force matcher over all permutations; the oracle the fast matcher
// is tested against.  Only sensible for rank <= 10.
bool orbit_member_exhaustive(const Weight& lambda, const Weight& mu, const Context& ctx);

// lambda_i - i weakly decreasing, i.e. lambda + rho lies in the closure of
// the dominant chamber.
bool dominance_compatible(const std::vector<int>& rows, int rank);

}  // namespace detail

}  // namespace brauer
