#include "brauer/weyl.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

#include "brauer/blocks.hpp"

/*
  The dot action of the (affine) Weyl group of type D_n, in closed integer
  form.  With rho(delta) = (-delta/2, -delta/2 - 1, ...) the reflection
  s_{beta, rp} acts on a weight by

    diff  (beta = eps_i - eps_j):  coef = l_i - l_j - i + j - rp
    sum   (beta = eps_i + eps_j):  coef = l_i + l_j - delta + 2 - i - j - rp

  subtracting coef along beta.  rho itself is never materialized, so all
  arithmetic stays in the integers for every parity of delta.

  Orbit membership is decided by matching content sequences c(l)_i = i - l_i
  between the two weights: rows pair either with equal contents (sigma = +1)
  or with contents summing to 2 - delta (sigma = -1), with an even number of
  sign flips.  Grouping rows into content classes {v, 2 - delta - v} makes
  the flip parity constant per class, except for the self-paired value
  (2 - delta)/2 whose pairs satisfy both conditions at once and can repair
  an odd total.  In characteristic p the same matching runs on residues.
*/

namespace brauer {

ReflectionGen diff_gen(int i, int j, int shift) {
    if (i == j || i < 1 || j < 1)
        throw std::invalid_argument("diff_gen: need distinct positive rows");
    if (i > j) {
        std::swap(i, j);
        shift = -shift;  // eps_i - eps_j = -(eps_j - eps_i)
    }
    return ReflectionGen{ReflectionGen::Kind::diff, i, j, shift};
}

ReflectionGen sum_gen(int i, int j, int shift) {
    if (i == j || i < 1 || j < 1)
        throw std::invalid_argument("sum_gen: need distinct positive rows");
    if (i > j) std::swap(i, j);
    return ReflectionGen{ReflectionGen::Kind::sum, i, j, shift};
}

int OrbitWitness::d_sigma() const {
    return static_cast<int>(std::count(sigma.begin(), sigma.end(), -1));
}

Weight apply_generator(const ReflectionGen& g, const Weight& lambda, const Context& ctx) {
    if (g.i < 1 || g.i >= g.j) throw std::invalid_argument("apply_generator: bad generator rows");
    if (g.j > ctx.rank()) throw std::invalid_argument("apply_generator: row beyond rank");
    if (lambda.length() > ctx.rank())
        throw std::invalid_argument("apply_generator: weight longer than rank");
    if (ctx.char_zero() && g.shift != 0)
        throw std::domain_error("apply_generator: affine shift needs characteristic p > 2");

    std::vector<int> v(lambda.entries());
    if (static_cast<int>(v.size()) < g.j) v.resize(g.j, 0);
    const int rp = g.shift * ctx.characteristic();
    int& vi = v[g.i - 1];
    int& vj = v[g.j - 1];
    if (g.kind == ReflectionGen::Kind::diff) {
        const int coef = vi - vj - g.i + g.j - rp;
        vi -= coef;
        vj += coef;
    } else {
        const int coef = vi + vj - ctx.delta() + 2 - g.i - g.j - rp;
        vi -= coef;
        vj -= coef;
    }
    return Weight(std::move(v));
}

Weight apply_word(const ReflectionWord& w, const Weight& lambda, const Context& ctx) {
    Weight cur = lambda;
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
        cur = apply_generator(*it, cur, ctx);
    return cur;
}

namespace {

int canon(int v, int mod) {
    return mod ? ((v % mod) + mod) % mod : v;
}

// Perfect matching over content classes; mod = 0 for exact values.
std::optional<OrbitWitness> match_witness(const std::vector<int>& clam,
                                          const std::vector<int>& cmu, int mirror, int mod) {
    const int n = static_cast<int>(clam.size());
    std::map<int, std::vector<int>> mu_rows, lam_rows;
    for (int t = 0; t < n; ++t) mu_rows[canon(cmu[t], mod)].push_back(t);
    for (int t = 0; t < n; ++t) lam_rows[canon(clam[t], mod)].push_back(t);

    std::vector<int> pi(n, 0), sigma(n, 0);
    long long minus_count = 0;
    int repair_row = -1;  // mu row matched inside the self-paired class

    std::set<int> values, done;
    for (const auto& kv : mu_rows) values.insert(kv.first);
    for (const auto& kv : lam_rows) values.insert(kv.first);

    for (int v : values) {
        if (done.count(v)) continue;
        const int w = canon(mirror - v, mod);
        done.insert(v);
        done.insert(w);
        auto& av = mu_rows[v];
        auto& bv = lam_rows[v];
        if (v == w) {
            // both conditions coincide here: 2v = mirror
            if (av.size() != bv.size()) return std::nullopt;
            for (std::size_t t = 0; t < av.size(); ++t) {
                pi[av[t]] = bv[t] + 1;
                sigma[av[t]] = +1;
            }
            if (!av.empty()) repair_row = av[0];
        } else {
            auto& aw = mu_rows[w];
            auto& bw = lam_rows[w];
            if (av.size() + aw.size() != bv.size() + bw.size()) return std::nullopt;
            const long long x =
                std::max<long long>(0, static_cast<long long>(av.size()) - bv.size());
            const long long z =
                std::max<long long>(0, static_cast<long long>(bv.size()) - av.size());
            const std::size_t a_plus = av.size() - static_cast<std::size_t>(x);
            const std::size_t w_plus = aw.size() - static_cast<std::size_t>(z);
            for (std::size_t t = 0; t < a_plus; ++t) {
                pi[av[t]] = bv[t] + 1;
                sigma[av[t]] = +1;
            }
            for (std::size_t t = 0; t < w_plus; ++t) {
                pi[aw[t]] = bw[t] + 1;
                sigma[aw[t]] = +1;
            }
            for (std::size_t t = 0; t < static_cast<std::size_t>(x); ++t) {
                pi[av[a_plus + t]] = bw[w_plus + t] + 1;
                sigma[av[a_plus + t]] = -1;
            }
            for (std::size_t t = 0; t < static_cast<std::size_t>(z); ++t) {
                pi[aw[w_plus + t]] = bv[a_plus + t] + 1;
                sigma[aw[w_plus + t]] = -1;
            }
            minus_count += x + z;
        }
    }

    if (minus_count % 2 != 0) {
        if (repair_row < 0) return std::nullopt;
        sigma[repair_row] = -1;
    }
    return OrbitWitness{std::move(pi), std::move(sigma)};
}

}  // namespace

bool witness_valid(const OrbitWitness& w, const Weight& lambda, const Weight& mu,
                   const Context& ctx) {
    const int n = ctx.rank();
    if (static_cast<int>(w.pi.size()) != n || static_cast<int>(w.sigma.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : w.pi) {
        if (v < 1 || v > n || seen[v - 1]) return false;
        seen[v - 1] = 1;
    }
    if (w.d_sigma() % 2 != 0) return false;
    const auto cl = content_sequence(lambda, ctx);
    const auto cm = content_sequence(mu, ctx);
    const int p = ctx.characteristic();
    const int mirror = 2 - ctx.delta();
    for (int t = 0; t < n; ++t) {
        const int partner = cl[w.pi[t] - 1];
        if (w.sigma[t] == +1) {
            if (p == 0 ? cm[t] != partner : canon(cm[t] - partner, p) != 0) return false;
        } else if (w.sigma[t] == -1) {
            if (p == 0 ? cm[t] + partner != mirror : canon(cm[t] + partner - mirror, p) != 0)
                return false;
        } else {
            return false;
        }
    }
    return true;
}

std::optional<OrbitWitness> orbit_member_finite(const Weight& lambda, const Weight& mu,
                                                const Context& ctx) {
    if (!ctx.char_zero())
        throw std::domain_error("orbit_member_finite: requires characteristic 0");
    const auto cl = content_sequence(lambda, ctx);
    const auto cm = content_sequence(mu, ctx);
    auto w = match_witness(cl, cm, 2 - ctx.delta(), 0);
    if (w && !witness_valid(*w, lambda, mu, ctx))
        throw std::logic_error("orbit_member_finite: produced an invalid witness");
    return w;
}

std::optional<OrbitWitness> orbit_member_affine(const Weight& lambda, const Weight& mu,
                                                const Context& ctx) {
    const int p = ctx.characteristic();
    if (p == 0) throw std::domain_error("orbit_member_affine: requires characteristic p > 2");
    // every generator moves the degree by an even amount
    if ((lambda.degree() - mu.degree()) % 2 != 0) return std::nullopt;
    const auto cl = content_sequence(lambda, ctx);
    const auto cm = content_sequence(mu, ctx);
    auto w = match_witness(cl, cm, 2 - ctx.delta(), p);
    if (w && !witness_valid(*w, lambda, mu, ctx))
        throw std::logic_error("orbit_member_affine: produced an invalid witness");
    return w;
}

// ---------------------------------------------------------------------------
// Orbit closure BFS

namespace {

// Open-addressing set of nonzero uint64 keys.  Orbit closures at rank 8
// hold millions of states, so inserts are batched per BFS state with the
// hash slots prefetched up front.
class U64Set {
public:
    explicit U64Set(std::size_t initial_slots = 1u << 20) { slots_.assign(initial_slots, 0); }

    std::size_t hash_index(std::uint64_t key) const { return mix(key) & (slots_.size() - 1); }

    void prefetch(std::size_t idx) const { __builtin_prefetch(&slots_[idx]); }

    // idx must be hash_index(key) against the current table
    bool insert_at(std::uint64_t key, std::size_t idx) {
        const std::size_t mask = slots_.size() - 1;
        while (slots_[idx] != 0 && slots_[idx] != key) idx = (idx + 1) & mask;
        if (slots_[idx] == key) return false;
        slots_[idx] = key;
        ++size_;
        return true;
    }

    bool insert(std::uint64_t key) {
        maybe_grow(1);
        return insert_at(key, hash_index(key));
    }

    bool contains(std::uint64_t key) const {
        const std::size_t mask = slots_.size() - 1;
        std::size_t idx = hash_index(key);
        while (slots_[idx] != 0 && slots_[idx] != key) idx = (idx + 1) & mask;
        return slots_[idx] == key;
    }

    void maybe_grow(std::size_t incoming) {
        while ((size_ + incoming) * 5 >= slots_.size() * 3) grow();
    }

    std::size_t size() const { return size_; }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    void grow() {
        std::vector<std::uint64_t> old;
        old.swap(slots_);
        slots_.assign(old.size() * 2, 0);
        for (std::uint64_t k : old) {
            if (k == 0) continue;
            std::size_t idx = hash_index(k);
            const std::size_t mask = slots_.size() - 1;
            while (slots_[idx] != 0) idx = (idx + 1) & mask;
            slots_[idx] = k;
        }
    }

    std::vector<std::uint64_t> slots_;
    std::size_t size_ = 0;
};

std::uint64_t pack_state(const int* c, int rank) {
    std::uint64_t key = 0;
    for (int t = 0; t < 8; ++t) {
        const int v = t < rank ? c[t] : 0;
        key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(v + 128)) << (8 * t);
    }
    return key;
}

void unpack_state(std::uint64_t key, int* c) {
    for (int t = 0; t < 8; ++t) c[t] = static_cast<int>((key >> (8 * t)) & 0xFF) - 128;
}

// first value >= lo congruent to base mod p
int first_congruent(int base, int lo, int p) {
    const int d = ((base - lo) % p + p) % p;
    return lo + d;
}

}  // namespace

struct OrbitClosure::Impl {
    int rank = 0;
    int bound = 0;
    bool packed = false;
    U64Set keys{1};
    std::set<std::vector<int>> generic;
};

OrbitClosure::OrbitClosure() : impl_(new Impl) {}
OrbitClosure::~OrbitClosure() = default;
OrbitClosure::OrbitClosure(OrbitClosure&&) noexcept = default;
OrbitClosure& OrbitClosure::operator=(OrbitClosure&&) noexcept = default;

bool OrbitClosure::contains(const Weight& w) const {
    if (w.length() > impl_->rank) return false;
    for (int v : w.entries())
        if (v < -impl_->bound || v > impl_->bound) return false;
    if (impl_->packed) {
        int c[8];
        for (int t = 0; t < 8; ++t) c[t] = t < impl_->rank ? w.at(t + 1) : 0;
        return impl_->keys.contains(pack_state(c, impl_->rank));
    }
    std::vector<int> v(impl_->rank);
    for (int t = 0; t < impl_->rank; ++t) v[t] = w.at(t + 1);
    return impl_->generic.count(v) > 0;
}

std::size_t OrbitClosure::size() const {
    return impl_->packed ? impl_->keys.size() : impl_->generic.size();
}

OrbitClosure orbit_closure(const Weight& lambda, const Context& ctx, int box_bound) {
    const int rank = ctx.rank();
    if (lambda.length() > rank)
        throw std::invalid_argument("orbit_closure: weight longer than rank");
    for (int v : lambda.entries())
        if (v < -box_bound || v > box_bound)
            throw std::invalid_argument("orbit_closure: start weight outside the box");

    OrbitClosure out;
    out.impl_->rank = rank;
    out.impl_->bound = box_bound;
    const int p = ctx.characteristic();
    const int delta = ctx.delta();
    const int B = box_bound;

    if (rank <= 8 && box_bound <= 120) {
        out.impl_->packed = true;
        U64Set visited(rank >= 8 ? (1u << 22) : (1u << 18));
        std::vector<std::uint64_t> order;
        if (rank >= 8) order.reserve(1u << 22);
        int c[8];
        for (int t = 0; t < 8; ++t) c[t] = t < rank ? lambda.at(t + 1) : 0;
        const std::uint64_t start = pack_state(c, rank);
        visited.insert(start);
        order.push_back(start);

        // the image of a reflection reads off directly:
        //   diff: (c_i, c_j) -> (c_j - d + rp, c_i + d - rp), d = j - i
        //   sum:  (c_i, c_j) -> (s - c_j + rp, s - c_i + rp), s = delta + i + j (0-based)
        // in-byte key deltas never carry: bytes stay within [128-B, 128+B]
        std::vector<std::uint64_t> cand;
        std::vector<std::size_t> idx;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::uint64_t key = order[head];
            unpack_state(key, c);
            cand.clear();
            for (int i = 0; i < rank; ++i) {
                const std::uint64_t unit_i = 1ULL << (8 * i);
                for (int j = i + 1; j < rank; ++j) {
                    const std::uint64_t unit_j = 1ULL << (8 * j);
                    const int d = j - i;
                    const int s = delta + i + j;
                    auto push = [&](int ni, int nj) {
                        cand.push_back(key +
                                       unit_i * static_cast<std::uint64_t>(
                                                    static_cast<std::int64_t>(ni - c[i])) +
                                       unit_j * static_cast<std::uint64_t>(
                                                    static_cast<std::int64_t>(nj - c[j])));
                    };
                    if (p == 0) {
                        const int di = c[j] - d, dj = c[i] + d;
                        if (di != c[i] && di >= -B && di <= B && dj >= -B && dj <= B)
                            push(di, dj);
                        const int si = s - c[j], sj = s - c[i];
                        if (si != c[i] && si >= -B && si <= B && sj >= -B && sj <= B)
                            push(si, sj);
                    } else {
                        // diff: rp ranges keeping both coordinates inside the box
                        {
                            const int base_i = c[j] - d, base_j = c[i] + d;
                            const int lo = std::max(-B - base_i, base_j - B);
                            const int hi = std::min(B - base_i, base_j + B);
                            for (int rp = first_congruent(0, lo, p); rp <= hi; rp += p) {
                                const int ni = base_i + rp, nj = base_j - rp;
                                if (ni == c[i]) continue;
                                push(ni, nj);
                            }
                        }
                        {
                            const int base_i = s - c[j], base_j = s - c[i];
                            const int lo = std::max(-B - base_i, -B - base_j);
                            const int hi = std::min(B - base_i, B - base_j);
                            for (int rp = first_congruent(0, lo, p); rp <= hi; rp += p) {
                                const int ni = base_i + rp, nj = base_j + rp;
                                if (ni == c[i] && nj == c[j]) continue;
                                push(ni, nj);
                            }
                        }
                    }
                }
            }
            visited.maybe_grow(cand.size());
            idx.clear();
            for (std::uint64_t k2 : cand) {
                const std::size_t at = visited.hash_index(k2);
                visited.prefetch(at);
                idx.push_back(at);
            }
            for (std::size_t t = 0; t < cand.size(); ++t)
                if (visited.insert_at(cand[t], idx[t])) order.push_back(cand[t]);
        }
        out.impl_->keys = std::move(visited);
        return out;
    }

    // generic path for larger ranks
    std::vector<int> start(rank, 0);
    for (int t = 0; t < rank; ++t) start[t] = lambda.at(t + 1);
    std::set<std::vector<int>> visited{start};
    std::vector<std::vector<int>> frontier{start};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rank; ++i) {
                for (int j = i + 1; j < rank; ++j) {
                    for (int kind = 0; kind < 2; ++kind) {
                        const bool diff = kind == 0;
                        const int base = diff ? v[i] - v[j] + (j - i) : v[i] + v[j] - delta - i - j;
                        const int lo = diff ? std::max(v[i] - B, -B - v[j])
                                            : std::max(v[i] - B, v[j] - B);
                        const int hi =
                            diff ? std::min(v[i] + B, B - v[j]) : std::min(v[i] + B, v[j] + B);
                        const int step = p == 0 ? 1 : p;
                        int coef = p == 0 ? base : first_congruent(base, lo, p);
                        const int last = p == 0 ? base : hi;
                        for (; coef <= last; coef += step) {
                            if (coef < lo || coef > hi || coef == 0) continue;
                            auto u = v;
                            u[i] -= coef;
                            u[j] += diff ? coef : -coef;
                            if (visited.insert(u).second) next.push_back(u);
                        }
                    }
                }
            }
        }
        frontier.swap(next);
    }
    out.impl_->generic = std::move(visited);
    return out;
}

// ---------------------------------------------------------------------------
// Constructive linking chains between balanced weights

namespace detail {

bool dominance_compatible(const std::vector<int>& rows, int rank) {
    const int len = std::max<int>(rank, static_cast<int>(rows.size()));
    auto at = [&](int i) { return i <= static_cast<int>(rows.size()) ? rows[i - 1] : 0; };
    for (int i = 1; i < len; ++i)
        if (at(i) - i < at(i + 1) - (i + 1)) return false;
    return true;
}

}  // namespace detail

namespace {

int row_entry(const std::vector<int>& rows, int r) {
    return r <= static_cast<int>(rows.size()) ? rows[r - 1] : 0;
}

// Southeastern-most box of the given content in eta/mu: the largest row r
// whose column r - c lies strictly beyond mu and inside eta.
int se_row_of_content(const std::vector<int>& eta, const std::vector<int>& mu, int rank, int c) {
    int best = -1;
    for (int r = 1; r <= rank; ++r) {
        const int col = r - c;
        if (col >= row_entry(mu, r) + 1 && col <= row_entry(eta, r)) best = r;
    }
    return best;
}

// One reduction step: the word (s_{eps_i - eps_{r_1}} ... s_{eps_i - eps_{r_l}}
// s_{eps_i + eps_j}), rightmost applied first.  The corner box maximizes
// (1 - delta)/2 - c(eps); ties and partner boxes go to the
// southeastern-most candidate.
ReflectionWord descend_step(const std::vector<int>& eta, const std::vector<int>& mu, int rank,
                            int delta) {
    int i = -1;
    int c_eps = INT_MAX;
    for (int r = 1; r <= rank; ++r) {
        if (row_entry(eta, r) <= row_entry(mu, r)) continue;
        const int c = r - row_entry(eta, r);  // content of the last box in row r
        if (c < c_eps || (c == c_eps && r > i)) {
            c_eps = c;
            i = r;
        }
    }
    if (i < 0) throw ChainDefect("descend_step: empty skew shape");

    const int j = se_row_of_content(eta, mu, rank, 1 - delta - c_eps);
    if (j < 0) throw ChainDefect("descend_step: no box pairs with the chosen corner");
    if (j == i) throw ChainDefect("descend_step: paired box landed in the same row");

    const int c_alpha = j - row_entry(eta, j);
    const int c_alpha_mirror = 1 - delta - c_alpha;
    const int k = se_row_of_content(eta, mu, rank, c_alpha_mirror);
    if (k < 0) throw ChainDefect("descend_step: no box pairs with the row tail");

    ReflectionWord step;
    if (k != j && k == i) {
        step.gens.push_back(sum_gen(i, j));
        return step;
    }

    std::set<int> rows;
    int last;
    if (k == j) {
        for (int c = c_eps; c < c_alpha; ++c) {
            const int r = se_row_of_content(eta, mu, rank, c);
            if (r > 0) rows.insert(r);
        }
        last = j - 1;
        rows.insert(last);
    } else {
        for (int c = c_eps; c <= c_alpha_mirror; ++c) {
            const int r = se_row_of_content(eta, mu, rank, c);
            if (r > 0) rows.insert(r);
        }
        last = k;
    }

    std::vector<int> chain;
    for (int r : rows)
        if (r >= i && r <= last) chain.push_back(r);
    if (chain.empty() || chain.front() != i || chain.back() != last)
        throw ChainDefect("descend_step: staircase rows out of order");
    for (std::size_t t = 1; t < chain.size(); ++t) step.gens.push_back(diff_gen(i, chain[t]));
    step.gens.push_back(sum_gen(i, j));
    return step;
}

std::vector<int> padded_rows(const Weight& w, int rank) {
    std::vector<int> v(rank, 0);
    for (int t = 1; t <= rank; ++t) v[t - 1] = w.at(t);
    return v;
}

// Repeated reduction eta -> ... -> target for target componentwise below eta.
void descend(std::vector<int> eta, const std::vector<int>& target, const Context& ctx,
             std::vector<ReflectionWord>& steps, std::vector<Weight>& inters) {
    const int rank = ctx.rank();
    long long guard = 0;
    for (int r = 0; r < rank; ++r) guard += eta[r] - target[r];
    guard = guard / 2 + 2;

    while (eta != target) {
        if (--guard < 0) throw ChainDefect("descend: chain failed to terminate");
        ReflectionWord step = descend_step(eta, target, rank, ctx.delta());
        const Weight next_w = apply_word(step, Weight(eta), ctx);
        std::vector<int> next = padded_rows(next_w, rank);

        bool shrank = false;
        for (int r = 0; r < rank; ++r) {
            if (next[r] < target[r] || next[r] > eta[r])
                throw ChainDefect("descend: step left the interval [target, eta]");
            if (next[r] < eta[r]) shrank = true;
        }
        if (!shrank) throw ChainDefect("descend: step removed nothing");
        if (!detail::dominance_compatible(next, rank))
            throw ChainDefect("descend: intermediate not dominance-compatible");
        if (!detail::balanced_pair_rows(next, target, ctx.delta(), rank))
            throw ChainDefect("descend: intermediate not balanced with the target");

        steps.push_back(std::move(step));
        inters.push_back(next_w);
        eta = std::move(next);
    }
}

}  // namespace

LinkingChain linking_chain(const Partition& lambda, const Partition& mu, const Context& ctx) {
    if (!ctx.char_zero()) throw std::domain_error("linking_chain: requires characteristic 0");
    if (lambda.rows() > ctx.rank() || mu.rows() > ctx.rank())
        throw std::invalid_argument("linking_chain: partition longer than rank");
    if (!is_balanced(lambda, mu, ctx))
        throw NotBalancedError("linking_chain: the endpoints are not balanced");

    LinkingChain out;
    if (lambda == mu) return out;

    const int rank = ctx.rank();
    const Partition nu = intersect(lambda, mu);
    const auto nu_rows = padded_rows(nu.to_weight(), rank);

    descend(padded_rows(lambda.to_weight(), rank), nu_rows, ctx, out.steps, out.intermediates);

    if (!(nu == mu)) {
        std::vector<ReflectionWord> up_steps;
        std::vector<Weight> up_inters;
        descend(padded_rows(mu.to_weight(), rank), nu_rows, ctx, up_steps, up_inters);
        // Each generator is a dot-action involution, so the reversed words
        // climb back from nu to mu through the same intermediates.
        for (std::size_t t = up_steps.size(); t-- > 0;) {
            ReflectionWord rev;
            rev.gens.assign(up_steps[t].gens.rbegin(), up_steps[t].gens.rend());
            out.steps.push_back(std::move(rev));
            out.intermediates.push_back(t > 0 ? up_inters[t - 1] : mu.to_weight());
        }
    }

    for (std::size_t t = out.steps.size(); t-- > 0;)
        out.word.gens.insert(out.word.gens.end(), out.steps[t].gens.begin(),
                             out.steps[t].gens.end());

    if (!(apply_word(out.word, lambda.to_weight(), ctx) == mu.to_weight()))
        throw ChainDefect("linking_chain: assembled word misses the target");
    return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string format_word(const ReflectionWord& w) {
    std::ostringstream os;
    for (std::size_t t = 0; t < w.gens.size(); ++t) {
        const auto& g = w.gens[t];
        if (t) os << ' ';
        os << "s[" << g.i << ',';
        if (g.kind == ReflectionGen::Kind::sum) os << '+';
        os << g.j;
        if (g.shift != 0) os << ';' << g.shift;
        os << ']';
    }
    return os.str();
}

ReflectionWord parse_word(const std::string& text) {
    ReflectionWord out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 6 || tok.substr(0, 2) != "s[" || tok.back() != ']')
            throw std::invalid_argument("parse_word: bad token " + tok);
        const std::string body = tok.substr(2, tok.size() - 3);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("parse_word: bad token " + tok);
        const int i = std::stoi(body.substr(0, comma));
        std::string rest = body.substr(comma + 1);
        bool sum = false;
        if (!rest.empty() && rest[0] == '+') {
            sum = true;
            rest = rest.substr(1);
        }
        int shift = 0;
        const auto semi = rest.find(';');
        if (semi != std::string::npos) {
            shift = std::stoi(rest.substr(semi + 1));
            rest = rest.substr(0, semi);
        }
        const int j = std::stoi(rest);
        out.gens.push_back(sum ? sum_gen(i, j, shift) : diff_gen(i, j, shift));
    }
    return out;
}

namespace detail {

bool orbit_member_exhaustive(const Weight& lambda, const Weight& mu, const Context& ctx) {
    const int n = ctx.rank();
    const int p = ctx.characteristic();
    if (p != 0 && (lambda.degree() - mu.degree()) % 2 != 0) return false;
    const auto cl = content_sequence(lambda, ctx);
    const auto cm = content_sequence(mu, ctx);
    const int mirror = 2 - ctx.delta();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto same = [&](int a, int b) { return p == 0 ? a == b : canon(a - b, p) == 0; };
    do {
        int forced = 0, free_both = 0;
        bool ok = true;
        for (int t = 0; t < n; ++t) {
            const bool plus = same(cm[t], cl[perm[t]]);
            const bool minus = same(cm[t] + cl[perm[t]], mirror);
            if (plus && minus)
                ++free_both;
            else if (minus)
                ++forced;
            else if (!plus) {
                ok = false;
                break;
            }
        }
        if (ok && (forced % 2 == 0 || free_both > 0)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace detail

}  // namespace brauer
