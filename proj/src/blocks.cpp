#include "brauer/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brauer {

namespace detail {

namespace {

int row_entry(const std::vector<int>& rows, int r) {
    return r <= static_cast<int>(rows.size()) ? rows[r - 1] : 0;
}

// Can the multiset pair off with sums equal to target?
bool pairable(const std::map<int, int>& counts, int target) {
    for (const auto& [c, k] : counts) {
        const int partner = target - c;
        if (c * 2 == target) {
            if (k % 2 != 0) return false;
        } else {
            auto it = counts.find(partner);
            if ((it == counts.end() ? 0 : it->second) != k) return false;
        }
    }
    return true;
}

void collect_skew_contents(const std::vector<int>& shape, const std::vector<int>& inter, int rows,
                           std::map<int, int>& counts) {
    for (int r = 1; r <= rows; ++r)
        for (int j = row_entry(inter, r) + 1; j <= row_entry(shape, r); ++j) ++counts[r - j];
}

}  // namespace

bool balanced_pair_rows(const std::vector<int>& a, const std::vector<int>& b, int delta,
                        int rank) {
    const int rows =
        std::max(rank, static_cast<int>(std::max(a.size(), b.size())));
    std::vector<int> inter(rows, 0);
    for (int r = 1; r <= rows; ++r) inter[r - 1] = std::min(row_entry(a, r), row_entry(b, r));

    std::map<int, int> ca, cb;
    collect_skew_contents(a, inter, rows, ca);
    collect_skew_contents(b, inter, rows, cb);
    if (!pairable(ca, 1 - delta) || !pairable(cb, 1 - delta)) return false;

    if (delta % 2 == 0) {
        // For even delta the rows whose last box reaches the -delta/2
        // diagonal (every such infinite-left row holds the adjacent pair of
        // boxes with contents (2-delta)/2 and -delta/2) must agree in
        // parity between the two weights.  A row ending exactly on the
        // (2-delta)/2 diagonal satisfies both matching conditions at once
        // and lifts the parity constraint.
        const int v_star = (2 - delta) / 2;
        int on_a = 0, on_b = 0, deep_a = 0, deep_b = 0;
        for (int r = 1; r <= rows; ++r) {
            const int content_a = r - row_entry(a, r);
            const int content_b = r - row_entry(b, r);
            on_a += content_a == v_star;
            on_b += content_b == v_star;
            deep_a += content_a <= -delta / 2;
            deep_b += content_b <= -delta / 2;
        }
        if (on_a != on_b) return false;
        if (on_a == 0 && (deep_a - deep_b) % 2 != 0) return false;
    }
    return true;
}

}  // namespace detail

bool is_balanced(const Partition& lambda, const Partition& mu, const Context& ctx) {
    if (!ctx.char_zero()) throw std::domain_error("is_balanced: requires characteristic 0");
    if (lambda.rows() > ctx.rank() || mu.rows() > ctx.rank())
        throw std::invalid_argument("is_balanced: partition longer than the rank");
    return detail::balanced_pair_rows(lambda.parts(), mu.parts(), ctx.delta(), ctx.rank());
}

namespace {

void require_label(const Partition& lambda, const Context& ctx, const char* who) {
    const int m = lambda.degree();
    if (m > ctx.rank() || (ctx.rank() - m) % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": label outside Lambda_n");
}

}  // namespace

bool same_block_char0(const Partition& lambda, const Partition& mu, const Context& ctx) {
    if (!ctx.char_zero()) throw std::domain_error("same_block_char0: requires characteristic 0");
    require_label(lambda, ctx, "same_block_char0");
    require_label(mu, ctx, "same_block_char0");
    return is_balanced(lambda, mu, ctx);
}

namespace {

// Group labels against class representatives.  The defining relations are
// transitive (orbit relations), which the test suite checks exhaustively.
template <class Pred>
BlockDecomposition decompose(const Context& ctx, DecompositionKind kind, Pred&& related) {
    BlockDecomposition out{ctx, {}, kind};
    for (const Partition& label : enumerate_label_set(ctx)) {
        bool placed = false;
        for (auto& cls : out.classes) {
            if (related(cls.front(), label)) {
                cls.push_back(label);
                placed = true;
                break;
            }
        }
        if (!placed) out.classes.push_back({label});
    }
    return out;
}

}  // namespace

BlockDecomposition block_decomposition_char0(const Context& ctx) {
    if (!ctx.char_zero())
        throw std::domain_error("block_decomposition_char0: requires characteristic 0");
    return decompose(ctx, DecompositionKind::exact_blocks,
                     [&](const Partition& a, const Partition& b) { return is_balanced(a, b, ctx); });
}

BlockDecomposition orbit_decomposition_affine(const Context& ctx) {
    if (ctx.characteristic() == 0)
        throw std::domain_error("orbit_decomposition_affine: requires characteristic p > 2");
    return decompose(ctx, DecompositionKind::orbit_upper_bound,
                     [&](const Partition& a, const Partition& b) {
                         return orbit_equiv_abacus(a, b, ctx);
                     });
}

std::string format_decomposition(const BlockDecomposition& d) {
    std::ostringstream os;
    os << "# kind="
       << (d.kind == DecompositionKind::exact_blocks ? "exact-blocks" : "orbit-upper-bound")
       << " n=" << d.context.rank() << " delta=" << d.context.delta()
       << " p=" << d.context.characteristic() << " classes=" << d.classes.size() << '\n';
    for (const auto& cls : d.classes) {
        for (std::size_t t = 0; t < cls.size(); ++t) {
            if (t) os << ';';
            os << format_partition(cls[t]);
        }
        os << '\n';
    }
    return os.str();
}

bool content_obstruction(const Partition& lambda, const Partition& mu, const Context& ctx) {
    const int diff = lambda.degree() - mu.degree();
    if (diff < 0 || diff % 2 != 0)
        throw std::invalid_argument("content_obstruction: need |lambda| - |mu| = 2t >= 0");
    const long long t = diff / 2;
    long long value = t * (ctx.delta() - 1);
    for (int c : box_contents(lambda)) value += c;
    for (int c : box_contents(mu)) value -= c;
    if (ctx.char_zero()) return value == 0;
    return value % ctx.characteristic() == 0;
}

std::vector<Partition> pieri_two_box_additions(const Partition& mu) {
    std::vector<Partition> out;
    const int rows = mu.rows();
    for (int r1 = 1; r1 <= rows + 1; ++r1) {
        for (int r2 = r1 + 1; r2 <= rows + 2; ++r2) {
            std::vector<int> v(std::max(r2, rows), 0);
            for (int r = 1; r <= rows; ++r) v[r - 1] = mu.part(r);
            ++v[r1 - 1];
            ++v[r2 - 1];
            bool ok = true;
            for (std::size_t k = 0; ok && k < v.size(); ++k) {
                if (v[k] < 0 || (k > 0 && v[k] > v[k - 1])) ok = false;
            }
            if (ok) out.push_back(Partition(std::move(v)));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<Partition>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Does the W_p-orbit of lambda (compared through its runner distribution)
// contain a member other than lambda, mu of degree at most n?  Degrees of
// fixed-distribution configurations run in steps of p above the packed
// minimum, so only the distributions and one extra step each need a look.
bool has_extra_small_member(const Partition& lambda, const Partition& mu, const Context& ctx) {
    const int p = ctx.characteristic();
    const int n = ctx.rank();
    const int b = canonical_bead_count(lambda, mu, ctx);
    const Abacus al = encode(lambda, b, ctx);
    const auto cl = runner_counts(al);

    bool black0 = false;
    for (int i = 1; i <= std::min(n, b) && !black0; ++i)
        black0 = (lambda.part(i) + b - i) % p == 0;

    const long long base = static_cast<long long>(b - 1) * b / 2;
    std::vector<int> m(p, 0);
    m[0] = cl[0];

    bool found = false;
    auto packed_degree = [&]() {
        long long d = -base;
        for (int r = 0; r < p; ++r)
            d += static_cast<long long>(p) * m[r] * (m[r] - 1) / 2 + static_cast<long long>(r) * m[r];
        return d;
    };

    std::function<void(int)> scan = [&](int l) {
        if (found) return;
        if (l > (p - 1) / 2) {
            const long long d0 = packed_degree();
            if (d0 > n) return;
            if (!black0) {
                int transfers = 0;
                for (int t = 1; t <= (p - 1) / 2; ++t) transfers += std::abs(cl[t] - m[t]);
                if (transfers % 2 != 0) return;
            }
            for (long long deg = d0; deg <= n; deg += p) {
                if ((n - deg) % 2 != 0) continue;
                if (deg == d0) {
                    std::vector<int> pos;
                    pos.reserve(b);
                    for (int r = 0; r < p; ++r)
                        for (int h = 0; h < m[r]; ++h) pos.push_back(h * p + r);
                    const Partition nu = decode(Abacus(p, b, std::min(n, b), std::move(pos)));
                    if (nu == lambda || nu == mu) continue;
                }
                found = true;
                return;
            }
            return;
        }
        const int total = cl[l] + cl[p - l];
        for (int s = 0; s <= total; ++s) {
            m[l] = s;
            m[p - l] = total - s;
            scan(l + 1);
            if (found) return;
        }
    };
    scan(1);
    return found;
}

}  // namespace

bool check_split_certificate(const SplitCertificate& cert) {
    const Context& ctx = cert.context;
    const int p = ctx.characteristic();
    if (p == 0) return false;
    const Partition& lambda = cert.lambda;
    const Partition& mu = cert.mu;
    if (lambda.degree() != ctx.rank() || mu.degree() != ctx.rank() - 2) return false;

    // exactly two boxes removed, both from one row
    if (cert.removed_row < 1 || cert.removed_row > lambda.rows()) return false;
    const int rows = lambda.rows();
    for (int r = 1; r <= rows; ++r) {
        const int want = r == cert.removed_row ? lambda.part(r) - 2 : lambda.part(r);
        if (mu.part(r) != want) return false;
    }

    if (!is_p_core(lambda, p) || !is_p_core(mu, p)) return false;
    if (!orbit_equiv_abacus(lambda, mu, ctx)) return false;
    if (!witness_valid(cert.witness, lambda.to_weight(), mu.to_weight(), ctx)) return false;
    return !has_extra_small_member(lambda, mu, ctx);
}

std::vector<SplitCertificate> search_split_certificates(const Context& ctx, int max_n) {
    const int p = ctx.characteristic();
    if (p == 0)
        throw std::domain_error("search_split_certificates: requires characteristic p > 2");
    std::vector<SplitCertificate> out;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            if (!is_p_core(lambda, p)) continue;
            for (int row = 1; row <= lambda.rows(); ++row) {
                if (lambda.part(row) < 2 || lambda.part(row) - 2 < lambda.part(row + 1)) continue;
                std::vector<int> parts = lambda.parts();
                parts[row - 1] -= 2;
                const Partition mu(std::move(parts));
                if (!is_p_core(mu, p)) continue;
                const Context local(n, ctx.delta(), p);
                if (!orbit_equiv_abacus(lambda, mu, local)) continue;
                if (has_extra_small_member(lambda, mu, local)) continue;
                auto witness = orbit_member_affine(lambda.to_weight(), mu.to_weight(), local);
                if (!witness)
                    throw std::logic_error(
                        "search_split_certificates: abacus and matching criteria disagree");
                SplitCertificate cert{lambda, mu, local, row, true, true, std::move(*witness)};
                out.push_back(std::move(cert));
            }
        }
    }
    return out;
}

}  // namespace brauer
