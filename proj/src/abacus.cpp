#include "brauer/abacus.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace brauer {

Abacus::Abacus(int p, int b, int n, std::vector<int> positions)
    : p_(p), b_(b), n_(n), positions_(std::move(positions)) {
    if (p_ < 2) throw std::invalid_argument("Abacus: need at least two runners");
    if (b_ < 1 || static_cast<int>(positions_.size()) != b_)
        throw std::invalid_argument("Abacus: bead count does not match b");
    if (n_ < 0 || n_ > b_) throw std::invalid_argument("Abacus: black threshold outside [0, b]");
    std::sort(positions_.begin(), positions_.end(), std::greater<int>());
    if (positions_.back() < 0)
        throw std::invalid_argument("Abacus: negative bead position");
    for (std::size_t k = 1; k < positions_.size(); ++k)
        if (positions_[k] == positions_[k - 1])
            throw std::invalid_argument("Abacus: duplicate bead position");
}

bool Abacus::occupied(int pos) const {
    return std::binary_search(positions_.begin(), positions_.end(), pos, std::greater<int>());
}

bool Abacus::black(int pos) const {
    auto it = std::lower_bound(positions_.begin(), positions_.end(), pos, std::greater<int>());
    if (it == positions_.end() || *it != pos) return false;
    return static_cast<int>(it - positions_.begin()) < n_;
}

Abacus encode(const Partition& lambda, int b, const Context& ctx) {
    if (ctx.char_zero()) throw std::domain_error("encode: abacus needs characteristic p > 2");
    if (b < lambda.rows())
        throw std::invalid_argument("encode: b smaller than the number of parts");
    std::vector<int> pos(b);
    for (int i = 1; i <= b; ++i) pos[i - 1] = lambda.part(i) + b - i;
    return Abacus(ctx.characteristic(), b, std::min(ctx.rank(), b), std::move(pos));
}

Partition decode(const Abacus& a) {
    std::vector<int> parts(a.b());
    const auto& pos = a.positions();
    for (int i = 1; i <= a.b(); ++i) parts[i - 1] = pos[i - 1] - a.b() + i;
    return Partition(std::move(parts));
}

std::vector<int> runner_counts(const Abacus& a) {
    std::vector<int> counts(a.p(), 0);
    for (int pos : a.positions()) ++counts[pos % a.p()];
    return counts;
}

int canonical_bead_count(const Partition& lambda, const Partition& mu, const Context& ctx) {
    const int p = ctx.characteristic();
    if (p == 0) throw std::domain_error("canonical_bead_count: requires characteristic p > 2");
    int b = std::max({ctx.rank(), lambda.rows(), mu.rows()});
    while ((2 * b - (2 - ctx.delta())) % p != 0) ++b;
    return b;
}

bool orbit_equiv_abacus(const Partition& lambda, const Partition& mu, const Context& ctx) {
    const int p = ctx.characteristic();
    if (p == 0) throw std::domain_error("orbit_equiv_abacus: requires characteristic p > 2");
    // the criterion presumes labels of equal degree parity; reflections
    // never change it
    if ((lambda.degree() - mu.degree()) % 2 != 0) return false;

    const int b = canonical_bead_count(lambda, mu, ctx);
    const Abacus al = encode(lambda, b, ctx);
    const Abacus am = encode(mu, b, ctx);
    const auto cl = runner_counts(al);
    const auto cm = runner_counts(am);

    if (cl[0] != cm[0]) return false;
    for (int l = 1; l <= (p - 1) / 2; ++l)
        if (cl[l] + cl[p - l] != cm[l] + cm[p - l]) return false;

    // black bead on runner 0?  grey beads agree on both sides, so testing
    // lambda suffices
    bool black0 = false;
    for (int i = 1; i <= std::min(ctx.rank(), b) && !black0; ++i)
        black0 = (lambda.part(i) + b - i) % p == 0;
    if (black0) return true;

    int transfers = 0;
    for (int l = 1; l <= (p - 1) / 2; ++l) transfers += std::abs(cl[l] - cm[l]);
    return transfers % 2 == 0;
}

Partition p_core(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("p_core: need p >= 2");
    const int b = std::max(lambda.rows(), 1);
    std::vector<int> per_runner(p, 0);
    for (int i = 1; i <= b; ++i) ++per_runner[(lambda.part(i) + b - i) % p];
    std::vector<int> pos;
    pos.reserve(b);
    for (int r = 0; r < p; ++r)
        for (int h = 0; h < per_runner[r]; ++h) pos.push_back(h * p + r);
    return decode(Abacus(p, b, b, std::move(pos)));
}

bool is_p_core(const Partition& lambda, int p) {
    return p_core(lambda, p) == lambda;
}

std::string render(const Abacus& a) {
    const int max_pos = a.positions().empty() ? 0 : a.positions().front();
    const int rows = max_pos / a.p() + 1;
    std::string out;
    for (int row = 0; row < rows; ++row) {
        for (int r = 0; r < a.p(); ++r) {
            const int pos = row * a.p() + r;
            if (!a.occupied(pos))
                out += '.';
            else
                out += a.black(pos) ? "●" : "○";
        }
        if (row + 1 < rows) out += '\n';
    }
    return out;
}

std::string compact(const Abacus& a) {
    std::ostringstream os;
    os << a.p() << ':' << a.b() << ':' << a.n() << ':';
    const auto& pos = a.positions();
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (k) os << ',';
        os << pos[k];
    }
    return os.str();
}

Abacus parse_compact(const std::string& text) {
    std::istringstream is(text);
    std::string part;
    std::vector<std::string> fields;
    while (std::getline(is, part, ':')) fields.push_back(part);
    if (fields.size() != 4) throw std::invalid_argument("parse_compact: expected p:b:n:positions");
    const int p = std::stoi(fields[0]);
    const int b = std::stoi(fields[1]);
    const int n = std::stoi(fields[2]);
    std::vector<int> pos;
    std::istringstream ps(fields[3]);
    while (std::getline(ps, part, ',')) pos.push_back(std::stoi(part));
    return Abacus(p, b, n, std::move(pos));
}

}  // namespace brauer
