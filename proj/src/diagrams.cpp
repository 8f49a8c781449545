#include "brauer/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brauer {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const long long g = gcd_ll(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

std::string Rational::text() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
}

ModInt::ModInt(long long value, int p) : v_(value), p_(p) {
    if (p_ < 0) throw std::invalid_argument("ModInt: bad modulus");
    if (p_ > 0) v_ = ((v_ % p_) + p_) % p_;
}

namespace {

int join_mod(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw std::invalid_argument("ModInt: mixed moduli");
    return a;
}

}  // namespace

ModInt ModInt::operator+(const ModInt& o) const { return ModInt(v_ + o.v_, join_mod(p_, o.p_)); }
ModInt ModInt::operator-(const ModInt& o) const { return ModInt(v_ - o.v_, join_mod(p_, o.p_)); }
ModInt ModInt::operator*(const ModInt& o) const { return ModInt(v_ * o.v_, join_mod(p_, o.p_)); }

ModInt ModInt::inverse() const {
    if (v_ == 0 || p_ == 0) throw std::domain_error("ModInt: inverse of zero");
    long long result = 1, base = v_ % p_, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return ModInt(result, p_);
}

std::string ModInt::text() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

BrauerDiagram::BrauerDiagram(int n) : n_(n), partner_(2 * n) {
    if (n < 1) throw std::invalid_argument("BrauerDiagram: n must be positive");
    for (int i = 0; i < n; ++i) {
        partner_[i] = n + i;
        partner_[n + i] = i;
    }
}

BrauerDiagram::BrauerDiagram(int n, const std::vector<std::pair<int, int>>& pairs)
    : n_(n), partner_(2 * n, -1) {
    if (n < 1) throw std::invalid_argument("BrauerDiagram: n must be positive");
    if (static_cast<int>(pairs.size()) != n)
        throw std::invalid_argument("BrauerDiagram: a diagram on 2n nodes has n pairs");
    auto index = [n](int signed_node) {
        if (signed_node == 0 || signed_node > n || signed_node < -n)
            throw std::invalid_argument("BrauerDiagram: node out of range");
        return signed_node > 0 ? signed_node - 1 : n - signed_node - 1;
    };
    for (const auto& [a, b] : pairs) {
        const int u = index(a), v = index(b);
        if (u == v || partner_[u] != -1 || partner_[v] != -1)
            throw std::invalid_argument("BrauerDiagram: nodes must pair exactly once");
        partner_[u] = v;
        partner_[v] = u;
    }
}

int BrauerDiagram::propagating() const {
    int count = 0;
    for (int i = 0; i < n_; ++i)
        if (partner_[i] >= n_) ++count;
    return count;
}

std::optional<std::vector<int>> BrauerDiagram::as_permutation() const {
    if (propagating() != n_) return std::nullopt;
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[i] = partner_[i] - n_;
    return perm;
}

std::string BrauerDiagram::text() const {
    std::ostringstream os;
    bool first = true;
    auto signed_node = [this](int v) { return v < n_ ? v + 1 : -(v - n_ + 1); };
    for (int v = 0; v < 2 * n_; ++v) {
        if (partner_[v] < v) continue;
        if (!first) os << ',';
        first = false;
        os << '(' << signed_node(v) << ',' << signed_node(partner_[v]) << ')';
    }
    return os.str();
}

BrauerDiagram BrauerDiagram::parse(int n, const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t at = 0;
    while (at < text.size()) {
        while (at < text.size() && (text[at] == ',' || text[at] == ' ')) ++at;
        if (at >= text.size()) break;
        if (text[at] != '(') throw std::invalid_argument("diagram parse: expected '('");
        const auto close = text.find(')', at);
        if (close == std::string::npos) throw std::invalid_argument("diagram parse: missing ')'");
        const std::string body = text.substr(at + 1, close - at - 1);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("diagram parse: missing ','");
        pairs.emplace_back(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
        at = close + 1;
    }
    return BrauerDiagram(n, pairs);
}

std::pair<int, BrauerDiagram> compose(const BrauerDiagram& a, const BrauerDiagram& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    const int n = a.n();
    // product nodes: a's northern row (0..n-1) and b's southern row
    // (n..2n-1); interface k glues a's southern node n+k to b's northern
    // node k.  every interface node carries one a-edge and one b-edge, so
    // a path passes through it exactly once.
    std::vector<int> partner(2 * n, -1);
    std::vector<char> visited(n, 0);

    // at interface node k, about to traverse its b-edge (or a-edge);
    // returns the terminal product node the path ends at
    auto follow = [&](int k, bool via_b) {
        while (true) {
            visited[k] = 1;
            if (via_b) {
                const int q = b.partner(k);
                if (q >= n) return n + (q - n);
                k = q;
                via_b = false;
            } else {
                const int r = a.partner(n + k);
                if (r < n) return r;
                k = r - n;
                via_b = true;
            }
        }
    };

    for (int i = 0; i < n; ++i) {
        if (partner[i] != -1) continue;
        const int p = a.partner(i);
        const int end = p < n ? p : follow(p - n, true);
        partner[i] = end;
        partner[end] = i;
    }
    for (int j = 0; j < n; ++j) {
        if (partner[n + j] != -1) continue;
        const int q = b.partner(n + j);
        const int end = q >= n ? n + (q - n) : follow(q, false);
        partner[n + j] = end;
        partner[end] = n + j;
    }

    // untouched interface nodes sit on closed loops
    int loops = 0;
    for (int k = 0; k < n; ++k) {
        if (visited[k]) continue;
        ++loops;
        int cur = k;
        bool via_b = true;
        do {
            visited[cur] = 1;
            if (via_b) {
                cur = b.partner(cur);  // stays inside the interface on a loop
                via_b = false;
            } else {
                cur = a.partner(n + cur) - n;
                via_b = true;
            }
        } while (!(cur == k && via_b));
    }

    std::vector<std::pair<int, int>> pairs;
    auto signed_node = [n](int v) { return v < n ? v + 1 : -(v - n + 1); };
    for (int v = 0; v < 2 * n; ++v)
        if (partner[v] > v) pairs.emplace_back(signed_node(v), signed_node(partner[v]));
    return {loops, BrauerDiagram(n, pairs)};
}

BrauerDiagram x_diagram(int n, int i, int j) {
    if (i < 1 || j < 1 || i >= j || j > n) throw std::invalid_argument("x_diagram: bad rows");
    std::vector<std::pair<int, int>> pairs;
    pairs.emplace_back(i, j);
    pairs.emplace_back(-i, -j);
    for (int l = 1; l <= n; ++l)
        if (l != i && l != j) pairs.emplace_back(l, -l);
    return BrauerDiagram(n, pairs);
}

namespace {

void enumerate_matchings(std::vector<int>& partner, int next_free,
                         std::vector<BrauerDiagram>& out, int n) {
    const int total = 2 * n;
    while (next_free < total && partner[next_free] != -1) ++next_free;
    if (next_free == total) {
        std::vector<std::pair<int, int>> pairs;
        auto signed_node = [n](int v) { return v < n ? v + 1 : -(v - n + 1); };
        for (int v = 0; v < total; ++v)
            if (partner[v] > v) pairs.emplace_back(signed_node(v), signed_node(partner[v]));
        out.push_back(BrauerDiagram(n, pairs));
        return;
    }
    for (int other = next_free + 1; other < total; ++other) {
        if (partner[other] != -1) continue;
        partner[next_free] = other;
        partner[other] = next_free;
        enumerate_matchings(partner, next_free + 1, out, n);
        partner[next_free] = -1;
        partner[other] = -1;
    }
}

}  // namespace

std::vector<BrauerDiagram> all_diagrams(int n) {
    std::vector<BrauerDiagram> out;
    std::vector<int> partner(2 * n, -1);
    enumerate_matchings(partner, 0, out, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace brauer
