#include "brauer/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brauer {

bool is_odd_prime(int m) {
    if (m < 3 || m % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

Context::Context(int rank, int delta, int characteristic)
    : rank_(rank), delta_(delta), p_(characteristic) {
    if (rank_ < 1) throw std::invalid_argument("Context: rank must be positive");
    if (p_ != 0 && !is_odd_prime(p_))
        throw std::invalid_argument("Context: characteristic must be 0 or a prime > 2");
    if (p_ != 0) delta_ = ((delta_ % p_) + p_) % p_;
}

namespace {

void trim_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
    trim_zeros(entries_);
}

int Weight::at(int i) const {
    if (i < 1) throw std::out_of_range("Weight::at: rows are 1-based");
    return i <= length() ? entries_[i - 1] : 0;
}

long long Weight::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    trim_zeros(parts_);
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1]))
            throw std::invalid_argument("Partition: parts must be weakly decreasing and nonnegative");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("Partition::part: rows are 1-based");
    return i <= rows() ? parts_[i - 1] : 0;
}

int Partition::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (lambda.rows() == 0) return Partition{};
    cols.resize(lambda.part(1));
    for (int j = 1; j <= lambda.part(1); ++j) {
        int count = 0;
        for (int i = 1; i <= lambda.rows(); ++i)
            if (lambda.part(i) >= j) ++count;
        cols[j - 1] = count;
    }
    return Partition(std::move(cols));
}

Partition intersect(const Partition& lambda, const Partition& mu) {
    std::vector<int> v;
    int rows = std::min(lambda.rows(), mu.rows());
    v.reserve(rows);
    for (int i = 1; i <= rows; ++i) v.push_back(std::min(lambda.part(i), mu.part(i)));
    return Partition(std::move(v));
}

std::vector<int> content_sequence(const Weight& lambda, const Context& ctx) {
    if (lambda.length() > ctx.rank())
        throw std::invalid_argument("content_sequence: weight longer than the context rank");
    std::vector<int> c(ctx.rank());
    for (int i = 1; i <= ctx.rank(); ++i) c[i - 1] = i - lambda.at(i);
    return c;
}

std::vector<int> box_contents(const Partition& lambda) {
    std::vector<int> out;
    out.reserve(lambda.degree());
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) out.push_back(i - j);
    return out;
}

std::vector<SkewBox> skew_boxes(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        throw std::invalid_argument("skew_boxes: mu is not contained in lambda");
    std::vector<SkewBox> out;
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j)
            out.push_back({i, j, i - j});
    return out;
}

bool is_dominant(const Weight& lambda) {
    const auto& e = lambda.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] < 0) return false;
        if (k > 0 && e[k] > e[k - 1]) return false;
    }
    return true;
}

namespace {

void emit_partitions(int m, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int first = std::min(m, max_part); first >= 1; --first) {
        stack.push_back(first);
        emit_partitions(m - first, first, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
    if (m < 0) throw std::invalid_argument("partitions_of: negative degree");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(m, m, stack, out);
    return out;
}

std::vector<Partition> label_partitions(int n) {
    if (n < 1) throw std::invalid_argument("label_partitions: n must be positive");
    std::vector<Partition> out;
    for (int m = n; m >= 0; m -= 2) {
        auto ps = partitions_of(m);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<Partition> enumerate_label_set(const Context& ctx) {
    if (ctx.delta() == 0)
        throw std::domain_error(
            "enumerate_label_set: delta = 0 uses a modified index set that is unsupported");
    return label_partitions(ctx.rank());
}

std::string format_weight(const Weight& w) {
    std::ostringstream os;
    for (int i = 1; i <= w.length(); ++i) {
        if (i > 1) os << ',';
        os << w.at(i);
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> v;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("empty entry in weight text");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(cur, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != cur.size()) throw std::invalid_argument("bad integer in weight text: " + cur);
        v.push_back(value);
        cur.clear();
    };
    bool any = false;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == ',') {
            flush();
            any = true;
        } else {
            cur += ch;
            any = true;
        }
    }
    if (any) flush();
    return v;
}

}  // namespace

Weight parse_weight(const std::string& text) {
    return Weight(parse_int_list(text));
}

std::string format_partition(const Partition& p) {
    return format_weight(p.to_weight());
}

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_list(text));
}

}  // namespace brauer
