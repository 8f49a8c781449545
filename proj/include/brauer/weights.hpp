#pragma once

#include <compare>
#include <string>
#include <vector>

namespace brauer {

bool is_odd_prime(int m);

// Parameters shared by every decision procedure: the rank n of the weight
// lattice, the algebra parameter delta, and the field characteristic
// (0 or an odd prime > 2).  In characteristic p the parameter is kept as
// its residue in [0, p).
class Context {
public:
    Context(int rank, int delta, int characteristic = 0);

    int rank() const { return rank_; }
    int delta() const { return delta_; }
    int characteristic() const { return p_; }
    bool char_zero() const { return p_ == 0; }

    auto operator<=>(const Context&) const = default;

private:
    int rank_;
    int delta_;
    int p_;
};

// Integer weight (lambda_1, ..., lambda_m).  Trailing zeros carry no
// meaning, so entries are stored trimmed; a weight is implicitly padded
// with zeros whenever it is read at a larger rank.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> entries);

    // rows up to the last nonzero entry
    int length() const { return static_cast<int>(entries_.size()); }
    // 1-based row access, zero beyond length()
    int at(int i) const;
    const std::vector<int>& entries() const { return entries_; }
    long long degree() const;

    auto operator<=>(const Weight&) const = default;

private:
    std::vector<int> entries_;
};

// Weakly decreasing nonnegative weight with trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    // 1-based, zero beyond rows()
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    int degree() const;
    bool contains(const Partition& mu) const;
    Weight to_weight() const { return Weight(parts_); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct SkewBox {
    int row;
    int col;
    int content;  // row - col
    auto operator<=>(const SkewBox&) const = default;
};

Partition conjugate(const Partition& lambda);
Partition intersect(const Partition& lambda, const Partition& mu);

// c(lambda)_i = i - lambda_i for i = 1..rank (content of the last box in
// row i).  Requires lambda.length() <= ctx.rank().
std::vector<int> content_sequence(const Weight& lambda, const Context& ctx);

// Multiset of contents i - j over the boxes of lambda, row-major.
std::vector<int> box_contents(const Partition& lambda);

// Boxes of lambda not in mu, row-major; rejects mu not contained in lambda.
std::vector<SkewBox> skew_boxes(const Partition& lambda, const Partition& mu);

bool is_dominant(const Weight& lambda);

// All partitions of m, lexicographically descending.
std::vector<Partition> partitions_of(int m);

// Partitions of n, n-2, ..., down to 0 or 1: the label candidates of
// degree parity n.  Carries no delta restriction.
std::vector<Partition> label_partitions(int n);

// The simple-module label set Lambda_n.  Rejects delta = 0 (delta = 0 in
// the field needs a modified index set that is out of scope here).
std::vector<Partition> enumerate_label_set(const Context& ctx);

// Text form: comma-separated integers, empty string for the zero weight.
std::string format_weight(const Weight& w);
Weight parse_weight(const std::string& text);
std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text);

}  // namespace brauer
