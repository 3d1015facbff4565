#pragma once

#include <string>
#include <vector>

#include "satokit/errors.hpp"

namespace satokit {

/// Young diagram: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

    [[nodiscard]] const std::vector<long>& parts() const { return parts_; }
    [[nodiscard]] long weight() const;
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    [[nodiscard]] Partition conjugate() const;
    [[nodiscard]] bool contains(const Partition& mu) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    /// Canonical order: weight, then parts lexicographically descending,
    /// so within a weight (3) < (2,1) < (1,1,1).
    bool operator<(const Partition& o) const;

    [[nodiscard]] std::string str() const;

  private:
    std::vector<long> parts_;
};

/// All partitions of weight exactly w, canonically ordered.
std::vector<Partition> partitions_of(long w);
/// All partitions of weight <= w, canonically ordered.
std::vector<Partition> partitions_up_to(long w);

/// All mu contained in lambda with |lambda| - |mu| = strip and lambda/mu a
/// horizontal strip (at most one cell per column).
std::vector<Partition> horizontal_strips(const Partition& lambda, long strip);

/// Strictly increasing integer sequence, eventually all consecutive
/// integers: finitely many exceptional elements plus a tail {tail_start,
/// tail_start+1, ...}.
class MayaDiagram {
  public:
    /// exceptional: the elements below tail_start, strictly increasing.
    MayaDiagram(std::vector<long> exceptional, long tail_start);

    [[nodiscard]] const std::vector<long>& exceptional() const { return exceptional_; }
    [[nodiscard]] long tail_start() const { return tail_start_; }
    [[nodiscard]] bool contains(long s) const;

    /// #(S - Z_{>=0}) - #(Z_{>=0} - S).
    [[nodiscard]] long virtual_cardinal() const;

    bool operator==(const MayaDiagram& o) const;
    [[nodiscard]] std::string str() const;

  private:
    std::vector<long> exceptional_;
    long tail_start_;
};

/// A set T of integers containing every integer below some bound and
/// finitely many others: the valuation-set avatar of a Maya diagram.
/// extra: the elements above full_below, strictly decreasing enumeration
/// is produced internally.
struct ValuationSet {
    std::vector<long> extra;  // elements > full_below, any order, distinct
    long full_below;          // every integer <= full_below lies in T

    [[nodiscard]] bool contains(long v) const;
    /// dim(T cap Z_{>=0}) - dim(Z_{<0} - T), the index of a point whose
    /// valuation set is T.
    [[nodiscard]] long index() const;
    /// Z - T as a Maya diagram.
    [[nodiscard]] MayaDiagram complement() const;
};

/// Stratum partition of a valuation set at index n: with T enumerated
/// decreasingly t_1 > t_2 > ..., lambda_i = t_i + i - n.  Throws when the
/// declared index does not match.
Partition partition_of_valuations(const ValuationSet& T, long n);

/// Inverse: the valuation set {lambda_i - i + n : i >= 1}.
ValuationSet valuations_of_partition(const Partition& lambda, long n);

} // namespace satokit
