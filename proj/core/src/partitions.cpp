#include "satokit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace satokit {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw input_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw input_error("partition parts must be weakly decreasing");
    }
}

long Partition::weight() const {
    long w = 0;
    for (long p : parts_) w += p;
    return w;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<long> conj(parts_[0], 0);
    for (long p : parts_)
        for (long j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    long wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return parts_ > o.parts_; // lex-larger first within a weight
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

std::vector<Partition> partitions_of(long w) {
    std::vector<Partition> result;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (remaining == 0) {
            result.emplace_back(cur);
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (w >= 0) rec(w, w == 0 ? 1 : w);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Partition> partitions_up_to(long w) {
    std::vector<Partition> all;
    for (long k = 0; k <= w; ++k) {
        auto pk = partitions_of(k);
        all.insert(all.end(), pk.begin(), pk.end());
    }
    return all;
}

std::vector<Partition> horizontal_strips(const Partition& lambda, long strip) {
    std::vector<Partition> result;
    if (strip < 0) return result;
    std::size_t n = lambda.length();
    std::vector<long> mu(n, 0);
    // mu_i ranges over [lambda_{i+1}, lambda_i]; removed cells sum to strip
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long removed) {
        if (removed > strip) return;
        if (i == n) {
            if (removed == strip) result.emplace_back(std::vector<long>(mu.begin(), mu.begin() + n));
            return;
        }
        long lo = lambda.part(i + 1), hi = lambda.part(i);
        for (long m = hi; m >= lo; --m) {
            mu[i] = m;
            rec(i + 1, removed + (hi - m));
        }
    };
    rec(0, 0);
    std::sort(result.begin(), result.end());
    return result;
}

MayaDiagram::MayaDiagram(std::vector<long> exceptional, long tail_start)
    : exceptional_(std::move(exceptional)), tail_start_(tail_start) {
    for (std::size_t i = 0; i < exceptional_.size(); ++i) {
        if (i > 0 && exceptional_[i] <= exceptional_[i - 1])
            throw input_error("maya diagram must be strictly increasing");
        if (exceptional_[i] >= tail_start_)
            throw input_error("maya exceptional elements must precede the tail");
    }
}

bool MayaDiagram::contains(long s) const {
    if (s >= tail_start_) return true;
    return std::binary_search(exceptional_.begin(), exceptional_.end(), s);
}

long MayaDiagram::virtual_cardinal() const {
    // #(S - Z_{>=0}) - #(Z_{>=0} - S)
    long below = 0;
    for (long s : exceptional_)
        if (s < 0) ++below;
    if (tail_start_ < 0) below += -tail_start_;
    long missing = 0; // nonnegative integers not in S
    for (long v = 0; v < tail_start_; ++v)
        if (!std::binary_search(exceptional_.begin(), exceptional_.end(), v)) ++missing;
    return below - missing;
}

bool MayaDiagram::operator==(const MayaDiagram& o) const {
    // normalize: fold tail elements listed as exceptional
    return exceptional_ == o.exceptional_ && tail_start_ == o.tail_start_;
}

std::string MayaDiagram::str() const {
    std::ostringstream out;
    out << "{";
    for (long s : exceptional_) out << s << ",";
    out << tail_start_ << ",->}";
    return out.str();
}

bool ValuationSet::contains(long v) const {
    if (v <= full_below) return true;
    return std::find(extra.begin(), extra.end(), v) != extra.end();
}

long ValuationSet::index() const {
    long nonneg = 0;
    for (long v : extra)
        if (v >= 0) ++nonneg;
    if (full_below >= 0) throw input_error("valuation set contains all nonnegative integers");
    long missing_neg = 0; // negatives not in T
    for (long v = full_below + 1; v < 0; ++v)
        if (std::find(extra.begin(), extra.end(), v) == extra.end()) ++missing_neg;
    return nonneg - missing_neg;
}

MayaDiagram ValuationSet::complement() const {
    // S = Z - T: above full_below everything not in extra, up to where T ends
    std::vector<long> sorted(extra.begin(), extra.end());
    std::sort(sorted.begin(), sorted.end());
    long top = sorted.empty() ? full_below : std::max(full_below, sorted.back());
    std::vector<long> exc;
    for (long v = full_below + 1; v <= top; ++v)
        if (!std::binary_search(sorted.begin(), sorted.end(), v)) exc.push_back(v);
    return MayaDiagram(std::move(exc), top + 1);
}

Partition partition_of_valuations(const ValuationSet& T, long n) {
    if (T.index() != n)
        throw input_error("valuation set has index " + std::to_string(T.index()) +
                          ", expected " + std::to_string(n));
    std::vector<long> sorted(T.extra.begin(), T.extra.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (long v : sorted)
        if (v <= T.full_below) throw input_error("extra valuation inside the full tail");
    std::vector<long> parts;
    long i = 1;
    for (long t : sorted) {
        parts.push_back(t + i - n);
        ++i;
    }
    // inside the consecutive tail the parts are constant; index consistency
    // forces that constant to be zero
    if (T.full_below + i - n != 0)
        throw input_error("inconsistent valuation set: tail parts equal " +
                          std::to_string(T.full_below + i - n));
    return Partition(std::move(parts));
}

ValuationSet valuations_of_partition(const Partition& lambda, long n) {
    ValuationSet T;
    long ell = static_cast<long>(lambda.length());
    for (long i = 1; i <= ell; ++i) T.extra.push_back(lambda.part(i - 1) - i + n);
    T.full_below = n - ell - 1;
    // elements of extra at or below full_below would be redundant; the
    // strictly decreasing t_i rule makes that impossible for a partition
    return T;
}

} // namespace satokit
