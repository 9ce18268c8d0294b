#pragma once

#include <string>
#include <vector>

#include "qmpl/frac.hpp"

namespace qmpl {

/// A composition s = (s1,...,sd) of positive integers. depth d, weight
/// w = s1+...+sd, and partial sums l(0)=0, l(i)=s1+...+si. The empty index
/// is a distinguished legal value.
class Index {
  public:
    Index() = default;  // empty index
    explicit Index(std::vector<int> parts);
    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    static Index empty() { return Index(); }
    /// (1,...,1) of the given depth.
    static Index ones(int depth);

    bool is_empty() const { return parts_.empty(); }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    /// l(i) = s1 + ... + si for 0 <= i <= depth.
    int partial(int i) const;
    int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }

    /// Index with the first part removed: (s2,...,sd).
    Index tail() const;

    friend bool operator==(const Index&, const Index&) = default;

    std::string str() const;  // "(2,1)" or "()"

  private:
    std::vector<int> parts_;
};

/// Coefficient vector t = (t1,...,td) paired with an Index; entries are
/// fraction-field elements so ratios like t2/t1 are first class.
using TVector = std::vector<Frac>;

/// Symbolic default (t1,...,td).
TVector symbolic_t(int depth);
/// (1,...,1,a) of the given depth.
TVector ones_then(int depth, const Frac& last);

/// Stream of all tuples (v1,...,vw) with n >= v1 >= ... >= vw >= lo, in
/// descending lexicographic order. Replayable: construct again to restart.
class WeaklyDecreasingTuples {
  public:
    WeaklyDecreasingTuples(int n, int w, int lo = 1);

    /// Current tuple, or nullptr when exhausted.
    const std::vector<int>* get() const { return done_ ? nullptr : &tuple_; }
    void advance();

    /// Number of tuples in the full stream: C(n - lo + w, w).
    static Rational count(int n, int w, int lo = 1);

  private:
    int n_, lo_;
    bool done_;
    std::vector<int> tuple_;
};

/// All indices s with 1 <= weight <= weight_max and depth <= depth_max,
/// ordered by weight, then depth, then descending lexicographically.
std::vector<Index> enumerate_compositions(int weight_max, int depth_max);

}  // namespace qmpl
