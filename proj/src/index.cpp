#include "qmpl/index.hpp"

#include <algorithm>

#include "qmpl/qcore.hpp"

namespace qmpl {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw Error("index parts must be positive");
}

Index Index::ones(int depth) {
    return Index(std::vector<int>(static_cast<std::size_t>(depth), 1));
}

int Index::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Index::partial(int i) const {
    int w = 0;
    for (int j = 0; j < i; ++j) w += parts_[static_cast<std::size_t>(j)];
    return w;
}

Index Index::tail() const {
    if (is_empty()) throw Error("tail of empty index");
    return Index(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Index::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

TVector symbolic_t(int depth) {
    TVector t;
    for (int i = 1; i <= depth; ++i) t.push_back(Frac::var(Symbol::T(i)));
    return t;
}

TVector ones_then(int depth, const Frac& last) {
    TVector t(static_cast<std::size_t>(depth), Frac::one());
    if (depth > 0) t.back() = last;
    return t;
}

WeaklyDecreasingTuples::WeaklyDecreasingTuples(int n, int w, int lo) : n_(n), lo_(lo) {
    if (w < 1 || lo < 1) throw Error("tuple stream needs w >= 1 and lo >= 1");
    done_ = n < lo;
    tuple_.assign(static_cast<std::size_t>(w), n);
}

void WeaklyDecreasingTuples::advance() {
    if (done_) return;
    // descending lex successor: decrement the rightmost entry above lo and
    // level everything after it
    int i = static_cast<int>(tuple_.size()) - 1;
    while (i >= 0 && tuple_[static_cast<std::size_t>(i)] == lo_) --i;
    if (i < 0) {
        done_ = true;
        return;
    }
    const int v = --tuple_[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < tuple_.size(); ++j) tuple_[j] = v;
}

Rational WeaklyDecreasingTuples::count(int n, int w, int lo) {
    if (n < lo) return Rational(0);
    return binomial(n - lo + w, w);
}

std::vector<Index> enumerate_compositions(int weight_max, int depth_max) {
    if (weight_max < 1) throw Error("weight_max must be >= 1");
    std::vector<Index> out;
    for (int w = 1; w <= weight_max; ++w) {
        for (int d = 1; d <= std::min(depth_max, w); ++d) {
            // compositions of w into d positive parts, descending lex
            std::vector<int> parts(static_cast<std::size_t>(d));
            auto emit = [&](auto&& self, int pos, int rest) -> void {
                if (pos == d - 1) {
                    parts[static_cast<std::size_t>(pos)] = rest;
                    out.push_back(Index(parts));
                    return;
                }
                for (int v = rest - (d - pos - 1); v >= 1; --v) {
                    parts[static_cast<std::size_t>(pos)] = v;
                    self(self, pos + 1, rest - v);
                }
            };
            emit(emit, 0, w);
        }
    }
    return out;
}

}  // namespace qmpl
