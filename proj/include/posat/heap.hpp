#ifndef POSAT_HEAP_HPP
#define POSAT_HEAP_HPP

#include <vector>

#include "posat/types.hpp"

namespace posat {

// Indexed binary max-heap over variables, ordered by activity with the
// smaller index winning ties (keeps decisions deterministic).
class VarOrderHeap {
  public:
    explicit VarOrderHeap(const std::vector<double>& activity) : act_(activity) {}

    bool empty() const { return heap_.empty(); }
    bool contains(Var v) const { return v < static_cast<Var>(index_.size()) && index_[v] >= 0; }

    void insert(Var v) {
        if (static_cast<size_t>(v) >= index_.size()) index_.resize(v + 1, -1);
        if (index_[v] >= 0) return;
        index_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        up(index_[v]);
    }

    Var pop() {
        Var top = heap_[0];
        index_[top] = -1;
        heap_[0] = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            index_[heap_[0]] = 0;
            down(0);
        }
        return top;
    }

    // Activity of v increased: restore heap order.
    void increased(Var v) {
        if (contains(v)) up(index_[v]);
    }

  private:
    bool before(Var a, Var b) const {
        return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
    }

    void up(int i) {
        Var v = heap_[i];
        while (i > 0) {
            int p = (i - 1) / 2;
            if (!before(v, heap_[p])) break;
            heap_[i] = heap_[p];
            index_[heap_[i]] = i;
            i = p;
        }
        heap_[i] = v;
        index_[v] = i;
    }

    void down(int i) {
        Var v = heap_[i];
        int n = static_cast<int>(heap_.size());
        for (;;) {
            int c = 2 * i + 1;
            if (c >= n) break;
            if (c + 1 < n && before(heap_[c + 1], heap_[c])) c++;
            if (!before(heap_[c], v)) break;
            heap_[i] = heap_[c];
            index_[heap_[i]] = i;
            i = c;
        }
        heap_[i] = v;
        index_[v] = i;
    }

    const std::vector<double>& act_;
    std::vector<Var> heap_;
    std::vector<int> index_;
};

}  // namespace posat

#endif
