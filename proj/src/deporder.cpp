#include "posat/deporder.hpp"

#include <algorithm>

namespace posat {

DepOrder::DepOrder(const LevelRegistry& reg, size_t matrix_threshold)
    : reg_(reg), matrix_threshold_(matrix_threshold) {
    ensure_slot(reg_.slot_of(level_Ground));
    if (reg_.live_count() > matrix_threshold_) drop_matrix();
}

void DepOrder::ensure_slot(LevelSlot s) {
    if (s >= below_.size()) {
        below_.resize(s + 1);
        above_.resize(s + 1);
        mark_.resize(s + 1, 0);
    }
    if (matrix_enabled_ && s >= matrix_cap_) grow_matrix(std::max<size_t>(16, 2 * (s + 1)));
}

void DepOrder::grow_matrix(size_t cap) {
    std::vector<uint8_t> next(cap * cap, 0);
    for (LevelSlot j = 0; j < matrix_cap_; j++)
        for (LevelSlot i = 0; i < matrix_cap_; i++)
            if (matrix_[j * matrix_cap_ + i]) next[j * cap + i] = 1;
    matrix_ = std::move(next);
    matrix_cap_ = cap;
}

void DepOrder::drop_matrix() {
    matrix_.clear();
    matrix_.shrink_to_fit();
    matrix_cap_ = 0;
    matrix_enabled_ = false;
}

void DepOrder::level_created(LevelId id) {
    ensure_slot(reg_.slot_of(id));
    if (matrix_enabled_ && reg_.live_count() > matrix_threshold_) {
        drop_matrix();
    } else if (matrix_enabled_) {
        // Recycled slot: its row/column were cleared on removal.
        LevelSlot s = reg_.slot_of(id);
        assert(below_[s].empty() && above_[s].empty());
        (void)s;
    }
}

bool DepOrder::add_dep(LevelId j, LevelId i) {
    if (j == level_Ground) return false;
    if (j == i) throw InvariantViolation("self-dependency would create a cycle");
    LevelSlot sj = reg_.slot_of(j);
    LevelSlot si = reg_.slot_of(i);
    if (matrix_enabled_) {
        if (matrix_at(sj, si)) return false;
        matrix_set(sj, si, true);
    } else {
        auto& b = below_[si];
        if (std::binary_search(b.begin(), b.end(), sj)) return false;
    }
    auto& b = below_[si];
    b.insert(std::upper_bound(b.begin(), b.end(), sj), sj);
    auto& a = above_[sj];
    a.insert(std::upper_bound(a.begin(), a.end(), si), si);
    edge_count_++;
    return true;
}

bool DepOrder::has_direct_dep(LevelId j, LevelId i) const {
    if (j == level_Ground) return false;
    LevelSlot sj = reg_.slot_of(j);
    LevelSlot si = reg_.slot_of(i);
    if (matrix_enabled_) return matrix_at(sj, si);
    const auto& b = below_[si];
    return std::binary_search(b.begin(), b.end(), sj);
}

std::vector<LevelId> DepOrder::dependents_closure(LevelId a) const {
    std::vector<LevelId> out;
    LevelSlot start = reg_.slot_of(a);
    epoch_++;
    mark_[start] = epoch_;
    std::vector<LevelSlot> stack{start};
    while (!stack.empty()) {
        LevelSlot s = stack.back();
        stack.pop_back();
        for (LevelSlot t : above_[s]) {
            if (mark_[t] == epoch_) continue;
            mark_[t] = epoch_;
            out.push_back(reg_.id_of(t));
            stack.push_back(t);
        }
    }
    return out;
}

std::vector<LevelId> DepOrder::ancestors_closure(LevelId a) const {
    std::vector<LevelId> out;
    LevelSlot start = reg_.slot_of(a);
    epoch_++;
    mark_[start] = epoch_;
    std::vector<LevelSlot> stack{start};
    while (!stack.empty()) {
        LevelSlot s = stack.back();
        stack.pop_back();
        for (LevelSlot t : below_[s]) {
            if (mark_[t] == epoch_) continue;
            mark_[t] = epoch_;
            out.push_back(reg_.id_of(t));
            stack.push_back(t);
        }
    }
    return out;
}

std::vector<LevelId> DepOrder::maximal_of(const std::vector<LevelId>& s) const {
    std::vector<LevelId> out;
    if (s.empty()) return out;
    std::vector<LevelSlot> members;
    members.reserve(s.size());
    for (LevelId id : s) members.push_back(reg_.slot_of(id));
    std::sort(members.begin(), members.end());

    // A member is maximal unless a forward traversal from it reaches another
    // member. Candidate sets are tiny compared to the relation, so a
    // restricted per-member walk with early exit beats a full closure.
    std::vector<LevelSlot> stack;
    for (size_t k = 0; k < s.size(); k++) {
        LevelSlot cur = reg_.slot_of(s[k]);
        epoch_++;
        mark_[cur] = epoch_;
        stack.assign(1, cur);
        bool dominated = false;
        while (!stack.empty() && !dominated) {
            LevelSlot x = stack.back();
            stack.pop_back();
            for (LevelSlot t : above_[x]) {
                if (mark_[t] == epoch_) continue;
                mark_[t] = epoch_;
                if (std::binary_search(members.begin(), members.end(), t)) { dominated = true; break; }
                stack.push_back(t);
            }
        }
        if (!dominated) out.push_back(s[k]);
    }
    return out;
}

void DepOrder::remove_levels(const std::vector<LevelId>& dead) {
    for (LevelId id : dead) {
        LevelSlot s = reg_.slot_of(id);
        for (LevelSlot j : below_[s]) {
            auto& a = above_[j];
            auto it = std::lower_bound(a.begin(), a.end(), s);
            assert(it != a.end() && *it == s);
            a.erase(it);
            if (matrix_enabled_) matrix_set(j, s, false);
        }
        edge_count_ -= below_[s].size();
        below_[s].clear();
        for (LevelSlot i : above_[s]) {
            auto& b = below_[i];
            auto it = std::lower_bound(b.begin(), b.end(), s);
            assert(it != b.end() && *it == s);
            b.erase(it);
            if (matrix_enabled_) matrix_set(s, i, false);
        }
        edge_count_ -= above_[s].size();
        above_[s].clear();
    }
}

std::vector<std::pair<LevelId, LevelId>> DepOrder::direct_edges() const {
    std::vector<std::pair<LevelId, LevelId>> out;
    for (LevelSlot i = 0; i < below_.size(); i++) {
        if (!reg_.slot_live(i)) continue;
        for (LevelSlot j : below_[i]) out.emplace_back(reg_.id_of(j), reg_.id_of(i));
    }
    return out;
}

void DepOrder::check_transpose_consistency() const {
    size_t nb = 0, na = 0;
    for (LevelSlot i = 0; i < below_.size(); i++) {
        for (LevelSlot j : below_[i]) {
            nb++;
            if (!reg_.slot_live(i) || !reg_.slot_live(j))
                throw InvariantViolation("dependency edge touches a dead level");
            const auto& a = above_[j];
            if (!std::binary_search(a.begin(), a.end(), i))
                throw InvariantViolation("below edge missing from above lists");
            if (matrix_enabled_ && !matrix_at(j, i))
                throw InvariantViolation("adjacency edge missing from matrix");
        }
        na += above_[i].size();
    }
    if (nb != na || nb != edge_count_) throw InvariantViolation("above/below edge counts disagree");
    if (matrix_enabled_) {
        size_t nm = 0;
        for (LevelSlot j = 0; j < matrix_cap_; j++)
            for (LevelSlot i = 0; i < matrix_cap_; i++)
                if (matrix_at(j, i)) nm++;
        if (nm != edge_count_) throw InvariantViolation("matrix edge count disagrees with lists");
    }
}

void DepOrder::check_acyclic() const {
    // Iterative three-color DFS over live slots.
    enum : uint8_t { White, Grey, Black };
    std::vector<uint8_t> color(below_.size(), White);
    std::vector<std::pair<LevelSlot, size_t>> stack;
    for (LevelSlot root = 0; root < below_.size(); root++) {
        if (!reg_.slot_live(root) || color[root] != White) continue;
        stack.emplace_back(root, 0);
        color[root] = Grey;
        while (!stack.empty()) {
            auto& [s, idx] = stack.back();
            if (idx < above_[s].size()) {
                LevelSlot t = above_[s][idx++];
                if (color[t] == Grey) throw InvariantViolation("dependency relation has a cycle");
                if (color[t] == White) {
                    color[t] = Grey;
                    stack.emplace_back(t, 0);
                }
            } else {
                color[s] = Black;
                stack.pop_back();
            }
        }
    }
}

}  // namespace posat
