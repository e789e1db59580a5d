#ifndef GENFACTOR_UNION_FIND_HPP
#define GENFACTOR_UNION_FIND_HPP

#include <cstddef>
#include <vector>

namespace genfactor {

// Union-find with union by size and an undo log (no path compression, so
// unions can be rolled back for backtracking searches).
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    // Returns false (and logs nothing) if a and b were already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        log_.push_back(b);
        return true;
    }

    size_t checkpoint() const { return log_.size(); }

    void rollback(size_t mark) {
        while (log_.size() > mark) {
            int b = log_.back();
            log_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> log_;
};

}  // namespace genfactor

#endif
