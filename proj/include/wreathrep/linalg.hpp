#pragma once

#include <map>

namespace wreathrep {

// Incremental echelon basis for sparse vectors map<Key, F> over a field F.
// Each stored row is normalized so its smallest key has coefficient 1; rows
// are indexed by that pivot key.
template <class Key, class F>
class SparseBasis {
public:
    using Vec = std::map<Key, F>;

    // Reduces v against the basis; returns the remainder (empty if v was in
    // the span).
    Vec reduce(Vec v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) break;
            F c = v.begin()->second;
            for (const auto& [k, x] : it->second) {
                auto& entry = v[k];
                entry -= c * x;
                if (entry == F(0)) v.erase(k);
            }
        }
        return v;
    }

    // Returns true when v enlarged the span.
    bool insert(Vec v) {
        // full reduction: eliminate every reducible key, not just the pivot
        Vec r;
        while (!v.empty()) {
            auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) {
                r.insert(*v.begin());
                v.erase(v.begin());
                continue;
            }
            F c = v.begin()->second;
            for (const auto& [k, x] : it->second) {
                auto& entry = v[k];
                entry -= c * x;
                if (entry == F(0)) v.erase(k);
            }
        }
        if (r.empty()) return false;
        F inv = F(1) / r.begin()->second;
        for (auto& [k, x] : r) x *= inv;
        rows_.emplace(r.begin()->first, std::move(r));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }
    int dim() const { return int(rows_.size()); }

private:
    std::map<Key, Vec> rows_;
};

}  // namespace wreathrep
