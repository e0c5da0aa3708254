#include "matcher.hpp"

#include <algorithm>

namespace sbrace::detail {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::vector<std::uint64_t> group_invariants(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<std::uint64_t> inv(n);
    for (Elem x = 0; x < n; ++x) {
        int centralizer = 0;
        for (Elem y = 0; y < n; ++y)
            if (g.mul(x, y) == g.mul(y, x)) ++centralizer;
        inv[x] = mix(mix(0, g.element_order(x)), centralizer);
    }
    return inv;
}

namespace {

class Search {
public:
    Search(const Structure& a, const Structure& b,
           const std::function<bool(const std::vector<Elem>&)>& found)
        : a_(a), b_(b), found_(found), f_(a.n, -1), g_(a.n, -1) {}

    void run() {
        if (!assign(0, 0)) return;
        recurse();
    }

private:
    bool assign(Elem x, Elem y) {
        queue_.clear();
        queue_.emplace_back(x, y);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            auto [u, v] = queue_[qi];
            if (f_[u] == v) continue;
            if (f_[u] != -1 || g_[v] != -1) return false;
            if (a_.invariants[u] != b_.invariants[v]) return false;
            f_[u] = v;
            g_[v] = u;
            trail_.push_back(u);
            const std::size_t n = a_.n;
            for (std::size_t i = 0; i < trail_.size(); ++i) {
                Elem w = trail_[i];
                for (std::size_t k = 0; k < a_.ops.size(); ++k) {
                    const auto& oa = *a_.ops[k];
                    const auto& ob = *b_.ops[k];
                    queue_.emplace_back(oa[u * n + w], ob[v * n + f_[w]]);
                    queue_.emplace_back(oa[w * n + u], ob[f_[w] * n + v]);
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            Elem u = trail_.back();
            trail_.pop_back();
            g_[f_[u]] = -1;
            f_[u] = -1;
        }
    }

    bool recurse() {
        Elem x = -1;
        for (Elem i = 0; i < a_.n; ++i)
            if (f_[i] == -1) {
                x = i;
                break;
            }
        if (x == -1) return found_(f_);
        for (Elem y = 0; y < b_.n; ++y) {
            if (g_[y] != -1 || a_.invariants[x] != b_.invariants[y]) continue;
            std::size_t mark = trail_.size();
            bool ok = assign(x, y);
            if (ok && !recurse()) return false;
            undo(mark);
        }
        return true;
    }

    const Structure& a_;
    const Structure& b_;
    const std::function<bool(const std::vector<Elem>&)>& found_;
    std::vector<Elem> f_, g_, trail_;
    std::vector<std::pair<Elem, Elem>> queue_;
};

}  // namespace

void search_isomorphisms(const Structure& a, const Structure& b,
                         const std::function<bool(const std::vector<Elem>&)>& found) {
    if (a.n != b.n || a.ops.size() != b.ops.size()) return;
    auto sa = a.invariants, sb = b.invariants;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
    Search(a, b, found).run();
}

}  // namespace sbrace::detail
