#include <algorithm>
#include <map>
#include <set>

#include "sbrace/brace.hpp"

namespace sbrace {

namespace {

// A brace with additive group A is a map a -> lambda_a in Aut(A) with
// lambda_{a . lambda_a(b)} = lambda_a lambda_b; we search such maps by
// assigning one element and closing under the induced product.
class GammaSearch {
public:
    GammaSearch(const FiniteGroup& a, const std::vector<ElementMap>& auts) : a_(a), n_(a.order()) {
        std::map<std::vector<Elem>, int> index;
        for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i].values] = static_cast<int>(i);
        m_ = static_cast<int>(auts.size());
        comp_.resize(static_cast<std::size_t>(m_) * m_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) comp_[i * m_ + j] = index.at(compose(auts[i], auts[j]).values);
        identity_ = index.at(identity_map(n_).values);
        auts_ = &auts;
        lam_.assign(n_, -1);
    }

    std::vector<std::vector<int>> run() {
        if (assign(0, identity_)) recurse();
        return solutions_;
    }

    int compose_idx(int i, int j) const { return comp_[i * m_ + j]; }

private:
    Elem circ(Elem u, Elem w) const { return a_.mul(u, (*auts_)[lam_[u]](w)); }

    bool assign(Elem x, int l) {
        queue_.clear();
        queue_.emplace_back(x, l);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            auto [u, lu] = queue_[qi];
            if (lam_[u] == lu) continue;
            if (lam_[u] != -1) return false;
            lam_[u] = lu;
            trail_.push_back(u);
            for (std::size_t i = 0; i < trail_.size(); ++i) {
                Elem w = trail_[i];
                queue_.emplace_back(circ(u, w), compose_idx(lu, lam_[w]));
                queue_.emplace_back(circ(w, u), compose_idx(lam_[w], lu));
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            lam_[trail_.back()] = -1;
            trail_.pop_back();
        }
    }

    void recurse() {
        auto it = std::find(lam_.begin(), lam_.end(), -1);
        if (it == lam_.end()) {
            solutions_.push_back(lam_);
            return;
        }
        Elem x = static_cast<Elem>(it - lam_.begin());
        for (int l = 0; l < m_; ++l) {
            std::size_t mark = trail_.size();
            if (assign(x, l)) recurse();
            undo(mark);
        }
    }

    const FiniteGroup& a_;
    int n_;
    int m_ = 0;
    int identity_ = 0;
    const std::vector<ElementMap>* auts_ = nullptr;
    std::vector<int> comp_;
    std::vector<int> lam_;
    std::vector<Elem> trail_;
    std::vector<std::pair<Elem, int>> queue_;
    std::vector<std::vector<int>> solutions_;
};

}  // namespace

std::vector<EnumeratedBrace> enumerate_braces(int n) {
    if (n < 1 || n > kBraceEnumerationBound)
        fail(ErrorCode::OrderTooLarge, "brace enumeration supports orders 1.." +
                                           std::to_string(kBraceEnumerationBound));
    std::vector<EnumeratedBrace> out;
    for (const auto& [name, a] : small_groups(n)) {
        auto auts = enumerate_automorphisms(a);
        std::vector<int> inverse(auts.size());
        {
            std::map<std::vector<Elem>, int> index;
            for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i].values] = static_cast<int>(i);
            for (std::size_t i = 0; i < auts.size(); ++i)
                inverse[i] = index.at(inverse_permutation(auts[i]).values);
        }
        GammaSearch search(a, auts);
        std::set<std::vector<int>> canonical;
        for (const auto& lam : search.run()) {
            std::vector<int> best;
            for (std::size_t p = 0; p < auts.size(); ++p) {
                // psi . brace: lambda'_{psi(x)} = psi lambda_x psi^-1
                std::vector<int> t(n);
                for (Elem x = 0; x < n; ++x)
                    t[auts[p](x)] = search.compose_idx(static_cast<int>(p),
                                                       search.compose_idx(lam[x], inverse[p]));
                if (best.empty() || t < best) best = std::move(t);
            }
            canonical.insert(std::move(best));
        }
        for (const auto& lam : canonical) {
            std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y) mul[static_cast<std::size_t>(x) * n + y] = a.mul(x, auts[lam[x]](y));
            out.push_back({name, SkewBrace::make(a, FiniteGroup::from_flat(n, std::move(mul)))});
        }
    }
    return out;
}

}  // namespace sbrace
