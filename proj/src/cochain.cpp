#include "sbrace/cochain.hpp"

#include <algorithm>
#include <set>

namespace sbrace {

Verdict require_abelian(const FiniteGroup& g) {
    if (!g.is_abelian()) return Verdict::no("coefficient group is not abelian");
    return Verdict::ok();
}

Cochain2 Cochain2::zero(int rows, int cols) {
    return Cochain2{rows, cols, std::vector<Elem>(static_cast<std::size_t>(rows) * cols, 0)};
}

bool Cochain2::normalized() const {
    for (Elem a = 0; a < rows; ++a)
        if ((*this)(a, 0) != 0) return false;
    for (Elem b = 0; b < cols; ++b)
        if ((*this)(0, b) != 0) return false;
    return true;
}

std::optional<std::uint64_t> SlotSpace::count(std::uint64_t bound) const {
    std::uint64_t total = 1;
    for (const auto* g : groups) {
        if (total > bound / static_cast<std::uint64_t>(g->order())) return std::nullopt;
        total *= static_cast<std::uint64_t>(g->order());
    }
    if (total > bound) return std::nullopt;
    return total;
}

std::vector<Elem> SlotSpace::add(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    std::vector<Elem> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = groups[i]->mul(a[i], b[i]);
    return out;
}

std::vector<Elem> SlotSpace::sub(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    std::vector<Elem> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = groups[i]->mul(a[i], groups[i]->inv(b[i]));
    return out;
}

void for_each_assignment(const SlotSpace& space, std::uint64_t bound,
                         const std::function<void(const std::vector<Elem>&)>& visit) {
    if (!space.count(bound))
        fail(ErrorCode::SearchTooLarge, "more than " + std::to_string(bound) + " candidates");
    std::vector<Elem> v(space.size(), 0);
    while (true) {
        visit(v);
        std::size_t i = v.size();
        while (i > 0 && v[i - 1] == space.groups[i - 1]->order() - 1) v[--i] = 0;
        if (i == 0) return;
        ++v[i - 1];
    }
}

ClassCount classify(const SlotSpace& space, std::uint64_t bound,
                    const std::function<bool(const std::vector<Elem>&)>& is_cocycle,
                    const std::vector<std::vector<Elem>>& coboundaries) {
    std::vector<std::vector<Elem>> cocycles;
    for_each_assignment(space, bound, [&](const std::vector<Elem>& v) {
        if (is_cocycle(v)) cocycles.push_back(v);
    });
    std::set<std::vector<Elem>> bset(coboundaries.begin(), coboundaries.end());
    ClassCount out;
    out.cocycles = cocycles.size();
    out.coboundaries = bset.size();
    std::set<std::vector<Elem>> covered;
    for (const auto& z : cocycles) {
        if (covered.count(z)) continue;
        out.representatives.push_back(z);
        for (const auto& b : bset) covered.insert(space.add(z, b));
    }
    out.classes = out.representatives.size();
    return out;
}

std::string describe(const ResidualEntry& e, const char* const* equation_names) {
    return std::string(equation_names[e.equation]) + " fails at (" + std::to_string(e.at[0]) + "," +
           std::to_string(e.at[1]) + "," + std::to_string(e.at[2]) + ")";
}

namespace linear {

namespace {

int mod_inverse(int a, int p) {
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Reduced row echelon form over F_p, built one row at a time.
class Echelon {
public:
    Echelon(int cols, int p) : cols_(cols), p_(p) {}

    void insert(std::vector<int> row) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int c = row[pivots_[r]];
            if (c == 0) continue;
            for (int j = 0; j < cols_; ++j) row[j] = ((row[j] - c * rows_[r][j]) % p_ + p_) % p_;
        }
        int piv = -1;
        for (int j = 0; j < cols_; ++j)
            if (row[j]) {
                piv = j;
                break;
            }
        if (piv < 0) return;
        int s = mod_inverse(row[piv], p_);
        for (int j = 0; j < cols_; ++j) row[j] = row[j] * s % p_;
        for (auto& other : rows_) {
            int c = other[piv];
            if (c == 0) continue;
            for (int j = 0; j < cols_; ++j) other[j] = ((other[j] - c * row[j]) % p_ + p_) % p_;
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int cols_;
    int p_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

}  // namespace

std::optional<FpCoords> FpCoords::of(const FiniteGroup& g) {
    if (!g.is_abelian()) return std::nullopt;
    FpCoords c;
    c.g_ = &g;
    const int n = g.order();
    if (n == 1) {
        c.coords_.assign(1, {});
        c.by_code_ = {0};
        return c;
    }
    c.p_ = g.element_order(1);
    if (!is_prime(c.p_)) return std::nullopt;
    for (Elem x = 1; x < n; ++x)
        if (g.element_order(x) != c.p_) return std::nullopt;
    std::vector<char> in_span(n, 0);
    std::vector<Elem> span{0};
    in_span[0] = 1;
    for (Elem x = 1; x < n; ++x) {
        if (in_span[x]) continue;
        c.basis_.push_back(x);
        std::vector<Elem> grown;
        for (Elem s : span) {
            Elem y = s;
            for (int k = 0; k < c.p_; ++k) {
                grown.push_back(y);
                in_span[y] = 1;
                y = g.mul(y, x);
            }
        }
        span = std::move(grown);
    }
    const int d = c.dim();
    c.coords_.assign(n, std::vector<int>(d, 0));
    int total = 1;
    for (int i = 0; i < d; ++i) total *= c.p_;
    c.by_code_.assign(total, 0);
    for (int code = 0; code < total; ++code) {
        Elem y = 0;
        int rest = code;
        std::vector<int> v(d);
        for (int i = 0; i < d; ++i) {
            v[i] = rest % c.p_;
            rest /= c.p_;
            for (int k = 0; k < v[i]; ++k) y = g.mul(y, c.basis_[i]);
        }
        c.coords_[y] = v;
        c.by_code_[code] = y;
    }
    return c;
}

Elem FpCoords::element(const int* c) const {
    int code = 0;
    for (int i = dim() - 1; i >= 0; --i) code = code * p_ + c[i];
    return by_code_[code];
}

std::vector<int> FpLinearMap::flatten(const SlotSpace& s, const std::vector<FpCoords>& c,
                                      const std::vector<Elem>& v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& x = c[i].coords(v[i]);
        out.insert(out.end(), x.begin(), x.end());
    }
    return out;
}

std::vector<Elem> FpLinearMap::unflatten_domain(const std::vector<int>& x) const {
    std::vector<Elem> out(domain_.size());
    std::size_t off = 0;
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        out[i] = dom_coords_[i].element(x.data() + off);
        off += dom_coords_[i].dim();
    }
    return out;
}

std::optional<FpLinearMap> FpLinearMap::build(const SlotSpace& domain, const SlotSpace& codomain,
                                              const Apply& apply) {
    FpLinearMap m;
    m.domain_ = domain;
    m.codomain_ = codomain;
    int prime = 0;
    auto coords_for = [&](const SlotSpace& s, std::vector<FpCoords>& out, int& dim) {
        for (const auto* g : s.groups) {
            auto c = FpCoords::of(*g);
            if (!c) return false;
            if (c->dim() > 0) {
                if (prime && prime != c->p()) return false;
                prime = c->p();
            }
            dim += c->dim();
            out.push_back(std::move(*c));
        }
        return true;
    };
    if (!coords_for(domain, m.dom_coords_, m.domain_dim_)) return std::nullopt;
    if (!coords_for(codomain, m.cod_coords_, m.codomain_dim_)) return std::nullopt;
    m.p_ = prime ? prime : 2;
    std::vector<int> unit(m.domain_dim_, 0);
    for (int j = 0; j < m.domain_dim_; ++j) {
        unit[j] = 1;
        auto image = apply(m.unflatten_domain(unit));
        unit[j] = 0;
        m.columns_.push_back(m.flatten(codomain, m.cod_coords_, image));
    }
    return m;
}

int FpLinearMap::rank() const {
    Echelon e(domain_dim_, p_);
    for (int i = 0; i < codomain_dim_; ++i) {
        std::vector<int> row(domain_dim_);
        for (int j = 0; j < domain_dim_; ++j) row[j] = columns_[j][i];
        e.insert(std::move(row));
    }
    return static_cast<int>(e.rows().size());
}

std::vector<std::vector<Elem>> FpLinearMap::kernel_basis() const {
    Echelon e(domain_dim_, p_);
    for (int i = 0; i < codomain_dim_; ++i) {
        std::vector<int> row(domain_dim_);
        for (int j = 0; j < domain_dim_; ++j) row[j] = columns_[j][i];
        e.insert(std::move(row));
    }
    std::vector<char> is_pivot(domain_dim_, 0);
    for (int pc : e.pivots()) is_pivot[pc] = 1;
    std::vector<std::vector<Elem>> out;
    for (int f = 0; f < domain_dim_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<int> x(domain_dim_, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < e.rows().size(); ++r)
            x[e.pivots()[r]] = (p_ - e.rows()[r][f]) % p_;
        out.push_back(unflatten_domain(x));
    }
    return out;
}

std::optional<std::vector<Elem>> FpLinearMap::solve(const std::vector<Elem>& target) const {
    auto t = flatten(codomain_, cod_coords_, target);
    Echelon e(domain_dim_ + 1, p_);
    for (int i = 0; i < codomain_dim_; ++i) {
        std::vector<int> row(domain_dim_ + 1);
        for (int j = 0; j < domain_dim_; ++j) row[j] = columns_[j][i];
        row[domain_dim_] = t[i];
        e.insert(std::move(row));
    }
    std::vector<int> x(domain_dim_, 0);
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
        if (e.pivots()[r] == domain_dim_) return std::nullopt;
        x[e.pivots()[r]] = e.rows()[r][domain_dim_];
    }
    return unflatten_domain(x);
}

std::vector<Elem> FpLinearMap::random_kernel_element(std::mt19937_64& rng) const {
    auto basis = kernel_basis();
    std::uniform_int_distribution<int> coef(0, p_ - 1);
    std::vector<Elem> out(domain_.size(), 0);
    for (const auto& b : basis) {
        int c = coef(rng);
        for (int k = 0; k < c; ++k) out = domain_.add(out, b);
    }
    return out;
}

}  // namespace linear

}  // namespace sbrace
