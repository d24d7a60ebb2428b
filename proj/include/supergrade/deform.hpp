#pragma once

/// \file deform.hpp
/// Even bilinear 2-cochains on a fixed base superalgebra, gradation weight,
/// the first-order (infinitesimal) deformation test and the quadratic
/// composition operator used by the classification scenarios.
///
/// A cochain is stored exactly like a product table of its base: canonical
/// pairs with derived mirrors for Lie-kind bases, every ordered pair for
/// Leibniz-kind bases.  Deforming adds the cochain to the base product.

#include "gradation.hpp"

#include <optional>
#include <string>
#include <utility>

namespace supergrade {

/// Bilinear parity-homogeneous 2-cochain over a fixed base algebra.
class Cochain2 {
public:
    Cochain2() = default;
    explicit Cochain2(SuperAlgebra base, std::string name = "",
                      std::optional<int> declared_weight = std::nullopt)
        : base_(std::move(base)), name_(std::move(name)), declared_weight_(declared_weight) {}

    [[nodiscard]] const SuperAlgebra& base() const { return base_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    [[nodiscard]] std::optional<int> declared_weight() const { return declared_weight_; }
    void set_declared_weight(std::optional<int> w) { declared_weight_ = w; }
    [[nodiscard]] const std::map<std::pair<Bv, Bv>, Vec>& components() const {
        return components_;
    }

    /// Stores c(a,b) = v under the same canonical-pair rules as the base
    /// algebra's product table.
    void set_component(Bv a, Bv b, Vec v) {
        // reuse the algebra validation by round-tripping through a scratch
        // copy of the base with the candidate entry
        SuperAlgebra scratch = base_;
        scratch.set_product(a, b, v);  // throws on non-canonical pair / parity
        vec_trim(v);
        if (v.empty())
            components_.erase({a, b});
        else
            components_[{a, b}] = std::move(v);
    }

    /// Evaluates on basis vectors, deriving mirrors for Lie-kind bases.
    [[nodiscard]] Vec ev(Bv a, Bv b) const {
        if (base_.kind() == AlgKind::leibniz) return lookup(a, b);
        if (a.parity == 0 && b.parity == 0) {
            if (a.index == b.index) return {};
            if (a.index < b.index) return lookup(a, b);
            return vec_neg(lookup(b, a));
        }
        if (a.parity == 0) return lookup(a, b);
        if (b.parity == 0) return vec_neg(lookup(b, a));
        if (a.index <= b.index) return lookup(a, b);
        return lookup(b, a);
    }

    /// Bilinear extension.
    [[nodiscard]] Vec ev_vec(const Vec& u, const Vec& v) const {
        Vec out;
        for (const auto& [a, ca] : u)
            for (const auto& [b, cb] : v) vec_add_scaled(out, ev(a, b), ca * cb);
        return out;
    }

    [[nodiscard]] Cochain2 scaled(const Poly& s) const {
        Cochain2 out = *this;
        for (auto& [key, v] : out.components_) {
            for (auto& [b, c] : v) c *= s;
            vec_trim(v);
        }
        for (auto it = out.components_.begin(); it != out.components_.end();)
            it = it->second.empty() ? out.components_.erase(it) : std::next(it);
        return out;
    }

    /// Sum of two cochains over the same base (bases must compare equal).
    friend Cochain2 operator+(const Cochain2& x, const Cochain2& y) {
        if (!(x.base_ == y.base_))
            throw std::invalid_argument("Cochain2: cannot add cochains over different bases");
        Cochain2 out = x;
        out.name_.clear();
        out.declared_weight_ = std::nullopt;
        for (const auto& [key, v] : y.components_) {
            // both cochains store canonical keys, so entries merge directly
            auto it = out.components_.find(key);
            Vec merged = it == out.components_.end() ? Vec{} : it->second;
            vec_add_scaled(merged, v, Poly(1));
            if (merged.empty())
                out.components_.erase(key);
            else
                out.components_[key] = std::move(merged);
        }
        return out;
    }

    [[nodiscard]] std::vector<std::string> parameters() const {
        std::set<std::string> s;
        for (const auto& [key, v] : components_)
            for (const auto& [b, c] : v)
                for (const auto& n : c.vars()) s.insert(n);
        return {s.begin(), s.end()};
    }

    [[nodiscard]] Cochain2 subst_params(const std::map<std::string, Poly>& repl) const {
        Cochain2 out(base_, name_, declared_weight_);
        for (const auto& [key, v] : components_) {
            Vec w;
            for (const auto& [b, c] : v) w[b] = c.subst(repl);
            vec_trim(w);
            if (!w.empty()) out.components_[key] = std::move(w);
        }
        return out;
    }

    friend bool operator==(const Cochain2& a, const Cochain2& b) {
        return a.base_ == b.base_ && a.components_ == b.components_;
    }

private:
    SuperAlgebra base_;
    std::string name_;
    std::optional<int> declared_weight_;
    std::map<std::pair<Bv, Bv>, Vec> components_;

    [[nodiscard]] Vec lookup(Bv a, Bv b) const {
        auto it = components_.find({a, b});
        return it == components_.end() ? Vec{} : it->second;
    }
};

/// Adds the cochain to the base product table.  The supplied algebra must
/// equal the cochain's base.
[[nodiscard]] inline SuperAlgebra deform(const SuperAlgebra& g, const Cochain2& c) {
    if (!(g == c.base()))
        throw std::invalid_argument("deform: algebra does not match the cochain's base");
    SuperAlgebra out = g;
    for (const auto& [key, v] : c.components()) {
        Vec sum = out.product_basis(key.first, key.second);
        vec_add_scaled(sum, v, Poly(1));
        out.set_product(key.first, key.second, std::move(sum));
    }
    return out;
}

/// Gradation weight of a cochain w.r.t. its base's natural layers: the
/// common value layer(out) - layer(a) - layer(b) over all stored components
/// and output coordinates; nullopt when inhomogeneous.  The zero cochain
/// reports its declared weight.
[[nodiscard]] inline std::optional<int> weight(const Cochain2& c) {
    if (c.components().empty()) return c.declared_weight();
    const SuperAlgebra& g = c.base();
    NaturalLayers layers = natural_layers(g);
    // locate each basis vector's layer via span membership
    std::vector<Subspace> spans;
    for (const auto& layer : layers.layers) {
        Subspace s(g.dim_even(), g.dim_odd());
        for (const Vec& v : layer.even) s.extend(v);
        for (const Vec& v : layer.odd) s.extend(v);
        spans.push_back(std::move(s));
    }
    auto layer_of = [&](Bv b) -> std::optional<int> {
        Vec unit{{b, Poly(1)}};
        for (std::size_t t = 0; t < spans.size(); ++t)
            if (spans[t].contains(unit)) return int(t + 1);
        return std::nullopt;
    };
    std::optional<int> w;
    for (const auto& [key, v] : c.components()) {
        auto la = layer_of(key.first), lb = layer_of(key.second);
        if (!la || !lb) return std::nullopt;
        for (const auto& [o, coeff] : v) {
            if (coeff.is_zero()) continue;
            auto lo = layer_of(o);
            if (!lo) return std::nullopt;
            int cand = *lo - *la - *lb;
            if (w && *w != cand) return std::nullopt;
            w = cand;
        }
    }
    return w;
}

/// Outcome of the first-order deformation test.
struct InfinitesimalCheck {
    bool is_cocycle = false;
    std::string parameter;             ///< the fresh deformation parameter used
    std::vector<Violation> first_order;  ///< triples with nonzero t-linear residual
};

/// Tests whether the cochain is an infinitesimal deformation of its base:
/// deform by t*c with a fresh parameter t and require the t-linear part of
/// the kind-appropriate identity residual to vanish identically.
[[nodiscard]] inline InfinitesimalCheck is_infinitesimal_deformation(const Cochain2& c) {
    const SuperAlgebra& g = c.base();
    std::set<std::string> used;
    for (const auto& n : g.parameters()) used.insert(n);
    for (const auto& n : c.parameters()) used.insert(n);
    std::string t = "t";
    for (int k = 1; used.count(t); ++k) t = "t_" + std::to_string(k);

    InfinitesimalCheck out;
    out.parameter = t;
    SuperAlgebra deformed = deform(g, c.scaled(Poly::variable(t)));
    IdentityReport rep = check_identity(deformed);
    for (const Violation& v : rep.violations) {
        Vec linear;
        for (const auto& [b, coeff] : v.diff) {
            Poly lin = coeff.coefficient_of(t, 1);
            if (!lin.is_zero()) linear[b] = lin;
        }
        if (!linear.empty()) {
            Violation lv = v;
            lv.diff = linear;
            out.first_order.push_back(std::move(lv));
        }
    }
    out.is_cocycle = out.first_order.empty();
    return out;
}

/// The quadratic composition used by the classification criterion, evaluated
/// verbatim as an unsigned cyclic sum:
///   (c o c)(x,y,z) = c(c(x,y),z) + c(c(z,x),y) + c(c(y,z),x).
[[nodiscard]] inline Vec psi_compose_psi(const Cochain2& c, Bv x, Bv y, Bv z) {
    Vec out;
    vec_add_scaled(out, c.ev_vec(c.ev(x, y), Vec{{z, Poly(1)}}), Poly(1));
    vec_add_scaled(out, c.ev_vec(c.ev(z, x), Vec{{y, Poly(1)}}), Poly(1));
    vec_add_scaled(out, c.ev_vec(c.ev(y, z), Vec{{x, Poly(1)}}), Poly(1));
    return out;
}

/// True when (c o c)(x,y,z) vanishes on every ordered basis triple.
[[nodiscard]] inline bool psi_compose_psi_vanishes(const Cochain2& c) {
    auto bs = c.base().basis();
    for (Bv x : bs)
        for (Bv y : bs)
            for (Bv z : bs)
                if (!vec_is_zero(psi_compose_psi(c, x, y, z))) return false;
    return true;
}

} // namespace supergrade
