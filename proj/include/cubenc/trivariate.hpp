// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/poly.hpp>

#include <array>
#include <map>
#include <utility>

namespace cubenc {

/// Sparse polynomial in three variables (U, V, W), exponent triple -> coefficient.
/// Holds the fixed curve and dual-curve forms; not a general multivariate engine.
class TrivariatePoly
{
public:
    explicit TrivariatePoly(FieldPtr f) : f_(std::move(f)) {}

    const FieldPtr& field() const noexcept { return f_; }

    void set(int eu, int ev, int ew, const Fe& c)
    {
        if (c.is_zero())
            terms_.erase({eu, ev, ew});
        else
            terms_[{eu, ev, ew}] = c;
    }

    void add(int eu, int ev, int ew, const Fe& c)
    {
        auto it = terms_.find({eu, ev, ew});
        if (it == terms_.end()) {
            set(eu, ev, ew, c);
            return;
        }
        const Fe s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }

    const std::map<std::array<int, 3>, Fe>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Fe evaluate(const Fe& u, const Fe& v, const Fe& w) const
    {
        Fe acc = f_->zero();
        for (const auto& [e, c] : terms_)
            acc = acc + c * u.pow(static_cast<unsigned long>(e[0])) *
                            v.pow(static_cast<unsigned long>(e[1])) *
                            w.pow(static_cast<unsigned long>(e[2]));
        return acc;
    }

    /// Exact composition with univariate arguments: G(U(t), V(t), W(t)).
    Polynomial compose(const Polynomial& u, const Polynomial& v, const Polynomial& w) const
    {
        int mu = 0, mv = 0, mw = 0;
        for (const auto& [e, c] : terms_) {
            mu = std::max(mu, e[0]);
            mv = std::max(mv, e[1]);
            mw = std::max(mw, e[2]);
        }
        const auto powers = [&](const Polynomial& p, int m) {
            std::vector<Polynomial> tab;
            tab.reserve(static_cast<size_t>(m) + 1);
            tab.push_back(Polynomial::one(f_));
            for (int i = 1; i <= m; ++i)
                tab.push_back(tab.back() * p);
            return tab;
        };
        const auto pu = powers(u, mu), pv = powers(v, mv), pw = powers(w, mw);
        Polynomial acc = Polynomial::zero(f_);
        for (const auto& [e, c] : terms_)
            acc = acc + pu[static_cast<size_t>(e[0])] * pv[static_cast<size_t>(e[1])] *
                            pw[static_cast<size_t>(e[2])] * c;
        return acc;
    }

    /// Formal partial derivative; var = 0, 1, 2 for U, V, W.
    TrivariatePoly partial(int var) const
    {
        TrivariatePoly out(f_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0)
                continue;
            std::array<int, 3> d = e;
            --d[var];
            out.add(d[0], d[1], d[2], mul_int(c, e[var]));
        }
        return out;
    }

    /// Permute the variables: term exponents are read through perm.
    TrivariatePoly permuted(const std::array<int, 3>& perm) const
    {
        TrivariatePoly out(f_);
        for (const auto& [e, c] : terms_)
            out.add(e[static_cast<size_t>(perm[0])], e[static_cast<size_t>(perm[1])],
                    e[static_cast<size_t>(perm[2])], c);
        return out;
    }

    /// Scale so the first stored term has coefficient 1 (for deduplication).
    TrivariatePoly scaled_canonical() const
    {
        TrivariatePoly out(f_);
        if (terms_.empty())
            return out;
        const Fe inv = terms_.begin()->second.inverse();
        for (const auto& [e, c] : terms_)
            out.set(e[0], e[1], e[2], c * inv);
        return out;
    }

    friend bool operator==(const TrivariatePoly& a, const TrivariatePoly& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second != ib->second)
                return false;
        return true;
    }

private:
    FieldPtr f_;
    std::map<std::array<int, 3>, Fe> terms_;
};

}  // namespace cubenc
